#include "vlgraph/pitch.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace vlgraph {

namespace {

constexpr std::array<std::string_view, 12> kFlatNames = {"C",  "Db", "D",  "Eb", "E",  "F",
                                                         "Gb", "G",  "Ab", "A",  "Bb", "B"};

std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view token, std::string_view context) {
  int value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (!token.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc{} || ptr != last) {
    throw std::invalid_argument("malformed token '" + std::string(token) + "' in " + std::string(context));
  }
  return value;
}

bool is_binary_mask(std::string_view s) {
  return s.size() == 12 && std::all_of(s.begin(), s.end(), [](char c) { return c == '0' || c == '1'; });
}

bool looks_numeric(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == ',' || c == ' ' || c == '\t' || c == '-' || c == '+';
  });
}

}  // namespace

PitchClassSet PitchClassSet::from_values(const std::vector<int>& values) {
  std::uint16_t mask = 0;
  for (int v : values) {
    if (v < 0 || v >= kPitchClassCount) {
      throw std::invalid_argument("pitch class " + std::to_string(v) + " out of range 0..11");
    }
    const auto bit = static_cast<std::uint16_t>(1U << v);
    if (mask & bit) throw std::invalid_argument("duplicate pitch class " + std::to_string(v));
    mask |= bit;
  }
  return from_mask(mask);
}

int PitchClassSet::size() const { return std::popcount(mask_); }

std::vector<PitchClass> PitchClassSet::members() const {
  std::vector<PitchClass> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int i = 0; i < kPitchClassCount; ++i) {
    if ((mask_ >> i) & 1U) out.emplace_back(i);
  }
  return out;
}

PitchClassSet PitchClassSet::transposed(int semitones) const {
  const int k = ((semitones % 12) + 12) % 12;
  const unsigned m = mask_;
  return from_mask(static_cast<std::uint16_t>(((m << k) | (m >> (12 - k))) & kFullMask));
}

std::string PitchClassSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (auto pc : members()) {
    if (!first) out += ',';
    out += std::to_string(pc.value());
    first = false;
  }
  return out + "}";
}

std::string PitchClassSet::to_binary() const {
  std::string out(12, '0');
  for (int i = 0; i < kPitchClassCount; ++i) {
    if ((mask_ >> i) & 1U) out[static_cast<std::size_t>(i)] = '1';
  }
  return out;
}

std::string_view quality_name(TriadQuality q) {
  switch (q) {
    case TriadQuality::Major: return "major";
    case TriadQuality::Minor: return "minor";
    case TriadQuality::Diminished: return "diminished";
    case TriadQuality::Augmented: return "augmented";
  }
  return "?";
}

std::string_view pitch_name(PitchClass pc) { return kFlatNames[static_cast<std::size_t>(pc.value())]; }

namespace {

PitchClassSet template_pitches(TriadQuality quality, PitchClass root) {
  PitchClassSet s;
  for (int offset : interval_template(quality)) s = s.with(root.transposed(offset));
  return s;
}

}  // namespace

Triad::Triad(TriadQuality quality, PitchClass root)
    : quality_(quality), root_(root), pitches_(template_pitches(quality, root)) {
  if (quality == TriadQuality::Augmented && pitches_.members().front() != root) {
    throw std::invalid_argument("augmented triad root must be its smallest pitch class");
  }
}

Triad Triad::make(TriadQuality quality, PitchClass root) {
  if (quality == TriadQuality::Augmented) root = PitchClass(root.value() % 4);
  return Triad(quality, root);
}

std::string Triad::name(NameStyle style) const {
  std::string letter(pitch_name(root_));
  const bool lower = quality_ == TriadQuality::Minor || quality_ == TriadQuality::Diminished;
  if (lower) letter[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(letter[0])));
  if (style == NameStyle::Unicode && letter.size() == 2) letter = letter.substr(0, 1) + "♭";
  switch (quality_) {
    case TriadQuality::Diminished: return letter + (style == NameStyle::Unicode ? "°" : "o");
    case TriadQuality::Augmented: return letter + "+";
    default: return letter;
  }
}

bool canonical_less(const Triad& a, const Triad& b) {
  if (a.quality() != b.quality()) return a.quality() < b.quality();
  return a.root() < b.root();
}

std::vector<Triad> extract_triads(const PitchClassSet& scale) {
  std::vector<Triad> out;
  for (auto quality : kAllQualities) {
    // Augmented triads repeat every 4 roots; roots 0..3 cover each set once.
    const int root_count = quality == TriadQuality::Augmented ? 4 : kPitchClassCount;
    for (int root = 0; root < root_count; ++root) {
      Triad t(quality, PitchClass(root));
      if (scale.contains(t.pitches())) out.push_back(t);
    }
  }
  return out;
}

const std::vector<ScalePreset>& scale_presets() {
  static const std::vector<ScalePreset> presets = {
      {"major", {0, 2, 4, 5, 7, 9, 11}, "major (diatonic) scale"},
      {"natural-minor", {0, 2, 3, 5, 7, 8, 10}, "natural minor (Aeolian) scale"},
      {"harmonic-minor", {0, 2, 3, 5, 7, 8, 11}, "harmonic minor scale"},
      {"melodic-minor", {0, 2, 3, 5, 7, 9, 11}, "ascending melodic minor scale"},
      {"hexatonic", {0, 1, 4, 5, 8, 9}, "hexatonic (symmetrical augmented) scale"},
      {"octatonic", {0, 1, 3, 4, 6, 7, 9, 10}, "octatonic (symmetric diminished) scale"},
      {"whole-tone", {0, 2, 4, 6, 8, 10}, "whole-tone scale"},
      {"chromatic", {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}, "chromatic scale"},
      {"mixolydian-augmented", {0, 2, 4, 5, 8, 9, 10}, "Mixolydian augmented scale"},
      {"enigmatic-minor", {0, 1, 4, 6, 8, 10, 11}, "enigmatic minor scale"},
  };
  return presets;
}

PitchClassSet preset_scale(std::string_view name, int transpose) {
  std::string key = lowercase(trim(name));
  if (key == "diatonic") key = "major";
  if (key == "aeolian") key = "natural-minor";
  for (const auto& preset : scale_presets()) {
    if (preset.name == key) return PitchClassSet::from_values(preset.pitch_classes).transposed(transpose);
  }
  throw std::invalid_argument("unknown scale preset '" + std::string(name) + "'");
}

PitchClassSet parse_scale(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty scale specification");

  PitchClassSet result;
  if (is_binary_mask(s)) {
    std::uint16_t mask = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '1') mask |= static_cast<std::uint16_t>(1U << i);
    }
    result = PitchClassSet::from_mask(mask);
  } else if (looks_numeric(s)) {
    // Tokens are separated by whitespace and at most one comma.
    std::vector<int> values;
    std::size_t pos = 0;
    int commas = 0;
    bool expect_value = true;
    while (pos < s.size()) {
      const char c = s[pos];
      if (c == ',' || c == ' ' || c == '\t') {
        if (c == ',' && (++commas > 1 || values.empty())) {
          throw std::invalid_argument("malformed scale list '" + std::string(s) + "'");
        }
        ++pos;
        continue;
      }
      const std::size_t end = std::min(s.find_first_of(", \t", pos), s.size());
      values.push_back(parse_int(s.substr(pos, end - pos), "scale list"));
      commas = 0;
      expect_value = false;
      pos = end;
    }
    if (commas > 0 || expect_value) throw std::invalid_argument("malformed scale list '" + std::string(s) + "'");
    result = PitchClassSet::from_values(values);
  } else {
    std::string_view name = s;
    int transpose = 0;
    if (auto at = s.find('@'); at != std::string_view::npos) {
      name = s.substr(0, at);
      transpose = parse_int(s.substr(at + 1), "transpose suffix");
    }
    result = preset_scale(name, transpose);
  }
  if (result.empty()) throw std::invalid_argument("scale has no pitch classes");
  return result;
}

}  // namespace vlgraph
