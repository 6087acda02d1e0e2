// Pitch classes, pitch-class sets and triads in 12-tone equal temperament.

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace vlgraph {

inline constexpr int kPitchClassCount = 12;

/// A pitch class in 0..11 (0 = C). Always stored reduced modulo 12.
class PitchClass {
 public:
  constexpr PitchClass() = default;
  /// Reduces any integer modulo 12, so PitchClass(-1) == PitchClass(11).
  constexpr explicit PitchClass(int value) : value_(static_cast<std::uint8_t>(((value % 12) + 12) % 12)) {}

  constexpr int value() const { return value_; }
  constexpr PitchClass transposed(int semitones) const { return PitchClass(value_ + semitones); }

  friend constexpr bool operator==(PitchClass, PitchClass) = default;
  friend constexpr auto operator<=>(PitchClass, PitchClass) = default;

 private:
  std::uint8_t value_ = 0;
};

/// Set of pitch classes, stored as a 12-bit mask (bit i <=> pitch class i).
/// Member iteration is always ascending.
class PitchClassSet {
 public:
  static constexpr std::uint16_t kFullMask = 0x0FFF;

  constexpr PitchClassSet() = default;
  static constexpr PitchClassSet from_mask(std::uint16_t mask) {
    PitchClassSet s;
    s.mask_ = static_cast<std::uint16_t>(mask & kFullMask);
    return s;
  }
  /// Throws std::invalid_argument on values outside 0..11 or duplicates.
  static PitchClassSet from_values(const std::vector<int>& values);

  constexpr std::uint16_t mask() const { return mask_; }
  constexpr bool contains(PitchClass pc) const { return (mask_ >> pc.value()) & 1U; }
  constexpr bool contains(const PitchClassSet& other) const { return (other.mask_ & ~mask_) == 0; }
  constexpr bool empty() const { return mask_ == 0; }
  int size() const;

  std::vector<PitchClass> members() const;
  PitchClassSet transposed(int semitones) const;

  PitchClassSet with(PitchClass pc) const { return from_mask(static_cast<std::uint16_t>(mask_ | (1U << pc.value()))); }
  PitchClassSet intersection(const PitchClassSet& o) const { return from_mask(mask_ & o.mask_); }
  PitchClassSet symmetric_difference(const PitchClassSet& o) const { return from_mask(mask_ ^ o.mask_); }

  /// "{0,2,4}" form.
  std::string to_string() const;
  /// 12 characters of '0'/'1', leftmost character is pitch class 0.
  std::string to_binary() const;

  friend constexpr bool operator==(const PitchClassSet&, const PitchClassSet&) = default;
  friend constexpr auto operator<=>(const PitchClassSet&, const PitchClassSet&) = default;

 private:
  std::uint16_t mask_ = 0;
};

/// Ordering (Major < Minor < Diminished < Augmented) fixes canonical vertex order.
enum class TriadQuality : std::uint8_t { Major = 0, Minor = 1, Diminished = 2, Augmented = 3 };

inline constexpr std::array<TriadQuality, 4> kAllQualities = {
    TriadQuality::Major, TriadQuality::Minor, TriadQuality::Diminished, TriadQuality::Augmented};

/// Offsets from the root for the given quality.
constexpr std::array<int, 3> interval_template(TriadQuality q) {
  switch (q) {
    case TriadQuality::Major: return {0, 4, 7};
    case TriadQuality::Minor: return {0, 3, 7};
    case TriadQuality::Diminished: return {0, 3, 6};
    case TriadQuality::Augmented: return {0, 4, 8};
  }
  return {0, 0, 0};
}

std::string_view quality_name(TriadQuality q);

enum class NameStyle { Ascii, Unicode };

/// A major, minor, diminished or augmented triad. Equality is by pitch-class
/// set; augmented triads carry the smallest member as their root.
class Triad {
 public:
  /// Throws std::invalid_argument if the quality/root combination is not
  /// canonical (augmented root must be the smallest of its three members).
  Triad(TriadQuality quality, PitchClass root);

  /// Canonicalizes the augmented root, never throws.
  static Triad make(TriadQuality quality, PitchClass root);

  TriadQuality quality() const { return quality_; }
  PitchClass root() const { return root_; }
  const PitchClassSet& pitches() const { return pitches_; }

  Triad transposed(int semitones) const { return make(quality_, root_.transposed(semitones)); }

  /// "C", "eb", "bo", "Ab+" (ASCII) or "C", "e♭", "b°", "A♭+" (Unicode).
  std::string name(NameStyle style = NameStyle::Ascii) const;

  friend bool operator==(const Triad& a, const Triad& b) { return a.pitches_ == b.pitches_; }

 private:
  TriadQuality quality_;
  PitchClass root_;
  PitchClassSet pitches_;
};

/// Canonical sort key: quality rank, then root.
bool canonical_less(const Triad& a, const Triad& b);

/// Fixed flat-preferring spelling: C Db D Eb E F Gb G Ab A Bb B.
std::string_view pitch_name(PitchClass pc);

/// All triads contained in the set, deduplicated by pitch-class set, in
/// canonical order (Major, Minor, Diminished, Augmented; then root ascending).
std::vector<Triad> extract_triads(const PitchClassSet& scale);

struct ScalePreset {
  std::string_view name;
  std::vector<int> pitch_classes;
  std::string_view description;
};

/// The built-in preset table, all rooted on C.
const std::vector<ScalePreset>& scale_presets();

/// Looks up a preset (case-insensitive; "diatonic" and "major" are aliases)
/// and transposes it by `transpose` semitones. Throws std::invalid_argument
/// for unknown names.
PitchClassSet preset_scale(std::string_view name, int transpose = 0);

/// Parses "0,4,7" / "0 4 7", a 12-character binary mask ("100010010000"),
/// or a preset name with an optional "@k" transpose suffix. Rejects empty
/// sets, out-of-range and duplicate values with std::invalid_argument.
PitchClassSet parse_scale(std::string_view text);

}  // namespace vlgraph
