#include "vlgraph/cli.hpp"

#include <fmt/format.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "vlgraph/census.hpp"
#include "vlgraph/centrality.hpp"
#include "vlgraph/classical.hpp"
#include "vlgraph/document.hpp"
#include "vlgraph/graph.hpp"
#include "vlgraph/pitch.hpp"

namespace vlgraph::cli {

namespace {

/// Raised for bad user input after CLI11 parsing has succeeded.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ScaleArgs {
  std::string scale_text;
  int transpose = 0;
  bool unicode = false;

  NameStyle style() const { return unicode ? NameStyle::Unicode : NameStyle::Ascii; }

  PitchClassSet resolve() const {
    try {
      return parse_scale(scale_text).transposed(transpose);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }

  std::string label() const {
    return transpose == 0 ? scale_text : fmt::format("{} (transposed {})", scale_text, transpose);
  }
};

void add_scale_args(CLI::App* cmd, ScaleArgs& args, const std::string& name = "scale") {
  cmd->add_option(name, args.scale_text, "pitch classes (\"0,4,7\"), 12-char mask, or preset[@k]")->required();
  cmd->add_option("--transpose", args.transpose, "transpose by k semitones");
  cmd->add_flag("--unicode", args.unicode, "use flat, degree sign in triad names");
}

std::string join_names(const VoiceLeadingGraph& g, const std::vector<VertexIndex>& idx, NameStyle style) {
  std::string out;
  for (auto i : idx) {
    if (!out.empty()) out += ", ";
    out += g.vertex(i).name(style);
  }
  return out;
}

/// Three decimals, halves rounded away from zero (0.5625 -> "0.563").
std::string fixed3(double x) { return fmt::format("{:.3f}", std::round(x * 1000.0) / 1000.0); }

std::string distance_text(Distance d) { return d == kUnreachable ? "inf" : std::to_string(d); }

// --------------------------------------------------------------------------

int cmd_build(const ScaleArgs& scale, const std::string& format, bool with_metrics, bool with_centrality,
              bool with_communicability, double alpha, std::ostream& out, std::ostream& err) {
  const auto g = build_graph(scale.resolve());
  if (format == "dot") {
    out << render_dot(g, scale.style());
  } else if (format == "structured") {
    DocumentOptions options;
    options.names = scale.style();
    options.eccentricity = with_metrics;
    options.centrality = with_centrality;
    options.communicability = with_communicability;
    options.alpha = alpha;
    out << to_json(make_document(g, scale.label(), options)).dump(2) << '\n';
  } else if (format == "table") {
    out << render_table(g, scale.label(), scale.style());
  } else {
    err << "error: unknown format '" << format << "' (expected dot, structured or table)\n";
    return kUsageError;
  }
  return kSuccess;
}

int cmd_metrics(const ScaleArgs& scale, std::uint64_t ham_steps, std::ostream& out) {
  const auto vl = build_graph(scale.resolve());
  const Graph& g = vl.graph();
  const auto style = scale.style();

  out << fmt::format("scale: {} {}\n", scale.label(), vl.scale().to_string());
  out << fmt::format("vertices: {}\nedges: {}\n", g.order(), g.size());
  std::string degrees;
  for (auto d : g.degrees()) degrees += (degrees.empty() ? "" : " ") + std::to_string(d);
  out << "degree sequence: " << degrees << '\n';
  const auto reg = regular_degree(g);
  out << "regular: " << (reg ? fmt::format("yes (degree {})", *reg) : std::string("no")) << '\n';

  const auto ecc = eccentricity_summary(g);
  out << "connected: " << (g.order() == 0 ? "n/a" : (is_connected(g) ? "yes" : "no")) << '\n';
  out << "radius: " << distance_text(ecc.radius) << '\n';
  out << "diameter: " << distance_text(ecc.diameter) << '\n';
  const char* sc = ecc.self_centred == SelfCentred::Yes ? "yes" : ecc.self_centred == SelfCentred::No ? "no" : "n/a";
  out << "self-centred: " << sc << '\n';
  if (ecc.connected()) {
    out << "central: " << join_names(vl, ecc.central_vertices, style) << '\n';
    out << "peripheral: " << join_names(vl, ecc.peripheral_vertices, style) << '\n';
  }
  out << "euler: " << euler_class_name(euler_classify(g)) << '\n';

  HamiltonianOptions options;
  options.max_steps = ham_steps;
  options.max_witnesses = 1;
  const auto ham = hamiltonian_circuits(g, options);
  const char* bound = ham.complete ? "" : ">= ";
  out << fmt::format("hamiltonian circuits (undirected): {}{}\n", bound, ham.undirected_count);
  out << fmt::format("hamiltonian circuits (directed): {}{}\n", bound, ham.directed_count);
  out << "hamiltonian enumeration: " << (ham.complete ? "complete" : "cap reached") << '\n';
  return ham.complete ? kSuccess : kInfeasible;
}

std::string fraction_text(std::size_t num, std::size_t den) {
  if (num == 0) return "0";
  return fmt::format("{}/{}", num, den);
}

int cmd_centrality(const ScaleArgs& scale, std::optional<double> alpha_opt, bool show_comm, const std::string& format,
                   std::ostream& out, std::ostream& err) {
  const auto vl = build_graph(scale.resolve());
  const Graph& g = vl.graph();
  const auto style = scale.style();
  const double alpha = alpha_opt.value_or(kDefaultKatzAlpha);

  if (g.order() < 2) {
    out << fmt::format("graph has {} vertex/vertices; centrality measures are not defined\n", g.order());
    return kSuccess;
  }
  CentralityReport report;
  try {
    report = centrality_report(g, alpha);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  if (format == "structured") {
    DocumentOptions options;
    options.names = style;
    options.centrality = true;
    options.communicability = show_comm;
    options.alpha = alpha;
    out << to_json(make_document(vl, scale.label(), options)).dump(2) << '\n';
    return kSuccess;
  }
  if (format != "table") {
    err << "error: unknown format '" << format << "' (expected structured or table)\n";
    return kUsageError;
  }

  out << fmt::format("scale: {} {}\n", scale.label(), vl.scale().to_string());
  out << fmt::format("spectral radius: {}  (alpha = {}, 1/rho = {})\n", fixed3(report.spectral_radius), fixed3(alpha),
                     report.spectral_radius > 0 ? fixed3(1.0 / report.spectral_radius) : "inf");
  if (!report.closeness) out << "notice: graph is disconnected; closeness and betweenness suppressed\n";
  out << fmt::format("\n{:<16} {:>6} {:>14} {:>9} {:>11} {:>9} {:>9}\n", "triad", "degree", "degree cent.",
                     "closeness", "betweenness", "katz raw", "katz norm");
  const std::size_t n = g.order();
  for (VertexIndex i = 0; i < n; ++i) {
    const std::string dc = fmt::format("{} ({})", fraction_text(report.degree[i], n - 1), fixed3(report.degree_centrality[i]));
    const std::string cl = report.closeness ? fixed3((*report.closeness)[i]) : "-";
    const std::string bt = report.betweenness ? fixed3((*report.betweenness)[i]) : "-";
    out << fmt::format("{:<16} {:>6} {:>14} {:>9} {:>11} {:>9} {:>9}\n", triad_label(vl.vertex(i), style),
                       report.degree[i], dc, cl, bt, fixed3(report.katz.raw[i]), fixed3(report.katz.normalized[i]));
  }
  if (show_comm) {
    const auto c = communicability(adjacency_matrix(g));
    out << "\ncommunicability (e^A):\n" << fmt::format("{:<8}", "");
    for (VertexIndex j = 0; j < n; ++j) out << fmt::format(" {:>7}", vl.vertex(j).name(style));
    out << '\n';
    for (VertexIndex i = 0; i < n; ++i) {
      out << fmt::format("{:<8}", vl.vertex(i).name(style));
      for (VertexIndex j = 0; j < n; ++j) out << fmt::format(" {:>7}", fixed3(c(i, j)));
      out << '\n';
    }
  }
  return kSuccess;
}

int cmd_census(int min_size, int max_size, const std::string& details_path, bool no_check, unsigned threads,
               std::ostream& out, std::ostream& err) {
  const CensusBounds bounds{min_size, max_size};
  try {
    validate(bounds);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const CensusBounds defaults;
  const bool default_bounds = min_size == defaults.min_size && max_size == defaults.max_size;
  const bool check = !no_check && default_bounds;
  const auto summary = run_census(bounds, check || !details_path.empty(), threads);

  std::string line;
  for (std::size_t c = 0; c < kCensusCategoryCount; ++c) {
    if (summary.counts[c] == 0 && !default_bounds) continue;
    if (!line.empty()) line += ", ";
    line += fmt::format("{}: {}", category_name(static_cast<CensusCategory>(c)), summary.counts[c]);
  }
  out << line << '\n' << "total: " << summary.total_sets << '\n';
  for (const auto& s : summary.disconnected) out << "disconnected: " << s.to_string() << '\n';

  if (!details_path.empty()) {
    std::ofstream file(details_path);
    if (!file) {
      err << "error: cannot write " << details_path << '\n';
      return kUsageError;
    }
    write_census_records(file, summary.records);
    if (!file) {
      err << "error: failed writing " << details_path << '\n';
      return kUsageError;
    }
  }

  if (check) {
    if (summary.counts == kReferenceCounts) {
      out << "reference check: match\n";
    } else {
      out << "reference check: MISMATCH\n";
      for (const auto& r : reference_mismatches(summary)) {
        err << r.scale.to_binary() << ' ' << category_name(r.category) << '\n';
      }
      return kReferenceMismatch;
    }
  }
  return kSuccess;
}

int cmd_compare(const ScaleArgs& a_args, const ScaleArgs& b_args, std::ostream& out) {
  const auto a = build_graph(a_args.resolve());
  const auto b = build_graph(b_args.resolve());
  const auto style = a_args.style();
  out << fmt::format("A: {} {} -- {} vertices, {} edges\n", a_args.label(), a.scale().to_string(), a.order(), a.size());
  out << fmt::format("B: {} {} -- {} vertices, {} edges\n", b_args.label(), b.scale().to_string(), b.order(), b.size());

  auto print_map = [&](const VoiceLeadingGraph& from, const VoiceLeadingGraph& to, const VertexMap& map) {
    for (VertexIndex i = 0; i < map.size(); ++i) {
      out << fmt::format("  {} -> {}\n", from.vertex(i).name(style), to.vertex(map[i]).name(style));
    }
  };

  if (auto iso = find_isomorphism(a.graph(), b.graph())) {
    out << "isomorphic: yes\n";
    print_map(a, b, *iso);
    return kSuccess;
  }
  out << "isomorphic: no\n";
  const bool a_smaller = a.order() <= b.order();
  const auto& small = a_smaller ? a : b;
  const auto& big = a_smaller ? b : a;
  if (auto emb = find_subgraph_isomorphism(small.graph(), big.graph())) {
    out << fmt::format("subgraph embedding: yes ({} into {})\n", a_smaller ? "A" : "B", a_smaller ? "B" : "A");
    print_map(small, big, *emb);
  } else {
    out << "subgraph embedding: no\n";
  }
  return kSuccess;
}

VertexIndex resolve_vertex(const VoiceLeadingGraph& g, const std::string& text) {
  for (VertexIndex i = 0; i < g.order(); ++i) {
    if (g.vertex(i).name(NameStyle::Ascii) == text || g.vertex(i).name(NameStyle::Unicode) == text) return i;
  }
  if (!text.empty() && std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); })) {
    const auto idx = std::stoul(text);
    if (idx < g.order()) return idx;
  }
  throw UsageError("no vertex '" + text + "' in this graph");
}

int cmd_walks(const ScaleArgs& scale, const std::string& from, const std::string& to, unsigned length,
              std::ostream& out, std::ostream& err) {
  const auto g = build_graph(scale.resolve());
  const auto i = resolve_vertex(g, from);
  const auto j = resolve_vertex(g, to);
  try {
    out << fmt::format("walks of length {} from {} to {}: {}\n", length, g.vertex(i).name(scale.style()),
                       g.vertex(j).name(scale.style()), count_walks(g.graph(), i, j, length));
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return kInfeasible;
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Parsimonious voice-leading graphs: construction, diagnostics and census", "vlgraph"};
  app.require_subcommand(1);

  std::string format = "table";
  double alpha = kDefaultKatzAlpha;

  ScaleArgs build_scale;
  bool with_metrics = false, with_centrality = false, with_comm = false;
  auto* build = app.add_subcommand("build", "build the voice-leading graph of a scale");
  add_scale_args(build, build_scale);
  build->add_option("--format", format, "dot, structured or table");
  build->add_flag("--with-metrics", with_metrics, "structured: include eccentricity block");
  build->add_flag("--with-centrality", with_centrality, "structured: include centrality block");
  build->add_flag("--with-communicability", with_comm, "structured: include e^A");
  build->add_option("--alpha", alpha, "Katz attenuation factor");

  ScaleArgs metrics_scale;
  std::uint64_t ham_steps = HamiltonianOptions{}.max_steps;
  auto* metrics = app.add_subcommand("metrics", "classical graph diagnostics");
  add_scale_args(metrics, metrics_scale);
  metrics->add_option("--ham-steps", ham_steps, "step budget for Hamiltonian enumeration");

  ScaleArgs cent_scale;
  std::optional<double> cent_alpha;
  bool show_comm = false;
  std::string cent_format = "table";
  auto* cent = app.add_subcommand("centrality", "degree, closeness, betweenness and Katz centralities");
  add_scale_args(cent, cent_scale);
  cent->add_option("--alpha", cent_alpha, "Katz attenuation factor (default 0.35)");
  cent->add_flag("--communicability", show_comm, "also print e^A");
  cent->add_option("--format", cent_format, "structured or table");

  int min_size = 3, max_size = 12;
  std::string details;
  bool no_check = false;
  unsigned threads = 1;
  auto* census = app.add_subcommand("census", "classify every pitch-class set");
  census->add_option("--min", min_size, "smallest set size");
  census->add_option("--max", max_size, "largest set size");
  census->add_option("--details", details, "write one CSV record per set to this path");
  census->add_flag("--no-check", no_check, "skip the reference-count check");
  census->add_option("--threads", threads, "worker threads")->check(CLI::Range(1U, 256U));

  ScaleArgs cmp_a, cmp_b;
  auto* compare = app.add_subcommand("compare", "isomorphism and subgraph embedding between two scales");
  compare->add_option("a", cmp_a.scale_text, "first scale")->required();
  compare->add_option("b", cmp_b.scale_text, "second scale")->required();
  compare->add_flag("--unicode", cmp_a.unicode, "use flat, degree sign in triad names");

  ScaleArgs walk_scale;
  std::string walk_from, walk_to;
  unsigned walk_length = 1;
  auto* walks = app.add_subcommand("walks", "count walks of a given length between two triads");
  add_scale_args(walks, walk_scale);
  walks->add_option("--from", walk_from, "triad name or index")->required();
  walks->add_option("--to", walk_to, "triad name or index")->required();
  walks->add_option("--length", walk_length, "walk length k")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*build) return cmd_build(build_scale, format, with_metrics, with_centrality, with_comm, alpha, out, err);
    if (*metrics) return cmd_metrics(metrics_scale, ham_steps, out);
    if (*cent) return cmd_centrality(cent_scale, cent_alpha, show_comm, cent_format, out, err);
    if (*census) return cmd_census(min_size, max_size, details, no_check, threads, out, err);
    if (*compare) {
      cmp_b.unicode = cmp_a.unicode;
      return cmd_compare(cmp_a, cmp_b, out);
    }
    if (*walks) return cmd_walks(walk_scale, walk_from, walk_to, walk_length, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace vlgraph::cli
