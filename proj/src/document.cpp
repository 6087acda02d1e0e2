#include "vlgraph/document.hpp"

#include <fmt/format.h>

#include <stdexcept>

namespace vlgraph {

using nlohmann::json;

namespace {

TriadQuality quality_from_name(const std::string& s) {
  for (auto q : kAllQualities)
    if (quality_name(q) == s) return q;
  throw std::invalid_argument("unknown triad quality '" + s + "'");
}

json distance_json(Distance d) { return d == kUnreachable ? json(nullptr) : json(d); }

Distance distance_from_json(const json& j) { return j.is_null() ? kUnreachable : j.get<Distance>(); }

json matrix_json(const DenseMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.order(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.order(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

DenseMatrix matrix_from_json(const json& j) {
  DenseMatrix m(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (j[i].size() != j.size()) throw std::invalid_argument("communicability matrix is not square");
    for (std::size_t k = 0; k < j.size(); ++k) m(i, k) = j[i][k].get<double>();
  }
  return m;
}

const char* self_centred_name(SelfCentred s) {
  switch (s) {
    case SelfCentred::Yes: return "yes";
    case SelfCentred::No: return "no";
    case SelfCentred::NotApplicable: return "n/a";
  }
  return "?";
}

SelfCentred self_centred_from_name(const std::string& s) {
  if (s == "yes") return SelfCentred::Yes;
  if (s == "no") return SelfCentred::No;
  if (s == "n/a") return SelfCentred::NotApplicable;
  throw std::invalid_argument("bad self_centred value '" + s + "'");
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string triad_label(const Triad& t, NameStyle names) {
  return t.name(names) + " " + std::string(quality_name(t.quality()));
}

GraphDocument make_document(const VoiceLeadingGraph& g, std::string scale_label, const DocumentOptions& options) {
  GraphDocument doc;
  doc.scale = g.scale();
  doc.scale_label = std::move(scale_label);
  for (VertexIndex i = 0; i < g.order(); ++i) {
    const Triad& t = g.vertex(i);
    GraphDocument::Vertex v{i, t.name(options.names), t.quality(), t.root().value(), {}};
    for (auto pc : t.pitches().members()) v.pitch_classes.push_back(pc.value());
    doc.vertices.push_back(std::move(v));
  }
  doc.edges = g.edges();
  if (options.eccentricity) doc.eccentricity = eccentricity_summary(g.graph());
  if (options.centrality && g.order() >= 2) doc.centrality = centrality_report(g.graph(), options.alpha);
  if (options.communicability) doc.communicability = communicability(adjacency_matrix(g.graph()));
  return doc;
}

json to_json(const GraphDocument& doc) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["scale"] = {{"label", doc.scale_label}, {"mask", doc.scale.to_binary()}, {"pitch_classes", json::array()}};
  for (auto pc : doc.scale.members()) j["scale"]["pitch_classes"].push_back(pc.value());
  j["vertices"] = json::array();
  for (const auto& v : doc.vertices) {
    j["vertices"].push_back({{"index", v.index},
                             {"name", v.name},
                             {"quality", quality_name(v.quality)},
                             {"root", v.root},
                             {"pitch_classes", v.pitch_classes}});
  }
  j["edges"] = json::array();
  for (const auto& [u, w] : doc.edges) j["edges"].push_back({u, w});

  if (doc.eccentricity) {
    const auto& e = *doc.eccentricity;
    json ecc;
    ecc["eccentricities"] = json::array();
    for (auto d : e.eccentricities) ecc["eccentricities"].push_back(distance_json(d));
    ecc["radius"] = distance_json(e.radius);
    ecc["diameter"] = distance_json(e.diameter);
    ecc["central_vertices"] = e.central_vertices;
    ecc["peripheral_vertices"] = e.peripheral_vertices;
    ecc["self_centred"] = self_centred_name(e.self_centred);
    j["eccentricity"] = std::move(ecc);
  }
  if (doc.centrality) {
    const auto& c = *doc.centrality;
    json cj;
    cj["degree"] = c.degree;
    cj["degree_centrality"] = c.degree_centrality;
    cj["closeness"] = c.closeness ? json(*c.closeness) : json(nullptr);
    cj["betweenness"] = c.betweenness ? json(*c.betweenness) : json(nullptr);
    cj["alpha"] = c.katz.alpha;
    cj["katz_raw"] = c.katz.raw;
    cj["katz_normalized"] = c.katz.normalized;
    cj["spectral_radius"] = c.spectral_radius;
    j["centrality"] = std::move(cj);
  }
  if (doc.communicability) j["communicability"] = matrix_json(*doc.communicability);
  return j;
}

GraphDocument document_from_json(const json& j) {
  if (!j.contains("schema_version") || j["schema_version"] != kSchemaVersion) {
    throw std::invalid_argument("unsupported or missing schema_version");
  }
  GraphDocument doc;
  const auto& scale = j.at("scale");
  doc.scale = PitchClassSet::from_values(scale.at("pitch_classes").get<std::vector<int>>());
  doc.scale_label = scale.value("label", "");
  if (scale.contains("mask") && scale["mask"].get<std::string>() != doc.scale.to_binary()) {
    throw std::invalid_argument("scale mask disagrees with pitch_classes");
  }
  for (const auto& v : j.at("vertices")) {
    GraphDocument::Vertex vertex;
    vertex.index = v.at("index").get<std::size_t>();
    vertex.name = v.at("name").get<std::string>();
    vertex.quality = quality_from_name(v.at("quality").get<std::string>());
    vertex.root = v.at("root").get<int>();
    vertex.pitch_classes = v.at("pitch_classes").get<std::vector<int>>();
    if (vertex.index != doc.vertices.size()) throw std::invalid_argument("vertex indices must be 0..n-1 in order");
    doc.vertices.push_back(std::move(vertex));
  }
  for (const auto& e : j.at("edges")) {
    const auto u = e.at(0).get<std::size_t>();
    const auto w = e.at(1).get<std::size_t>();
    if (u >= doc.vertices.size() || w >= doc.vertices.size()) throw std::invalid_argument("edge index out of range");
    doc.edges.emplace_back(std::min(u, w), std::max(u, w));
  }
  if (j.contains("eccentricity")) {
    const auto& ej = j["eccentricity"];
    EccentricitySummary e;
    for (const auto& d : ej.at("eccentricities")) e.eccentricities.push_back(distance_from_json(d));
    e.radius = distance_from_json(ej.at("radius"));
    e.diameter = distance_from_json(ej.at("diameter"));
    e.central_vertices = ej.at("central_vertices").get<std::vector<VertexIndex>>();
    e.peripheral_vertices = ej.at("peripheral_vertices").get<std::vector<VertexIndex>>();
    e.self_centred = self_centred_from_name(ej.at("self_centred").get<std::string>());
    doc.eccentricity = std::move(e);
  }
  if (j.contains("centrality")) {
    const auto& cj = j["centrality"];
    CentralityReport c;
    c.degree = cj.at("degree").get<std::vector<std::size_t>>();
    c.degree_centrality = cj.at("degree_centrality").get<std::vector<double>>();
    if (!cj.at("closeness").is_null()) c.closeness = cj["closeness"].get<std::vector<double>>();
    if (!cj.at("betweenness").is_null()) c.betweenness = cj["betweenness"].get<std::vector<double>>();
    c.katz.alpha = cj.at("alpha").get<double>();
    c.katz.raw = cj.at("katz_raw").get<std::vector<double>>();
    c.katz.normalized = cj.at("katz_normalized").get<std::vector<double>>();
    c.spectral_radius = cj.at("spectral_radius").get<double>();
    doc.centrality = std::move(c);
  }
  if (j.contains("communicability")) doc.communicability = matrix_from_json(j["communicability"]);
  return doc;
}

VoiceLeadingGraph graph_from_document(const GraphDocument& doc) {
  std::vector<Triad> triads;
  for (const auto& v : doc.vertices) {
    Triad t(v.quality, PitchClass(v.root));
    std::vector<int> pcs;
    for (auto pc : t.pitches().members()) pcs.push_back(pc.value());
    if (pcs != v.pitch_classes) throw std::invalid_argument("vertex " + v.name + " pitch classes disagree with root/quality");
    triads.push_back(t);
  }
  return VoiceLeadingGraph(doc.scale, std::move(triads), Graph(doc.vertices.size(), doc.edges));
}

std::string render_dot(const VoiceLeadingGraph& g, NameStyle names) {
  std::string out = "graph voice_leading {\n";
  out += fmt::format("  label=\"{}\";\n", g.scale().to_string());
  for (VertexIndex i = 0; i < g.order(); ++i) {
    out += fmt::format("  v{} [label=\"{}\"];\n", i, dot_escape(g.vertex(i).name(names)));
  }
  for (const auto& [u, w] : g.edges()) out += fmt::format("  v{} -- v{};\n", u, w);
  out += "}\n";
  return out;
}

std::string render_table(const VoiceLeadingGraph& g, std::string_view scale_label, NameStyle names) {
  std::string out;
  out += fmt::format("scale: {} {}\n", scale_label, g.scale().to_string());
  out += fmt::format("vertices: {}\nedges: {}\n", g.order(), g.size());
  if (g.order() >= 2 && !is_connected(g.graph())) {
    out += fmt::format("warning: graph is disconnected ({} components)\n", component_count(g.graph()));
  }
  if (g.order() > 0) {
    out += fmt::format("\n{:>4}  {:<6} {:<11} {:<12} {}\n", "idx", "triad", "quality", "pitches", "degree");
    for (VertexIndex i = 0; i < g.order(); ++i) {
      const Triad& t = g.vertex(i);
      out += fmt::format("{:>4}  {:<6} {:<11} {:<12} {}\n", i, t.name(names), quality_name(t.quality()),
                         t.pitches().to_string(), g.degree(i));
    }
  }
  if (g.size() > 0) {
    out += "\nedges:\n";
    for (const auto& [u, w] : g.edges()) {
      out += fmt::format("  {} -- {}\n", g.vertex(u).name(names), g.vertex(w).name(names));
    }
  }
  return out;
}

}  // namespace vlgraph
