// Export formats: structured JSON document, Graphviz dot, plain-text tables.

#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "vlgraph/centrality.hpp"
#include "vlgraph/classical.hpp"
#include "vlgraph/graph.hpp"

namespace vlgraph {

inline constexpr int kSchemaVersion = 1;

struct GraphDocument {
  struct Vertex {
    std::size_t index = 0;
    std::string name;
    TriadQuality quality = TriadQuality::Major;
    int root = 0;
    std::vector<int> pitch_classes;

    friend bool operator==(const Vertex&, const Vertex&) = default;
  };

  PitchClassSet scale;
  std::string scale_label;
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::optional<EccentricitySummary> eccentricity;
  std::optional<CentralityReport> centrality;
  std::optional<DenseMatrix> communicability;
};

struct DocumentOptions {
  NameStyle names = NameStyle::Ascii;
  bool eccentricity = false;
  bool centrality = false;
  bool communicability = false;
  double alpha = kDefaultKatzAlpha;
};

/// The centrality block is silently skipped for graphs below two vertices.
GraphDocument make_document(const VoiceLeadingGraph& g, std::string scale_label, const DocumentOptions& options = {});

nlohmann::json to_json(const GraphDocument& doc);
/// Throws std::invalid_argument on a missing/unsupported schema_version or
/// inconsistent indices.
GraphDocument document_from_json(const nlohmann::json& j);

/// Rebuilds the graph a document describes (vertices and edges as stored).
VoiceLeadingGraph graph_from_document(const GraphDocument& doc);

std::string render_dot(const VoiceLeadingGraph& g, NameStyle names = NameStyle::Ascii);

/// Vertex and edge listing for terminals.
std::string render_table(const VoiceLeadingGraph& g, std::string_view scale_label, NameStyle names = NameStyle::Ascii);

/// "<name> <quality>", e.g. "ab minor", matching the centrality table rows.
std::string triad_label(const Triad& t, NameStyle names = NameStyle::Ascii);

}  // namespace vlgraph
