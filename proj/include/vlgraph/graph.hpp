// Simple undirected graphs and the parsimonious voice-leading construction.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "vlgraph/matrix.hpp"
#include "vlgraph/pitch.hpp"

namespace vlgraph {

using VertexIndex = std::size_t;
using Edge = std::pair<VertexIndex, VertexIndex>;  // always first < second

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t order) : adjacency_(order) {}
  /// Throws std::invalid_argument on self-loops, duplicates or bad indices.
  Graph(std::size_t order, const std::vector<Edge>& edges);

  void add_edge(VertexIndex u, VertexIndex v);

  std::size_t order() const { return adjacency_.size(); }
  std::size_t size() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<VertexIndex>& neighbors(VertexIndex v) const { return adjacency_.at(v); }
  bool has_edge(VertexIndex u, VertexIndex v) const;

  /// Degree of v; throws std::out_of_range.
  std::size_t degree(VertexIndex v) const { return adjacency_.at(v).size(); }
  std::vector<std::size_t> degrees() const;

  /// Same vertex set plus one edge.
  Graph with_edge(VertexIndex u, VertexIndex v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<VertexIndex>> adjacency_;
  std::vector<Edge> edges_;  // sorted
};

/// True iff the triads share exactly two pitch classes and the two remaining
/// pitch classes are neighbours in the cyclic order of the scale. Throws
/// std::invalid_argument if either triad is not contained in the scale.
bool is_parsimonious_pair(const PitchClassSet& scale, const Triad& a, const Triad& b);

/// Triads of a scale joined by single-step voice-leading.
class VoiceLeadingGraph {
 public:
  VoiceLeadingGraph() = default;
  VoiceLeadingGraph(PitchClassSet scale, std::vector<Triad> vertices, Graph topology);

  const PitchClassSet& scale() const { return scale_; }
  const std::vector<Triad>& vertices() const { return vertices_; }
  const Triad& vertex(VertexIndex v) const { return vertices_.at(v); }
  const Graph& graph() const { return graph_; }
  std::size_t order() const { return graph_.order(); }
  std::size_t size() const { return graph_.size(); }
  const std::vector<Edge>& edges() const { return graph_.edges(); }
  std::size_t degree(VertexIndex v) const { return graph_.degree(v); }

  /// Index of the triad with exactly these pitch classes, if present.
  std::optional<VertexIndex> find(const Triad& t) const;

 private:
  PitchClassSet scale_;
  std::vector<Triad> vertices_;
  Graph graph_;
};

VoiceLeadingGraph build_graph(const PitchClassSet& scale);

/// 0/1 adjacency matrix in canonical vertex order.
DenseMatrix adjacency_matrix(const Graph& g);
CountMatrix adjacency_counts(const Graph& g);

/// (A^k)_{ij}: walks of length k from i to j. Throws std::out_of_range for
/// bad indices and std::overflow_error past 64 bits.
std::uint64_t count_walks(const Graph& g, VertexIndex i, VertexIndex j, unsigned k);

}  // namespace vlgraph
