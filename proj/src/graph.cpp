#include "vlgraph/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace vlgraph {

Graph::Graph(std::size_t order, const std::vector<Edge>& edges) : adjacency_(order) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(VertexIndex u, VertexIndex v) {
  if (u >= order() || v >= order()) throw std::invalid_argument("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("self-loop");
  if (u > v) std::swap(u, v);
  const Edge e{u, v};
  auto pos = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (pos != edges_.end() && *pos == e) throw std::invalid_argument("duplicate edge");
  edges_.insert(pos, e);
  auto& au = adjacency_[u];
  au.insert(std::lower_bound(au.begin(), au.end(), v), v);
  auto& av = adjacency_[v];
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
}

bool Graph::has_edge(VertexIndex u, VertexIndex v) const {
  if (u >= order() || v >= order()) return false;
  const auto& nu = adjacency_[u];
  return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> out;
  out.reserve(order());
  for (const auto& nbrs : adjacency_) out.push_back(nbrs.size());
  return out;
}

Graph Graph::with_edge(VertexIndex u, VertexIndex v) const {
  Graph g = *this;
  g.add_edge(u, v);
  return g;
}

bool is_parsimonious_pair(const PitchClassSet& scale, const Triad& a, const Triad& b) {
  if (!scale.contains(a.pitches()) || !scale.contains(b.pitches())) {
    throw std::invalid_argument("triad not contained in scale");
  }
  if (a.pitches().intersection(b.pitches()).size() != 2) return false;
  const auto moved = a.pitches().symmetric_difference(b.pitches()).members();
  const int low = moved[0].value();
  const int high = moved[1].value();
  // Neighbours in the circular scale: nothing in between going up from low to
  // high, or nothing above high and below low (the wrap-around pair).
  const auto members = scale.members();
  const bool between = std::any_of(members.begin(), members.end(), [&](PitchClass p) {
    return p.value() > low && p.value() < high;
  });
  if (!between) return true;
  const bool outside = std::any_of(members.begin(), members.end(), [&](PitchClass p) {
    return p.value() < low || p.value() > high;
  });
  return !outside;
}

VoiceLeadingGraph::VoiceLeadingGraph(PitchClassSet scale, std::vector<Triad> vertices, Graph topology)
    : scale_(scale), vertices_(std::move(vertices)), graph_(std::move(topology)) {
  if (vertices_.size() != graph_.order()) throw std::invalid_argument("vertex count does not match graph order");
}

std::optional<VertexIndex> VoiceLeadingGraph::find(const Triad& t) const {
  for (VertexIndex i = 0; i < vertices_.size(); ++i)
    if (vertices_[i] == t) return i;
  return std::nullopt;
}

VoiceLeadingGraph build_graph(const PitchClassSet& scale) {
  auto triads = extract_triads(scale);
  Graph g(triads.size());
  for (VertexIndex i = 0; i < triads.size(); ++i)
    for (VertexIndex j = i + 1; j < triads.size(); ++j)
      if (is_parsimonious_pair(scale, triads[i], triads[j])) g.add_edge(i, j);
  return VoiceLeadingGraph(scale, std::move(triads), std::move(g));
}

DenseMatrix adjacency_matrix(const Graph& g) {
  DenseMatrix a(g.order());
  for (const auto& [u, v] : g.edges()) a(u, v) = a(v, u) = 1.0;
  return a;
}

CountMatrix adjacency_counts(const Graph& g) {
  CountMatrix a(g.order());
  for (const auto& [u, v] : g.edges()) a(u, v) = a(v, u) = 1;
  return a;
}

std::uint64_t count_walks(const Graph& g, VertexIndex i, VertexIndex j, unsigned k) {
  if (i >= g.order() || j >= g.order()) throw std::out_of_range("vertex index out of range");
  return power(adjacency_counts(g), k)(i, j);
}

}  // namespace vlgraph
