#include "vlgraph/classical.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>

namespace vlgraph {

std::vector<Distance> bfs_distances(const Graph& g, VertexIndex source) {
  std::vector<Distance> dist(g.order(), kUnreachable);
  std::deque<VertexIndex> queue{source};
  dist.at(source) = 0;
  while (!queue.empty()) {
    const VertexIndex u = queue.front();
    queue.pop_front();
    for (VertexIndex w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

DistanceMatrix geodesic_distances(const Graph& g) {
  DistanceMatrix d(g.order(), kUnreachable);
  for (VertexIndex s = 0; s < g.order(); ++s) {
    const auto row = bfs_distances(g, s);
    std::copy(row.begin(), row.end(), d.data().begin() + static_cast<std::ptrdiff_t>(s * g.order()));
  }
  return d;
}

std::size_t component_count(const Graph& g) {
  std::vector<bool> seen(g.order(), false);
  std::size_t count = 0;
  for (VertexIndex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    ++count;
    std::vector<VertexIndex> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const VertexIndex u = stack.back();
      stack.pop_back();
      for (VertexIndex w : g.neighbors(u)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
  }
  return count;
}

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

EccentricitySummary eccentricity_summary(const Graph& g) {
  EccentricitySummary s;
  const std::size_t n = g.order();
  s.eccentricities.assign(n, kUnreachable);
  if (n == 0 || !is_connected(g)) return s;

  for (VertexIndex v = 0; v < n; ++v) {
    const auto row = bfs_distances(g, v);
    s.eccentricities[v] = *std::max_element(row.begin(), row.end());
  }
  s.radius = *std::min_element(s.eccentricities.begin(), s.eccentricities.end());
  s.diameter = *std::max_element(s.eccentricities.begin(), s.eccentricities.end());
  for (VertexIndex v = 0; v < n; ++v) {
    if (s.eccentricities[v] == s.radius) s.central_vertices.push_back(v);
    if (s.eccentricities[v] == s.diameter) s.peripheral_vertices.push_back(v);
  }
  s.self_centred = s.radius == s.diameter ? SelfCentred::Yes : SelfCentred::No;
  return s;
}

std::optional<std::size_t> regular_degree(const Graph& g) {
  if (g.order() == 0) return 0;
  const auto deg = g.degrees();
  if (std::all_of(deg.begin(), deg.end(), [&](std::size_t d) { return d == deg.front(); })) return deg.front();
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Isomorphism and subgraph embedding

namespace {

constexpr VertexIndex kUnmapped = static_cast<VertexIndex>(-1);

std::vector<std::vector<std::size_t>> neighbor_degree_profiles(const Graph& g) {
  std::vector<std::vector<std::size_t>> out(g.order());
  for (VertexIndex v = 0; v < g.order(); ++v) {
    for (VertexIndex w : g.neighbors(v)) out[v].push_back(g.degree(w));
    std::sort(out[v].begin(), out[v].end());
  }
  return out;
}

/// Matching order: repeatedly take the unordered vertex with the most already
/// ordered neighbours, breaking ties by degree then index.
std::vector<VertexIndex> matching_order(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<VertexIndex> order;
  std::vector<bool> taken(n, false);
  std::vector<std::size_t> links(n, 0);
  for (std::size_t step = 0; step < n; ++step) {
    VertexIndex best = kUnmapped;
    for (VertexIndex v = 0; v < n; ++v) {
      if (taken[v]) continue;
      if (best == kUnmapped || links[v] > links[best] ||
          (links[v] == links[best] && g.degree(v) > g.degree(best))) {
        best = v;
      }
    }
    taken[best] = true;
    order.push_back(best);
    for (VertexIndex w : g.neighbors(best)) ++links[w];
  }
  return order;
}

struct Matcher {
  const Graph& pattern;
  const Graph& target;
  bool induced;  // true: bijective isomorphism, non-edges must also match
  std::vector<VertexIndex> order;
  std::vector<VertexIndex> forward;
  std::vector<bool> used;
  std::vector<std::vector<std::size_t>> pattern_profile;
  std::vector<std::vector<std::size_t>> target_profile;

  Matcher(const Graph& p, const Graph& t, bool iso)
      : pattern(p), target(t), induced(iso), order(matching_order(p)),
        forward(p.order(), kUnmapped), used(t.order(), false) {
    if (induced) {
      pattern_profile = neighbor_degree_profiles(p);
      target_profile = neighbor_degree_profiles(t);
    }
  }

  bool candidate_ok(VertexIndex pv, VertexIndex tv) const {
    if (used[tv]) return false;
    if (induced) {
      if (pattern.degree(pv) != target.degree(tv)) return false;
      if (pattern_profile[pv] != target_profile[tv]) return false;
    } else if (target.degree(tv) < pattern.degree(pv)) {
      return false;
    }
    for (VertexIndex pw : pattern.neighbors(pv)) {
      if (forward[pw] != kUnmapped && !target.has_edge(tv, forward[pw])) return false;
    }
    if (induced) {
      // Mapped non-neighbours of pv must not be adjacent to tv.
      std::size_t mapped_neighbours = 0;
      for (VertexIndex pw : pattern.neighbors(pv))
        if (forward[pw] != kUnmapped) ++mapped_neighbours;
      std::size_t image_neighbours = 0;
      for (VertexIndex tw : target.neighbors(tv))
        if (used[tw]) ++image_neighbours;
      if (mapped_neighbours != image_neighbours) return false;
    }
    return true;
  }

  bool search(std::size_t depth) {
    if (depth == order.size()) return true;
    const VertexIndex pv = order[depth];
    for (VertexIndex tv = 0; tv < target.order(); ++tv) {
      if (!candidate_ok(pv, tv)) continue;
      forward[pv] = tv;
      used[tv] = true;
      if (search(depth + 1)) return true;
      forward[pv] = kUnmapped;
      used[tv] = false;
    }
    return false;
  }
};

std::vector<std::size_t> sorted_degrees(const Graph& g) {
  auto d = g.degrees();
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

bool verify_isomorphism(const Graph& a, const Graph& b, const VertexMap& map) {
  if (a.order() != b.order() || a.size() != b.size() || map.size() != a.order()) return false;
  std::vector<bool> hit(b.order(), false);
  for (VertexIndex m : map) {
    if (m >= b.order() || hit[m]) return false;
    hit[m] = true;
  }
  for (const auto& [u, v] : a.edges())
    if (!b.has_edge(map[u], map[v])) return false;
  std::vector<VertexIndex> inverse(b.order());
  for (VertexIndex v = 0; v < map.size(); ++v) inverse[map[v]] = v;
  for (const auto& [u, v] : b.edges())
    if (!a.has_edge(inverse[u], inverse[v])) return false;
  return true;
}

bool verify_subgraph_embedding(const Graph& small, const Graph& big, const VertexMap& map) {
  if (map.size() != small.order()) return false;
  std::vector<bool> hit(big.order(), false);
  for (VertexIndex m : map) {
    if (m >= big.order() || hit[m]) return false;
    hit[m] = true;
  }
  for (const auto& [u, v] : small.edges())
    if (!big.has_edge(map[u], map[v])) return false;
  return true;
}

std::optional<VertexMap> find_isomorphism(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return std::nullopt;
  if (sorted_degrees(a) != sorted_degrees(b)) return std::nullopt;
  Matcher m(a, b, true);
  if (!m.search(0)) return std::nullopt;
  if (!verify_isomorphism(a, b, m.forward)) throw std::logic_error("isomorphism search produced an invalid map");
  return m.forward;
}

std::optional<VertexMap> find_subgraph_isomorphism(const Graph& small, const Graph& big) {
  if (small.order() > big.order() || small.size() > big.size()) return std::nullopt;
  Matcher m(small, big, false);
  if (!m.search(0)) return std::nullopt;
  if (!verify_subgraph_embedding(small, big, m.forward)) {
    throw std::logic_error("subgraph search produced an invalid map");
  }
  return m.forward;
}

// ---------------------------------------------------------------------------
// Hamiltonian circuits

HamiltonianResult hamiltonian_circuits(const Graph& g, const HamiltonianOptions& options) {
  HamiltonianResult result;
  const std::size_t n = g.order();
  if (n < 3) return result;

  std::vector<VertexIndex> path{0};
  std::vector<bool> visited(n, false);
  visited[0] = true;
  std::uint64_t steps = 0;

  // Vertex 0 must keep an unvisited neighbour to close the circuit.
  auto can_close = [&]() {
    const auto& nb = g.neighbors(0);
    return std::any_of(nb.begin(), nb.end(), [&](VertexIndex w) { return !visited[w]; });
  };

  std::function<bool()> extend = [&]() -> bool {
    const VertexIndex u = path.back();
    if (path.size() == n) {
      if (g.has_edge(u, 0)) {
        ++result.directed_count;
        // Keep one orientation per undirected cycle.
        if (path[1] < path.back() && result.witnesses.size() < options.max_witnesses) {
          result.witnesses.push_back(path);
        }
      }
      return true;
    }
    for (VertexIndex w : g.neighbors(u)) {
      if (visited[w]) continue;
      if (++steps > options.max_steps) return false;
      visited[w] = true;
      path.push_back(w);
      const bool ok = (path.size() == n || can_close()) ? extend() : true;
      path.pop_back();
      visited[w] = false;
      if (!ok) return false;
    }
    return true;
  };

  result.complete = extend();
  result.undirected_count = result.directed_count / 2;
  return result;
}

// ---------------------------------------------------------------------------
// Eulerian trails

std::string_view euler_class_name(EulerClass c) {
  switch (c) {
    case EulerClass::Eulerian: return "Eulerian";
    case EulerClass::SemiEulerian: return "SemiEulerian";
    case EulerClass::Neither: return "Neither";
    case EulerClass::Empty: return "Empty";
  }
  return "?";
}

namespace {

bool edges_in_one_component(const Graph& g) {
  VertexIndex start = g.order();
  for (VertexIndex v = 0; v < g.order(); ++v) {
    if (g.degree(v) > 0) {
      start = v;
      break;
    }
  }
  if (start == g.order()) return true;
  const auto dist = bfs_distances(g, start);
  for (VertexIndex v = 0; v < g.order(); ++v)
    if (g.degree(v) > 0 && dist[v] == kUnreachable) return false;
  return true;
}

}  // namespace

EulerClass euler_classify(const Graph& g) {
  if (g.size() == 0) return EulerClass::Empty;
  if (!edges_in_one_component(g)) return EulerClass::Neither;
  const auto deg = g.degrees();
  const auto odd = std::count_if(deg.begin(), deg.end(), [](std::size_t d) { return d % 2 == 1; });
  if (odd == 0) return EulerClass::Eulerian;
  if (odd == 2) return EulerClass::SemiEulerian;
  return EulerClass::Neither;
}

std::vector<VertexIndex> find_euler_trail(const Graph& g) {
  const EulerClass cls = euler_classify(g);
  if (cls != EulerClass::Eulerian && cls != EulerClass::SemiEulerian) {
    throw std::invalid_argument("graph has no Eulerian trail (" + std::string(euler_class_name(cls)) + ")");
  }
  VertexIndex start = g.order();
  for (VertexIndex v = 0; v < g.order() && start == g.order(); ++v) {
    const bool wanted = cls == EulerClass::Eulerian ? g.degree(v) > 0 : g.degree(v) % 2 == 1;
    if (wanted) start = v;
  }

  const auto& edges = g.edges();
  auto edge_id = [&](VertexIndex u, VertexIndex v) {
    const Edge e{std::min(u, v), std::max(u, v)};
    return static_cast<std::size_t>(std::lower_bound(edges.begin(), edges.end(), e) - edges.begin());
  };
  std::vector<bool> used(edges.size(), false);
  std::vector<std::size_t> cursor(g.order(), 0);

  // Hierholzer: walk until stuck, splicing sub-circuits in on backtrack.
  std::vector<VertexIndex> stack{start};
  std::vector<VertexIndex> trail;
  while (!stack.empty()) {
    const VertexIndex u = stack.back();
    const auto& nb = g.neighbors(u);
    while (cursor[u] < nb.size() && used[edge_id(u, nb[cursor[u]])]) ++cursor[u];
    if (cursor[u] == nb.size()) {
      trail.push_back(u);
      stack.pop_back();
    } else {
      const VertexIndex w = nb[cursor[u]];
      used[edge_id(u, w)] = true;
      stack.push_back(w);
    }
  }
  std::reverse(trail.begin(), trail.end());
  return trail;
}

}  // namespace vlgraph
