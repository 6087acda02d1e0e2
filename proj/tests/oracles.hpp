// Independent reference computations used only by tests. None of these call
// into the algorithm they are used to check.

#pragma once

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <boost/rational.hpp>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "vlgraph/graph.hpp"
#include "vlgraph/pitch.hpp"

namespace vlgraph::oracle {

using Rational = boost::rational<std::int64_t>;

/// Edges from single-note moves: replace one pitch of a triad by its cyclic
/// successor or predecessor in the scale; keep the move if the result is
/// another triad of the scale.
inline std::set<Edge> single_move_edges(const PitchClassSet& scale, const std::vector<Triad>& triads) {
  const auto members = scale.members();
  const auto m = members.size();
  std::set<Edge> edges;
  for (std::size_t i = 0; i < triads.size(); ++i) {
    for (auto pc : triads[i].pitches().members()) {
      const auto pos = static_cast<std::size_t>(std::find(members.begin(), members.end(), pc) - members.begin());
      for (std::size_t step : {std::size_t{1}, m - 1}) {
        const PitchClass target = members[(pos + step) % m];
        if (target == pc || triads[i].pitches().contains(target)) continue;
        std::uint16_t mask = triads[i].pitches().mask();
        mask = static_cast<std::uint16_t>((mask & ~(1U << pc.value())) | (1U << target.value()));
        for (std::size_t j = 0; j < triads.size(); ++j) {
          if (triads[j].pitches().mask() == mask) edges.insert({std::min(i, j), std::max(i, j)});
        }
      }
    }
  }
  return edges;
}

inline std::uint64_t dfs_walk_count(const Graph& g, VertexIndex from, VertexIndex to, unsigned length) {
  if (length == 0) return from == to ? 1 : 0;
  std::uint64_t total = 0;
  for (VertexIndex w = 0; w < g.order(); ++w)
    if (g.has_edge(from, w)) total += dfs_walk_count(g, w, to, length - 1);
  return total;
}

/// Shortest path length by breadth-first layering over the edge list only.
inline std::vector<int> layer_distances(const Graph& g, VertexIndex s) {
  std::vector<int> dist(g.order(), -1);
  dist[s] = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [u, v] : g.edges()) {
      for (auto [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
        if (dist[a] >= 0 && (dist[b] < 0 || dist[b] > dist[a] + 1)) {
          dist[b] = dist[a] + 1;
          changed = true;
        }
      }
    }
  }
  return dist;
}

/// Unnormalized betweenness by listing every shortest path explicitly.
inline std::vector<Rational> betweenness_by_enumeration(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<int>> dist;
  for (VertexIndex s = 0; s < n; ++s) dist.push_back(layer_distances(g, s));
  std::vector<Rational> total(n, Rational(0));
  for (VertexIndex s = 0; s < n; ++s) {
    for (VertexIndex t = s + 1; t < n; ++t) {
      if (dist[s][t] < 0) continue;
      std::vector<std::vector<VertexIndex>> paths;
      std::vector<VertexIndex> path{s};
      std::function<void()> walk = [&] {
        const VertexIndex u = path.back();
        if (u == t) {
          paths.push_back(path);
          return;
        }
        for (VertexIndex w = 0; w < n; ++w) {
          if (g.has_edge(u, w) && dist[s][w] == dist[s][u] + 1 && dist[w][t] == dist[u][t] - 1) {
            path.push_back(w);
            walk();
            path.pop_back();
          }
        }
      };
      walk();
      std::vector<std::int64_t> through(n, 0);
      for (const auto& p : paths)
        for (std::size_t k = 1; k + 1 < p.size(); ++k) ++through[p[k]];
      for (VertexIndex v = 0; v < n; ++v) {
        if (through[v] > 0) total[v] += Rational(through[v], static_cast<std::int64_t>(paths.size()));
      }
    }
  }
  return total;
}

}  // namespace vlgraph::oracle

#include "vlgraph/centrality.hpp"

namespace vlgraph::oracle {

/// Brandes accumulation in exact arithmetic against path enumeration.
inline bool betweenness_raw_check(const Graph& g) {
  return betweenness_raw<Rational>(g) == betweenness_by_enumeration(g);
}

/// Directed Hamiltonian cycle count through all orderings of vertices 1..n-1.
inline std::uint64_t hamiltonian_permutation_count(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 3) return 0;
  std::vector<VertexIndex> rest(n - 1);
  std::iota(rest.begin(), rest.end(), VertexIndex{1});
  std::uint64_t count = 0;
  do {
    bool ok = g.has_edge(0, rest.front()) && g.has_edge(rest.back(), 0);
    for (std::size_t k = 0; ok && k + 1 < rest.size(); ++k) ok = g.has_edge(rest[k], rest[k + 1]);
    if (ok) ++count;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return count;
}

inline Eigen::MatrixXd to_eigen(const DenseMatrix& a) {
  const auto n = static_cast<Eigen::Index>(a.order());
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = a(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  return m;
}

inline double largest_eigenvalue(const DenseMatrix& a) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(to_eigen(a));
  return solver.eigenvalues().maxCoeff();
}

/// e^A = V diag(e^lambda) V^T for symmetric A.
inline Eigen::MatrixXd spectral_exponential(const DenseMatrix& a) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(to_eigen(a));
  const Eigen::MatrixXd& v = solver.eigenvectors();
  return v * solver.eigenvalues().array().exp().matrix().asDiagonal() * v.transpose();
}

/// Direct Taylor sum of e^A with `terms` terms, plus a bound on the omitted
/// tail: sum_{k>=terms} ||A||^k / k!, valid entrywise for any matrix norm
/// dominating the entries.
struct SeriesWithBound {
  Eigen::MatrixXd value;
  double tail_bound;
};

inline SeriesWithBound taylor_exponential(const DenseMatrix& a, int terms) {
  const Eigen::MatrixXd m = to_eigen(a);
  Eigen::MatrixXd sum = Eigen::MatrixXd::Identity(m.rows(), m.cols());
  Eigen::MatrixXd term = sum;
  for (int k = 1; k < terms; ++k) {
    term = term * m / static_cast<double>(k);
    sum += term;
  }
  const double norm = m.cwiseAbs().rowwise().sum().maxCoeff();
  double tail = 0.0;
  double t = 1.0;
  for (int k = 1; k < terms + 200; ++k) {
    t *= norm / k;
    if (k >= terms) tail += t;
  }
  return {sum, tail};
}

inline Graph random_graph(std::size_t n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (VertexIndex u = 0; u < n; ++u)
    for (VertexIndex v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

/// Random connected graph: random spanning tree plus extra random edges.
inline Graph random_connected_graph(std::size_t n, double p, std::mt19937& rng) {
  Graph g(n);
  for (VertexIndex v = 1; v < n; ++v) {
    std::uniform_int_distribution<VertexIndex> parent(0, v - 1);
    g.add_edge(parent(rng), v);
  }
  std::bernoulli_distribution coin(p);
  for (VertexIndex u = 0; u < n; ++u)
    for (VertexIndex v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v) && coin(rng)) g.add_edge(u, v);
  return g;
}

inline Graph cycle_graph(std::size_t n) {
  Graph g(n);
  for (VertexIndex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

inline Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (VertexIndex u = 0; u < n; ++u)
    for (VertexIndex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

/// Relabel g by the permutation `perm` (vertex v becomes perm[v]).
inline Graph permuted(const Graph& g, const std::vector<VertexIndex>& perm) {
  Graph h(g.order());
  for (const auto& [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

}  // namespace vlgraph::oracle
