// Vertex centralities, spectral radius and communicability (e^A).

#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <stdexcept>
#include <vector>

#include "vlgraph/graph.hpp"

namespace vlgraph {

/// degree(v) / (n-1). Throws std::invalid_argument when n < 2.
std::vector<double> degree_centrality(const Graph& g);

/// Reciprocal of the mean geodesic distance to every other vertex. Throws
/// std::invalid_argument for disconnected graphs or n < 2.
std::vector<double> closeness_centrality(const Graph& g);

/// Raw betweenness: for each v, the sum over unordered pairs {s,t} with v
/// not an endpoint of sigma_st(v) / sigma_st. Brandes' accumulation, one
/// BFS per source. Scalar must be constructible from integers and support
/// + - * /; instantiate with an exact rational type to get exact values.
template <typename Scalar>
std::vector<Scalar> betweenness_raw(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Scalar> total(n, Scalar(0));
  for (VertexIndex s = 0; s < n; ++s) {
    std::vector<VertexIndex> visit_order;
    std::vector<std::vector<VertexIndex>> predecessors(n);
    std::vector<std::uint64_t> sigma(n, 0);
    std::vector<long> dist(n, -1);
    sigma[s] = 1;
    dist[s] = 0;
    std::deque<VertexIndex> queue{s};
    while (!queue.empty()) {
      const VertexIndex v = queue.front();
      queue.pop_front();
      visit_order.push_back(v);
      for (VertexIndex w : g.neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
        if (dist[w] == dist[v] + 1) {
          sigma[w] += sigma[v];
          predecessors[w].push_back(v);
        }
      }
    }
    std::vector<Scalar> delta(n, Scalar(0));
    for (auto it = visit_order.rbegin(); it != visit_order.rend(); ++it) {
      const VertexIndex w = *it;
      for (VertexIndex v : predecessors[w]) {
        delta[v] = delta[v] + Scalar(static_cast<long long>(sigma[v])) / Scalar(static_cast<long long>(sigma[w])) *
                                  (Scalar(1) + delta[w]);
      }
      if (w != s) total[w] = total[w] + delta[w];
    }
  }
  // Each unordered pair was seen from both ends.
  for (auto& x : total) x = x / Scalar(2);
  return total;
}

/// Raw betweenness divided by (n-1)(n-2)/2. Throws std::invalid_argument for
/// disconnected graphs or n < 3.
std::vector<double> betweenness_centrality(const Graph& g);

struct SpectralRadius {
  double value = 0.0;
  std::size_t iterations = 0;
  /// Set when the matrix has no nonzero entry; value is then 0.
  bool zero_matrix = false;
};

/// Largest eigenvalue of a symmetric nonnegative matrix by power iteration on
/// A + I (the shift separates +rho from -rho in bipartite graphs). Stops when
/// the residual ||Ax - lambda x|| drops below `tolerance`; throws
/// std::runtime_error after `max_iterations`.
SpectralRadius spectral_radius(const DenseMatrix& a, double tolerance = 1e-9, std::size_t max_iterations = 100'000);

struct KatzResult {
  double alpha = 0.0;
  std::vector<double> raw;
  /// raw scaled to unit Euclidean norm (all zeros if raw is zero).
  std::vector<double> normalized;
};

inline constexpr double kDefaultKatzAlpha = 0.35;

/// K = sum_{k>=1} alpha^k (A^k)^T 1, solved as (I - alpha A) x = 1, K = x - 1.
/// Throws std::invalid_argument unless 0 <= alpha < 1/rho(A).
KatzResult katz_centrality(const DenseMatrix& a, double alpha = kDefaultKatzAlpha);

/// The same sum truncated after `terms` powers, by repeated matrix-vector
/// products. No range check on alpha.
std::vector<double> katz_series(const DenseMatrix& a, double alpha, std::size_t terms);

/// e^A by scaling and squaring with a Taylor series on A / 2^s.
DenseMatrix matrix_exponential(const DenseMatrix& a);

/// Communicability matrix (e^A)_{ij}. Throws std::invalid_argument if A is
/// not symmetric.
DenseMatrix communicability(const DenseMatrix& a);

/// Everything the per-triad centrality table shows. Closeness and
/// betweenness are absent for disconnected graphs.
struct CentralityReport {
  std::vector<std::size_t> degree;
  std::vector<double> degree_centrality;
  std::optional<std::vector<double>> closeness;
  std::optional<std::vector<double>> betweenness;
  KatzResult katz;
  double spectral_radius = 0.0;
};

/// Throws std::invalid_argument for graphs with fewer than two vertices or an
/// out-of-range alpha.
CentralityReport centrality_report(const Graph& g, double alpha = kDefaultKatzAlpha);

}  // namespace vlgraph
