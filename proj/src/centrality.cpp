#include "vlgraph/centrality.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "vlgraph/classical.hpp"

namespace vlgraph {

std::vector<double> degree_centrality(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 2) throw std::invalid_argument("degree centrality needs at least two vertices");
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t d : g.degrees()) out.push_back(static_cast<double>(d) / static_cast<double>(n - 1));
  return out;
}

std::vector<double> closeness_centrality(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 2) throw std::invalid_argument("closeness centrality needs at least two vertices");
  std::vector<double> out(n);
  for (VertexIndex v = 0; v < n; ++v) {
    const auto dist = bfs_distances(g, v);
    std::uint64_t sum = 0;
    for (Distance d : dist) {
      if (d == kUnreachable) throw std::invalid_argument("closeness centrality is undefined on a disconnected graph");
      sum += d;
    }
    out[v] = static_cast<double>(n - 1) / static_cast<double>(sum);
  }
  return out;
}

std::vector<double> betweenness_centrality(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 3) throw std::invalid_argument("betweenness centrality needs at least three vertices");
  if (!is_connected(g)) throw std::invalid_argument("betweenness centrality is undefined on a disconnected graph");
  auto raw = betweenness_raw<double>(g);
  const double pairs = static_cast<double>((n - 1) * (n - 2)) / 2.0;
  for (auto& x : raw) x /= pairs;
  return raw;
}

SpectralRadius spectral_radius(const DenseMatrix& a, double tolerance, std::size_t max_iterations) {
  SpectralRadius result;
  const std::size_t n = a.order();
  if (n == 0 || std::all_of(a.data().begin(), a.data().end(), [](double x) { return x == 0.0; })) {
    result.zero_matrix = true;
    return result;
  }
  constexpr double kShift = 1.0;
  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> y(n);
  for (std::size_t it = 1; it <= max_iterations; ++it) {
    // y = (A + shift I) x
    for (std::size_t i = 0; i < n; ++i) {
      double s = kShift * x[i];
      for (std::size_t j = 0; j < n; ++j) s += a(i, j) * x[j];
      y[i] = s;
    }
    const double lambda = std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
    double residual = 0.0;
    for (std::size_t i = 0; i < n; ++i) residual += (y[i] - lambda * x[i]) * (y[i] - lambda * x[i]);
    residual = std::sqrt(residual);
    const double norm = std::sqrt(std::inner_product(y.begin(), y.end(), y.begin(), 0.0));
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / norm;
    if (residual < tolerance) {
      result.value = lambda - kShift;
      result.iterations = it;
      return result;
    }
  }
  throw std::runtime_error("power iteration did not converge");
}

KatzResult katz_centrality(const DenseMatrix& a, double alpha) {
  const std::size_t n = a.order();
  if (!(alpha >= 0.0)) throw std::invalid_argument("Katz attenuation factor must be nonnegative");
  const auto rho = spectral_radius(a);
  if (!rho.zero_matrix && alpha * rho.value >= 1.0) {
    throw std::invalid_argument("Katz attenuation factor must be below 1/rho(A) = " + std::to_string(1.0 / rho.value));
  }
  KatzResult result;
  result.alpha = alpha;
  if (n == 0) return result;

  Eigen::MatrixXd system = Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      system(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) -= alpha * a(j, i);
  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(n));
  const Eigen::VectorXd x = system.partialPivLu().solve(ones);
  if (!x.allFinite()) throw std::invalid_argument("Katz system is singular");

  result.raw.resize(n);
  for (std::size_t i = 0; i < n; ++i) result.raw[i] = x(static_cast<Eigen::Index>(i)) - 1.0;
  const double norm = std::sqrt(std::inner_product(result.raw.begin(), result.raw.end(), result.raw.begin(), 0.0));
  result.normalized = result.raw;
  if (norm > 0.0)
    for (auto& v : result.normalized) v /= norm;
  return result;
}

std::vector<double> katz_series(const DenseMatrix& a, double alpha, std::size_t terms) {
  const std::size_t n = a.order();
  std::vector<double> walks(n, 1.0);  // alpha^k (A^T)^k 1
  std::vector<double> total(n, 0.0);
  std::vector<double> next(n);
  for (std::size_t k = 1; k <= terms; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) s += a(j, i) * walks[j];
      next[i] = alpha * s;
    }
    walks.swap(next);
    for (std::size_t i = 0; i < n; ++i) total[i] += walks[i];
  }
  return total;
}

DenseMatrix matrix_exponential(const DenseMatrix& a) {
  const std::size_t n = a.order();
  // Scale so the Taylor series of the reduced matrix converges fast.
  const double norm = infinity_norm(a);
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  DenseMatrix scaled = a;
  const double factor = std::ldexp(1.0, -squarings);
  for (auto& x : scaled.data()) x *= factor;

  DenseMatrix result = DenseMatrix::identity(n);
  DenseMatrix term = DenseMatrix::identity(n);
  for (int k = 1; k <= 30; ++k) {
    term = multiply(term, scaled);
    for (auto& x : term.data()) x /= k;
    for (std::size_t i = 0; i < result.data().size(); ++i) result.data()[i] += term.data()[i];
    if (infinity_norm(term) < 1e-18) break;
  }
  for (int s = 0; s < squarings; ++s) result = multiply(result, result);
  return result;
}

DenseMatrix communicability(const DenseMatrix& a) {
  if (!a.is_symmetric()) throw std::invalid_argument("communicability requires a symmetric matrix");
  DenseMatrix e = matrix_exponential(a);
  // Symmetrize away rounding asymmetry from the products.
  for (std::size_t i = 0; i < e.order(); ++i)
    for (std::size_t j = i + 1; j < e.order(); ++j) e(i, j) = e(j, i) = 0.5 * (e(i, j) + e(j, i));
  return e;
}

CentralityReport centrality_report(const Graph& g, double alpha) {
  CentralityReport r;
  r.degree = g.degrees();
  r.degree_centrality = degree_centrality(g);
  if (is_connected(g)) {
    r.closeness = closeness_centrality(g);
    if (g.order() >= 3) r.betweenness = betweenness_centrality(g);
  }
  const auto a = adjacency_matrix(g);
  r.spectral_radius = spectral_radius(a).value;
  r.katz = katz_centrality(a, alpha);
  return r;
}

}  // namespace vlgraph
