#include "vlgraph/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace vlgraph {

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
  const std::size_t n = a.order();
  if (b.order() != n) throw std::invalid_argument("matrix order mismatch");
  DenseMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

CountMatrix multiply(const CountMatrix& a, const CountMatrix& b) {
  const std::size_t n = a.order();
  if (b.order() != n) throw std::invalid_argument("matrix order mismatch");
  CountMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::uint64_t sum = 0;
      for (std::size_t k = 0; k < n; ++k) {
        std::uint64_t term = 0;
        if (__builtin_mul_overflow(a(i, k), b(k, j), &term) || __builtin_add_overflow(sum, term, &sum)) {
          throw std::overflow_error("walk count exceeds 64 bits");
        }
      }
      c(i, j) = sum;
    }
  return c;
}

CountMatrix power(const CountMatrix& a, unsigned k) {
  CountMatrix result = CountMatrix::identity(a.order());
  CountMatrix base = a;
  while (k > 0) {
    if (k & 1U) result = multiply(result, base);
    k >>= 1U;
    if (k > 0) base = multiply(base, base);
  }
  return result;
}

double infinity_norm(const DenseMatrix& a) {
  double best = 0.0;
  for (std::size_t i = 0; i < a.order(); ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < a.order(); ++j) row += std::abs(a(i, j));
    best = std::max(best, row);
  }
  return best;
}

}  // namespace vlgraph
