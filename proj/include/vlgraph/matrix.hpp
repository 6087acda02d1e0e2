// Small dense square matrices indexed by canonical vertex order.

#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace vlgraph {

template <typename T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t order, T fill = T{}) : order_(order), data_(order * order, fill) {}

  static SquareMatrix identity(std::size_t order) {
    SquareMatrix m(order);
    for (std::size_t i = 0; i < order; ++i) m(i, i) = T{1};
    return m;
  }

  std::size_t order() const { return order_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * order_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * order_ + j]; }

  T& at(std::size_t i, std::size_t j) {
    check(i, j);
    return (*this)(i, j);
  }
  const T& at(std::size_t i, std::size_t j) const {
    check(i, j);
    return (*this)(i, j);
  }

  const std::vector<T>& data() const { return data_; }
  std::vector<T>& data() { return data_; }

  bool is_symmetric() const {
    for (std::size_t i = 0; i < order_; ++i)
      for (std::size_t j = i + 1; j < order_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  void check(std::size_t i, std::size_t j) const {
    if (i >= order_ || j >= order_) throw std::out_of_range("matrix index out of range");
  }

  std::size_t order_ = 0;
  std::vector<T> data_;
};

using DenseMatrix = SquareMatrix<double>;
using CountMatrix = SquareMatrix<std::uint64_t>;

/// Plain O(n^3) product.
DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);

/// Exact product; throws std::overflow_error if any entry exceeds 64 bits.
CountMatrix multiply(const CountMatrix& a, const CountMatrix& b);

/// a^k by repeated squaring, overflow-checked.
CountMatrix power(const CountMatrix& a, unsigned k);

/// Maximum absolute row sum.
double infinity_norm(const DenseMatrix& a);

}  // namespace vlgraph
