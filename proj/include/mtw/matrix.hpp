#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "mtw/domain.hpp"

namespace mtw {

/// Row-major matrix with entries in a CoefficientDomain.
class ExactMatrix {
 public:
  ExactMatrix(CoefficientDomain domain, std::size_t rows, std::size_t cols)
      : domain_(domain), rows_(rows), cols_(cols), entries_(rows * cols) {
    if (rows == 0 || cols == 0)
      throw std::invalid_argument("ExactMatrix: dimensions must be positive");
  }

  static ExactMatrix identity(const CoefficientDomain& domain, std::size_t n) {
    ExactMatrix m(domain, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, Int(1));
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const CoefficientDomain& domain() const { return domain_; }

  const Int& at(std::size_t r, std::size_t c) const { return entries_[index(r, c)]; }
  void set(std::size_t r, std::size_t c, Int v) { entries_[index(r, c)] = domain_.reduce(std::move(v)); }

 private:
  std::size_t index(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("ExactMatrix: index out of range");
    return r * cols_ + c;
  }

  CoefficientDomain domain_;
  std::size_t rows_, cols_;
  std::vector<Int> entries_;
};

/// Determinant by fraction-free (Bareiss) elimination over the integer
/// lifts of the entries; every intermediate division is exact. The final
/// value is reduced back into the entry domain.
inline Int det(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix must be square");
  const std::size_t n = m.rows();
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);

  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && a[pivot][k] == 0) ++pivot;
      if (pivot == n) return m.domain().reduce(Int(0));
      std::swap(a[k], a[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  Int result = a[n - 1][n - 1];
  if (sign < 0) result = -result;
  return m.domain().reduce(result);
}

}  // namespace mtw
