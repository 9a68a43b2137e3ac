#include "axialkit/linalg.hpp"

#include <stdexcept>

namespace axialkit {

RrefResult rref(const RatMatrix& m) { return kernels::parallel::rref(m); }

std::size_t rank(const RatMatrix& m) { return rref(m).rank; }

Subspace kernel(const RatMatrix& m) {
  const auto r = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    RatVector x(n);
    x[free] = 1;
    for (std::size_t k = 0; k < r.rank; ++k) x[r.pivots[k]] = -r.matrix(k, free);
    basis.push_back(std::move(x));
  }
  return Subspace::span(n, basis);
}

std::optional<RatVector> solve(const RatMatrix& m, std::span<const Rational> b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side length mismatch");
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  const auto r = rref(aug);
  if (r.rank > 0 && r.pivots[r.rank - 1] == m.cols()) return std::nullopt;
  RatVector x(m.cols());
  for (std::size_t k = 0; k < r.rank; ++k) x[r.pivots[k]] = r.matrix(k, m.cols());
  return x;
}

RatMatrix inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::domain_error("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const auto r = rref(aug);
  if (r.rank < n || (n > 0 && r.pivots[n - 1] != n - 1)) throw std::domain_error("inverse of a singular matrix");
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.matrix(i, n + j);
  }
  return inv;
}

Rational determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::domain_error("determinant of a non-square matrix");
  RatMatrix a(m);
  const std::size_t n = a.rows();
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      a.swap_rows(p, c);
      det = -det;
    }
    det *= a(c, c);
    const Rational inv = Rational(1) / a(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c).is_zero()) continue;
      const Rational f = a(r, c) * inv;
      for (std::size_t j = c; j < n; ++j) a(r, j).sub_product(f, a(c, j));
    }
  }
  return det;
}

Rational trace(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::domain_error("trace of a non-square matrix");
  Rational t;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

}  // namespace axialkit
