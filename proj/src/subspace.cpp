#include "axialkit/subspace.hpp"

#include <stdexcept>

#include "axialkit/linalg.hpp"

namespace axialkit {

Subspace Subspace::zero(std::size_t ambient_dim) { return Subspace(ambient_dim, RatMatrix(0, ambient_dim), {}); }

Subspace Subspace::full(std::size_t ambient_dim) {
  std::vector<std::size_t> pivots(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) pivots[i] = i;
  return Subspace(ambient_dim, RatMatrix::identity(ambient_dim), std::move(pivots));
}

Subspace Subspace::span(std::size_t ambient_dim, std::span<const RatVector> vectors) {
  RatMatrix m(vectors.size(), ambient_dim);
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    if (vectors[r].size() != ambient_dim) throw std::invalid_argument("spanning vector has wrong length");
    for (std::size_t c = 0; c < ambient_dim; ++c) m(r, c) = vectors[r][c];
  }
  return row_space(m);
}

Subspace Subspace::row_space(const RatMatrix& m) {
  auto r = rref(m);
  RatMatrix basis(r.rank, m.cols());
  for (std::size_t i = 0; i < r.rank; ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) basis(i, j) = std::move(r.matrix(i, j));
  }
  return Subspace(m.cols(), std::move(basis), std::move(r.pivots));
}

void Subspace::require_same_ambient(std::size_t n) const {
  if (n != ambient_dim_) throw std::invalid_argument("ambient dimension mismatch");
}

RatVector Subspace::residual(std::span<const Rational> v) const {
  require_same_ambient(v.size());
  RatVector r(v.begin(), v.end());
  for (std::size_t k = 0; k < dim(); ++k) {
    const Rational f = r[pivots_[k]];
    if (f.is_zero()) continue;
    for (std::size_t j = pivots_[k]; j < ambient_dim_; ++j) r[j].sub_product(f, basis_(k, j));
  }
  return r;
}

bool Subspace::contains(std::span<const Rational> v) const { return axialkit::is_zero(residual(v)); }

bool Subspace::contains(const Subspace& other) const {
  require_same_ambient(other.ambient_dim_);
  for (std::size_t k = 0; k < other.dim(); ++k) {
    if (!contains(other.basis_.row(k))) return false;
  }
  return true;
}

std::optional<RatVector> Subspace::coordinates(std::span<const Rational> v) const {
  if (!contains(v)) return std::nullopt;
  RatVector c(dim());
  for (std::size_t k = 0; k < dim(); ++k) c[k] = v[pivots_[k]];
  return c;
}

RatMatrix Subspace::complement_equations() const {
  const Subspace perp = kernel(basis_.rows() == 0 ? RatMatrix(0, ambient_dim_) : basis_);
  return perp.basis_;
}

Subspace Subspace::operator+(const Subspace& other) const {
  require_same_ambient(other.ambient_dim_);
  RatMatrix stacked(dim() + other.dim(), ambient_dim_);
  for (std::size_t r = 0; r < dim(); ++r) {
    for (std::size_t c = 0; c < ambient_dim_; ++c) stacked(r, c) = basis_(r, c);
  }
  for (std::size_t r = 0; r < other.dim(); ++r) {
    for (std::size_t c = 0; c < ambient_dim_; ++c) stacked(dim() + r, c) = other.basis_(r, c);
  }
  return row_space(stacked);
}

Subspace Subspace::intersect(const Subspace& other) const {
  require_same_ambient(other.ambient_dim_);
  const RatMatrix a = complement_equations();
  const RatMatrix b = other.complement_equations();
  RatMatrix stacked(a.rows() + b.rows(), ambient_dim_);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < ambient_dim_; ++c) stacked(r, c) = a(r, c);
  }
  for (std::size_t r = 0; r < b.rows(); ++r) {
    for (std::size_t c = 0; c < ambient_dim_; ++c) stacked(a.rows() + r, c) = b(r, c);
  }
  return kernel(stacked);
}

}  // namespace axialkit
