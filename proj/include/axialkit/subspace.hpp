#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "axialkit/matrix.hpp"

namespace axialkit {

// A subspace of Q^n, stored by its canonical basis: the nonzero rows of the
// reduced row-echelon form of any spanning set. Two Subspace values are equal
// exactly when they describe the same subspace.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);
  static Subspace span(std::size_t ambient_dim, std::span<const RatVector> vectors);
  static Subspace row_space(const RatMatrix& m);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_dim_; }

  const RatMatrix& basis() const { return basis_; }
  std::vector<RatVector> basis_vectors() const { return basis_.row_vectors(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // v minus its reduction against the basis; zero iff v lies in the subspace.
  RatVector residual(std::span<const Rational> v) const;
  bool contains(std::span<const Rational> v) const;
  bool contains(const Subspace& other) const;
  // Coefficients of v in the canonical basis, or nullopt if v is outside.
  std::optional<RatVector> coordinates(std::span<const Rational> v) const;

  // Rows spanning the orthogonal complement under the standard dot product.
  RatMatrix complement_equations() const;

  Subspace operator+(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  Subspace(std::size_t ambient_dim, RatMatrix basis, std::vector<std::size_t> pivots)
      : ambient_dim_(ambient_dim), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  void require_same_ambient(std::size_t n) const;

  std::size_t ambient_dim_ = 0;
  RatMatrix basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace axialkit
