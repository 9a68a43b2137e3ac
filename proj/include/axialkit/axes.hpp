#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "axialkit/algebra.hpp"
#include "axialkit/fusion.hpp"
#include "axialkit/subspace.hpp"

namespace axialkit {

// Eigenspaces A_lambda(a) of ad_a for every eigenvalue of a fusion law, in the
// law's eigenvalue order. Empty parts are allowed.
class Eigendecomposition {
 public:
  Eigendecomposition(RatVector axis, FusionLaw law, std::vector<Subspace> parts);

  const RatVector& axis() const { return axis_; }
  const FusionLaw& law() const { return law_; }
  const std::vector<Subspace>& parts() const { return parts_; }
  const Subspace& part(const Rational& eigenvalue) const { return parts_[law_.require_index(eigenvalue)]; }
  // Direct sum of the parts selected by mask.
  Subspace part_sum(EigenMask mask) const;

  std::size_t total_dim() const;
  // True when the parts add up to the whole algebra (semisimple with
  // spectrum inside the law).
  bool complete() const { return change_of_basis_inverse_.has_value(); }

  // Coordinates of u in the concatenated eigenbases; requires complete().
  RatVector eigen_coordinates(std::span<const Rational> u) const;
  // Eigenbasis vectors, concatenated in part order, as columns.
  const RatMatrix& change_of_basis() const { return change_of_basis_; }
  // Requires complete().
  const RatMatrix& change_of_basis_inverse() const;

 private:
  RatVector axis_;
  FusionLaw law_;
  std::vector<Subspace> parts_;
  RatMatrix change_of_basis_;
  std::optional<RatMatrix> change_of_basis_inverse_;
};

Eigendecomposition eigendecompose(const CommAlgebra& alg, std::span<const Rational> a, const FusionLaw& law);

struct FusionViolation {
  Rational lhs;
  Rational rhs;
  RatVector witness;  // product of an A_lhs and an A_rhs eigenvector outside A_{lhs*rhs}
};

struct AxisReport {
  bool idempotent = false;         // a^2 = a, a != 0
  bool semisimple_in_law = false;  // eigenspaces of the law span the algebra
  bool fusion_ok = false;
  bool primitive = false;          // dim A_1(a) = 1
  RatVector idempotent_defect;     // a^2 - a
  std::size_t eigenspace_total = 0;
  std::vector<std::size_t> eigenspace_dims;
  std::vector<FusionViolation> violations;  // at most one per eigenvalue pair

  bool is_axis() const { return idempotent && semisimple_in_law && fusion_ok; }
};

AxisReport check_axis(const CommAlgebra& alg, std::span<const Rational> a, const FusionLaw& law);

struct Projection {
  Rational phi;                     // u_1 = phi * a
  std::vector<RatVector> components;  // u_lambda, in law eigenvalue order
};

// Decomposition of u along the eigenspaces of a primitive semisimple axis.
// Throws std::domain_error if the decomposition is incomplete or the axis is
// not primitive.
Projection project(const Eigendecomposition& decomposition, std::span<const Rational> u);

// Acts as +1 on A_plus(a) and -1 on A_minus(a). Throws std::invalid_argument
// if the grading is invalid for the law and std::domain_error if the
// decomposition is incomplete.
RatMatrix tau(const Eigendecomposition& decomposition, const C2Grading& grading);

// Uses the law's own grading; throws if it has none.
RatMatrix tau(const Eigendecomposition& decomposition);

bool is_automorphism(const CommAlgebra& alg, const RatMatrix& g);

}  // namespace axialkit
