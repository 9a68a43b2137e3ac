#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "axialkit/fusion.hpp"
#include "axialkit/matrix.hpp"
#include "axialkit/subspace.hpp"

namespace axialkit {

// Commutative, not necessarily associative, algebra over Q given by
// structure constants on a named basis. Only products b_i b_j with i <= j
// are stored, so commutativity holds by construction.
class CommAlgebra {
 public:
  CommAlgebra() = default;
  // products[packed_index(i, j, dim)] is the coordinate vector of b_i b_j.
  CommAlgebra(std::vector<std::string> basis_names, std::vector<RatVector> products);

  static std::size_t packed_index(std::size_t i, std::size_t j, std::size_t dim);
  static std::size_t packed_size(std::size_t dim) { return dim * (dim + 1) / 2; }

  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& basis_names() const { return names_; }
  const RatVector& product(std::size_t i, std::size_t j) const { return products_[packed_index(i, j, dim())]; }
  RatVector basis_element(std::size_t i) const { return unit_vector(dim(), i); }

  RatVector multiply(std::span<const Rational> x, std::span<const Rational> y) const;

  friend bool operator==(const CommAlgebra& a, const CommAlgebra& b) {
    return a.names_ == b.names_ && a.products_ == b.products_;
  }

 private:
  struct Term {
    std::size_t index;
    Rational coeff;
  };

  std::vector<std::string> names_;
  std::vector<RatVector> products_;
  std::vector<std::vector<Term>> sparse_;  // nonzero terms of each stored product
};

// A commutative algebra with an ordered list of designated axes and the
// fusion law they are meant to satisfy. axis_values optionally prescribes
// (a, a) for a Frobenius form.
class AxialAlgebra {
 public:
  AxialAlgebra() = default;
  AxialAlgebra(CommAlgebra algebra, std::vector<RatVector> axes, FusionLaw law,
               std::vector<std::string> axis_names = {});

  const CommAlgebra& algebra() const { return algebra_; }
  std::size_t dim() const { return algebra_.dim(); }
  const std::vector<RatVector>& axes() const { return axes_; }
  const std::vector<std::string>& axis_names() const { return axis_names_; }
  const FusionLaw& law() const { return law_; }
  const std::optional<std::vector<Rational>>& axis_values() const { return axis_values_; }

  AxialAlgebra with_axes(std::vector<RatVector> axes, std::vector<std::string> names = {}) const;
  AxialAlgebra with_axis_values(std::optional<std::vector<Rational>> values) const;

  friend bool operator==(const AxialAlgebra&, const AxialAlgebra&) = default;

 private:
  CommAlgebra algebra_;
  std::vector<RatVector> axes_;
  std::vector<std::string> axis_names_;
  FusionLaw law_;
  std::optional<std::vector<Rational>> axis_values_;
};

// Column j is a * b_j.
RatMatrix adjoint(const CommAlgebra& alg, std::span<const Rational> a);

struct SubalgebraClosure {
  Subspace span;
  // Smallest m such that products of generators of length at most m span
  // the subalgebra; generators count as length 1. Zero for no generators.
  std::size_t m = 0;
};

SubalgebraClosure subalgebra_closure(const CommAlgebra& alg, std::span<const RatVector> gens);

// Smallest ideal containing seed.
Subspace ideal_generated(const CommAlgebra& alg, const Subspace& seed);

// Smallest subspace containing seed and closed under multiplication by every
// element of multipliers.
Subspace quasi_ideal_closure(const CommAlgebra& alg, const Subspace& seed, std::span<const RatVector> multipliers);

// {u : uA = 0}
Subspace annihilator(const CommAlgebra& alg);
// {u in sub : u sub = 0}; sub should be a subalgebra.
Subspace annihilator_within(const CommAlgebra& alg, const Subspace& sub);

// Largest ideal of the algebra contained in w.
Subspace largest_ideal_inside(const CommAlgebra& alg, const Subspace& w);

// Span of all products u v with u in lhs, v in rhs.
Subspace product_space(const CommAlgebra& alg, const Subspace& lhs, const Subspace& rhs);

bool is_ideal(const CommAlgebra& alg, const Subspace& sub);
bool is_subalgebra(const CommAlgebra& alg, const Subspace& sub);
// True iff u v = 0 for all u in lhs, v in rhs.
bool annihilates(const CommAlgebra& alg, const Subspace& lhs, const Subspace& rhs);

}  // namespace axialkit
