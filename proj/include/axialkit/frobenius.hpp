#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "axialkit/algebra.hpp"
#include "axialkit/matrix.hpp"
#include "axialkit/subspace.hpp"

namespace axialkit {

enum class FormStatus { unique, family, inconsistent };

const char* to_string(FormStatus s);

struct FormSolution {
  FormStatus status = FormStatus::inconsistent;
  // Gram matrix when status is unique; zero matrix otherwise.
  RatMatrix gram;
  // Dimension of the solution space when status is family.
  std::size_t family_dim = 0;

  bool is_unique() const { return status == FormStatus::unique; }
};

// Solves for a bilinear form with (u, vw) = (uv, w) on all basis triples and
// (a, a) = axis_values[i] for every axis. Symmetry is built in: the unknowns
// are the upper triangle of the Gram matrix.
FormSolution solve_form(const CommAlgebra& alg, std::span<const RatVector> axes, std::span<const Rational> axis_values);
// Uses the algebra's own axis values; throws if it has none.
FormSolution solve_form(const AxialAlgebra& alg);

// All axis values 1.
FormSolution projection_form(const AxialAlgebra& alg);

// Largest |(u, vw) - (uv, w)| residual over basis triples is zero.
bool is_associating(const CommAlgebra& alg, const RatMatrix& gram);

Rational form_value(const RatMatrix& gram, std::span<const Rational> u, std::span<const Rational> v);

// Kernel of the Gram matrix. Throws std::domain_error unless the form is unique.
Subspace form_radical(const FormSolution& form);

// Largest ideal inside the intersection over axes of A_{F \ {1}}(a).
Subspace algebra_radical(const AxialAlgebra& alg);

struct RadicalTheoremReport {
  bool all_axis_values_nonzero = false;
  bool radicals_equal = false;
  bool holds = false;  // all_axis_values_nonzero == radicals_equal
  std::size_t algebra_radical_dim = 0;
  std::size_t form_radical_dim = 0;
  // When the radicals differ: a vector in one radical but not the other.
  std::optional<RatVector> certificate;
};

// Computes both radicals independently and checks that they agree exactly
// when every axis has nonzero form value. Throws unless the form is unique.
RadicalTheoremReport verify_radical_theorem(const AxialAlgebra& alg, const FormSolution& form);

// Sylvester's criterion on the leading principal minors.
bool is_positive_definite(const RatMatrix& gram);

}  // namespace axialkit
