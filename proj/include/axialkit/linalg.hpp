#pragma once

#include <optional>

#include "axialkit/kernels.hpp"
#include "axialkit/matrix.hpp"
#include "axialkit/subspace.hpp"

namespace axialkit {

RrefResult rref(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);

// Solution space of m * x = 0.
Subspace kernel(const RatMatrix& m);

// Some x with m * x = b, or nullopt when the system is inconsistent.
std::optional<RatVector> solve(const RatMatrix& m, std::span<const Rational> b);

// Throws std::domain_error for a singular or non-square matrix.
RatMatrix inverse(const RatMatrix& m);

Rational determinant(const RatMatrix& m);
Rational trace(const RatMatrix& m);

}  // namespace axialkit
