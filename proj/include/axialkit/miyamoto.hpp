#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "axialkit/algebra.hpp"
#include "axialkit/fusion.hpp"

namespace axialkit {

inline constexpr std::size_t kDefaultGroupCap = 20000;
inline constexpr std::size_t kDefaultAxisCap = 5000;

// Group of automorphism matrices enumerated from its generators. When
// complete is false the enumeration hit the cap and elements is a prefix of
// the breadth-first order.
struct MatrixGroup {
  std::vector<RatMatrix> generators;  // distinct, non-identity
  std::vector<RatMatrix> elements;    // identity first, breadth-first order
  bool complete = false;
  std::size_t cap = kDefaultGroupCap;

  std::size_t order() const { return elements.size(); }
  bool contains(const RatMatrix& g) const;
};

// Breadth-first closure of the generators under left multiplication.
// enumerate_group_serial is the single-threaded reference; both return the
// same element list.
MatrixGroup enumerate_group(std::vector<RatMatrix> generators, std::size_t dim, std::size_t cap = kDefaultGroupCap);
MatrixGroup enumerate_group_serial(std::vector<RatMatrix> generators, std::size_t dim,
                                   std::size_t cap = kDefaultGroupCap);

// Miyamoto involutions of the given axes under a C2 grading.
std::vector<RatMatrix> miyamoto_involutions(const CommAlgebra& alg, std::span<const RatVector> axes,
                                            const FusionLaw& law, const C2Grading& grading);

MatrixGroup miyamoto_group(const CommAlgebra& alg, std::span<const RatVector> axes, const FusionLaw& law,
                           const C2Grading& grading, std::size_t cap = kDefaultGroupCap);
// Uses the algebra's axes and its law's grading.
MatrixGroup miyamoto_group(const AxialAlgebra& alg, std::size_t cap = kDefaultGroupCap);

struct AxisOrbitSet {
  std::vector<RatVector> axes;  // input axes first, then new ones in discovery order
  bool closed = false;
};

// Smallest superset closed under tau_b for every member b.
AxisOrbitSet close_axes(const CommAlgebra& alg, std::span<const RatVector> axes, const FusionLaw& law,
                        const C2Grading& grading, std::size_t cap = kDefaultAxisCap);
AxisOrbitSet close_axes(const AxialAlgebra& alg, std::size_t cap = kDefaultAxisCap);

// Same closure as sets. Throws std::runtime_error if either closure is
// incomplete.
bool equivalent(const CommAlgebra& alg, std::span<const RatVector> x, std::span<const RatVector> y,
                const FusionLaw& law, const C2Grading& grading, std::size_t cap = kDefaultAxisCap);

// Axis sets compared as sets.
bool same_axis_set(std::span<const RatVector> x, std::span<const RatVector> y);

// Every generator of each group commutes with every generator of each other
// group.
bool central_product_check(std::span<const MatrixGroup> groups);

// Partition of axes into orbits under the group: axis indices, each orbit
// sorted and orbits ordered by smallest member. Images outside the list are
// ignored.
std::vector<std::vector<std::size_t>> axis_orbits(std::span<const RatVector> axes, const MatrixGroup& group);

// Orbits of the axes under G(X) without enumerating the group: the axis set
// is closed first, then orbits are merged along the involutions.
std::vector<std::vector<std::size_t>> axis_orbits(const AxialAlgebra& alg, std::size_t cap = kDefaultAxisCap);

}  // namespace axialkit
