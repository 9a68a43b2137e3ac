#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "axialkit/algebra.hpp"
#include "axialkit/matsuo.hpp"
#include "axialkit/subspace.hpp"

namespace axialkit {

struct SumPart {
  std::vector<std::size_t> axes;  // indices into the algebra's axis list
  Subspace span;                  // subalgebra generated by those axes
};

struct SumDecomposition {
  std::vector<SumPart> parts;
  bool pairwise_zero = false;  // A_i A_j = 0 for i != j, checked on basis pairs
  bool spans_all = false;      // sum of the A_i is A
  bool direct = false;         // spans_all, pairwise_zero and the dimensions add up
};

// Parts generated by the given blocks of axes, which must partition them.
SumDecomposition decompose(const AxialAlgebra& alg, const std::vector<std::vector<std::size_t>>& blocks);
// Blocks are the components of the non-annihilating graph.
SumDecomposition decompose_by_delta(const AxialAlgebra& alg);

struct Body {
  Subspace span;
  bool full_bodied = false;
};

// Quasi-ideal generated by the axes.
Body body(const AxialAlgebra& alg);
// Body of the subalgebra generated by a subset of axes, relative to that subset.
Body body(const AxialAlgebra& alg, std::span<const std::size_t> axis_subset);

struct SplitoffReport {
  bool annihilates = false;  // Q(A_1, X_1) A_2 = 0
  bool a1_full_bodied = false;
  // Whether A = A_1 + A_2; only evaluated when A_1 is full-bodied.
  std::optional<bool> sum_is_all;
  bool holds() const { return annihilates && (!a1_full_bodied || sum_is_all.value_or(false)); }
};

// Throws std::invalid_argument if the law is not Seress, the blocks do not
// partition the axes, or some axis of x1 and some axis of x2 multiply to a
// nonzero vector.
SplitoffReport splitoff_check(const AxialAlgebra& alg, std::span<const std::size_t> x1, std::span<const std::size_t> x2);

// Idempotent components a_i in A_i with sum a. Requires pairwise_zero.
// Throws std::invalid_argument if a is not idempotent or not in the sum.
std::vector<RatVector> split_idempotent(const AxialAlgebra& alg, const SumDecomposition& d, std::span<const Rational> a);

struct ExploreCase {
  std::string label;
  PermGroupData group;
};

struct ExploreRow {
  std::string group;
  Rational eta;
  std::size_t n_components = 0;
  bool pairwise_zero = false;
  bool spans_all = false;
  bool direct = false;
  std::size_t radical_dim = 0;
  std::size_t ann_dim = 0;
  bool full_bodied = false;
  std::size_t m_closed = 0;
  std::string error;  // nonempty when the row could not be computed
};

// One row per (case, eta), cases outer, in input order.
std::vector<ExploreRow> explore_conjecture(std::span<const ExploreCase> family, std::span<const Rational> etas);

// A row flags a counterexample when its components fail to annihilate each other.
bool is_counterexample(const ExploreRow& row);

}  // namespace axialkit
