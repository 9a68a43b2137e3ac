#pragma once

// Hot loops of the library in two flavours. `parallel` is what the rest of
// the library calls; `serial` is the straightforward reference kept for
// equivalence tests and the benchmark. Both produce identical output (same
// values, same order) for the same input.

#include <cstddef>
#include <span>
#include <vector>

#include "axialkit/matrix.hpp"

namespace axialkit {

class CommAlgebra;

struct RrefResult {
  RatMatrix matrix;                 // reduced row-echelon form, same shape as input
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column of each of the first `rank` rows
};

namespace kernels {

// Below this many rational entries touched, the parallel variants run inline.
inline constexpr std::size_t kParallelMinWork = 2048;

namespace serial {
RatMatrix matmul(const RatMatrix& a, const RatMatrix& b);
RrefResult rref(RatMatrix m);
// out[f * gens.size() + g] = gens[g] * frontier[f]
std::vector<RatMatrix> expand_frontier(std::span<const RatMatrix> frontier, std::span<const RatMatrix> gens);
// out[i * rhs.size() + j] = lhs[i] * rhs[j] in the algebra
std::vector<RatVector> products(const CommAlgebra& alg, std::span<const RatVector> lhs,
                                std::span<const RatVector> rhs);
}  // namespace serial

namespace parallel {
RatMatrix matmul(const RatMatrix& a, const RatMatrix& b);
RrefResult rref(RatMatrix m);
std::vector<RatMatrix> expand_frontier(std::span<const RatMatrix> frontier, std::span<const RatMatrix> gens);
std::vector<RatVector> products(const CommAlgebra& alg, std::span<const RatVector> lhs,
                                std::span<const RatVector> rhs);
}  // namespace parallel

}  // namespace kernels
}  // namespace axialkit
