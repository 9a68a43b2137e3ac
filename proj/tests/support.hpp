#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "axialkit/algebra.hpp"
#include "axialkit/matsuo.hpp"

namespace testing {

// Seed for randomized tests: --seed=N on the command line, else
// AXIALKIT_TEST_SEED, else a fixed default.
std::uint64_t seed();
void set_seed(std::uint64_t s);
std::mt19937_64 rng(std::uint64_t salt = 0);

axialkit::Rational random_rational(std::mt19937_64& gen, long num_bound = 9, long den_bound = 5);
axialkit::RatVector random_vector(std::mt19937_64& gen, std::size_t n, long num_bound = 9, long den_bound = 5);
axialkit::RatMatrix random_matrix(std::mt19937_64& gen, std::size_t rows, std::size_t cols, long num_bound = 9,
                                  long den_bound = 5);

axialkit::AxialAlgebra matsuo(const std::string& group, const axialkit::Rational& eta);
axialkit::AxialAlgebra two_b();

// Determinant by cofactor expansion; independent of the library's elimination.
axialkit::Rational leibniz_det(const axialkit::RatMatrix& m);

// Order of the permutation group generated by gens, by plain orbit-style
// closure over permutations (no matrices involved).
std::size_t permutation_group_order(const std::vector<axialkit::Permutation>& gens, std::size_t degree);

}  // namespace testing
