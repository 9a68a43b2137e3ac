#include "support.hpp"

#include <cstdlib>
#include <set>

#include "axialkit/io.hpp"

namespace testing {

namespace {
std::uint64_t g_seed = 20240611;
}

void set_seed(std::uint64_t s) { g_seed = s; }

std::uint64_t seed() { return g_seed; }

std::mt19937_64 rng(std::uint64_t salt) { return std::mt19937_64(g_seed * 0x9E3779B97F4A7C15ULL + salt); }

axialkit::Rational random_rational(std::mt19937_64& gen, long num_bound, long den_bound) {
  std::uniform_int_distribution<long> num(-num_bound, num_bound), den(1, den_bound);
  return axialkit::Rational(num(gen), den(gen));
}

axialkit::RatVector random_vector(std::mt19937_64& gen, std::size_t n, long num_bound, long den_bound) {
  axialkit::RatVector v(n);
  for (auto& x : v) x = random_rational(gen, num_bound, den_bound);
  return v;
}

axialkit::RatMatrix random_matrix(std::mt19937_64& gen, std::size_t rows, std::size_t cols, long num_bound,
                                  long den_bound) {
  axialkit::RatMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_rational(gen, num_bound, den_bound);
  }
  return m;
}

axialkit::AxialAlgebra matsuo(const std::string& group, const axialkit::Rational& eta) {
  return axialkit::matsuo_algebra(axialkit::builtin_group(group), eta);
}

axialkit::AxialAlgebra two_b() {
  using namespace axialkit;
  CommAlgebra a({"e1", "e2"}, {parse_vector({1, 0}), parse_vector({0, 0}), parse_vector({0, 1})});
  return AxialAlgebra(a, {parse_vector({1, 0}), parse_vector({0, 1})}, monster_law(Rational(1, 4), Rational(1, 32)),
                      {"e1", "e2"});
}

axialkit::Rational leibniz_det(const axialkit::RatMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return axialkit::Rational(1);
  if (n == 1) return m(0, 0);
  axialkit::Rational det;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c).is_zero()) continue;
    axialkit::RatMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      for (std::size_t k = 0, kk = 0; k < n; ++k) {
        if (k != c) minor(r - 1, kk++) = m(r, k);
      }
    }
    const axialkit::Rational term = m(0, c) * leibniz_det(minor);
    if (c % 2 == 0) det += term;
    else det -= term;
  }
  return det;
}

std::size_t permutation_group_order(const std::vector<axialkit::Permutation>& gens, std::size_t degree) {
  std::vector<std::size_t> id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = i;
  std::set<std::vector<std::size_t>> seen{id};
  std::vector<std::vector<std::size_t>> todo{id};
  while (!todo.empty()) {
    const auto p = todo.back();
    todo.pop_back();
    for (const auto& g : gens) {
      std::vector<std::size_t> q(degree);
      for (std::size_t x = 0; x < degree; ++x) q[x] = g[p[x]];
      if (seen.insert(q).second) todo.push_back(q);
    }
  }
  return seen.size();
}

}  // namespace testing
