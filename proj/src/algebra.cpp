#include "axialkit/algebra.hpp"

#include <stdexcept>

#include "axialkit/kernels.hpp"
#include "axialkit/linalg.hpp"

namespace axialkit {

CommAlgebra::CommAlgebra(std::vector<std::string> basis_names, std::vector<RatVector> products)
    : names_(std::move(basis_names)), products_(std::move(products)) {
  const std::size_t n = names_.size();
  if (products_.size() != packed_size(n)) throw std::invalid_argument("structure constant table has wrong size");
  sparse_.resize(products_.size());
  for (std::size_t p = 0; p < products_.size(); ++p) {
    if (products_[p].size() != n) throw std::invalid_argument("structure constant vector has wrong length");
    for (std::size_t k = 0; k < n; ++k) {
      if (!products_[p][k].is_zero()) sparse_[p].push_back({k, products_[p][k]});
    }
  }
}

std::size_t CommAlgebra::packed_index(std::size_t i, std::size_t j, std::size_t dim) {
  if (i > j) std::swap(i, j);
  if (j >= dim) throw std::out_of_range("basis index out of range");
  return i * dim - i * (i - 1) / 2 + (j - i);
}

RatVector CommAlgebra::multiply(std::span<const Rational> x, std::span<const Rational> y) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n) throw std::invalid_argument("element dimension mismatch");
  RatVector out(n);
  Rational coeff;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      coeff = x[i] * y[j];
      for (const auto& t : sparse_[packed_index(i, j, n)]) out[t.index].add_product(coeff, t.coeff);
    }
  }
  return out;
}

AxialAlgebra::AxialAlgebra(CommAlgebra algebra, std::vector<RatVector> axes, FusionLaw law,
                           std::vector<std::string> axis_names)
    : algebra_(std::move(algebra)), axes_(std::move(axes)), axis_names_(std::move(axis_names)), law_(std::move(law)) {
  for (const auto& a : axes_) {
    if (a.size() != algebra_.dim()) throw std::invalid_argument("axis coordinate vector has wrong length");
  }
  if (axis_names_.empty()) {
    for (std::size_t i = 0; i < axes_.size(); ++i) axis_names_.push_back("x" + std::to_string(i));
  }
  if (axis_names_.size() != axes_.size()) throw std::invalid_argument("axis name count does not match axis count");
}

AxialAlgebra AxialAlgebra::with_axes(std::vector<RatVector> axes, std::vector<std::string> names) const {
  return AxialAlgebra(algebra_, std::move(axes), law_, std::move(names));
}

AxialAlgebra AxialAlgebra::with_axis_values(std::optional<std::vector<Rational>> values) const {
  if (values && values->size() != axes_.size()) throw std::invalid_argument("axis value count does not match axis count");
  AxialAlgebra copy(*this);
  copy.axis_values_ = std::move(values);
  return copy;
}

RatMatrix adjoint(const CommAlgebra& alg, std::span<const Rational> a) {
  const std::size_t n = alg.dim();
  if (a.size() != n) throw std::invalid_argument("element dimension mismatch");
  RatMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i].is_zero()) continue;
      const RatVector& p = alg.product(i, j);
      for (std::size_t k = 0; k < n; ++k) m(k, j).add_product(a[i], p[k]);
    }
  }
  return m;
}

namespace {

std::vector<RatVector> basis_of(const CommAlgebra& alg) {
  std::vector<RatVector> out;
  for (std::size_t i = 0; i < alg.dim(); ++i) out.push_back(alg.basis_element(i));
  return out;
}

// Adds to `space` every vector of `candidates` not already inside it;
// returns the ones that were new.
std::vector<RatVector> absorb(Subspace& space, std::vector<RatVector>& candidates) {
  std::vector<RatVector> fresh;
  for (auto& v : candidates) {
    RatVector r = space.residual(v);
    if (is_zero(r)) continue;
    std::vector<RatVector> stack = space.basis_vectors();
    stack.push_back(r);
    space = Subspace::span(space.ambient_dim(), stack);
    fresh.push_back(std::move(v));
  }
  return fresh;
}

bool products_inside(const CommAlgebra& alg, const Subspace& target, std::span<const RatVector> lhs,
                     std::span<const RatVector> rhs) {
  for (const auto& p : kernels::parallel::products(alg, lhs, rhs)) {
    if (!target.contains(p)) return false;
  }
  return true;
}

}  // namespace

SubalgebraClosure subalgebra_closure(const CommAlgebra& alg, std::span<const RatVector> gens) {
  const std::size_t n = alg.dim();
  if (gens.empty()) return {Subspace::zero(n), 0};
  // levels[k-1] spans all products of length at most k.
  std::vector<Subspace> levels{Subspace::span(n, gens)};
  std::vector<std::vector<RatVector>> level_bases{levels[0].basis_vectors()};
  for (std::size_t k = 1;; ++k) {
    const auto& cur = level_bases.back();
    if (products_inside(alg, levels.back(), cur, cur)) return {levels.back(), k};
    Subspace next = levels.back();
    const std::size_t target = k + 1;
    for (std::size_t i = 1; i <= target / 2; ++i) {
      auto prods = kernels::parallel::products(alg, level_bases[i - 1], level_bases[target - i - 1]);
      absorb(next, prods);
    }
    level_bases.push_back(next.basis_vectors());
    levels.push_back(std::move(next));
  }
}

Subspace quasi_ideal_closure(const CommAlgebra& alg, const Subspace& seed, std::span<const RatVector> multipliers) {
  Subspace space = seed;
  std::vector<RatVector> frontier = seed.basis_vectors();
  while (!frontier.empty() && !multipliers.empty()) {
    auto prods = kernels::parallel::products(alg, multipliers, frontier);
    frontier = absorb(space, prods);
  }
  return space;
}

Subspace ideal_generated(const CommAlgebra& alg, const Subspace& seed) {
  const auto basis = basis_of(alg);
  return quasi_ideal_closure(alg, seed, basis);
}

Subspace annihilator(const CommAlgebra& alg) {
  const std::size_t n = alg.dim();
  RatMatrix stacked(n * n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const RatMatrix ad = adjoint(alg, alg.basis_element(j));
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) stacked(j * n + r, c) = ad(r, c);
    }
  }
  return kernel(stacked);
}

Subspace annihilator_within(const CommAlgebra& alg, const Subspace& sub) {
  const std::size_t n = alg.dim();
  const auto basis = sub.basis_vectors();
  const std::size_t d = basis.size();
  if (d == 0) return Subspace::zero(n);
  // Unknowns: coefficients c_k of u = sum c_k s_k. Rows: coordinates of u s_l.
  const auto prods = kernels::parallel::products(alg, basis, basis);
  RatMatrix system(d * n, d);
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t l = 0; l < d; ++l) {
      const RatVector& p = prods[k * d + l];
      for (std::size_t r = 0; r < n; ++r) system(l * n + r, k) = p[r];
    }
  }
  const Subspace coeffs = kernel(system);
  std::vector<RatVector> out;
  for (const auto& c : coeffs.basis_vectors()) {
    RatVector u(n);
    for (std::size_t k = 0; k < d; ++k) axpy(u, c[k], basis[k]);
    out.push_back(std::move(u));
  }
  return Subspace::span(n, out);
}

Subspace largest_ideal_inside(const CommAlgebra& alg, const Subspace& w) {
  const std::size_t n = alg.dim();
  std::vector<RatMatrix> ads;
  for (std::size_t j = 0; j < n; ++j) ads.push_back(adjoint(alg, alg.basis_element(j)));
  Subspace cur = w;
  while (!cur.is_zero()) {
    const RatMatrix eq = cur.complement_equations();
    if (eq.rows() == 0) break;  // cur is everything, hence an ideal
    RatMatrix stacked(eq.rows() * n, n);
    for (std::size_t j = 0; j < n; ++j) {
      const RatMatrix block = eq * ads[j];
      for (std::size_t r = 0; r < block.rows(); ++r) {
        for (std::size_t c = 0; c < n; ++c) stacked(j * eq.rows() + r, c) = block(r, c);
      }
    }
    Subspace next = cur.intersect(kernel(stacked));
    if (next.dim() == cur.dim()) break;
    cur = std::move(next);
  }
  return cur;
}

Subspace product_space(const CommAlgebra& alg, const Subspace& lhs, const Subspace& rhs) {
  const auto prods = kernels::parallel::products(alg, lhs.basis_vectors(), rhs.basis_vectors());
  return Subspace::span(alg.dim(), prods);
}

bool is_ideal(const CommAlgebra& alg, const Subspace& sub) {
  return products_inside(alg, sub, sub.basis_vectors(), basis_of(alg));
}

bool is_subalgebra(const CommAlgebra& alg, const Subspace& sub) {
  const auto b = sub.basis_vectors();
  return products_inside(alg, sub, b, b);
}

bool annihilates(const CommAlgebra& alg, const Subspace& lhs, const Subspace& rhs) {
  for (const auto& p : kernels::parallel::products(alg, lhs.basis_vectors(), rhs.basis_vectors())) {
    if (!is_zero(p)) return false;
  }
  return true;
}

}  // namespace axialkit
