#include "axialkit/decomp.hpp"

#include <stdexcept>

#include "axialkit/frobenius.hpp"
#include "axialkit/graphs.hpp"
#include "axialkit/linalg.hpp"

namespace axialkit {

namespace {

std::vector<RatVector> pick(const AxialAlgebra& alg, std::span<const std::size_t> indices) {
  std::vector<RatVector> out;
  for (std::size_t i : indices) {
    if (i >= alg.axes().size()) throw std::invalid_argument("axis index out of range");
    out.push_back(alg.axes()[i]);
  }
  return out;
}

void require_partition(std::size_t n, const std::vector<std::vector<std::size_t>>& blocks) {
  std::vector<int> count(n, 0);
  for (const auto& b : blocks) {
    for (std::size_t i : b) {
      if (i >= n) throw std::invalid_argument("axis index out of range");
      ++count[i];
    }
  }
  for (int c : count) {
    if (c != 1) throw std::invalid_argument("axis blocks do not partition the axes");
  }
}

}  // namespace

SumDecomposition decompose(const AxialAlgebra& alg, const std::vector<std::vector<std::size_t>>& blocks) {
  require_partition(alg.axes().size(), blocks);
  SumDecomposition out;
  std::size_t total = 0;
  Subspace sum = Subspace::zero(alg.dim());
  for (const auto& b : blocks) {
    SumPart part{b, subalgebra_closure(alg.algebra(), pick(alg, b)).span};
    total += part.span.dim();
    sum = sum + part.span;
    out.parts.push_back(std::move(part));
  }
  out.pairwise_zero = true;
  for (std::size_t i = 0; i < out.parts.size() && out.pairwise_zero; ++i) {
    for (std::size_t j = i + 1; j < out.parts.size(); ++j) {
      if (!annihilates(alg.algebra(), out.parts[i].span, out.parts[j].span)) {
        out.pairwise_zero = false;
        break;
      }
    }
  }
  out.spans_all = sum.is_full();
  out.direct = out.spans_all && out.pairwise_zero && total == alg.dim();
  return out;
}

SumDecomposition decompose_by_delta(const AxialAlgebra& alg) {
  return decompose(alg, nonannihilating_graph(alg).components);
}

Body body(const AxialAlgebra& alg) {
  const Subspace seed = Subspace::span(alg.dim(), alg.axes());
  Body out;
  out.span = quasi_ideal_closure(alg.algebra(), seed, alg.axes());
  out.full_bodied = out.span.is_full();
  return out;
}

Body body(const AxialAlgebra& alg, std::span<const std::size_t> axis_subset) {
  const std::vector<RatVector> x = pick(alg, axis_subset);
  const Subspace sub = subalgebra_closure(alg.algebra(), x).span;
  Body out;
  out.span = quasi_ideal_closure(alg.algebra(), Subspace::span(alg.dim(), x), x);
  out.full_bodied = out.span == sub;
  return out;
}

SplitoffReport splitoff_check(const AxialAlgebra& alg, std::span<const std::size_t> x1,
                              std::span<const std::size_t> x2) {
  if (!is_seress(alg.law())) throw std::invalid_argument("fusion law is not Seress");
  require_partition(alg.axes().size(), {std::vector<std::size_t>(x1.begin(), x1.end()),
                                        std::vector<std::size_t>(x2.begin(), x2.end())});
  const auto a1_axes = pick(alg, x1);
  const auto a2_axes = pick(alg, x2);
  for (const auto& a : a1_axes) {
    for (const auto& b : a2_axes) {
      if (!is_zero(alg.algebra().multiply(a, b))) throw std::invalid_argument("axes of the two blocks do not annihilate");
    }
  }
  SplitoffReport out;
  const Subspace a1 = subalgebra_closure(alg.algebra(), a1_axes).span;
  const Subspace a2 = subalgebra_closure(alg.algebra(), a2_axes).span;
  const Body q1 = body(alg, x1);
  out.annihilates = annihilates(alg.algebra(), q1.span, a2);
  out.a1_full_bodied = q1.full_bodied;
  if (out.a1_full_bodied) out.sum_is_all = (a1 + a2).is_full();
  return out;
}

std::vector<RatVector> split_idempotent(const AxialAlgebra& alg, const SumDecomposition& d,
                                        std::span<const Rational> a) {
  if (!d.pairwise_zero) throw std::invalid_argument("decomposition parts do not annihilate each other");
  if (a.size() != alg.dim()) throw std::invalid_argument("element has wrong length");
  const RatVector av(a.begin(), a.end());
  if (alg.algebra().multiply(av, av) != av) throw std::invalid_argument("element is not an idempotent");

  std::vector<RatVector> columns;
  for (const auto& p : d.parts) {
    for (auto& v : p.span.basis_vectors()) columns.push_back(std::move(v));
  }
  const auto coeffs = solve(RatMatrix::from_columns(columns, alg.dim()), av);
  if (!coeffs) throw std::invalid_argument("element is not in the sum of the parts");

  std::vector<RatVector> out;
  std::size_t offset = 0;
  for (const auto& p : d.parts) {
    RatVector ai = zero_vector(alg.dim());
    for (std::size_t k = 0; k < p.span.dim(); ++k) axpy(ai, (*coeffs)[offset + k], p.span.basis().row(k));
    offset += p.span.dim();
    // Squaring removes any annihilator ambiguity in the chosen component.
    out.push_back(alg.algebra().multiply(ai, ai));
  }
  return out;
}

std::vector<ExploreRow> explore_conjecture(std::span<const ExploreCase> family, std::span<const Rational> etas) {
  std::vector<ExploreRow> rows(family.size() * etas.size());
  const long n = static_cast<long>(rows.size());
#pragma omp parallel for schedule(dynamic)
  for (long r = 0; r < n; ++r) {
    const auto& c = family[static_cast<std::size_t>(r) / etas.size()];
    ExploreRow& row = rows[static_cast<std::size_t>(r)];
    row.group = c.label;
    row.eta = etas[static_cast<std::size_t>(r) % etas.size()];
    try {
      const AxialAlgebra alg = matsuo_algebra(c.group, row.eta);
      const SumDecomposition d = decompose_by_delta(alg);
      row.n_components = d.parts.size();
      row.pairwise_zero = d.pairwise_zero;
      row.spans_all = d.spans_all;
      row.direct = d.direct;
      row.radical_dim = algebra_radical(alg).dim();
      row.ann_dim = annihilator(alg.algebra()).dim();
      row.full_bodied = body(alg).full_bodied;
      row.m_closed = subalgebra_closure(alg.algebra(), alg.axes()).m;
    } catch (const std::exception& e) {
      row.error = e.what();
    }
  }
  return rows;
}

bool is_counterexample(const ExploreRow& row) { return row.error.empty() && !row.pairwise_zero; }

}  // namespace axialkit
