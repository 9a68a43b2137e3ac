#include "axialkit/frobenius.hpp"

#include <stdexcept>

#include "axialkit/axes.hpp"
#include "axialkit/kernels.hpp"
#include "axialkit/linalg.hpp"

namespace axialkit {

namespace {

std::size_t unknown(std::size_t i, std::size_t j, std::size_t n) {
  return i <= j ? CommAlgebra::packed_index(i, j, n) : CommAlgebra::packed_index(j, i, n);
}

RatMatrix gram_from_unknowns(std::span<const Rational> x, std::size_t n) {
  RatMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) g(i, j) = x[unknown(i, j, n)];
  }
  return g;
}

// Row r of the triple block encodes (b_i, b_j b_k) - (b_i b_j, b_k) = 0.
void fill_triple_rows(const CommAlgebra& alg, RatMatrix& sys) {
  const std::size_t n = alg.dim();
  const std::size_t pairs = n * (n - 1) / 2;
  const bool big = n * pairs * n >= kernels::kParallelMinWork;
#pragma omp parallel for schedule(dynamic) if (big)
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t r = j * pairs;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = i + 1; k < n; ++k, ++r) {
        auto row = sys.row(r);
        const RatVector& jk = alg.product(j, k);
        const RatVector& ij = alg.product(i, j);
        for (std::size_t l = 0; l < n; ++l) {
          if (!jk[l].is_zero()) row[unknown(i, l, n)] += jk[l];
          if (!ij[l].is_zero()) row[unknown(l, k, n)] -= ij[l];
        }
      }
    }
  }
}

}  // namespace

const char* to_string(FormStatus s) {
  switch (s) {
    case FormStatus::unique: return "unique";
    case FormStatus::family: return "family";
    case FormStatus::inconsistent: return "inconsistent";
  }
  return "?";
}

FormSolution solve_form(const CommAlgebra& alg, std::span<const RatVector> axes, std::span<const Rational> axis_values) {
  if (axes.size() != axis_values.size()) throw std::invalid_argument("one axis value per axis expected");
  const std::size_t n = alg.dim();
  const std::size_t unknowns = CommAlgebra::packed_size(n);
  const std::size_t triple_rows = n * (n * (n - 1) / 2);  // zero when n == 0
  RatMatrix sys(triple_rows + axes.size(), unknowns + 1);
  if (n > 0) fill_triple_rows(alg, sys);

  for (std::size_t a = 0; a < axes.size(); ++a) {
    const RatVector& v = axes[a];
    if (v.size() != n) throw std::invalid_argument("axis has wrong length");
    auto row = sys.row(triple_rows + a);
    for (std::size_t i = 0; i < n; ++i) {
      if (v[i].is_zero()) continue;
      row[unknown(i, i, n)].add_product(v[i], v[i]);
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!v[j].is_zero()) row[unknown(i, j, n)].add_product(Rational(2) * v[i], v[j]);
      }
    }
    row[unknowns] = axis_values[a];
  }

  const RrefResult red = rref(sys);
  FormSolution out;
  out.gram = RatMatrix(n, n);
  if (red.rank > 0 && red.pivots[red.rank - 1] == unknowns) return out;
  out.family_dim = unknowns - red.rank;
  if (out.family_dim > 0) {
    out.status = FormStatus::family;
    return out;
  }
  RatVector x(unknowns);
  for (std::size_t r = 0; r < red.rank; ++r) x[red.pivots[r]] = red.matrix(r, unknowns);
  out.gram = gram_from_unknowns(x, n);
  out.status = FormStatus::unique;
  return out;
}

FormSolution solve_form(const AxialAlgebra& alg) {
  if (!alg.axis_values()) throw std::invalid_argument("algebra has no prescribed axis values");
  return solve_form(alg.algebra(), alg.axes(), *alg.axis_values());
}

FormSolution projection_form(const AxialAlgebra& alg) {
  const std::vector<Rational> ones(alg.axes().size(), Rational(1));
  return solve_form(alg.algebra(), alg.axes(), ones);
}

Rational form_value(const RatMatrix& gram, std::span<const Rational> u, std::span<const Rational> v) {
  return dot(u, gram.apply(v));
}

bool is_associating(const CommAlgebra& alg, const RatMatrix& gram) {
  const std::size_t n = alg.dim();
  if (gram.rows() != n || gram.cols() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        Rational lhs, rhs;
        const RatVector& jk = alg.product(j, k);
        const RatVector& ij = alg.product(i, j);
        for (std::size_t l = 0; l < n; ++l) {
          lhs.add_product(gram(i, l), jk[l]);
          rhs.add_product(ij[l], gram(l, k));
        }
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

Subspace form_radical(const FormSolution& form) {
  if (!form.is_unique()) throw std::domain_error("form radical needs a uniquely determined form");
  return kernel(form.gram);
}

Subspace algebra_radical(const AxialAlgebra& alg) {
  const std::size_t one = alg.law().require_index(Rational(1));
  const EigenMask rest = alg.law().all() & ~bit(one);
  Subspace w = Subspace::full(alg.dim());
  for (const auto& a : alg.axes()) {
    w = w.intersect(eigendecompose(alg.algebra(), a, alg.law()).part_sum(rest));
    if (w.is_zero()) return w;
  }
  return largest_ideal_inside(alg.algebra(), w);
}

RadicalTheoremReport verify_radical_theorem(const AxialAlgebra& alg, const FormSolution& form) {
  const Subspace perp = form_radical(form);
  const Subspace rad = algebra_radical(alg);
  RadicalTheoremReport out;
  out.all_axis_values_nonzero = true;
  for (const auto& a : alg.axes()) {
    if (form_value(form.gram, a, a).is_zero()) out.all_axis_values_nonzero = false;
  }
  out.algebra_radical_dim = rad.dim();
  out.form_radical_dim = perp.dim();
  out.radicals_equal = perp == rad;
  if (!out.radicals_equal) {
    for (const auto& v : perp.basis_vectors()) {
      if (!rad.contains(v)) {
        out.certificate = v;
        break;
      }
    }
    if (!out.certificate) {
      for (const auto& v : rad.basis_vectors()) {
        if (!perp.contains(v)) {
          out.certificate = v;
          break;
        }
      }
    }
  }
  out.holds = out.all_axis_values_nonzero == out.radicals_equal;
  return out;
}

bool is_positive_definite(const RatMatrix& gram) {
  if (gram.rows() != gram.cols() || !gram.is_symmetric()) return false;
  // Elimination without pivoting; the pivots are ratios of consecutive
  // leading principal minors.
  RatMatrix m = gram;
  const std::size_t n = m.rows();
  for (std::size_t k = 0; k < n; ++k) {
    if (m(k, k).sign() <= 0) return false;
    for (std::size_t r = k + 1; r < n; ++r) {
      if (m(r, k).is_zero()) continue;
      const Rational f = m(r, k) / m(k, k);
      for (std::size_t c = k; c < n; ++c) m(r, c).sub_product(f, m(k, c));
    }
  }
  return true;
}

}  // namespace axialkit
