#include "axialkit/axes.hpp"

#include <stdexcept>

#include "axialkit/kernels.hpp"
#include "axialkit/linalg.hpp"

namespace axialkit {

Eigendecomposition::Eigendecomposition(RatVector axis, FusionLaw law, std::vector<Subspace> parts)
    : axis_(std::move(axis)), law_(std::move(law)), parts_(std::move(parts)) {
  if (parts_.size() != law_.size()) throw std::invalid_argument("one eigenspace per eigenvalue expected");
  const std::size_t n = axis_.size();
  std::vector<RatVector> columns;
  for (const auto& p : parts_) {
    for (auto& v : p.basis_vectors()) columns.push_back(std::move(v));
  }
  change_of_basis_ = RatMatrix::from_columns(columns, n);
  if (columns.size() == n) change_of_basis_inverse_ = inverse(change_of_basis_);
}

Subspace Eigendecomposition::part_sum(EigenMask mask) const {
  Subspace s = Subspace::zero(axis_.size());
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (mask & bit(i)) s = s + parts_[i];
  }
  return s;
}

std::size_t Eigendecomposition::total_dim() const {
  std::size_t t = 0;
  for (const auto& p : parts_) t += p.dim();
  return t;
}

const RatMatrix& Eigendecomposition::change_of_basis_inverse() const {
  if (!complete()) throw std::domain_error("eigenspaces do not span the algebra (axiom A2 fails)");
  return *change_of_basis_inverse_;
}

RatVector Eigendecomposition::eigen_coordinates(std::span<const Rational> u) const {
  return change_of_basis_inverse().apply(u);
}

Eigendecomposition eigendecompose(const CommAlgebra& alg, std::span<const Rational> a, const FusionLaw& law) {
  const RatMatrix ad = adjoint(alg, a);
  std::vector<Subspace> parts;
  parts.reserve(law.size());
  for (const auto& lambda : law.eigenvalues()) {
    RatMatrix shifted = ad;
    for (std::size_t i = 0; i < alg.dim(); ++i) shifted(i, i) -= lambda;
    parts.push_back(kernel(shifted));
  }
  return Eigendecomposition(RatVector(a.begin(), a.end()), law, std::move(parts));
}

AxisReport check_axis(const CommAlgebra& alg, std::span<const Rational> a, const FusionLaw& law) {
  AxisReport report;
  const RatVector sq = alg.multiply(a, a);
  report.idempotent_defect = sq - RatVector(a.begin(), a.end());
  report.idempotent = is_zero(report.idempotent_defect) && !is_zero(a);

  const Eigendecomposition dec = eigendecompose(alg, a, law);
  for (const auto& p : dec.parts()) report.eigenspace_dims.push_back(p.dim());
  report.eigenspace_total = dec.total_dim();
  report.semisimple_in_law = report.eigenspace_total == alg.dim();
  report.primitive = dec.part(Rational(1)).dim() == 1;

  std::vector<std::vector<RatVector>> bases;
  for (const auto& p : dec.parts()) bases.push_back(p.basis_vectors());
  for (std::size_t i = 0; i < law.size(); ++i) {
    for (std::size_t j = i; j < law.size(); ++j) {
      if (bases[i].empty() || bases[j].empty()) continue;
      const Subspace target = dec.part_sum(law.rule(i, j));
      for (const auto& p : kernels::parallel::products(alg, bases[i], bases[j])) {
        if (!target.contains(p)) {
          report.violations.push_back({law.eigenvalue(i), law.eigenvalue(j), p});
          break;
        }
      }
    }
  }
  report.fusion_ok = report.violations.empty();
  return report;
}

Projection project(const Eigendecomposition& dec, std::span<const Rational> u) {
  const std::size_t n = dec.axis().size();
  const RatVector coords = dec.eigen_coordinates(u);
  const Subspace& one = dec.part(Rational(1));
  if (one.dim() != 1) throw std::domain_error("projection requires a primitive axis");
  if (!one.contains(dec.axis())) throw std::domain_error("axis is not in its own 1-eigenspace");

  Projection out;
  std::size_t offset = 0;
  for (const auto& part : dec.parts()) {
    RatVector comp(n);
    const RatMatrix& b = part.basis();
    for (std::size_t k = 0; k < part.dim(); ++k) axpy(comp, coords[offset + k], b.row(k));
    offset += part.dim();
    out.components.push_back(std::move(comp));
  }
  const RatVector& u1 = out.components[dec.law().require_index(Rational(1))];
  for (std::size_t i = 0; i < n; ++i) {
    if (!dec.axis()[i].is_zero()) {
      out.phi = u1[i] / dec.axis()[i];
      break;
    }
  }
  return out;
}

RatMatrix tau(const Eigendecomposition& dec, const C2Grading& grading) {
  if (!validate_grading(dec.law(), grading)) throw std::invalid_argument("grading is not valid for the fusion law");
  const std::size_t n = dec.axis().size();
  RatMatrix signed_inverse = dec.change_of_basis_inverse();
  std::size_t offset = 0;
  for (std::size_t i = 0; i < dec.parts().size(); ++i) {
    const std::size_t d = dec.parts()[i].dim();
    if (grading.minus & bit(i)) {
      for (std::size_t r = offset; r < offset + d; ++r) {
        for (std::size_t c = 0; c < n; ++c) signed_inverse(r, c) = -signed_inverse(r, c);
      }
    }
    offset += d;
  }
  return dec.change_of_basis() * signed_inverse;
}

RatMatrix tau(const Eigendecomposition& dec) {
  if (!dec.law().grading()) throw std::invalid_argument("fusion law has no C2 grading");
  return tau(dec, *dec.law().grading());
}

bool is_automorphism(const CommAlgebra& alg, const RatMatrix& g) {
  const std::size_t n = alg.dim();
  if (g.rows() != n || g.cols() != n) return false;
  if (determinant(g).is_zero()) return false;
  std::vector<RatVector> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(g.column(i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (g.apply(alg.product(i, j)) != alg.multiply(images[i], images[j])) return false;
    }
  }
  return true;
}

}  // namespace axialkit
