#include "axialkit/kernels.hpp"

#include <stdexcept>

#include "axialkit/algebra.hpp"

namespace axialkit::kernels {

namespace {

void check_matmul(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul dimension mismatch");
}

void multiply_row(const RatMatrix& a, const RatMatrix& b, RatMatrix& c, std::size_t i) {
  for (std::size_t k = 0; k < a.cols(); ++k) {
    const Rational& aik = a(i, k);
    if (aik.is_zero()) continue;
    for (std::size_t j = 0; j < b.cols(); ++j) c(i, j).add_product(aik, b(k, j));
  }
}

// Locate the next pivot at or below `row` in column `col`; rows.size() if none.
std::size_t find_pivot(const RatMatrix& m, std::size_t row, std::size_t col) {
  for (std::size_t r = row; r < m.rows(); ++r) {
    if (!m(r, col).is_zero()) return r;
  }
  return m.rows();
}

void normalize_pivot_row(RatMatrix& m, std::size_t row, std::size_t col) {
  const Rational inv = Rational(1) / m(row, col);
  for (std::size_t j = col; j < m.cols(); ++j) {
    if (!m(row, j).is_zero()) m(row, j) *= inv;
  }
}

void eliminate_row(RatMatrix& m, std::size_t target, std::size_t pivot_row, std::size_t col) {
  if (target == pivot_row || m(target, col).is_zero()) return;
  const Rational factor = m(target, col);
  for (std::size_t j = col; j < m.cols(); ++j) m(target, j).sub_product(factor, m(pivot_row, j));
}

template <bool Parallel>
RrefResult rref_impl(RatMatrix m) {
  RrefResult out;
  std::size_t row = 0;
  const bool big = m.rows() * m.cols() >= kParallelMinWork;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    const std::size_t p = find_pivot(m, row, col);
    if (p == m.rows()) continue;
    m.swap_rows(row, p);
    normalize_pivot_row(m, row, col);
    const auto n = static_cast<std::ptrdiff_t>(m.rows());
    if constexpr (Parallel) {
#pragma omp parallel for schedule(dynamic, 4) if (big)
      for (std::ptrdiff_t r = 0; r < n; ++r) eliminate_row(m, static_cast<std::size_t>(r), row, col);
    } else {
      for (std::ptrdiff_t r = 0; r < n; ++r) eliminate_row(m, static_cast<std::size_t>(r), row, col);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.rank = row;
  out.matrix = std::move(m);
  return out;
}

void check_products(const CommAlgebra& alg, std::span<const RatVector> lhs, std::span<const RatVector> rhs) {
  for (const auto& v : lhs) {
    if (v.size() != alg.dim()) throw std::invalid_argument("element dimension mismatch");
  }
  for (const auto& v : rhs) {
    if (v.size() != alg.dim()) throw std::invalid_argument("element dimension mismatch");
  }
}

void check_frontier(std::span<const RatMatrix> frontier, std::span<const RatMatrix> gens) {
  for (const auto& g : gens) {
    for (const auto& f : frontier) check_matmul(g, f);
  }
}

}  // namespace

namespace serial {

RatMatrix matmul(const RatMatrix& a, const RatMatrix& b) {
  check_matmul(a, b);
  RatMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) multiply_row(a, b, c, i);
  return c;
}

RrefResult rref(RatMatrix m) { return rref_impl<false>(std::move(m)); }

std::vector<RatMatrix> expand_frontier(std::span<const RatMatrix> frontier, std::span<const RatMatrix> gens) {
  check_frontier(frontier, gens);
  std::vector<RatMatrix> out(frontier.size() * gens.size());
  for (std::size_t f = 0; f < frontier.size(); ++f) {
    for (std::size_t g = 0; g < gens.size(); ++g) out[f * gens.size() + g] = matmul(gens[g], frontier[f]);
  }
  return out;
}

std::vector<RatVector> products(const CommAlgebra& alg, std::span<const RatVector> lhs,
                                std::span<const RatVector> rhs) {
  check_products(alg, lhs, rhs);
  std::vector<RatVector> out(lhs.size() * rhs.size());
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    for (std::size_t j = 0; j < rhs.size(); ++j) out[i * rhs.size() + j] = alg.multiply(lhs[i], rhs[j]);
  }
  return out;
}

}  // namespace serial

namespace parallel {

RatMatrix matmul(const RatMatrix& a, const RatMatrix& b) {
  check_matmul(a, b);
  RatMatrix c(a.rows(), b.cols());
  const auto n = static_cast<std::ptrdiff_t>(a.rows());
  const bool big = a.rows() * a.cols() * b.cols() >= kParallelMinWork * 8;
#pragma omp parallel for schedule(static) if (big)
  for (std::ptrdiff_t i = 0; i < n; ++i) multiply_row(a, b, c, static_cast<std::size_t>(i));
  return c;
}

RrefResult rref(RatMatrix m) { return rref_impl<true>(std::move(m)); }

std::vector<RatMatrix> expand_frontier(std::span<const RatMatrix> frontier, std::span<const RatMatrix> gens) {
  check_frontier(frontier, gens);
  std::vector<RatMatrix> out(frontier.size() * gens.size());
  const auto total = static_cast<std::ptrdiff_t>(out.size());
  const std::size_t ng = gens.size();
#pragma omp parallel for schedule(dynamic, 8) if (total > 16)
  for (std::ptrdiff_t k = 0; k < total; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    out[idx] = serial::matmul(gens[idx % ng], frontier[idx / ng]);
  }
  return out;
}

std::vector<RatVector> products(const CommAlgebra& alg, std::span<const RatVector> lhs,
                                std::span<const RatVector> rhs) {
  check_products(alg, lhs, rhs);
  std::vector<RatVector> out(lhs.size() * rhs.size());
  const auto total = static_cast<std::ptrdiff_t>(out.size());
  const std::size_t nr = rhs.size();
#pragma omp parallel for schedule(dynamic, 8) if (total > 64)
  for (std::ptrdiff_t k = 0; k < total; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    out[idx] = alg.multiply(lhs[idx / nr], rhs[idx % nr]);
  }
  return out;
}

}  // namespace parallel

}  // namespace axialkit::kernels
