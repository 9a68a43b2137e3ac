#include "axialkit/miyamoto.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "axialkit/axes.hpp"
#include "axialkit/kernels.hpp"
#include "axialkit/union_find.hpp"

namespace axialkit {

namespace {

using Expand = std::vector<RatMatrix> (*)(std::span<const RatMatrix>, std::span<const RatMatrix>);

MatrixGroup enumerate_with(Expand expand, std::vector<RatMatrix> generators, std::size_t dim, std::size_t cap) {
  MatrixGroup group;
  group.cap = cap;
  std::unordered_set<RatMatrix, RatMatrixHash> seen;
  for (auto& g : generators) {
    if (g.rows() != dim || g.cols() != dim) throw std::invalid_argument("generator has wrong shape");
    if (g.is_identity() || seen.count(g)) continue;
    seen.insert(g);
    group.generators.push_back(std::move(g));
  }
  seen.clear();

  const RatMatrix id = RatMatrix::identity(dim);
  group.elements.push_back(id);
  seen.insert(id);
  if (cap == 0) return group;
  std::vector<RatMatrix> frontier{id};
  while (!frontier.empty()) {
    std::vector<RatMatrix> next;
    for (auto& h : expand(frontier, group.generators)) {
      if (seen.count(h)) continue;
      if (group.elements.size() >= cap) return group;
      seen.insert(h);
      group.elements.push_back(h);
      next.push_back(std::move(h));
    }
    frontier = std::move(next);
  }
  group.complete = true;
  return group;
}

}  // namespace

bool MatrixGroup::contains(const RatMatrix& g) const {
  for (const auto& e : elements) {
    if (e == g) return true;
  }
  return false;
}

MatrixGroup enumerate_group(std::vector<RatMatrix> generators, std::size_t dim, std::size_t cap) {
  return enumerate_with(&kernels::parallel::expand_frontier, std::move(generators), dim, cap);
}

MatrixGroup enumerate_group_serial(std::vector<RatMatrix> generators, std::size_t dim, std::size_t cap) {
  return enumerate_with(&kernels::serial::expand_frontier, std::move(generators), dim, cap);
}

std::vector<RatMatrix> miyamoto_involutions(const CommAlgebra& alg, std::span<const RatVector> axes,
                                            const FusionLaw& law, const C2Grading& grading) {
  std::vector<RatMatrix> out;
  out.reserve(axes.size());
  for (const auto& a : axes) out.push_back(tau(eigendecompose(alg, a, law), grading));
  return out;
}

MatrixGroup miyamoto_group(const CommAlgebra& alg, std::span<const RatVector> axes, const FusionLaw& law,
                           const C2Grading& grading, std::size_t cap) {
  return enumerate_group(miyamoto_involutions(alg, axes, law, grading), alg.dim(), cap);
}

MatrixGroup miyamoto_group(const AxialAlgebra& alg, std::size_t cap) {
  if (!alg.law().grading()) throw std::invalid_argument("fusion law has no C2 grading");
  return miyamoto_group(alg.algebra(), alg.axes(), alg.law(), *alg.law().grading(), cap);
}

AxisOrbitSet close_axes(const CommAlgebra& alg, std::span<const RatVector> axes, const FusionLaw& law,
                        const C2Grading& grading, std::size_t cap) {
  AxisOrbitSet out;
  std::unordered_map<RatVector, std::size_t, RatVectorHash> index;
  auto add = [&](RatVector v) {
    if (index.count(v)) return true;
    if (out.axes.size() >= cap) return false;
    index.emplace(v, out.axes.size());
    out.axes.push_back(std::move(v));
    return true;
  };
  for (const auto& a : axes) {
    if (!add(a)) return out;
  }
  // Each pair (i, j) is handled once, when the later of the two is reached.
  std::vector<RatMatrix> taus;
  for (std::size_t i = 0; i < out.axes.size(); ++i) {
    taus.push_back(tau(eigendecompose(alg, out.axes[i], law), grading));
    for (std::size_t j = 0; j < i; ++j) {
      if (!add(taus[i].apply(out.axes[j]))) return out;
      if (!add(taus[j].apply(out.axes[i]))) return out;
    }
  }
  out.closed = true;
  return out;
}

AxisOrbitSet close_axes(const AxialAlgebra& alg, std::size_t cap) {
  if (!alg.law().grading()) throw std::invalid_argument("fusion law has no C2 grading");
  return close_axes(alg.algebra(), alg.axes(), alg.law(), *alg.law().grading(), cap);
}

bool same_axis_set(std::span<const RatVector> x, std::span<const RatVector> y) {
  const std::unordered_set<RatVector, RatVectorHash> sx(x.begin(), x.end());
  const std::unordered_set<RatVector, RatVectorHash> sy(y.begin(), y.end());
  return sx == sy;
}

bool equivalent(const CommAlgebra& alg, std::span<const RatVector> x, std::span<const RatVector> y,
                const FusionLaw& law, const C2Grading& grading, std::size_t cap) {
  const auto cx = close_axes(alg, x, law, grading, cap);
  const auto cy = close_axes(alg, y, law, grading, cap);
  if (!cx.closed || !cy.closed) throw std::runtime_error("axis closure exceeded the cap");
  return same_axis_set(cx.axes, cy.axes);
}

bool central_product_check(std::span<const MatrixGroup> groups) {
  for (std::size_t i = 0; i < groups.size(); ++i) {
    for (std::size_t j = i + 1; j < groups.size(); ++j) {
      for (const auto& g : groups[i].generators) {
        for (const auto& h : groups[j].generators) {
          if (g.rows() != h.rows()) throw std::invalid_argument("groups act on different dimensions");
          if (g * h != h * g) return false;
        }
      }
    }
  }
  return true;
}

std::vector<std::vector<std::size_t>> axis_orbits(std::span<const RatVector> axes, const MatrixGroup& group) {
  std::unordered_map<RatVector, std::size_t, RatVectorHash> index;
  for (std::size_t i = 0; i < axes.size(); ++i) index.emplace(axes[i], i);
  UnionFind uf(axes.size());
  const auto& acting = group.complete ? group.elements : group.generators;
  for (const auto& g : acting) {
    for (std::size_t i = 0; i < axes.size(); ++i) {
      auto it = index.find(g.apply(axes[i]));
      if (it != index.end()) uf.unite(i, it->second);
    }
  }
  return uf.components();
}

std::vector<std::vector<std::size_t>> axis_orbits(const AxialAlgebra& alg, std::size_t cap) {
  const auto closure = close_axes(alg, cap);
  if (!closure.closed) throw std::runtime_error("axis closure exceeded the cap");
  const auto& all = closure.axes;
  std::unordered_map<RatVector, std::size_t, RatVectorHash> index;
  for (std::size_t i = 0; i < all.size(); ++i) index.emplace(all[i], i);
  UnionFind uf(all.size());
  for (const auto& t : miyamoto_involutions(alg.algebra(), all, alg.law(), *alg.law().grading())) {
    for (std::size_t i = 0; i < all.size(); ++i) uf.unite(i, index.at(t.apply(all[i])));
  }
  std::map<std::size_t, std::vector<std::size_t>> by_root;
  for (std::size_t i = 0; i < alg.axes().size(); ++i) by_root[uf.find(index.at(alg.axes()[i]))].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : by_root) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace axialkit
