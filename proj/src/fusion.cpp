#include "axialkit/fusion.hpp"

#include <algorithm>
#include <stdexcept>

namespace axialkit {

FusionLaw::FusionLaw(std::vector<Rational> eigenvalues, std::vector<std::vector<EigenMask>> table,
                     std::optional<C2Grading> grading, std::string name)
    : eigenvalues_(std::move(eigenvalues)), table_(std::move(table)), grading_(grading), name_(std::move(name)) {
  const std::size_t n = eigenvalues_.size();
  if (n == 0 || n > kMaxEigenvalues) throw std::invalid_argument("fusion law must have between 1 and 64 eigenvalues");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (eigenvalues_[i] == eigenvalues_[j]) {
        throw std::invalid_argument("repeated eigenvalue " + eigenvalues_[i].str() + " in fusion law");
      }
    }
  }
  if (!index_of(Rational(1))) throw std::invalid_argument("fusion law must contain the eigenvalue 1");
  if (table_.size() != n) throw std::invalid_argument("fusion table has wrong size");
  for (std::size_t i = 0; i < n; ++i) {
    if (table_[i].size() != n) throw std::invalid_argument("fusion table has wrong size");
    for (std::size_t j = 0; j < n; ++j) {
      if (table_[i][j] & ~all()) throw std::invalid_argument("fusion rule refers to an unknown eigenvalue");
      if (table_[i][j] != table_[j][i]) {
        throw std::invalid_argument("fusion rule " + eigenvalues_[i].str() + "," + eigenvalues_[j].str() +
                                    " is not symmetric");
      }
    }
  }
  if (grading_ && !validate_grading(*this, *grading_)) throw std::invalid_argument("invalid C2 grading for fusion law");
}

FusionLaw FusionLaw::from_rules(std::vector<Rational> eigenvalues, std::span<const Rule> rules,
                                std::optional<C2Grading> grading, std::string name) {
  const std::size_t n = eigenvalues.size();
  std::vector<std::vector<EigenMask>> table(n, std::vector<EigenMask>(n, 0));
  std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
  auto find = [&](const Rational& v) {
    auto it = std::find(eigenvalues.begin(), eigenvalues.end(), v);
    if (it == eigenvalues.end()) throw std::invalid_argument("fusion rule mentions unknown eigenvalue " + v.str());
    return static_cast<std::size_t>(it - eigenvalues.begin());
  };
  for (const auto& r : rules) {
    const std::size_t i = find(r.lhs);
    const std::size_t j = find(r.rhs);
    EigenMask mask = 0;
    for (const auto& v : r.values) mask |= bit(find(v));
    if ((seen[i][j] || seen[j][i]) && table[i][j] != mask) {
      throw std::invalid_argument("conflicting fusion rules for " + r.lhs.str() + "," + r.rhs.str());
    }
    seen[i][j] = seen[j][i] = true;
    table[i][j] = table[j][i] = mask;
  }
  return FusionLaw(std::move(eigenvalues), std::move(table), grading, std::move(name));
}

std::optional<std::size_t> FusionLaw::index_of(const Rational& value) const {
  auto it = std::find(eigenvalues_.begin(), eigenvalues_.end(), value);
  if (it == eigenvalues_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - eigenvalues_.begin());
}

std::size_t FusionLaw::require_index(const Rational& value) const {
  auto idx = index_of(value);
  if (!idx) throw std::invalid_argument("eigenvalue " + value.str() + " is not in the fusion law");
  return *idx;
}

std::vector<Rational> FusionLaw::rule(const Rational& lhs, const Rational& rhs) const {
  return values(rule(require_index(lhs), require_index(rhs)));
}

std::vector<Rational> FusionLaw::values(EigenMask mask) const {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (mask & bit(i)) out.push_back(eigenvalues_[i]);
  }
  return out;
}

EigenMask FusionLaw::mask_of(std::span<const Rational> values) const {
  EigenMask m = 0;
  for (const auto& v : values) m |= bit(require_index(v));
  return m;
}

FusionLaw FusionLaw::with_grading(std::optional<C2Grading> grading) const {
  return FusionLaw(eigenvalues_, table_, grading, name_);
}

FusionLaw associative_law() {
  const std::vector<Rational> ev = {Rational(1), Rational(0)};
  // 1*1 = {1}, 0*0 = {0}, 1*0 = {}
  return FusionLaw(ev, {{bit(0), 0}, {0, bit(1)}}, C2Grading{bit(0) | bit(1), 0}, "A");
}

FusionLaw jordan_law(const Rational& eta) {
  if (eta == Rational(0) || eta == Rational(1)) throw std::invalid_argument("J(eta) requires eta not in {0, 1}");
  const std::vector<Rational> ev = {Rational(1), Rational(0), eta};
  const EigenMask one = bit(0), zero = bit(1), e = bit(2);
  std::vector<std::vector<EigenMask>> t = {
      {one, 0, e},
      {0, zero, e},
      {e, e, one | zero},
  };
  return FusionLaw(ev, std::move(t), C2Grading{one | zero, e}, "J(" + eta.str() + ")");
}

FusionLaw monster_law(const Rational& alpha, const Rational& beta) {
  const Rational z(0), o(1);
  if (alpha == z || alpha == o || beta == z || beta == o || alpha == beta) {
    throw std::invalid_argument("M(alpha, beta) requires alpha, beta not in {0, 1} and alpha != beta");
  }
  const std::vector<Rational> ev = {o, z, alpha, beta};
  const EigenMask one = bit(0), zero = bit(1), a = bit(2), b = bit(3);
  std::vector<std::vector<EigenMask>> t = {
      {one, 0, a, b},
      {0, zero, a, b},
      {a, a, one | zero, b},
      {b, b, b, one | zero | a},
  };
  return FusionLaw(ev, std::move(t), C2Grading{one | zero | a, b},
                   "M(" + alpha.str() + "," + beta.str() + ")");
}

FusionLaw builtin_law(std::string_view name, std::span<const Rational> params) {
  if (name == "A") {
    if (!params.empty()) throw std::invalid_argument("law A takes no parameters");
    return associative_law();
  }
  if (name == "J") {
    if (params.size() != 1) throw std::invalid_argument("law J takes one parameter");
    return jordan_law(params[0]);
  }
  if (name == "M") {
    if (params.size() != 2) throw std::invalid_argument("law M takes two parameters");
    return monster_law(params[0], params[1]);
  }
  throw std::invalid_argument("unknown builtin fusion law \"" + std::string(name) + "\"");
}

Minor minor(const FusionLaw& law, std::span<const Rational> subset) {
  std::vector<std::size_t> idx;
  for (const auto& v : subset) {
    const std::size_t i = law.require_index(v);
    if (std::find(idx.begin(), idx.end(), i) != idx.end()) throw std::invalid_argument("repeated eigenvalue in minor");
    idx.push_back(i);
  }
  if (std::find(subset.begin(), subset.end(), Rational(1)) == subset.end()) {
    throw std::invalid_argument("a minor must contain the eigenvalue 1");
  }
  EigenMask keep = 0;
  for (auto i : idx) keep |= bit(i);

  auto remap = [&](EigenMask m) {
    EigenMask out = 0;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (m & bit(idx[k])) out |= bit(k);
    }
    return out;
  };

  bool exact = true;
  std::vector<std::vector<EigenMask>> table(idx.size(), std::vector<EigenMask>(idx.size()));
  for (std::size_t a = 0; a < idx.size(); ++a) {
    for (std::size_t b = 0; b < idx.size(); ++b) {
      const EigenMask full = law.rule(idx[a], idx[b]);
      if (full & ~keep) exact = false;
      table[a][b] = remap(full & keep);
    }
  }
  std::optional<C2Grading> grading;
  if (law.grading()) grading = C2Grading{remap(law.grading()->plus), remap(law.grading()->minus)};
  FusionLaw induced(std::vector<Rational>(subset.begin(), subset.end()), std::move(table), std::nullopt);
  if (grading && validate_grading(induced, *grading)) induced = induced.with_grading(grading);
  return {std::move(induced), exact};
}

bool is_seress(const FusionLaw& law) {
  const auto z = law.index_of(Rational(0));
  if (!z) return false;
  for (std::size_t i = 0; i < law.size(); ++i) {
    if (law.rule(*z, i) & ~bit(i)) return false;
  }
  return true;
}

bool validate_grading(const FusionLaw& law, const C2Grading& g) {
  if ((g.plus | g.minus) != law.all() || (g.plus & g.minus) != 0) return false;
  if (!(g.plus & bit(law.require_index(Rational(1))))) return false;
  for (std::size_t i = 0; i < law.size(); ++i) {
    for (std::size_t j = 0; j < law.size(); ++j) {
      const bool neg = ((g.minus & bit(i)) != 0) != ((g.minus & bit(j)) != 0);
      if (law.rule(i, j) & ~(neg ? g.minus : g.plus)) return false;
    }
  }
  return true;
}

bool validate_grading(const FusionLaw& law, const std::vector<std::vector<std::size_t>>& group_table,
                      std::span<const std::size_t> part_of) {
  const std::size_t order = group_table.size();
  if (part_of.size() != law.size()) return false;
  for (const auto& row : group_table) {
    if (row.size() != order) return false;
    for (auto x : row) {
      if (x >= order) return false;
    }
  }
  for (auto t : part_of) {
    if (t >= order) return false;
  }
  std::vector<EigenMask> parts(order, 0);
  for (std::size_t i = 0; i < law.size(); ++i) parts[part_of[i]] |= bit(i);
  for (std::size_t i = 0; i < law.size(); ++i) {
    for (std::size_t j = 0; j < law.size(); ++j) {
      const std::size_t st = group_table[part_of[i]][part_of[j]];
      if (law.rule(i, j) & ~parts[st]) return false;
    }
  }
  return true;
}

}  // namespace axialkit
