#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "axialkit/rational.hpp"

namespace axialkit {

// Set of eigenvalue positions within a FusionLaw, bit i <-> eigenvalues()[i].
using EigenMask = std::uint64_t;

inline constexpr std::size_t kMaxEigenvalues = 64;

inline constexpr EigenMask bit(std::size_t i) { return EigenMask{1} << i; }

// Partition of the eigenvalues into a +/- part with F_s * F_t inside F_st.
struct C2Grading {
  EigenMask plus = 0;
  EigenMask minus = 0;
  friend bool operator==(const C2Grading&, const C2Grading&) = default;
};

class FusionLaw {
 public:
  struct Rule {
    Rational lhs;
    Rational rhs;
    std::vector<Rational> values;
  };

  FusionLaw() = default;
  // table[i][j] is the mask of lambda_i * lambda_j; must be symmetric.
  FusionLaw(std::vector<Rational> eigenvalues, std::vector<std::vector<EigenMask>> table,
            std::optional<C2Grading> grading = std::nullopt, std::string name = {});

  // Rules not listed are empty. Listing both (l, m) and (m, l) is allowed only
  // if they agree.
  static FusionLaw from_rules(std::vector<Rational> eigenvalues, std::span<const Rule> rules,
                              std::optional<C2Grading> grading = std::nullopt, std::string name = {});

  std::size_t size() const { return eigenvalues_.size(); }
  const std::vector<Rational>& eigenvalues() const { return eigenvalues_; }
  const Rational& eigenvalue(std::size_t i) const { return eigenvalues_.at(i); }
  std::optional<std::size_t> index_of(const Rational& value) const;
  std::size_t require_index(const Rational& value) const;
  EigenMask all() const { return size() == 64 ? ~EigenMask{0} : bit(size()) - 1; }

  EigenMask rule(std::size_t i, std::size_t j) const { return table_.at(i).at(j); }
  std::vector<Rational> rule(const Rational& lhs, const Rational& rhs) const;
  std::vector<Rational> values(EigenMask mask) const;
  EigenMask mask_of(std::span<const Rational> values) const;

  const std::optional<C2Grading>& grading() const { return grading_; }
  FusionLaw with_grading(std::optional<C2Grading> grading) const;
  const std::string& name() const { return name_; }

  friend bool operator==(const FusionLaw& a, const FusionLaw& b) {
    return a.eigenvalues_ == b.eigenvalues_ && a.table_ == b.table_ && a.grading_ == b.grading_;
  }
  // Same eigenvalues in the same order with the same rules; gradings ignored.
  friend bool same_table(const FusionLaw& a, const FusionLaw& b) {
    return a.eigenvalues_ == b.eigenvalues_ && a.table_ == b.table_;
  }

 private:
  std::vector<Rational> eigenvalues_;
  std::vector<std::vector<EigenMask>> table_;
  std::optional<C2Grading> grading_;
  std::string name_;
};

// The three standard laws, each with its C2 grading where one exists.
FusionLaw associative_law();
FusionLaw jordan_law(const Rational& eta);
FusionLaw monster_law(const Rational& alpha, const Rational& beta);
// name is "A", "J" or "M"; params holds eta or (alpha, beta).
FusionLaw builtin_law(std::string_view name, std::span<const Rational> params);

struct Minor {
  FusionLaw law;
  bool exact = false;
};

// Law induced on a subset containing 1: l o m = (l * m) n subset.
Minor minor(const FusionLaw& law, std::span<const Rational> subset);

bool is_seress(const FusionLaw& law);

bool validate_grading(const FusionLaw& law, const C2Grading& grading);

// Grading by an arbitrary finite abelian group T given by its multiplication
// table (identity at index 0). part_of[i] is the element of T carrying
// eigenvalue i. Pure check; no automorphisms are derived from it.
bool validate_grading(const FusionLaw& law, const std::vector<std::vector<std::size_t>>& group_table,
                      std::span<const std::size_t> part_of);

}  // namespace axialkit
