#include <doctest.h>

#include <stdexcept>

#include "axialkit/fusion.hpp"

using namespace axialkit;

namespace {

std::vector<Rational> v(std::initializer_list<Rational> xs) { return xs; }

}  // namespace

TEST_CASE("associative law table") {
  const FusionLaw a = associative_law();
  CHECK(a.eigenvalues() == v({1, 0}));
  CHECK(a.rule(Rational(1), Rational(1)) == v({1}));
  CHECK(a.rule(Rational(0), Rational(0)) == v({0}));
  CHECK(a.rule(Rational(1), Rational(0)).empty());
}

TEST_CASE("Jordan law table and grading") {
  const Rational eta(1, 2);
  const FusionLaw j = jordan_law(eta);
  CHECK(j.rule(Rational(1), Rational(1)) == v({1}));
  CHECK(j.rule(Rational(1), Rational(0)).empty());
  CHECK(j.rule(Rational(1), eta) == v({eta}));
  CHECK(j.rule(Rational(0), Rational(0)) == v({0}));
  CHECK(j.rule(Rational(0), eta) == v({eta}));
  CHECK(j.rule(eta, eta) == v({1, 0}));
  REQUIRE(j.grading());
  CHECK(j.values(j.grading()->plus) == v({1, 0}));
  CHECK(j.values(j.grading()->minus) == v({eta}));
  CHECK(validate_grading(j, *j.grading()));
  CHECK_THROWS_AS(jordan_law(Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(jordan_law(Rational(1)), std::invalid_argument);
}

TEST_CASE("Monster law table and grading") {
  const Rational al(1, 4), be(1, 32);
  const FusionLaw m = monster_law(al, be);
  CHECK(m.rule(al, al) == v({1, 0}));
  CHECK(m.rule(al, be) == v({be}));
  CHECK(m.rule(be, be) == v({1, 0, al}));
  CHECK(m.rule(Rational(1), be) == v({be}));
  CHECK(m.rule(Rational(0), be) == v({be}));
  CHECK(m.rule(Rational(1), al) == v({al}));
  CHECK(m.rule(Rational(0), al) == v({al}));
  CHECK(m.rule(Rational(1), Rational(0)).empty());
  REQUIRE(m.grading());
  CHECK(m.values(m.grading()->plus) == v({1, 0, al}));
  CHECK(m.values(m.grading()->minus) == v({be}));
  CHECK(validate_grading(m, *m.grading()));
  CHECK_THROWS_AS(monster_law(al, al), std::invalid_argument);
  CHECK_THROWS_AS(monster_law(Rational(0), be), std::invalid_argument);
  CHECK_THROWS_AS(monster_law(al, Rational(1)), std::invalid_argument);
}

TEST_CASE("builtin_law dispatches by name") {
  CHECK(builtin_law("A", {}) == associative_law());
  const std::vector<Rational> eta{Rational(1, 3)};
  CHECK(builtin_law("J", eta) == jordan_law(Rational(1, 3)));
  const std::vector<Rational> ab{Rational(1, 4), Rational(1, 32)};
  CHECK(builtin_law("M", ab) == monster_law(Rational(1, 4), Rational(1, 32)));
  CHECK_THROWS(builtin_law("J", {}));
  CHECK_THROWS(builtin_law("Q", {}));
}

TEST_CASE("minors and exactness") {
  const Rational eta(1, 2), al(1, 4), be(1, 32);
  const Minor jm = minor(jordan_law(eta), v({1, 0}));
  CHECK(jm.exact);
  CHECK(same_table(jm.law, associative_law()));

  const FusionLaw m = monster_law(al, be);
  const Minor ma = minor(m, v({1, 0, al}));
  CHECK(ma.exact);
  CHECK(same_table(ma.law, jordan_law(al)));

  const Minor mb = minor(m, v({1, 0, be}));
  CHECK_FALSE(mb.exact);
  CHECK(same_table(mb.law, jordan_law(be)));

  const Minor whole = minor(m, m.eigenvalues());
  CHECK(whole.exact);
  CHECK(same_table(whole.law, m));

  CHECK_THROWS_AS(minor(m, v({0, al})), std::invalid_argument);
}

TEST_CASE("Seress property") {
  CHECK(is_seress(jordan_law(Rational(1, 2))));
  CHECK(is_seress(jordan_law(Rational(-2))));
  CHECK(is_seress(monster_law(Rational(1, 4), Rational(1, 32))));
  CHECK(is_seress(associative_law()));
  const std::vector<FusionLaw::Rule> bad_rules{{Rational(1), Rational(1), v({1})}, {Rational(0), Rational(0), v({1})}};
  CHECK_FALSE(is_seress(FusionLaw::from_rules(v({1, 0}), bad_rules)));
  const std::vector<FusionLaw::Rule> no_zero{{Rational(1), Rational(1), v({1})}};
  CHECK_FALSE(is_seress(FusionLaw::from_rules(v({1, 2}), no_zero)));
}

TEST_CASE("grading validation") {
  const Rational eta(1, 2);
  const FusionLaw j = jordan_law(eta);
  // 0 * 0 = {0} would have to lie in the plus part.
  CHECK_FALSE(validate_grading(j, C2Grading{j.mask_of(v({1})), j.mask_of(v({0, eta}))}));
  // Parts must cover the eigenvalues and be disjoint.
  CHECK_FALSE(validate_grading(j, C2Grading{j.mask_of(v({1, 0})), 0}));
  CHECK_FALSE(validate_grading(j, C2Grading{j.mask_of(v({1, 0, eta})), j.mask_of(v({eta}))}));
  // 1 must be in the plus part.
  CHECK_FALSE(validate_grading(j, C2Grading{j.mask_of(v({eta})), j.mask_of(v({1, 0}))}));

  // Same check through the general abelian-group interface with T = C2.
  const std::vector<std::vector<std::size_t>> c2{{0, 1}, {1, 0}};
  const std::vector<std::size_t> part_of{0, 0, 1};
  CHECK(validate_grading(j, c2, part_of));
  const std::vector<std::size_t> wrong{0, 1, 1};
  CHECK_FALSE(validate_grading(j, c2, wrong));
}

TEST_CASE("fusion law construction rejects malformed input") {
  CHECK_THROWS(FusionLaw(v({0, 2}), {{0, 0}, {0, 0}}));  // no 1
  CHECK_THROWS(FusionLaw(v({1, 1}), {{0, 0}, {0, 0}}));  // repeated
  CHECK_THROWS(FusionLaw(v({1, 0}), {{1, 2}, {0, 2}}));  // not symmetric
  const std::vector<FusionLaw::Rule> clash{{Rational(1), Rational(0), v({0})}, {Rational(0), Rational(1), v({1})}};
  CHECK_THROWS(FusionLaw::from_rules(v({1, 0}), clash));
  const std::vector<FusionLaw::Rule> outside{{Rational(1), Rational(0), v({5})}};
  CHECK_THROWS(FusionLaw::from_rules(v({1, 0}), outside));
}
