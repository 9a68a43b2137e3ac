#include <doctest.h>

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "axialkit/axes.hpp"
#include "axialkit/errors.hpp"
#include "axialkit/matsuo.hpp"
#include "support.hpp"

using namespace axialkit;

namespace {

PermGroupData parse(const std::string& text) {
  std::istringstream in(text);
  return parse_group(in, "test");
}

std::size_t error_line(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 999;
}

RatMatrix shifted_form(const RatMatrix& m, const Rational& eta) {
  RatMatrix out = RatMatrix::identity(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) += (eta / Rational(2)) * m(i, j);
  return out;
}

}  // namespace

TEST_CASE("cycle notation") {
  const Permutation p = parse_cycles("(1 2 3)(4 5)", 5);
  CHECK(p == Permutation{1, 2, 0, 4, 3});
  CHECK(format_cycles(p) == "(1,2,3)(4,5)");
  CHECK(parse_cycles("(2,3,1)", 3) == parse_cycles("(1 2 3)", 3));
  CHECK(format_cycles(parse_cycles("(3,1)", 4)) == "(1,3)");
  CHECK(format_cycles(identity_permutation(4)) == "()");
  CHECK(is_identity(parse_cycles("()", 3)));
  CHECK(is_identity(parse_cycles("(2)", 3)));
  CHECK_THROWS_AS(parse_cycles("(1 4)", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1 1)", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("1 2", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1 2", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("", 3), ParseError);
}

TEST_CASE("permutation arithmetic") {
  auto gen = testing::rng(50);
  for (int t = 0; t < 20; ++t) {
    Permutation p = identity_permutation(6), q = identity_permutation(6);
    std::shuffle(p.begin(), p.end(), gen);
    std::shuffle(q.begin(), q.end(), gen);
    CHECK(is_identity(compose(p, invert(p))));
    CHECK(is_identity(compose(invert(p), p)));
    // Right action: x^(pq) = (x^p)^q.
    const Permutation pq = compose(p, q);
    for (std::size_t x = 0; x < 6; ++x) CHECK(pq[x] == q[p[x]]);
    CHECK(conjugate(p, q) == compose(compose(invert(q), p), q));
  }
  CHECK_THROWS(compose(identity_permutation(2), identity_permutation(3)));
  CHECK(small_order(identity_permutation(3)) == 1);
  CHECK(small_order(parse_cycles("(1 2)", 3)) == 2);
  CHECK(small_order(parse_cycles("(1 2 3)", 3)) == 3);
  CHECK(small_order(parse_cycles("(1 2 3 4)", 4)) == 0);
  CHECK(small_order(parse_cycles("(1 2)(3 4 5)", 5)) == 0);
}

TEST_CASE("group files") {
  const PermGroupData s4 = read_group_file("data/groups/s4.grp");
  CHECK(s4.degree == 4);
  CHECK(s4.generators.size() == 2);
  CHECK(s4.class_D.size() == 6);
  CHECK(s4.class_D == builtin_group("S4").class_D);

  const PermGroupData s3 = read_group_file("data/groups/s3_explicit.grp");
  CHECK(s3.class_D == builtin_group("S3").class_D);

  const PermGroupData seeded = parse("degree 4\n# comment\n\ngenerator (1 2 3 4)\nseed (1 3)  # trailing\n");
  CHECK(seeded.class_D.size() == 2);  // (1,3) and (2,4)
  CHECK(seeded.label == "test");

  CHECK(error_line("degree 3\nbogus (1 2)\n") == 2);
  CHECK(error_line("degree 3\nseed (1 5)\n") == 2);
  CHECK(error_line("seed (1 2)\n") == 1);
  CHECK(error_line("degree 3\ndegree 4\n") == 2);
  CHECK(error_line("degree x\n") == 1);
  CHECK_THROWS_AS(parse("degree 3\nseed (1 2)\ninvolution (1 3)\n"), ParseError);
  CHECK_THROWS_AS(parse("degree 3\n"), ParseError);
  CHECK_THROWS_AS(parse(""), ParseError);
  try {
    parse("degree 3\n\ngenerator (1 9)\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.field() == "generator");
    CHECK(std::string(e.what()).rfind("line 3: generator: ", 0) == 0);
  }
  CHECK_THROWS(read_group_file("data/groups/does_not_exist.grp"));
}

TEST_CASE("builtin groups") {
  CHECK(builtin_group("S3").class_D.size() == 3);
  CHECK(builtin_group("S5").class_D.size() == 10);
  CHECK(builtin_group("S6").class_D.size() == 15);
  const PermGroupData s33 = builtin_group("S3xS3");
  CHECK(s33.degree == 6);
  CHECK(s33.class_D.size() == 6);
  CHECK(format_cycles(s33.class_D[3]) == "(4,5)");
  CHECK(testing::permutation_group_order(s33.generators, s33.degree) == 36);
  CHECK_THROWS_AS(builtin_group("S9"), std::invalid_argument);
  CHECK_THROWS_AS(builtin_group("A5"), std::invalid_argument);
  CHECK_THROWS_AS(builtin_group("S3x"), std::invalid_argument);
  for (const auto& name : builtin_group_examples()) CHECK_NOTHROW(builtin_group(name));
}

TEST_CASE("3-transposition verification") {
  for (const char* name : {"S3", "S4", "S5", "S3xS3", "S2xS4"}) CHECK(verify_3transpositions(builtin_group(name)).ok);
  const PermGroupData three_cycle = parse("degree 3\nseed (1 2 3)\n");
  const ThreeTranspositionCheck c = verify_3transpositions(three_cycle);
  CHECK_FALSE(c.ok);
  CHECK_FALSE(c.violations.empty());
  CHECK_THROWS_AS(matsuo_algebra(three_cycle, Rational(1, 2)), std::invalid_argument);

  // Double transpositions in S4 are not closed with (1 2) products of order 4.
  const PermGroupData order4 = parse("degree 4\ninvolution (1 2)\ninvolution (2 3)(1 4)\n");
  CHECK_FALSE(verify_3transpositions(order4).ok);

  // Not closed under conjugation.
  const PermGroupData open = parse("degree 3\ninvolution (1 2)\ninvolution (1 3)\n");
  CHECK_FALSE(verify_3transpositions(open).ok);
}

TEST_CASE("Matsuo algebra construction") {
  const PermGroupData s4 = builtin_group("S4");
  CHECK_THROWS_AS(matsuo_algebra(s4, Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(matsuo_algebra(s4, Rational(1)), std::invalid_argument);
  const AxialAlgebra alg = matsuo_algebra(s4, Rational(1, 5));
  CHECK(alg.dim() == 6);
  CHECK(alg.axis_names().front() == "(1,2)");
  CHECK(alg.algebra().basis_names() == alg.axis_names());
  for (const auto& a : alg.axes()) {
    const AxisReport r = check_axis(alg.algebra(), a, alg.law());
    CHECK(r.is_axis());
    CHECK(r.primitive);
  }
  // Products by hand: de = 0 when commuting, (eta/2)(d + e - d^e) otherwise.
  const Rational h(1, 10);
  const auto& d = s4.class_D;
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = 0; j < d.size(); ++j) {
      RatVector expected = zero_vector(6);
      if (i == j) {
        expected[i] = Rational(1);
      } else if (small_order(compose(d[i], d[j])) == 3) {
        const Permutation c = conjugate(d[i], d[j]);
        const std::size_t k = static_cast<std::size_t>(std::find(d.begin(), d.end(), c) - d.begin());
        expected[i] += h;
        expected[j] += h;
        expected[k] -= h;
      }
      CHECK(alg.algebra().multiply(unit_vector(6, i), unit_vector(6, j)) == expected);
    }
  }
}

TEST_CASE("adjacency matrix") {
  for (const char* name : {"S3", "S4", "S5", "S6"}) {
    const PermGroupData data = builtin_group(name);
    const RatMatrix m = noncommuting_adjacency(data);
    CHECK(m.is_symmetric());
    const std::size_t n = data.degree;
    // A transposition fails to commute with 2(n - 2) others.
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Rational row;
      for (std::size_t j = 0; j < m.cols(); ++j) row += m(i, j);
      CHECK(row == Rational(static_cast<long>(2 * (n - 2))));
      CHECK(m(i, i) == Rational(0));
    }
  }
}

TEST_CASE("critical eta values") {
  const CriticalEtas s5 = critical_etas(builtin_group("S5"));
  CHECK(s5.etas == std::vector<Rational>{Rational(-1, 3), Rational(-2)});
  REQUIRE(s5.eigenvalues.size() == 3);
  CHECK(s5.eigenvalues[0].value == Rational(6));
  CHECK(s5.eigenvalues[0].multiplicity == 1);
  CHECK(s5.eigenvalues[1].value == Rational(1));
  CHECK(s5.eigenvalues[1].multiplicity == 4);
  CHECK(s5.eigenvalues[2].value == Rational(-2));
  CHECK(s5.eigenvalues[2].multiplicity == 5);
  CHECK(s5.irrational_factor.degree() == 0);

  for (const char* name : {"S3", "S4"}) {
    const PermGroupData data = builtin_group(name);
    const CriticalEtas c = critical_etas(data);
    const RatMatrix m = noncommuting_adjacency(data);
    REQUIRE_FALSE(c.etas.empty());
    // Oracle: I + (eta/2) M is singular exactly at the critical values.
    for (const auto& eta : c.etas) CHECK(testing::leibniz_det(shifted_form(m, eta)) == Rational(0));
    for (const auto& eta : {Rational(1, 2), Rational(-1, 3), Rational(3)}) {
      if (std::find(c.etas.begin(), c.etas.end(), eta) == c.etas.end())
        CHECK(testing::leibniz_det(shifted_form(m, eta)) != Rational(0));
    }
  }
  CHECK(critical_etas(builtin_group("S3")).etas == std::vector<Rational>{Rational(-1), Rational(2)});
  CHECK(critical_etas(builtin_group("S4")).etas == std::vector<Rational>{Rational(-1, 2)});

  const PermGroupData commuting = parse("degree 4\ninvolution (1 2)\ninvolution (3 4)\n");
  CHECK(critical_etas(commuting).etas.empty());
}
