#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>

#include "axialkit/errors.hpp"
#include "axialkit/io.hpp"
#include "support.hpp"

using namespace axialkit;

namespace {

AxialAlgebra read_text(const std::string& text) {
  std::istringstream in(text);
  return read_algebra(in);
}

ParseError error_of(const std::string& text) {
  try {
    read_text(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected ParseError");
  return ParseError("unreachable");
}

const char* kTiny = R"({
  "format": "axialkit-algebra/1",
  "dim": 2,
  "basis": ["e1", "e2"],
  "products": [[0, 0, [[0, "1"]]]],
  "axes": [{"name": "e1", "coords": ["1", "0"]}],
  "fusion_law": {"builtin": "A", "params": []}
})";

std::string with_replaced(std::string text, const std::string& from, const std::string& to) {
  const auto pos = text.find(from);
  REQUIRE(pos != std::string::npos);
  return text.replace(pos, from.size(), to);
}

}  // namespace

TEST_CASE("2B data file") {
  const AxialAlgebra b = read_algebra_file("data/2B.json");
  CHECK(b == testing::two_b().with_axis_values(std::vector<Rational>{Rational(1), Rational(1)}));
  CHECK(b.law().eigenvalues() == std::vector<Rational>{Rational(1), Rational(0), Rational(1, 4), Rational(1, 32)});
}

TEST_CASE("round trip") {
  for (const auto& alg : {testing::two_b(), testing::matsuo("S4", Rational(-1, 3)),
                          testing::matsuo("S3xS3", Rational(5, 7)).with_axis_values(std::vector<Rational>(6, Rational(2)))}) {
    const std::string text = write_algebra(alg);
    const AxialAlgebra back = read_text(text);
    CHECK(back == alg);
    CHECK(write_algebra(back) == text);
  }
  const auto path = std::filesystem::temp_directory_path() / "axialkit_io_roundtrip.json";
  const AxialAlgebra s3 = testing::matsuo("S3", Rational(1, 2));
  write_algebra_file(s3, path.string());
  CHECK(read_algebra_file(path.string()) == s3);
  std::filesystem::remove(path);
}

TEST_CASE("fusion law JSON") {
  const FusionLaw m = monster_law(Rational(1, 4), Rational(1, 32));
  const Json j = fusion_law_to_json(m);
  CHECK(j["eigenvalues"] == Json::parse(R"(["1", "0", "1/4", "1/32"])"));
  CHECK(j["rule"]["1/32,1/32"] == Json::parse(R"(["1", "0", "1/4"])"));
  CHECK(j["grading"]["minus"] == Json::parse(R"(["1/32"])"));
  CHECK(fusion_law_from_json(j) == m);
  CHECK(fusion_law_from_json(Json::parse(R"({"builtin": "J", "params": ["1/3"]})")) == jordan_law(Rational(1, 3)));

  // Missing pairs are empty; no grading means none.
  const FusionLaw small = fusion_law_from_json(Json::parse(R"({"eigenvalues": ["1", "0"], "rule": {"1,1": ["1"]}})"));
  CHECK(small.rule(Rational(0), Rational(0)).empty());
  CHECK_FALSE(small.grading());
  CHECK_THROWS_AS(fusion_law_from_json(Json::parse(R"({"builtin": "Q"})")), ParseError);
  CHECK_THROWS_AS(fusion_law_from_json(Json::parse(R"({"eigenvalues": ["1", "0"], "rule": {"1;1": ["1"]}})")),
                  ParseError);
}

TEST_CASE("absent products are zero and axis names default") {
  const AxialAlgebra tiny = read_text(kTiny);
  CHECK(is_zero(tiny.algebra().product(0, 1)));
  CHECK(is_zero(tiny.algebra().product(1, 1)));
  CHECK_FALSE(tiny.axis_values());
  const AxialAlgebra unnamed = read_text(with_replaced(kTiny, R"("name": "e1", )", ""));
  CHECK(unnamed.axis_names() == std::vector<std::string>{"x0"});
}

TEST_CASE("diagnostics") {
  const ParseError syntax = error_of("{\n  \"dim\": 2,\n  oops\n}");
  CHECK(syntax.line() == 3);

  const ParseError zero_den = error_of(with_replaced(kTiny, R"([[0, "1"]])", R"([[0, "1/0"]])"));
  CHECK(zero_den.field() == "products[0][2][0][1]");

  CHECK(error_of(with_replaced(kTiny, "axialkit-algebra/1", "other/2")).field() == "format");
  CHECK(error_of(with_replaced(kTiny, "\"dim\": 2", "\"dim\": 0")).field() == "dim");
  CHECK(error_of(with_replaced(kTiny, "[0, 0, [[0", "[0, 5, [[0")).field() == "products[0][1]");
  CHECK(error_of(with_replaced(kTiny, R"(["1", "0"])", R"(["1"])")).field() == "axes[0].coords");
  CHECK(error_of(with_replaced(kTiny, R"("builtin": "A")", R"("builtin": 3)")).field() == "fusion_law.builtin");
  CHECK(error_of(with_replaced(kTiny, R"("e1", "e2"])", R"("e1", "e1"])")).field() == "basis[1]");
  CHECK(error_of(with_replaced(kTiny, "\n}", ",\n  \"axis_values\": {\"zz\": \"1\"}\n}")).field() ==
        "axis_values.zz");
  CHECK(error_of(with_replaced(kTiny, "\n}", ",\n  \"axis_values\": {}\n}")).field() == "axis_values");
  CHECK(error_of("[1, 2]").field() == "(root)");
  CHECK_THROWS(read_algebra_file("data/no_such_file.json"));
}

TEST_CASE("value formatting") {
  CHECK(to_json(Rational(-3, 6)) == Json("-1/2"));
  CHECK(to_json(Rational(4)) == Json("4"));
  CHECK(to_json(RatMatrix::from_rows({{1, 0}, {0, 2}})) == Json::parse(R"([["1", "0"], ["0", "2"]])"));
  CHECK(matrix_text(RatMatrix::from_rows({{1, -2}, {0, 3}})) == "1 -2\n0 3\n");
}
