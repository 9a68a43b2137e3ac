#pragma once

#include <istream>
#include <span>
#include <string>

#include <json.hpp>

#include "axialkit/algebra.hpp"
#include "axialkit/fusion.hpp"

namespace axialkit {

using Json = nlohmann::ordered_json;

inline constexpr const char* kAlgebraFormat = "axialkit-algebra/1";

// Algebra file layout (JSON):
//   format      "axialkit-algebra/1"
//   dim         basis size
//   basis       list of basis names
//   products    list of [i, j, [[k, "p/q"], ...]] with i <= j; absent pairs are zero
//   axes        list of {"name": ..., "coords": ["p/q", ...]}
//   fusion_law  {"eigenvalues": [...], "rule": {"l,m": [...], ...},
//                "grading": {"plus": [...], "minus": [...]}}; absent pairs are empty
//               or {"builtin": "A" | "J" | "M", "params": [...]}
//   axis_values optional {"axis name": "p/q"} for the Frobenius prescription
// Errors throw ParseError naming the line (for JSON syntax) or the field.
AxialAlgebra algebra_from_json(const Json& j);
AxialAlgebra read_algebra(std::istream& in);
AxialAlgebra read_algebra_file(const std::string& path);

// Canonical form: products with i <= j, zero pairs and zero terms omitted,
// terms ordered by k.
Json algebra_to_json(const AxialAlgebra& alg);
std::string write_algebra(const AxialAlgebra& alg);
void write_algebra_file(const AxialAlgebra& alg, const std::string& path);

Json fusion_law_to_json(const FusionLaw& law);
FusionLaw fusion_law_from_json(const Json& j, const std::string& where = "fusion_law");

Json to_json(const Rational& r);
Json to_json(std::span<const Rational> v);
Json to_json(const RatMatrix& m);  // list of rows

// Rows of space-separated "p/q" entries.
std::string matrix_text(const RatMatrix& m);

}  // namespace axialkit
