#include "axialkit/io.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <map>
#include <set>
#include <sstream>

#include "axialkit/errors.hpp"

namespace axialkit {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw ParseError(what, 0, where); }

const Json& member(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, "missing field '" + key + "'");
  return *it;
}

const Json& array_at(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  return j;
}

std::size_t index_at(const Json& j, std::size_t bound, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer index");
  const auto v = j.get<long long>();
  if (v < 0 || static_cast<unsigned long long>(v) >= bound) {
    fail(where, "index " + std::to_string(v) + " out of range 0.." + std::to_string(bound - 1));
  }
  return static_cast<std::size_t>(v);
}

Rational rational_at(const Json& j, const std::string& where) {
  try {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
  } catch (const std::exception& e) {
    fail(where, e.what());
  }
  fail(where, "expected a rational as \"p/q\" or an integer");
}

std::vector<Rational> rationals_at(const Json& j, const std::string& where) {
  std::vector<Rational> out;
  const Json& a = array_at(j, where);
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(rational_at(a[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

std::size_t line_of(const std::string& text, std::size_t byte) {
  const auto end = text.begin() + static_cast<std::ptrdiff_t>(std::min(byte, text.size()));
  return 1 + static_cast<std::size_t>(std::count(text.begin(), end, '\n'));
}

}  // namespace

Json to_json(const Rational& r) { return r.str(); }

Json to_json(std::span<const Rational> v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(r.str());
  return out;
}

Json to_json(const RatMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

std::string matrix_text(const RatMatrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += ' ';
      out += m(r, c).str();
    }
    out += '\n';
  }
  return out;
}

Json fusion_law_to_json(const FusionLaw& law) {
  Json out = Json::object();
  if (!law.name().empty()) out["name"] = law.name();
  out["eigenvalues"] = to_json(law.eigenvalues());
  Json rule = Json::object();
  for (std::size_t i = 0; i < law.size(); ++i) {
    for (std::size_t j = i; j < law.size(); ++j) {
      const EigenMask m = law.rule(i, j);
      if (m != 0) rule[law.eigenvalue(i).str() + "," + law.eigenvalue(j).str()] = to_json(law.values(m));
    }
  }
  out["rule"] = std::move(rule);
  if (const auto& g = law.grading()) {
    out["grading"] = {{"plus", to_json(law.values(g->plus))}, {"minus", to_json(law.values(g->minus))}};
  }
  return out;
}

FusionLaw fusion_law_from_json(const Json& j, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  if (j.contains("builtin")) {
    const Json& name = j["builtin"];
    if (!name.is_string()) fail(where + ".builtin", "expected \"A\", \"J\" or \"M\"");
    std::vector<Rational> params;
    if (j.contains("params")) params = rationals_at(j["params"], where + ".params");
    try {
      return builtin_law(name.get<std::string>(), params);
    } catch (const std::invalid_argument& e) {
      fail(where, e.what());
    }
  }
  const std::vector<Rational> eigs = rationals_at(member(j, "eigenvalues", where), where + ".eigenvalues");
  std::vector<FusionLaw::Rule> rules;
  const Json& rj = member(j, "rule", where);
  if (!rj.is_object()) fail(where + ".rule", "expected an object keyed by \"lambda,mu\"");
  for (const auto& [key, values] : rj.items()) {
    const std::string w = where + ".rule." + key;
    const auto comma = key.find(',');
    if (comma == std::string::npos) fail(w, "key must be \"lambda,mu\"");
    rules.push_back({rational_at(Json(key.substr(0, comma)), w), rational_at(Json(key.substr(comma + 1)), w),
                     rationals_at(values, w)});
  }
  std::optional<C2Grading> grading;
  std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : std::string();
  try {
    if (j.contains("grading")) {
      const Json& g = j["grading"];
      const FusionLaw plain = FusionLaw::from_rules(eigs, rules);
      grading = C2Grading{plain.mask_of(rationals_at(member(g, "plus", where + ".grading"), where + ".grading.plus")),
                          plain.mask_of(rationals_at(member(g, "minus", where + ".grading"), where + ".grading.minus"))};
    }
    return FusionLaw::from_rules(eigs, rules, grading, std::move(name));
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    fail(where, e.what());
  }
}

AxialAlgebra algebra_from_json(const Json& j) {
  if (!j.is_object()) fail("(root)", "expected an object");
  if (j.contains("format") && j["format"] != kAlgebraFormat) {
    fail("format", std::string("expected \"") + kAlgebraFormat + "\"");
  }
  const Json& dj = member(j, "dim", "(root)");
  if (!dj.is_number_integer() || dj.get<long long>() < 1) fail("dim", "expected a positive integer");
  const std::size_t n = dj.get<std::size_t>();

  std::vector<std::string> names;
  if (j.contains("basis")) {
    const Json& b = array_at(j["basis"], "basis");
    if (b.size() != n) fail("basis", "expected " + std::to_string(n) + " names");
    std::set<std::string> seen;
    for (std::size_t i = 0; i < n; ++i) {
      if (!b[i].is_string()) fail("basis[" + std::to_string(i) + "]", "expected a string");
      names.push_back(b[i].get<std::string>());
      if (!seen.insert(names.back()).second) fail("basis[" + std::to_string(i) + "]", "duplicate name");
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) names.push_back("b" + std::to_string(i));
  }

  std::vector<RatVector> products(CommAlgebra::packed_size(n), zero_vector(n));
  std::vector<bool> given(products.size(), false);
  if (j.contains("products")) {
    const Json& pj = array_at(j["products"], "products");
    for (std::size_t e = 0; e < pj.size(); ++e) {
      const std::string w = "products[" + std::to_string(e) + "]";
      if (!pj[e].is_array() || pj[e].size() != 3) fail(w, "expected [i, j, [[k, \"p/q\"], ...]]");
      std::size_t a = index_at(pj[e][0], n, w + "[0]");
      std::size_t b = index_at(pj[e][1], n, w + "[1]");
      if (a > b) std::swap(a, b);
      const std::size_t slot = CommAlgebra::packed_index(a, b, n);
      if (given[slot]) fail(w, "product of this pair given twice");
      given[slot] = true;
      const Json& terms = array_at(pj[e][2], w + "[2]");
      std::vector<bool> seen(n, false);
      for (std::size_t t = 0; t < terms.size(); ++t) {
        const std::string wt = w + "[2][" + std::to_string(t) + "]";
        if (!terms[t].is_array() || terms[t].size() != 2) fail(wt, "expected [k, \"p/q\"]");
        const std::size_t k = index_at(terms[t][0], n, wt + "[0]");
        if (seen[k]) fail(wt, "coordinate given twice");
        seen[k] = true;
        products[slot][k] = rational_at(terms[t][1], wt + "[1]");
      }
    }
  }

  std::vector<RatVector> axes;
  std::vector<std::string> axis_names;
  const Json& aj = array_at(member(j, "axes", "(root)"), "axes");
  for (std::size_t a = 0; a < aj.size(); ++a) {
    const std::string w = "axes[" + std::to_string(a) + "]";
    RatVector coords = rationals_at(member(aj[a], "coords", w), w + ".coords");
    if (coords.size() != n) fail(w + ".coords", "expected " + std::to_string(n) + " coordinates");
    axes.push_back(std::move(coords));
    if (aj[a].contains("name")) {
      if (!aj[a]["name"].is_string()) fail(w + ".name", "expected a string");
      axis_names.push_back(aj[a]["name"].get<std::string>());
    } else {
      axis_names.push_back("x" + std::to_string(a));
    }
  }
  if (std::set<std::string>(axis_names.begin(), axis_names.end()).size() != axis_names.size()) {
    fail("axes", "axis names must be distinct");
  }

  const FusionLaw law = fusion_law_from_json(member(j, "fusion_law", "(root)"));
  AxialAlgebra alg(CommAlgebra(names, std::move(products)), std::move(axes), law, axis_names);

  if (j.contains("axis_values")) {
    const Json& vj = j["axis_values"];
    if (!vj.is_object()) fail("axis_values", "expected an object keyed by axis name");
    std::map<std::string, Rational> given_values;
    for (const auto& [key, value] : vj.items()) {
      if (std::find(axis_names.begin(), axis_names.end(), key) == axis_names.end()) {
        fail("axis_values." + key, "no axis with this name");
      }
      given_values.emplace(key, rational_at(value, "axis_values." + key));
    }
    std::vector<Rational> values;
    for (const auto& name : axis_names) {
      auto it = given_values.find(name);
      if (it == given_values.end()) fail("axis_values", "missing value for axis '" + name + "'");
      values.push_back(it->second);
    }
    alg = alg.with_axis_values(std::move(values));
  }
  return alg;
}

AxialAlgebra read_algebra(std::istream& in) {
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), line_of(text, e.byte));
  }
  return algebra_from_json(j);
}

AxialAlgebra read_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_algebra(in);
}

Json algebra_to_json(const AxialAlgebra& alg) {
  const CommAlgebra& a = alg.algebra();
  const std::size_t n = a.dim();
  Json out = Json::object();
  out["format"] = kAlgebraFormat;
  out["dim"] = n;
  out["basis"] = a.basis_names();
  Json products = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const RatVector& p = a.product(i, j);
      if (is_zero(p)) continue;
      Json terms = Json::array();
      for (std::size_t k = 0; k < n; ++k) {
        if (!p[k].is_zero()) terms.push_back(Json::array({k, p[k].str()}));
      }
      products.push_back(Json::array({i, j, std::move(terms)}));
    }
  }
  out["products"] = std::move(products);
  Json axes = Json::array();
  for (std::size_t i = 0; i < alg.axes().size(); ++i) {
    axes.push_back({{"name", alg.axis_names()[i]}, {"coords", to_json(alg.axes()[i])}});
  }
  out["axes"] = std::move(axes);
  out["fusion_law"] = fusion_law_to_json(alg.law());
  if (const auto& values = alg.axis_values()) {
    Json v = Json::object();
    for (std::size_t i = 0; i < values->size(); ++i) v[alg.axis_names()[i]] = (*values)[i].str();
    out["axis_values"] = std::move(v);
  }
  return out;
}

std::string write_algebra(const AxialAlgebra& alg) { return algebra_to_json(alg).dump(2) + "\n"; }

void write_algebra_file(const AxialAlgebra& alg, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << write_algebra(alg);
  if (!out) throw std::runtime_error("error writing " + path);
}

}  // namespace axialkit
