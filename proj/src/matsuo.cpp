#include "axialkit/matsuo.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "axialkit/errors.hpp"

namespace axialkit {

namespace {

using Cycles = std::vector<std::vector<std::size_t>>;

Cycles cycles_of(const Permutation& p) {
  Cycles out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen[s] || p[s] == s) continue;
    std::vector<std::size_t> c;
    for (std::size_t x = s; !seen[x]; x = p[x]) {
      seen[x] = true;
      c.push_back(x);
    }
    out.push_back(std::move(c));
  }
  return out;
}

bool canonical_less(const Permutation& a, const Permutation& b) { return cycles_of(a) < cycles_of(b); }

void sort_canonical(std::vector<Permutation>& v) {
  std::sort(v.begin(), v.end(), canonical_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

PermGroupData product_of_symmetric(const std::vector<std::size_t>& factors, std::string label) {
  PermGroupData data;
  data.label = std::move(label);
  for (std::size_t n : factors) data.degree += n;
  std::vector<Permutation> seeds;
  std::size_t offset = 0;
  for (std::size_t n : factors) {
    Permutation swap = identity_permutation(data.degree);
    std::swap(swap[offset], swap[offset + 1]);
    Permutation cycle = identity_permutation(data.degree);
    for (std::size_t i = 0; i < n; ++i) cycle[offset + i] = offset + (i + 1) % n;
    data.generators.push_back(swap);
    if (n > 2) data.generators.push_back(cycle);
    seeds.push_back(swap);
    offset += n;
  }
  data.class_D = conjugation_closure(seeds, data.generators);
  return data;
}

}  // namespace

Permutation identity_permutation(std::size_t degree) {
  Permutation p(degree);
  for (std::size_t i = 0; i < degree; ++i) p[i] = i;
  return p;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw std::invalid_argument("permutations of different degree");
  Permutation r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) r[x] = q[p[x]];
  return r;
}

Permutation invert(const Permutation& p) {
  Permutation r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) r[p[x]] = x;
  return r;
}

Permutation conjugate(const Permutation& d, const Permutation& g) { return compose(compose(invert(g), d), g); }

bool is_identity(const Permutation& p) {
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (p[x] != x) return false;
  }
  return true;
}

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  Permutation p = identity_permutation(degree);
  std::vector<bool> used(degree, false);
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  if (i == text.size()) throw ParseError("empty permutation");
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in \"" + std::string(text) + "\"");
    ++i;
    std::vector<std::size_t> cycle;
    for (;;) {
      skip_space();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw ParseError("malformed cycle in \"" + std::string(text) + "\"");
      }
      std::size_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::size_t>(text[i] - '0');
        if (v > degree) break;
        ++i;
      }
      if (v < 1 || v > degree) throw ParseError("point out of range 1.." + std::to_string(degree));
      if (used[v - 1]) throw ParseError("point " + std::to_string(v) + " repeated");
      used[v - 1] = true;
      cycle.push_back(v - 1);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) p[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_space();
  }
  return p;
}

std::string format_cycles(const Permutation& p) {
  const Cycles cs = cycles_of(p);
  if (cs.empty()) return "()";
  std::string out;
  for (const auto& c : cs) {
    out += '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(c[k] + 1);
    }
    out += ')';
  }
  return out;
}

std::vector<Permutation> conjugation_closure(const std::vector<Permutation>& seeds,
                                             const std::vector<Permutation>& conjugators) {
  std::set<Permutation> set(seeds.begin(), seeds.end());
  std::vector<Permutation> all(set.begin(), set.end());
  const bool self = conjugators.empty();
  for (std::size_t k = 0; k < all.size(); ++k) {
    // Self-conjugation: pair the new element with every earlier one both ways.
    const std::size_t m = self ? k + 1 : conjugators.size();
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<Permutation> images;
      if (self) {
        images.push_back(conjugate(all[k], all[j]));
        images.push_back(conjugate(all[j], all[k]));
      } else {
        images.push_back(conjugate(all[k], conjugators[j]));
      }
      for (auto& img : images) {
        if (set.insert(img).second) all.push_back(std::move(img));
      }
    }
  }
  sort_canonical(all);
  return all;
}

PermGroupData parse_group(std::istream& in, std::string label) {
  PermGroupData data;
  data.label = std::move(label);
  std::vector<Permutation> seeds, explicit_d;
  bool have_degree = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const std::size_t sp = body.find_first_of(" \t");
    const std::string key = body.substr(0, sp);
    const std::string rest = sp == std::string::npos ? std::string() : trim(body.substr(sp));
    try {
      if (key == "degree") {
        if (have_degree) throw ParseError("degree given twice");
        std::size_t pos = 0;
        long n = -1;
        try {
          n = std::stol(rest, &pos);
        } catch (const std::exception&) {
          pos = 0;
        }
        if (pos == 0 || pos != rest.size() || n < 1) throw ParseError("degree must be a positive integer");
        data.degree = static_cast<std::size_t>(n);
        have_degree = true;
      } else if (key == "generator" || key == "seed" || key == "involution") {
        if (!have_degree) throw ParseError("degree must come first");
        Permutation p = parse_cycles(rest, data.degree);
        if (key == "generator") data.generators.push_back(std::move(p));
        else if (key == "seed") seeds.push_back(std::move(p));
        else explicit_d.push_back(std::move(p));
      } else {
        throw ParseError("unknown directive '" + key + "'");
      }
    } catch (const ParseError& e) {
      throw ParseError(e.what(), lineno, key);
    }
  }
  if (!have_degree) throw ParseError("missing degree directive");
  if (!seeds.empty() && !explicit_d.empty()) throw ParseError("use either seed or involution lines, not both");
  if (seeds.empty() && explicit_d.empty()) throw ParseError("no seed or involution lines");
  if (!seeds.empty()) {
    data.class_D = conjugation_closure(seeds, data.generators);
  } else {
    sort_canonical(explicit_d);
    data.class_D = std::move(explicit_d);
  }
  return data;
}

PermGroupData read_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_group(in, path);
}

PermGroupData builtin_group(std::string_view name) {
  std::vector<std::size_t> factors;
  std::size_t i = 0;
  while (i < name.size()) {
    const std::size_t start = i;
    if (!factors.empty()) {
      if (name[i] != 'x') break;
      ++i;
    }
    if (i >= name.size() || name[i] != 'S') {
      i = start;
      break;
    }
    ++i;
    std::size_t n = 0, digits = 0;
    while (i < name.size() && std::isdigit(static_cast<unsigned char>(name[i]))) {
      n = n * 10 + static_cast<std::size_t>(name[i++] - '0');
      if (++digits > 2) break;
    }
    if (digits == 0 || n < 2 || n > 8) {
      throw std::invalid_argument("unknown builtin group '" + std::string(name) + "' (factors S2..S8)");
    }
    factors.push_back(n);
  }
  if (factors.empty() || i != name.size()) {
    throw std::invalid_argument("unknown builtin group '" + std::string(name) + "'");
  }
  return product_of_symmetric(factors, std::string(name));
}

std::vector<std::string> builtin_group_examples() { return {"S3", "S4", "S5", "S3xS3"}; }

std::size_t small_order(const Permutation& p) {
  Permutation q = p;
  for (std::size_t k = 1; k <= 3; ++k) {
    if (is_identity(q)) return k;
    q = compose(q, p);
  }
  return 0;
}

ThreeTranspositionCheck verify_3transpositions(const PermGroupData& data) {
  ThreeTranspositionCheck out;
  auto fail = [&](std::string msg) {
    out.ok = false;
    if (out.violations.size() < 100) out.violations.push_back(std::move(msg));
  };
  if (data.class_D.empty()) fail("D is empty");
  const std::set<Permutation> d(data.class_D.begin(), data.class_D.end());
  for (const auto& p : data.class_D) {
    if (p.size() != data.degree) {
      fail(format_cycles(p) + " has the wrong degree");
      return out;
    }
  }
  for (const auto& p : data.class_D) {
    if (small_order(p) != 2) fail(format_cycles(p) + " is not an involution");
  }
  for (const auto& a : data.class_D) {
    for (const auto& b : data.class_D) {
      const std::size_t o = small_order(compose(a, b));
      if (o == 0) fail("o(" + format_cycles(a) + format_cycles(b) + ") > 3");
      if (!d.count(conjugate(a, b))) fail(format_cycles(a) + "^" + format_cycles(b) + " is not in D");
    }
  }
  return out;
}

AxialAlgebra matsuo_algebra(const PermGroupData& data, const Rational& eta) {
  if (eta == Rational(0) || eta == Rational(1)) throw std::invalid_argument("eta must differ from 0 and 1");
  const auto check = verify_3transpositions(data);
  if (!check.ok) throw std::invalid_argument("not a 3-transposition class: " + check.violations.front());

  const auto& d = data.class_D;
  const std::size_t n = d.size();
  std::map<Permutation, std::size_t> index;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    index.emplace(d[i], i);
    names.push_back(format_cycles(d[i]));
  }
  const Rational half_eta = eta / Rational(2);
  std::vector<RatVector> products(CommAlgebra::packed_size(n), zero_vector(n));
#pragma omp parallel for schedule(dynamic) if (n * n >= 256)
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      RatVector& p = products[CommAlgebra::packed_index(i, j, n)];
      if (i == j) {
        p[i] = Rational(1);
      } else if (small_order(compose(d[i], d[j])) == 3) {
        const std::size_t c = index.at(conjugate(d[i], d[j]));
        p[i] += half_eta;
        p[j] += half_eta;
        p[c] -= half_eta;
      }
    }
  }
  std::vector<RatVector> axes;
  for (std::size_t i = 0; i < n; ++i) axes.push_back(unit_vector(n, i));
  return AxialAlgebra(CommAlgebra(names, std::move(products)), std::move(axes), jordan_law(eta), names);
}

RatMatrix noncommuting_adjacency(const PermGroupData& data) {
  const auto& d = data.class_D;
  RatMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (small_order(compose(d[i], d[j])) == 3) m(i, j) = Rational(1);
    }
  }
  return m;
}

CriticalEtas critical_etas(const PermGroupData& data) {
  const RationalRoots rr = rational_roots(characteristic_polynomial(noncommuting_adjacency(data)));
  CriticalEtas out;
  out.eigenvalues = rr.roots;
  out.irrational_factor = rr.remainder;
  for (const auto& root : rr.roots) {
    if (root.value.is_zero()) continue;
    const Rational eta = Rational(-2) / root.value;
    if (eta != Rational(1)) out.etas.push_back(eta);
  }
  return out;
}

}  // namespace axialkit
