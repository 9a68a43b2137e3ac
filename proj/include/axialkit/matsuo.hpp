#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "axialkit/algebra.hpp"
#include "axialkit/poly.hpp"

namespace axialkit {

// Permutation of {0, ..., n-1} as its image list. Products act on the right:
// (p * q)(x) = q(p(x)).
using Permutation = std::vector<std::size_t>;

Permutation identity_permutation(std::size_t degree);
Permutation compose(const Permutation& p, const Permutation& q);
Permutation invert(const Permutation& p);
// g^-1 d g
Permutation conjugate(const Permutation& d, const Permutation& g);
bool is_identity(const Permutation& p);

// Cycle notation with 1-based points, e.g. "(1 2 3)(4 5)" or "(1,2)".
// Throws ParseError.
Permutation parse_cycles(std::string_view text, std::size_t degree);
// Canonical form: nontrivial cycles each starting at its smallest point,
// ordered by that point, entries comma separated; "()" for the identity.
std::string format_cycles(const Permutation& p);

struct PermGroupData {
  std::string label;
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  std::vector<Permutation> class_D;  // sorted canonically
};

// Closure of seeds under conjugation by the conjugators, or by the set
// itself when conjugators is empty. Result sorted canonically.
std::vector<Permutation> conjugation_closure(const std::vector<Permutation>& seeds,
                                             const std::vector<Permutation>& conjugators);

// Text format, one directive per line, '#' starts a comment:
//   degree N
//   generator <cycles>
//   seed <cycles>        (D is the conjugation closure of the seeds)
//   involution <cycles>  (D listed explicitly)
PermGroupData parse_group(std::istream& in, std::string label = {});
PermGroupData read_group_file(const std::string& path);

// "S3", "S4", ..., and direct products on disjoint points such as "S3xS3".
PermGroupData builtin_group(std::string_view name);
std::vector<std::string> builtin_group_examples();

struct ThreeTranspositionCheck {
  bool ok = true;
  std::vector<std::string> violations;
};

// Every d in D is an involution, D^D = D, and o(de) is 1, 2 or 3.
ThreeTranspositionCheck verify_3transpositions(const PermGroupData& data);

// 1, 2, 3, or 0 for anything larger.
std::size_t small_order(const Permutation& p);

// Basis D in class_D order, named in cycle notation; every basis element is
// an axis for J(eta). Throws std::invalid_argument for eta in {0, 1} or if
// the data fail verify_3transpositions.
AxialAlgebra matsuo_algebra(const PermGroupData& data, const Rational& eta);

// M[d][e] = 1 iff o(de) = 3.
RatMatrix noncommuting_adjacency(const PermGroupData& data);

struct CriticalEtas {
  std::vector<Rational> etas;               // -2 / lambda, by descending lambda, eta = 1 dropped
  std::vector<RationalRoots::Root> eigenvalues;  // rational eigenvalues of M
  Polynomial irrational_factor;             // part of the characteristic polynomial with no rational roots
};

CriticalEtas critical_etas(const PermGroupData& data);

}  // namespace axialkit
