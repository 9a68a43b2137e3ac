#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "axialkit/matrix.hpp"

namespace axialkit {

// Univariate polynomial over Q, coefficients stored lowest degree first with
// no trailing zeros. The zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const Rational& leading() const { return coeffs_.back(); }

  Rational operator()(const Rational& x) const;
  // Quotient by (x - root); the remainder must be zero.
  Polynomial deflate(const Rational& root) const;

  std::string str() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Rational> coeffs_;
};

// det(x I - m), computed by the Faddeev-LeVerrier recurrence.
Polynomial characteristic_polynomial(const RatMatrix& m);

struct RationalRoots {
  struct Root {
    Rational value;
    std::size_t multiplicity = 0;
  };
  std::vector<Root> roots;  // descending by value
  Polynomial remainder;     // factor with no rational roots (degree 0 if fully split)
};

// All rational roots with multiplicity, by the rational root theorem with
// candidates bounded by the Fujiwara root bound.
RationalRoots rational_roots(const Polynomial& p);

}  // namespace axialkit
