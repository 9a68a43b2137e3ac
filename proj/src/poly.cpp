#include "axialkit/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "axialkit/linalg.hpp"

namespace axialkit {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::deflate(const Rational& root) const {
  if (coeffs_.size() < 2) throw std::domain_error("cannot deflate a constant polynomial");
  // Synthetic division from the top coefficient down.
  std::vector<Rational> q(coeffs_.size() - 1);
  Rational carry;
  for (std::size_t i = coeffs_.size(); i-- > 1;) {
    carry = coeffs_[i] + carry * root;
    q[i - 1] = carry;
  }
  if (!(coeffs_[0] + carry * root).is_zero()) throw std::domain_error("deflation by a non-root");
  return Polynomial(std::move(q));
}

std::string Polynomial::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    const Rational mag = abs(c);
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == Rational(1);
    if (!unit || i == 0) os << mag;
    if (i > 0) {
      if (!unit) os << '*';
      os << 'x';
      if (i > 1) os << '^' << i;
    }
  }
  return os.str();
}

Polynomial characteristic_polynomial(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::domain_error("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  RatMatrix mk(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    RatMatrix next = m * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    c[n - k] = -trace(m * next) / Rational(static_cast<long>(k));
    mk = std::move(next);
  }
  return Polynomial(std::move(c));
}

namespace {

mpz_class ceil_root(const mpz_class& t, unsigned long k) {
  mpz_class r;
  mpz_root(r.get_mpz_t(), t.get_mpz_t(), k);
  mpz_class check;
  mpz_pow_ui(check.get_mpz_t(), r.get_mpz_t(), k);
  if (check < t) r += 1;
  return r;
}

// Upper bound on |root| for an integer polynomial with nonzero leading term.
mpz_class fujiwara_bound(const std::vector<mpz_class>& z) {
  const std::size_t d = z.size() - 1;
  const mpz_class lead = ::abs(z[d]);
  mpz_class best = 0;
  for (std::size_t k = 1; k <= d; ++k) {
    mpz_class num = ::abs(z[d - k]);
    if (k == d) num = (num + 1) / 2 + 1;
    mpz_class t;
    mpz_cdiv_q(t.get_mpz_t(), num.get_mpz_t(), lead.get_mpz_t());
    const mpz_class r = ceil_root(t, k);
    if (r > best) best = r;
  }
  return 2 * best + 1;
}

std::vector<mpz_class> divisors(const mpz_class& n) {
  std::vector<mpz_class> small, large;
  const mpz_class m = ::abs(n);
  for (mpz_class i = 1; i * i <= m; ++i) {
    if (m % i == 0) {
      small.push_back(i);
      if (i * i != m) large.push_back(m / i);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

RationalRoots rational_roots(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("rational roots of the zero polynomial");
  RationalRoots out;
  std::vector<Rational> coeffs = p.coefficients();
  std::size_t zeros = 0;
  while (coeffs[zeros].is_zero()) ++zeros;
  if (zeros > 0) out.roots.push_back({Rational(0), zeros});
  Polynomial rest(std::vector<Rational>(coeffs.begin() + static_cast<std::ptrdiff_t>(zeros), coeffs.end()));

  if (rest.degree() > 0) {
    mpz_class lcm_den = 1;
    for (const auto& c : rest.coefficients()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.denominator().get_mpz_t());
    std::vector<mpz_class> z;
    for (const auto& c : rest.coefficients()) z.push_back(c.numerator() * (lcm_den / c.denominator()));
    const mpz_class bound = fujiwara_bound(z);
    const mpz_class a0 = z.front();

    std::vector<Rational> found;
    for (const auto& q : divisors(z.back())) {
      const mpz_class limit = bound * q;
      for (mpz_class num = -limit; num <= limit && rest.degree() > 0; ++num) {
        if (num == 0 || a0 % num != 0) continue;
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), q.get_mpz_t());
        if (g != 1) continue;
        const Rational cand(mpq_class(num, q));
        std::size_t mult = 0;
        while (rest.degree() > 0 && rest(cand).is_zero()) {
          rest = rest.deflate(cand);
          ++mult;
        }
        if (mult > 0) out.roots.push_back({cand, mult});
      }
    }
  }

  std::sort(out.roots.begin(), out.roots.end(), [](const auto& a, const auto& b) { return a.value > b.value; });
  std::vector<Rational> monic = rest.coefficients();
  const Rational lead = monic.back();
  for (auto& c : monic) c /= lead;
  out.remainder = Polynomial(std::move(monic));
  return out;
}

}  // namespace axialkit
