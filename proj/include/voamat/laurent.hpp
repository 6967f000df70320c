// Laurent polynomials with exact rational coefficients, plus the truncated
// binomial expansions used by the diamond product.
#pragma once

#include <cstdlib>
#include <map>
#include <stdexcept>

#include "voamat/rational.hpp"

namespace voamat {

// Finite map exponent -> nonzero coefficient. Exponents are machine integers
// with a sanity bound; everything in scope stays in the low hundreds.
class LaurentPoly {
 public:
  std::map<long, Rational> terms;

  LaurentPoly() = default;

  static LaurentPoly monomial(long exp, const Rational& c = Rational(1)) {
    LaurentPoly p;
    if (c != 0) p.terms[check_exp(exp)] = c;
    return p;
  }

  Rational coeff(long exp) const {
    auto it = terms.find(exp);
    return it == terms.end() ? Rational(0) : it->second;
  }

  bool is_zero() const { return terms.empty(); }

  void add_term(long exp, const Rational& c) {
    if (c == 0) return;
    auto it = terms.find(check_exp(exp));
    if (it == terms.end()) {
      terms.emplace(exp, c);
    } else {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms) add_term(e, c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }

  LaurentPoly operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms) r.terms[e] = -c;
    return r;
  }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms)
      for (const auto& [eb, cb] : b.terms) r.add_term(ea + eb, ca * cb);
    return r;
  }

  LaurentPoly& operator*=(const Rational& s) {
    if (s == 0) {
      terms.clear();
    } else {
      for (auto& [e, c] : terms) c *= s;
    }
    return *this;
  }

  bool operator==(const LaurentPoly& o) const { return terms == o.terms; }

 private:
  static long check_exp(long e) {
    if (std::abs(e) > 1000000) throw std::overflow_error("Laurent exponent out of range");
    return e;
  }
};

// Residue: coefficient of x^{-1}.
inline Rational residue_coeff(const LaurentPoly& p) { return p.coeff(-1); }

// (1 + x)^e for e >= 0, as a polynomial.
inline LaurentPoly one_plus_x_pow(long e) {
  if (e < 0) throw std::invalid_argument("one_plus_x_pow: negative exponent");
  LaurentPoly p;
  for (long i = 0; i <= e; ++i) p.add_term(i, gen_binomial(e, i));
  return p;
}

// Taylor polynomial of order k+l+1 of (x+1)^{-k+n-l-1} in x^{-1}:
//   sum_{m=0}^{n} binom(-k+n-l-1, m) x^{-k+n-l-m-1}.
inline LaurentPoly truncation_poly(long k, long n, long l) {
  if (k < 0 || n < 0 || l < 0) throw std::invalid_argument("truncation_poly: negative index");
  LaurentPoly p;
  for (long m = 0; m <= n; ++m) p.add_term(-k + n - l - m - 1, gen_binomial(-k + n - l - 1, m));
  return p;
}

// The binomial collapse identity used in the module-structure theorem:
//   sum_{m=0}^{p} binom(-k+n-l-1,m) binom(-k+n-l-m-1,p-m) (-1)^{p-m}
//     = binom(-k+n-l-1,p) delta_{p,0}.
inline bool binom_sum_identity_check(long k, long n, long l, long p) {
  if (p < 0 || p > n) throw std::invalid_argument("binom_sum_identity_check: need 0 <= p <= n");
  Rational lhs(0);
  for (long m = 0; m <= p; ++m) {
    Rational t = gen_binomial(-k + n - l - 1, m) * gen_binomial(-k + n - l - m - 1, p - m);
    if ((p - m) % 2 != 0) t = -t;
    lhs += t;
  }
  Rational rhs = (p == 0) ? gen_binomial(-k + n - l - 1, p) : Rational(0);
  return lhs == rhs;
}

}  // namespace voamat
