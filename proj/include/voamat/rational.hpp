// Exact rational scalars for the matrix-algebra toolkit.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace voamat {

// All algebraic paths use exact big rationals; no floating point anywhere.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Parses "p", "-p" or "p/q" (decimal-free). Throws std::invalid_argument on junk.
inline Rational rat_parse(const std::string& s) {
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: '" + s + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

// Canonical text form: "p" or "p/q" with q > 1.
inline std::string rat_str(const Rational& q) { return q.get_str(); }

// Generalized binomial coefficient a(a-1)...(a-m+1)/m! for any integer a, m >= 0.
inline Rational gen_binomial(long a, long m) {
  if (m < 0) throw std::invalid_argument("gen_binomial: negative m");
  Rational r(1);
  for (long i = 0; i < m; ++i) {
    r *= Rational(a - i);
    r /= Rational(i + 1);
  }
  return r;
}

}  // namespace voamat
