#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "voamat/laurent.hpp"
#include "voamat/rational.hpp"

using namespace voamat;

TEST_CASE("generalized binomial coefficients") {
  CHECK(gen_binomial(5, 0) == 1);
  CHECK(gen_binomial(-1, 2) == 1);
  CHECK(gen_binomial(-1, 3) == -1);
  CHECK(gen_binomial(-3, 2) == 6);
  CHECK(gen_binomial(4, 2) == 6);
  CHECK(gen_binomial(3, 5) == 0);
  CHECK(gen_binomial(-2, 1) == -2);
  CHECK_THROWS_AS(gen_binomial(2, -1), std::invalid_argument);
  // Pascal recurrence on a grid including negative upper index.
  for (long a = -8; a <= 8; ++a)
    for (long m = 1; m <= 8; ++m)
      CHECK(gen_binomial(a, m) == gen_binomial(a - 1, m) + gen_binomial(a - 1, m - 1));
}

TEST_CASE("rational parsing and printing") {
  CHECK(rat_str(rat(3, 6)) == "1/2");
  CHECK(rat_str(rat(-4, 2)) == "-2");
  CHECK(rat_parse("7/3") == rat(7, 3));
  CHECK(rat_parse("-5") == rat(-5));
  CHECK(rat_str(rat_parse("6/-4")) == "-3/2");
  CHECK_THROWS_AS(rat_parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(rat_parse(""), std::invalid_argument);
  CHECK_THROWS_AS(rat_parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(rat(1, 0), std::invalid_argument);
}

TEST_CASE("laurent polynomial arithmetic") {
  LaurentPoly a = LaurentPoly::monomial(-1) + LaurentPoly::monomial(2, rat(3));
  LaurentPoly b = LaurentPoly::monomial(0, rat(1, 2)) + LaurentPoly::monomial(-2, rat(-1));
  CHECK((a * b).coeff(-3) == -1);
  CHECK((a * b).coeff(-1) == rat(1, 2));
  CHECK((a * b).coeff(0) == -3);
  CHECK((a * b).coeff(2) == rat(3, 2));
  CHECK((a - a).is_zero());
  CHECK(residue_coeff(a) == 1);
  CHECK(residue_coeff(b) == 0);
  CHECK(residue_coeff(LaurentPoly::monomial(-1, rat(2)) + LaurentPoly::monomial(-2, rat(-1))) == 2);
  CHECK_THROWS_AS(LaurentPoly::monomial(2000000), std::overflow_error);
}

TEST_CASE("laurent multiplication associative and commutative on random triples") {
  std::mt19937_64 rng(2024);
  auto random_poly = [&rng]() {
    LaurentPoly p;
    std::uniform_int_distribution<long> exp(-6, 6), num(-9, 9), den(1, 5);
    for (int t = 0; t < 5; ++t) p.add_term(exp(rng), rat(num(rng), den(rng)));
    return p;
  };
  for (int trial = 0; trial < 50; ++trial) {
    LaurentPoly a = random_poly(), b = random_poly(), c = random_poly();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
  }
}

TEST_CASE("truncated binomial expansions") {
  CHECK(truncation_poly(0, 0, 0) == LaurentPoly::monomial(-1));
  LaurentPoly t011 = LaurentPoly::monomial(-1) + LaurentPoly::monomial(-2, rat(-1));
  CHECK(truncation_poly(0, 1, 1) == t011);
  CHECK(truncation_poly(0, 0, 1) == LaurentPoly::monomial(-2));
  // Every exponent is >= -(k+l+1).
  for (long k = 0; k <= 4; ++k)
    for (long n = 0; n <= 4; ++n)
      for (long l = 0; l <= 4; ++l)
        for (const auto& [e, c] : truncation_poly(k, n, l).terms) CHECK(e >= -(k + l + 1));
}

TEST_CASE("truncation matches the full binomial expansion of (x+1)^{-k+n-l-1}") {
  // The full expansion in nonnegative powers of x^{-1} has coefficient
  // binom(-k+n-l-1, m) on x^{-k+n-l-m-1}; the truncation keeps m <= n and the
  // remainder supplies m > n. Check the first n + 10 coefficients.
  for (long k = 0; k <= 3; ++k)
    for (long n = 0; n <= 3; ++n)
      for (long l = 0; l <= 3; ++l) {
        LaurentPoly t = truncation_poly(k, n, l);
        for (long m = 0; m <= n + 10; ++m) {
          Rational full = gen_binomial(-k + n - l - 1, m);
          Rational kept = t.coeff(-k + n - l - m - 1);
          if (m <= n)
            CHECK(kept == full);
          else
            CHECK(kept == 0);
        }
      }
}

TEST_CASE("binomial collapse identity") {
  CHECK(binom_sum_identity_check(0, 1, 1, 1));
  CHECK(binom_sum_identity_check(2, 3, 5, 2));
  for (long k = 0; k <= 6; ++k)
    for (long n = 0; n <= 6; ++n)
      for (long l = 0; l <= 6; ++l)
        for (long p = 0; p <= n; ++p) CHECK(binom_sum_identity_check(k, n, l, p));
  CHECK_THROWS_AS(binom_sum_identity_check(0, 1, 1, 2), std::invalid_argument);
}

TEST_CASE("one_plus_x_pow") {
  CHECK(one_plus_x_pow(0) == LaurentPoly::monomial(0));
  LaurentPoly sq = LaurentPoly::monomial(0) + LaurentPoly::monomial(1, rat(2)) +
                   LaurentPoly::monomial(2);
  CHECK(one_plus_x_pow(2) == sq);
  CHECK(one_plus_x_pow(3) == one_plus_x_pow(2) * one_plus_x_pow(1));
  CHECK_THROWS_AS(one_plus_x_pow(-1), std::invalid_argument);
}
