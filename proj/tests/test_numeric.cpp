#include "doctest.h"

#include <gmpxx.h>

#include "hyposign/errors.hpp"
#include "hyposign/numeric.hpp"

using namespace hyposign;

TEST_CASE("rational strings round-trip in canonical form") {
  CHECK(rational_to_string(rational_from_string("3/2")) == "3/2");
  CHECK(rational_to_string(rational_from_string("-21/10")) == "-21/10");
  CHECK(rational_to_string(rational_from_string("5")) == "5/1");
  CHECK(rational_to_string(rational_from_string("4/8")) == "1/2");
  CHECK(rational_to_string(rational_from_string("6/-4")) == "-3/2");
  CHECK(rational_from_string("0") == 0);
}

TEST_CASE("rational parsing rejects malformed input") {
  CHECK_THROWS_AS(rational_from_string(""), ParseError);
  CHECK_THROWS_AS(rational_from_string("x"), ParseError);
  CHECK_THROWS_AS(rational_from_string("1/0"), ParseError);
  CHECK_THROWS_AS(rational_from_string("1/"), ParseError);
  CHECK_THROWS_AS(rational_from_string("1.5"), ParseError);
}

TEST_CASE("compare_abs orders by modulus") {
  CHECK(compare_abs(Rational(-3, 2), Rational(8, 5)) < 0);
  CHECK(compare_abs(Rational(-1), Rational(1)) == 0);
  CHECK(compare_abs(Rational(2), Rational(-3, 2)) > 0);
}

TEST_CASE("binomial matches the GMP built-in") {
  for (long n = 0; n <= 60; ++n) {
    for (long k = 0; k <= n; ++k) {
      BigInt expected;
      mpz_bin_uiui(expected.get_mpz_t(), static_cast<unsigned long>(n),
                   static_cast<unsigned long>(k));
      CHECK(binomial(n, k) == expected);
    }
  }
  BigInt big;
  mpz_bin_uiui(big.get_mpz_t(), 300, 150);
  CHECK(binomial(300, 150) == big);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(5, 6) == 0);
}

TEST_CASE("isqrt_floor") {
  CHECK(isqrt_floor(0) == 0);
  CHECK(isqrt_floor(1) == 1);
  CHECK(isqrt_floor(2) == 1);
  CHECK(isqrt_floor(4) == 2);
  CHECK(isqrt_floor(9) == 3);
  CHECK(isqrt_floor(10) == 3);
  CHECK(isqrt_floor(302) == 17);
}

TEST_CASE("fnv1a is stable and input-sensitive") {
  CHECK(fnv1a("abc") == fnv1a("abc"));
  CHECK(fnv1a("abc") != fnv1a("abd"));
  CHECK(fnv1a("abc", fnv1a("x")) != fnv1a("abc"));
}

TEST_CASE("rationalize finds small-denominator approximations") {
  CHECK(rationalize(0.5, BigInt(1) << 16) == Rational(1, 2));
  CHECK(rationalize(-1.5, BigInt(1) << 16) == Rational(-3, 2));

  // 1/3 is not a double; a bounded-denominator approximation recovers it.
  CHECK(rationalize(1.0 / 3.0, BigInt(100)) == Rational(1, 3));
  CHECK(rationalize(3.14159265358979, BigInt(200)) == Rational(355, 113));

  // With a huge bound the exact binary value comes back.
  const double x = 0.1;
  const Rational exact = rationalize(x, BigInt(1) << 62);
  CHECK(exact.get_d() == x);
}

TEST_CASE("rationalize error shrinks as the bound doubles") {
  const double x = 2.718281828459045;
  Rational prev_err(1);
  for (int blog = 4; blog <= 40; blog += 6) {
    const Rational approx = rationalize(x, BigInt(1) << blog);
    Rational err = abs(Rational(x) - approx);
    CHECK(err <= prev_err);
    prev_err = err;
  }
}
