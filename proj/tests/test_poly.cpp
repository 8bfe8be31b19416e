#include "doctest.h"

#include <random>
#include <variant>

#include "hyposign/errors.hpp"
#include "hyposign/poly.hpp"

using namespace hyposign;

namespace {

RationalPoly poly(std::vector<std::string> coeffs) {
  std::vector<Rational> values;
  for (const std::string& c : coeffs) values.push_back(rational_from_string(c));
  return RationalPoly::from_coeffs(std::move(values));
}

RootMultiset roots(std::vector<std::string> values) {
  RootMultiset out;
  for (const std::string& v : values) out.roots.push_back(rational_from_string(v));
  return out;
}

}  // namespace

TEST_CASE("expansion from roots, hand-checked") {
  // (x+1)(x-3/2)(x-8/5) = x^3 - 21/10 x^2 - 7/10 x + 12/5
  CHECK(poly_from_roots(roots({"-1", "3/2", "8/5"})) == poly({"12/5", "-7/10", "-21/10", "1"}));
  CHECK(poly_from_roots(roots({"1", "-1"})) == poly({"-1", "0", "1"}));
  CHECK(poly_from_roots(roots({"-1", "-1", "1", "1"})) == poly({"1", "0", "-2", "0", "1"}));
  CHECK_THROWS_AS(poly_from_roots(RootMultiset{}), Error);
  CHECK_THROWS_AS(poly_from_roots(roots({"0"})), Error);
}

TEST_CASE("sign pattern extraction, zeros never dropped") {
  const CoeffPattern cubic = sign_pattern_of(poly({"12/5", "-7/10", "-21/10", "1"}));
  REQUIRE(std::holds_alternative<SignPattern>(cubic));
  CHECK(std::get<SignPattern>(cubic) == SignPattern::parse("S{1,2,1}"));

  const CoeffPattern quartic = sign_pattern_of(poly({"1", "0", "-2", "0", "1"}));
  REQUIRE(std::holds_alternative<PatternWithZeros>(quartic));
  CHECK(std::get<PatternWithZeros>(quartic).text() == "+0-0+");
  CHECK(std::get<PatternWithZeros>(quartic).zero_exponents() == std::vector<int>{3, 1});

  const CoeffPattern linear = sign_pattern_of(poly({"1", "1"}));
  CHECK(std::get<SignPattern>(linear) == SignPattern::parse("++"));

  CHECK_THROWS_AS(sign_pattern_strict(poly({"1", "0", "1"})), ZeroCoefficient);
  CHECK_THROWS_AS(sign_pattern_of(poly({"1", "2"})), Error);  // not monic
}

TEST_CASE("order words from roots") {
  CHECK(order_word_of(roots({"-1", "3/2", "8/5"})).text() == "NPP");
  CHECK(order_word_of(roots({"-1", "3/2", "3/5"})).text() == "PNP");
  CHECK(order_word_of(roots({"-1", "3/2", "-3/5"})).text() == "NNP");
  CHECK(order_word_of(roots({"-2", "1"})).text() == "PN");
  CHECK_THROWS_AS(order_word_of(roots({"1", "-1"})), DistinctModuliViolation);
}

TEST_CASE("reversal, negation, derivative") {
  const RationalPoly p = poly_from_roots(roots({"-1", "3/2", "8/5"}));
  const RationalPoly reversed = reverse_poly(p);
  CHECK(reversed == poly_from_roots(roots({"-1", "2/3", "5/8"})));
  CHECK_THROWS_AS(reverse_poly(poly({"0", "1"})), Error);

  CHECK(negate_var(poly({"2", "3", "1"})) == poly({"2", "-3", "1"}));
  CHECK(negate_var(negate_var(p)) == p);

  CHECK(derivative(poly({"0", "0", "0", "1"})) == poly({"0", "0", "3"}));
  CHECK_THROWS_AS(derivative(poly({"5"})), Error);
}

TEST_CASE("cluster family: frozen expansions") {
  CHECK(cluster_family(2) == poly({"1", "0", "-2", "0", "1"}));
  CHECK(cluster_family(5) == poly({"1", "3", "1", "-5", "-5", "1", "3", "1"}));
  CHECK(cluster_family(6) == poly({"1", "4", "4", "-4", "-10", "-4", "4", "4", "1"}));
  CHECK_THROWS_AS(cluster_family(1), Error);
}

TEST_CASE("cluster family: closed-form pattern") {
  const CoeffPattern at5 = cluster_family_pattern(5);
  CHECK(std::get<SignPattern>(at5) == SignPattern::parse("S{3,2,3}"));
  const CoeffPattern at4 = cluster_family_pattern(4);
  CHECK(std::get<SignPattern>(at4) == SignPattern::parse("S{2,3,2}"));

  const CoeffPattern at7 = cluster_family_pattern(7);
  REQUIRE(std::holds_alternative<PatternWithZeros>(at7));
  CHECK(std::get<PatternWithZeros>(at7).text() == "+++0--0+++");
  CHECK(std::get<PatternWithZeros>(at7).zero_exponents() == std::vector<int>{6, 3});
}

TEST_CASE("cluster family: both routes and the prediction agree up to ell = 80") {
  for (int ell = 2; ell <= 80; ++ell) {
    CAPTURE(ell);
    const RationalPoly conv = cluster_family(ell);
    CHECK(conv == cluster_family_binomial(ell));
    CHECK(sign_pattern_of(conv) == cluster_family_pattern(ell));
  }
}

TEST_CASE("pattern transforms commute with the polynomial transforms") {
  std::mt19937_64 rng(424242);
  auto draw = [&rng]() {
    const long num = 1 + static_cast<long>(rng() % 50);
    const long den = 1 + static_cast<long>(rng() % 50);
    Rational v(num, den);
    v.canonicalize();
    return (rng() & 1) ? v : Rational(-v);
  };
  int checked = 0;
  while (checked < 500) {
    const int d = 1 + static_cast<int>(rng() % 10);
    RootMultiset rs;
    for (int i = 0; i < d; ++i) rs.roots.push_back(draw());
    const RationalPoly p = poly_from_roots(rs);
    const CoeffPattern base = sign_pattern_of(p);
    if (!std::holds_alternative<SignPattern>(base)) continue;
    const SignPattern base_sp = std::get<SignPattern>(base);

    const CoeffPattern negated = sign_pattern_of(negate_var(p));
    REQUIRE(std::holds_alternative<SignPattern>(negated));
    CHECK(std::get<SignPattern>(negated) == iota_m(base_sp));

    const CoeffPattern reversed = sign_pattern_of(reverse_poly(p));
    REQUIRE(std::holds_alternative<SignPattern>(reversed));
    CHECK(std::get<SignPattern>(reversed) == iota_r(base_sp));
    ++checked;
  }
}

TEST_CASE("pretty printing") {
  CHECK(poly({"12/5", "-7/10", "-21/10", "1"}).pretty() == "x^3 - 21/10*x^2 - 7/10*x + 12/5");
  CHECK(poly({"1", "0", "-2", "0", "1"}).pretty() == "x^4 - 2*x^2 + 1");
  CHECK(poly({"-4", "3", "1"}).pretty() == "x^2 + 3*x - 4");
}
