#include "doctest.h"

#include <random>

#include "hyposign/errors.hpp"
#include "hyposign/witness.hpp"

using namespace hyposign;

namespace {

RootMultiset roots(std::vector<std::string> values) {
  RootMultiset out;
  for (const std::string& v : values) out.roots.push_back(rational_from_string(v));
  return out;
}

}  // namespace

TEST_CASE("make_witness derives and validates everything from the roots") {
  const Witness w = make_witness(roots({"-1", "3/2", "8/5"}), {"test", 7, {}});
  CHECK(w.pattern == SignPattern::parse("S{1,2,1}"));
  CHECK(w.word.text() == "NPP");
  CHECK(w.poly.at(0) == Rational(12, 5));
  CHECK(w.meta.seed == 7);
  CHECK(verify_witness(w).ok);

  CHECK_THROWS_AS(make_witness(roots({"1", "-1"})), DistinctModuliViolation);
  // (x-3)(x+1)(x+2) = x^3 - 7x - 6: the quadratic coefficient vanishes
  CHECK_THROWS_AS(make_witness(roots({"3", "-1", "-2"})), ZeroCoefficient);
}

TEST_CASE("verify_witness reports the failing index") {
  Witness w = make_witness(roots({"-1", "3/2", "8/5"}));

  SUBCASE("tampered word") {
    w.word = OrderWord::parse("PNP");
    const VerifyReport report = verify_witness(w);
    CHECK_FALSE(report.ok);
    REQUIRE_FALSE(report.issues.empty());
    CHECK(report.issues.front().what == "order word mismatch");
    CHECK(report.issues.front().index == 0);
  }

  SUBCASE("tampered coefficient") {
    std::vector<Rational> coeffs = w.poly.coeffs();
    coeffs[1] = Rational(99);
    w.poly = RationalPoly::from_coeffs(std::move(coeffs));
    const VerifyReport report = verify_witness(w);
    CHECK_FALSE(report.ok);
    CHECK(report.issues.front().what == "coefficient mismatch");
    CHECK(report.issues.front().index == 1);
  }

  SUBCASE("tied moduli in the stored roots") {
    w.roots.roots[0] = Rational(-3, 2);
    const VerifyReport report = verify_witness(w);
    CHECK_FALSE(report.ok);
  }
}

TEST_CASE("transform_witness follows the involution laws") {
  const Witness w = make_witness(roots({"-1", "3/2", "8/5"}));

  const Witness wr = transform_witness(w, Involution::R);
  CHECK(wr.roots.roots == std::vector<Rational>{Rational(-1), Rational(2, 3), Rational(5, 8)});
  CHECK(wr.word.text() == "PPN");
  CHECK(wr.pattern == iota_r(w.pattern));

  const Witness wm = transform_witness(w, Involution::M);
  CHECK(wm.word.text() == "PNN");
  CHECK(wm.word.count_p() == w.word.count_n());
  CHECK(wm.pattern == iota_m(w.pattern));

  const Witness wmr = transform_witness(w, Involution::MR);
  CHECK(transform_witness(wmr, Involution::MR).roots.roots == w.roots.roots);
}

TEST_CASE("sign-change counts match the root signs on random witnesses") {
  std::mt19937_64 rng(11);
  auto draw = [&rng]() {
    Rational v(1 + static_cast<long>(rng() % 40), 1 + static_cast<long>(rng() % 40));
    v.canonicalize();
    return (rng() & 1) ? v : Rational(-v);
  };
  int done = 0;
  while (done < 500) {
    const int d = 1 + static_cast<int>(rng() % 8);
    RootMultiset rs;
    for (int i = 0; i < d; ++i) rs.roots.push_back(draw());
    try {
      const Witness w = make_witness(std::move(rs));
      const Counts cnt = counts(w.pattern);
      int positive = 0;
      for (const Rational& root : w.roots.roots) {
        if (root > 0) ++positive;
      }
      CHECK(positive == cnt.changes);
      CHECK(static_cast<int>(w.roots.roots.size()) - positive == cnt.preservations);
      ++done;
    } catch (const Error&) {
      // tied moduli or vanished coefficient; draw again
    }
  }
}
