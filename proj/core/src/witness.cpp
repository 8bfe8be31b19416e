#include "hyposign/witness.hpp"

#include <utility>

#include "hyposign/errors.hpp"

namespace hyposign {

Witness make_witness(RootMultiset roots, WitnessMeta meta) {
  // Tied moduli are diagnosed before vanished coefficients ({1,-1} has both).
  OrderWord word = order_word_of(roots);
  RationalPoly poly = poly_from_roots(roots);
  SignPattern pattern = sign_pattern_strict(poly);
  return Witness{std::move(roots), std::move(poly), std::move(pattern), std::move(word),
                 std::move(meta)};
}

VerifyReport verify_witness(const Witness& w) {
  VerifyReport report;
  auto fail = [&](std::string what, int index) {
    report.ok = false;
    report.issues.push_back({std::move(what), index});
  };

  if (w.roots.roots.empty()) {
    fail("empty root multiset", -1);
    return report;
  }
  for (std::size_t i = 0; i < w.roots.roots.size(); ++i) {
    if (w.roots.roots[i] == 0) fail("zero root", static_cast<int>(i));
  }
  if (!report.ok) return report;

  const RationalPoly poly = poly_from_roots(w.roots);
  if (poly.degree() != w.poly.degree()) {
    fail("stored polynomial degree mismatch", w.poly.degree());
  } else {
    for (int e = 0; e <= poly.degree(); ++e) {
      if (!(poly.at(e) == w.poly.at(e))) fail("coefficient mismatch", e);
    }
  }

  try {
    const SignPattern pattern = sign_pattern_strict(poly);
    if (pattern.length() != w.pattern.length()) {
      fail("pattern length mismatch", w.pattern.length());
    } else {
      for (int k = 0; k < pattern.length(); ++k) {
        if (pattern.at_index(k) != w.pattern.at_index(k)) fail("pattern mismatch", k);
      }
    }
  } catch (const ZeroCoefficient& e) {
    fail(std::string("vanishing coefficient: ") + e.what(), -1);
  }

  try {
    const OrderWord word = order_word_of(w.roots);
    if (word.length() != w.word.length()) {
      fail("order word length mismatch", w.word.length());
    } else {
      for (int k = 0; k < word.length(); ++k) {
        if (word.at(k) != w.word.at(k)) fail("order word mismatch", k);
      }
    }
  } catch (const DistinctModuliViolation& e) {
    fail(std::string("tied moduli: ") + e.what(), -1);
  }

  return report;
}

Witness transform_witness(const Witness& w, Involution which) {
  RootMultiset roots;
  roots.roots.reserve(w.roots.roots.size());
  for (const Rational& root : w.roots.roots) {
    switch (which) {
      case Involution::M:
        roots.roots.push_back(-root);
        break;
      case Involution::R:
        roots.roots.push_back(1 / root);
        break;
      case Involution::MR:
        roots.roots.push_back(-1 / root);
        break;
    }
  }
  WitnessMeta meta = w.meta;
  meta.method = std::string("transform-") +
                (which == Involution::M ? "m" : which == Involution::R ? "r" : "mr") + "(" +
                w.meta.method + ")";
  return make_witness(std::move(roots), std::move(meta));
}

}  // namespace hyposign
