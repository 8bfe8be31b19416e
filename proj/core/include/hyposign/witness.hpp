#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hyposign/poly.hpp"
#include "hyposign/sign_pattern.hpp"

namespace hyposign {

struct WitnessMeta {
  std::string method;
  std::uint64_t seed = 0;
  std::map<std::string, std::string> params;

  bool operator==(const WitnessMeta& other) const = default;
};

/// A certified realization: the roots are the source of truth, everything else
/// is derived from them by exact arithmetic. Invariants (enforced by
/// make_witness, re-checked by verify_witness):
///   poly = poly_from_roots(roots); pattern = sign_pattern_strict(poly);
///   word = order_word_of(roots); all root moduli pairwise distinct.
struct Witness {
  RootMultiset roots;
  RationalPoly poly;
  SignPattern pattern;
  OrderWord word;
  WitnessMeta meta;
};

/// Expands and validates. Throws ZeroCoefficient or DistinctModuliViolation.
Witness make_witness(RootMultiset roots, WitnessMeta meta = {});

struct VerifyIssue {
  std::string what;
  int index = -1;  // failing exponent / word slot, when applicable
};

struct VerifyReport {
  bool ok = true;
  std::vector<VerifyIssue> issues;
};

/// Recomputes the polynomial from the roots, the pattern from the polynomial
/// and the word from the roots, comparing each against the stored fields.
/// Never throws; every mismatch is reported with its failing index.
VerifyReport verify_witness(const Witness& w);

enum class Involution : std::uint8_t { M, R, MR };

/// Root-level involutions: M negates every root (pattern -> iota_m, word ->
/// P/N swap), R replaces each root by its reciprocal (pattern -> iota_r, word
/// -> reversal), MR does both. Throws ZeroCoefficient if the transformed
/// polynomial has a vanishing coefficient.
Witness transform_witness(const Witness& w, Involution which);

}  // namespace hyposign
