#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hyposign/construct.hpp"
#include "hyposign/realize.hpp"
#include "hyposign/sign_pattern.hpp"

namespace hyposign {

/// Verification workloads shared by `hyposign verify` and the acceptance
/// binary. Every check is exact; a failing check names its witness.

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;

  bool pass() const;
  int passed() const;
  int failed() const;
};

/// All sign patterns of the given degree (2^degree of them, leading '+').
std::vector<SignPattern> enumerate_patterns(int degree);

/// For each ell in [2, lmax]: the convolution and binomial expansions of
/// (x-1)^2 (x+1)^ell must agree coefficient-by-coefficient, and their sign
/// pattern must equal the closed-form prediction, including the two zero
/// positions when ell = r^2 - 2. One check per ell.
SuiteResult suite_cluster_family(int lmax);

/// Realizes every admissible order word for the given three-block plan and
/// re-verifies each witness. One check per word.
SuiteResult suite_three_block(const ThreeBlockPlan& plan);

/// Algebraic laws, exhaustive over all patterns of length <= maxlen, plus
/// randomized root-level transform checks: representation round-trips, the
/// cp-word bijection, involution/commutation laws, canonical-order transforms,
/// type-set inclusion and invariance, orbit cardinality and verdict
/// consistency, and transform_witness commutation. One check per law.
SuiteResult suite_involutions(int maxlen, int witness_cases = 500, std::uint64_t seed = 2026);

/// build_canonical over every pattern of degree <= maxd: the witness must
/// verify and its order word must equal canonical_order. One check per degree.
SuiteResult suite_canonical_builder(int maxd);

}  // namespace hyposign
