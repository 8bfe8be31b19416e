#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyposign/construct.hpp"
#include "hyposign/sign_pattern.hpp"
#include "hyposign/witness.hpp"

namespace hyposign {

class Catalog;

/// All order words compatible with sp's sign-change count c: the C(d, c)
/// words with exactly c P letters, in lexicographic order with N < P.
std::vector<OrderWord> enumerate_order_words(const SignPattern& sp);

struct SearchConfig {
  std::uint32_t budget = 200;     // random restarts per word
  std::uint32_t max_iters = 400;  // objective evaluations per restart
  std::uint64_t seed = 0;

  // Margins and bounds, as base-2 exponents.
  int min_gap_log2 = -20;        // smallest log-modulus gap
  int accept_margin_log2 = -30;  // numeric margin relative to max |coefficient|
  int denom_start_log2 = 16;     // first denominator bound for rationalization
  int denom_max_log2 = 64;       // last denominator bound

  bool operator==(const SearchConfig& other) const = default;
};

struct SearchOutcome {
  std::optional<Witness> witness;
  std::uint32_t restarts_used = 0;
};

/// Tries to realize (sp, word) by randomized feasibility search: moduli are
/// parametrized as exponentials of cumulative positive gaps (so they are
/// distinct and ordered by construction), signs are fixed by the word, and a
/// hinge penalty over violated coefficient-sign constraints is minimized by
/// random restarts plus per-coordinate geometric line search. A numeric
/// candidate is accepted only after each modulus is replaced by a bounded-
/// denominator rational approximation and every constraint re-verifies
/// exactly. The canonical word is delegated to build_canonical. A nullopt
/// outcome means the budget ran out; it is never a proof of non-realizability.
/// Throws InvalidWord when the word does not fit sp. Deterministic: the RNG
/// seed is derived from (config.seed, sp, word).
SearchOutcome search_realization(const SignPattern& sp, const OrderWord& word,
                                 const SearchConfig& config);

struct WordResult {
  OrderWord word;
  bool found = false;
  std::optional<Witness> witness;
  std::uint32_t restarts_used = 0;
};

struct RealizabilityReport {
  SignPattern sp;
  SearchConfig config;
  std::vector<WordResult> words;

  int found_count() const;
};

/// Attempts every order word of sp: the canonical one via build_canonical,
/// all others via search_realization. With jobs > 1 the per-word searches run
/// on a small thread pool; per-word RNG seeds make the report identical to a
/// serial run. Found witnesses are appended to `catalog` when given (after the
/// merge, single-threaded).
RealizabilityReport explore(const SignPattern& sp, const SearchConfig& config, unsigned jobs = 1,
                            Catalog* catalog = nullptr);

/// Seed source for two-block patterns S{A,B}: catalog lookups first (when a
/// catalog is given), then build_canonical plus search over the non-canonical
/// words, caching results back. For S{A,B} with A,B >= 2 at least one
/// non-canonical word is realizable, so the search is expected to succeed.
SeedFinder make_seed_finder(const SearchConfig& config, Catalog* catalog = nullptr);

struct AttemptRecord {
  OrderWord word;
  std::uint32_t restarts_used = 0;
  bool found = false;
};

/// Full canonicity decision. The status semantics:
///   CertifiedCanonical     — matched the static family table (never search);
///   CertifiedNonCanonical  — carries two verified witnesses with equal
///                            pattern and distinct words;
///   Inconclusive           — neither table rule nor any search hit within the
///                            budget; `attempts` records the budget spent.
struct CanonicityVerdict {
  CanonicityStatus status = CanonicityStatus::Inconclusive;
  std::string justification;
  std::optional<std::pair<Witness, Witness>> witnesses;
  std::vector<AttemptRecord> attempts;
};

CanonicityVerdict decide_canonicity(const SignPattern& sp, const SearchConfig& config,
                                    const SeedFinder& finder = {});

}  // namespace hyposign
