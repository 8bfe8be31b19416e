#pragma once

#include <functional>
#include <optional>
#include <utility>

#include "hyposign/sign_pattern.hpp"
#include "hyposign/witness.hpp"

namespace hyposign {

/// Records the strictly decreasing chain of scale factors accepted by the
/// verify-and-shrink loops. Each candidate starts at a quarter of the relevant
/// modulus bound (clamped so the chain stays strictly decreasing) and is
/// multiplied by `shrink` until its exact side conditions hold; 64 shrinks
/// without success indicate a bug and throw DeformationBudgetExhausted.
class EpsilonChain {
 public:
  explicit EpsilonChain(Rational shrink = Rational(1, 2));

  /// Largest start * shrink^k (k <= 64) accepted by `ok`; records it.
  Rational select(Rational start, const std::function<bool(const Rational&)>& ok);

  const std::vector<Rational>& values() const { return values_; }

 private:
  Rational shrink_;
  std::vector<Rational> values_;
};

enum class ConcatKind : std::uint8_t { Preserve, Change };

inline CpLetter to_letter(ConcatKind k) {
  return k == ConcatKind::Preserve ? CpLetter::Preserve : CpLetter::Change;
}

/// Adjoins a root -eps (Preserve) or +eps (Change) with eps chosen so that,
/// verified exactly: the existing coefficient signs are unchanged, eps is
/// smaller than every current root modulus, and the resulting pattern/word are
/// the expected one-letter extensions (pattern grows at the rear, order word
/// gains an N/P at the smallest-modulus slot).
Witness concat_back(const Witness& w, ConcatKind kind, EpsilonChain* chain = nullptr);

/// Adjoins a root -1/eps (Preserve) or +1/eps (Change), re-monicized, with eps
/// chosen so that the cp-word gains the matching letter at its front and the
/// new root modulus exceeds every current one. For Change the trailing signs
/// all flip under re-monicization; the pattern-level statement is exactly the
/// cp-word prepend.
Witness concat_front(const Witness& w, ConcatKind kind, EpsilonChain* chain = nullptr);

/// Realizes sp with the canonical order of root moduli by d back-concatenation
/// steps starting from x-1 or x+1.
Witness build_canonical(const SignPattern& sp);

/// Produces a seed pair of witnesses for a two-block pattern S{A,B}
/// (A, B >= 2) with equal pattern and distinct order words, or nullopt if it
/// cannot. Wired up by the realize layer (search + catalog cache).
using SeedFinder =
    std::function<std::optional<std::pair<Witness, Witness>>(const SignPattern& two_block)>;

/// The two fixed cubics (x+1)(x-3/2)(x-8/5) and (x+1)(x-3/2)(x-3/5): equal
/// pattern S{1,2,1}, order words NPP and PNP.
std::pair<Witness, Witness> example_cubic_pair();

/// All three known realizations of S{1,2,1} (order words NPP, PNP, PPN).
std::vector<Witness> example_cubics();

/// For a pattern that fails type 2, builds two witnesses with pattern sp and
/// distinct order words: a seed pair realizing the violating sub-pattern
/// (S{A,B} via `finder`, or S{1,2,1} via the fixed cubics) is extended to sp
/// by back- and front-concatenation, which preserves the seed roots' relative
/// order. Throws NotApplicable when sp is type 2, SeedUnavailable when the
/// S{A,B} seed is needed but no finder is given or it fails.
std::pair<Witness, Witness> build_noncanonical_pair(const SignPattern& sp,
                                                    const SeedFinder& finder = {});

enum class Side : std::uint8_t { None, Left, Right };

std::string_view to_string(Side side);
Side side_from_string(std::string_view text);

/// Plan for realizing a three-block pattern S{m,n,q} (two sign changes) with a
/// prescribed order of root moduli. The case split is forced by (r, delta):
///   part 1: delta - r odd            -> n = r,   m = tau1 + (delta-r+1)/2
///   part 2: delta - r even, delta>r^2 -> n = r+1, m = tau1 + (delta-r)/2
///   part 3: delta = r^2 (side required):
///     Left:  S{tau1 + r(r-1)/2 + 1, r, tau2 + r(r-1)/2}
///     Right: S{tau1 + r(r-1)/2, r, tau2 + r(r-1)/2 + 1}
/// and d = delta + tau1 + tau2 throughout.
struct ThreeBlockPlan {
  int r = 2;
  int delta = 5;
  int tau1 = 0;
  int tau2 = 0;
  Side side = Side::None;

  /// Validates the hypotheses; throws HypothesisViolation.
  static ThreeBlockPlan make(int r, int delta, int tau1, int tau2, Side side = Side::None);

  int part() const;  // 1, 2 or 3
  int degree() const { return delta + tau1 + tau2; }
  SignPattern pattern() const;

  /// Admissibility bounds on the target word: above >= tau1 (+1 for Left),
  /// below >= tau2 (+1 for Right).
  int min_above() const { return tau1 + (side == Side::Left ? 1 : 0); }
  int min_below() const { return tau2 + (side == Side::Right ? 1 : 0); }
};

/// Realizes plan.pattern() with order word exactly `target`. The target must
/// have two P letters and satisfy the plan's admissibility bounds; otherwise
/// HypothesisViolation. The construction deforms (x-1)^2 (x+1)^ell — directly
/// for parts 1-2 (ell = delta-2), times a factor (x + 1 +- eps) for part 3
/// (ell = r^2-3) — into distinct rational roots ordered per the target, then
/// applies tau1 front and tau2 back preserve-concatenations.
Witness realize_three_block(const ThreeBlockPlan& plan, const OrderWord& target);

/// All order words admissible for the plan, in lexicographic order (N < P).
std::vector<OrderWord> admissible_three_block_words(const ThreeBlockPlan& plan);

}  // namespace hyposign
