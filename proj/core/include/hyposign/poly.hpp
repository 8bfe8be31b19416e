#pragma once

#include <string>
#include <variant>
#include <vector>

#include "hyposign/numeric.hpp"
#include "hyposign/sign_pattern.hpp"

namespace hyposign {

/// Dense polynomial with exact rational coefficients, index = exponent.
/// The leading coefficient is nonzero; most operations here additionally
/// require (or produce) monic polynomials.
class RationalPoly {
 public:
  static RationalPoly from_coeffs(std::vector<Rational> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& at(int exponent) const { return coeffs_[static_cast<std::size_t>(exponent)]; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_monic() const { return coeffs_.back() == 1; }

  RationalPoly operator*(const RationalPoly& other) const;

  /// Human-oriented rendering like "x^3 - 21/10*x^2 - 7/10*x + 12/5".
  std::string pretty() const;

  bool operator==(const RationalPoly& other) const = default;

 private:
  explicit RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}
  std::vector<Rational> coeffs_;
};

/// Multiset of nonzero rational roots, with multiplicity; the source of truth
/// for every witness (the polynomial is always derived from it by expansion,
/// never the other way around).
struct RootMultiset {
  std::vector<Rational> roots;
};

/// Exact monic expansion of prod (x - root). Throws on an empty multiset or a
/// zero root.
RationalPoly poly_from_roots(const RootMultiset& roots);

enum class TriSign : std::uint8_t { Plus, Minus, Zero };

inline char to_char(TriSign s) {
  return s == TriSign::Plus ? '+' : (s == TriSign::Minus ? '-' : '0');
}

/// Coefficient sign sequence of a monic polynomial that has at least one zero
/// coefficient. Entry k corresponds to exponent d-k, matching SignPattern.
class PatternWithZeros {
 public:
  static PatternWithZeros from_entries(std::vector<TriSign> entries);

  int degree() const { return static_cast<int>(entries_.size()) - 1; }
  const std::vector<TriSign>& entries() const { return entries_; }
  TriSign at_exponent(int e) const { return entries_[static_cast<std::size_t>(degree() - e)]; }
  std::vector<int> zero_exponents() const;
  std::string text() const;  // e.g. "+0-0+"

  bool operator==(const PatternWithZeros& other) const = default;

 private:
  explicit PatternWithZeros(std::vector<TriSign> entries) : entries_(std::move(entries)) {}
  std::vector<TriSign> entries_;
};

using CoeffPattern = std::variant<SignPattern, PatternWithZeros>;

/// Sign pattern of a monic polynomial of degree >= 1; if any coefficient
/// vanishes the zero positions are reported instead of being dropped.
CoeffPattern sign_pattern_of(const RationalPoly& poly);

/// As above but throws ZeroCoefficient when a coefficient vanishes.
SignPattern sign_pattern_strict(const RationalPoly& poly);

std::string coeff_pattern_text(const CoeffPattern& pattern);

/// Order word of a root multiset: sort the moduli ascending (exact comparison)
/// and record each root's sign. Throws DistinctModuliViolation on a tie.
OrderWord order_word_of(const RootMultiset& roots);

/// x^d P(1/x) / P(0): reverses the coefficients and re-monicizes. Roots map to
/// their reciprocals. Requires a nonzero constant term.
RationalPoly reverse_poly(const RationalPoly& poly);

/// (-1)^d P(-x): flips the signs at odd exponents; stays monic. Roots map to
/// their opposites.
RationalPoly negate_var(const RationalPoly& poly);

/// Formal derivative (not re-monicized). Requires degree >= 1.
RationalPoly derivative(const RationalPoly& poly);

/// The family (x-1)^2 (x+1)^ell, ell >= 2, expanded by convolution of the
/// factors. Its coefficient signs form a symmetric three-block pattern that
/// either has no zero coefficient or exactly two.
RationalPoly cluster_family(int ell);

/// Same polynomial via the closed form c_j = C(ell,j) - 2 C(ell,j-1) + C(ell,j-2);
/// an independent route used to cross-check cluster_family.
RationalPoly cluster_family_binomial(int ell);

/// Predicted sign pattern of cluster_family(ell), from the closed form alone.
/// With r = floor(sqrt(ell+2)):
///   - ell = r^2 - 2: two zero coefficients at exponents (ell+2 -+ r)/2,
///     blocks (r(r-1)/2, 0, r-1, 0, r(r-1)/2);
///   - ell - r odd:  S{(ell-r+3)/2, r, (ell-r+3)/2};
///   - ell - r even: S{(ell-r+2)/2, r+1, (ell-r+2)/2}.
CoeffPattern cluster_family_pattern(int ell);

}  // namespace hyposign
