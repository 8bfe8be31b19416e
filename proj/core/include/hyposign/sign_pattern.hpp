#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hyposign {

enum class Sign : std::uint8_t { Plus, Minus };

inline Sign flipped(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
inline char to_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

/// Which textual representation a pattern string uses:
///  - First:  the raw sign string, e.g. "+--+"
///  - Second: block lengths, e.g. "S{1,2,1}"
///  - Third:  block lengths with maximal runs of 1s bracketed, e.g. "S{[1],2,[1]}"
enum class SpRep { First, Second, Third };

/// The sign sequence of the coefficients of a monic polynomial of degree d,
/// listed from the leading coefficient down to the constant term. Entry k
/// (0-based from the front) is the sign of the coefficient of x^(d-k); its
/// exponent is d-k. Always has length d+1 >= 2 and starts with '+'. No zero
/// entries are representable here (see PatternWithZeros for those).
class SignPattern {
 public:
  /// Validating constructor from a raw sign vector.
  static SignPattern from_signs(std::vector<Sign> signs);

  /// Builds a pattern from its block lengths (m_1,...,m_s): m_1 plus signs,
  /// then m_2 minus signs, alternating. All m_i >= 1.
  static SignPattern from_components(const std::vector<int>& components);

  /// Parses one of the three representations; see the repository README for
  /// the exact grammar. Throws ParseError.
  static SignPattern parse(std::string_view text, SpRep rep);

  /// Auto-detecting parse: '+'/'-' starts the first representation, anything
  /// else is treated as the braced block form (second/third).
  static SignPattern parse(std::string_view text);

  int degree() const { return static_cast<int>(signs_.size()) - 1; }
  int length() const { return static_cast<int>(signs_.size()); }
  const std::vector<Sign>& signs() const { return signs_; }
  Sign at_index(int k) const { return signs_[static_cast<std::size_t>(k)]; }
  Sign at_exponent(int e) const { return signs_[static_cast<std::size_t>(degree() - e)]; }

  /// Block lengths (m_1,...,m_s); sum = d+1, all >= 1.
  std::vector<int> components() const;

  std::string first_rep() const;
  std::string second_rep() const;
  std::string third_rep() const;

  bool operator==(const SignPattern& other) const = default;
  bool operator<(const SignPattern& other) const;

 private:
  explicit SignPattern(std::vector<Sign> signs) : signs_(std::move(signs)) {}
  std::vector<Sign> signs_;
};

enum class CpLetter : std::uint8_t { Preserve, Change };

inline char to_char(CpLetter l) { return l == CpLetter::Preserve ? 'p' : 'c'; }

/// Word over {p, c} of length d recording, for each adjacent pair of pattern
/// entries, whether the sign is preserved or changes. Bijective with sign
/// patterns of length d+1 (which always begin with '+').
class CpPattern {
 public:
  static CpPattern from_letters(std::vector<CpLetter> letters);
  static CpPattern parse(std::string_view text);

  int length() const { return static_cast<int>(letters_.size()); }
  const std::vector<CpLetter>& letters() const { return letters_; }
  CpLetter at(int k) const { return letters_[static_cast<std::size_t>(k)]; }

  /// Reconstructs the unique sign pattern with this word and leading '+'.
  SignPattern to_sign_pattern() const;

  std::string text() const;

  bool operator==(const CpPattern& other) const = default;

 private:
  explicit CpPattern(std::vector<CpLetter> letters) : letters_(std::move(letters)) {}
  std::vector<CpLetter> letters_;
};

CpPattern cpp_of(const SignPattern& sp);

enum class RootSign : std::uint8_t { N, P };

inline char to_char(RootSign s) { return s == RootSign::N ? 'N' : 'P'; }
inline RootSign flipped(RootSign s) { return s == RootSign::N ? RootSign::P : RootSign::N; }

/// Assignment of root signs to the sorted root moduli of a degree-d polynomial:
/// entry i says whether the root with (i+1)-th smallest modulus is positive (P)
/// or negative (N).
class OrderWord {
 public:
  static OrderWord from_letters(std::vector<RootSign> letters);
  static OrderWord parse(std::string_view text);

  int length() const { return static_cast<int>(letters_.size()); }
  const std::vector<RootSign>& letters() const { return letters_; }
  RootSign at(int k) const { return letters_[static_cast<std::size_t>(k)]; }

  int count_p() const;
  int count_n() const { return length() - count_p(); }

  OrderWord reversed() const;
  OrderWord pn_swapped() const;

  /// For words with exactly two P entries: the number of N entries above both
  /// P slots (m*), between them (n*), and below both (q*). Empty otherwise.
  struct TwoPositiveStats {
    int above = 0;    // m*
    int between = 0;  // n*
    int below = 0;    // q*
  };
  std::optional<TwoPositiveStats> two_positive_stats() const;

  std::string text() const;

  bool operator==(const OrderWord& other) const = default;
  bool operator<(const OrderWord& other) const { return letters_ < other.letters_; }

 private:
  explicit OrderWord(std::vector<RootSign> letters) : letters_(std::move(letters)) {}
  std::vector<RootSign> letters_;
};

/// The canonical order of root moduli for a sign pattern: the cp-word read
/// from the back with p -> N and c -> P.
OrderWord canonical_order(const SignPattern& sp);

struct Counts {
  int changes = 0;        // c = s-1
  int preservations = 0;  // p = d-s+1
};

Counts counts(const SignPattern& sp);

/// Involution induced by x -> -x (signs at odd exponents flip, then the
/// leading sign is normalized back to '+' by a global flip when needed).
SignPattern iota_m(const SignPattern& sp);

/// Involution induced by coefficient reversal (roots -> reciprocals), with the
/// same leading-sign normalization.
SignPattern iota_r(const SignPattern& sp);

/// The composition of the two; they commute.
SignPattern iota_mr(const SignPattern& sp);

/// {sp, iota_m(sp), iota_r(sp), iota_mr(sp)} sorted and deduplicated.
/// Contains either two or four distinct patterns.
std::vector<SignPattern> orbit(const SignPattern& sp);

/// True iff all odd-exponent signs agree or all even-exponent signs agree.
/// Positions are monomial exponents, not vector indices.
bool is_type1(const SignPattern& sp);

/// True iff the block lengths have no two consecutive entries > 1 and no
/// interior entry equal to 2 (the first and last block may be 2).
bool is_type2(const SignPattern& sp);

enum class CanonicityStatus : std::uint8_t {
  CertifiedCanonical,
  CertifiedNonCanonical,
  Inconclusive,
};

std::string_view to_string(CanonicityStatus status);

/// Result of the static, table-driven classification. A canonical verdict is
/// only ever produced by this table (searches can refute canonicity but never
/// certify it); `rule` names the matched family and, when the match went
/// through an orbit member, which one.
struct StaticClassification {
  CanonicityStatus status = CanonicityStatus::Inconclusive;
  std::string rule;
};

/// Classifies sp against the known canonical families (type 1 patterns;
/// S{m1,1}; S{1,m2}; S{m1,1,m3}; S{1,m2,1} with m2 >= 3; S{1,d-2,1,1} with
/// d >= 5) and the known non-canonical ones (any pattern failing type 2,
/// which covers S{m1,m2} with m1,m2 >= 2 and S{1,2,1}). Family membership is
/// checked across the whole orbit since orbit members are canonical or not
/// together. Everything else is Inconclusive.
StaticClassification classify_static(const SignPattern& sp);

}  // namespace hyposign
