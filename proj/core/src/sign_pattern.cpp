#include "hyposign/sign_pattern.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "hyposign/errors.hpp"

namespace hyposign {

namespace {

void validate_signs(const std::vector<Sign>& signs) {
  if (signs.size() < 2) throw ParseError("sign pattern needs length >= 2");
  if (signs.front() != Sign::Plus) throw ParseError("sign pattern must start with '+'");
}

struct Item {
  int value = 0;
  bool bracketed = false;
};

// Parses the braced block form: optional "Σ"/"S", optional "_", then
// "{item,item,...}" where item is an integer or "[integer]".
std::vector<Item> parse_braced(std::string_view text) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  // UTF-8 capital sigma is 0xCE 0xA3.
  if (i + 1 < text.size() && static_cast<unsigned char>(text[i]) == 0xCE &&
      static_cast<unsigned char>(text[i + 1]) == 0xA3) {
    i += 2;
  } else if (i < text.size() && (text[i] == 'S' || text[i] == 's')) {
    ++i;
  }
  if (i < text.size() && text[i] == '_') ++i;
  skip_ws();
  if (i >= text.size() || text[i] != '{') throw ParseError("expected '{' in pattern '" + std::string(text) + "'");
  ++i;
  std::vector<Item> items;
  while (true) {
    skip_ws();
    if (i >= text.size()) throw ParseError("unterminated pattern '" + std::string(text) + "'");
    Item item;
    if (text[i] == '[') {
      item.bracketed = true;
      ++i;
    }
    skip_ws();
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) throw ParseError("expected integer in pattern '" + std::string(text) + "'");
    item.value = std::stoi(std::string(text.substr(start, i - start)));
    if (item.value < 1) throw ParseError("zero-length element in pattern '" + std::string(text) + "'");
    skip_ws();
    if (item.bracketed) {
      if (i >= text.size() || text[i] != ']') throw ParseError("expected ']' in pattern '" + std::string(text) + "'");
      ++i;
      skip_ws();
    }
    items.push_back(item);
    if (i >= text.size()) throw ParseError("unterminated pattern '" + std::string(text) + "'");
    if (text[i] == ',') {
      ++i;
      continue;
    }
    if (text[i] == '}') {
      ++i;
      break;
    }
    throw ParseError("unexpected character '" + std::string(1, text[i]) + "' in pattern");
  }
  skip_ws();
  if (i != text.size()) throw ParseError("trailing characters in pattern '" + std::string(text) + "'");
  if (items.empty()) throw ParseError("empty pattern");
  return items;
}

std::vector<int> items_to_components(const std::vector<Item>& items) {
  std::vector<int> components;
  for (const Item& item : items) {
    if (item.bracketed) {
      components.insert(components.end(), static_cast<std::size_t>(item.value), 1);
    } else {
      components.push_back(item.value);
    }
  }
  return components;
}

}  // namespace

SignPattern SignPattern::from_signs(std::vector<Sign> signs) {
  validate_signs(signs);
  return SignPattern(std::move(signs));
}

SignPattern SignPattern::from_components(const std::vector<int>& components) {
  if (components.empty()) throw ParseError("empty component list");
  std::vector<Sign> signs;
  Sign current = Sign::Plus;
  for (int m : components) {
    if (m < 1) throw ParseError("component < 1");
    signs.insert(signs.end(), static_cast<std::size_t>(m), current);
    current = flipped(current);
  }
  validate_signs(signs);
  return SignPattern(std::move(signs));
}

SignPattern SignPattern::parse(std::string_view text, SpRep rep) {
  if (rep == SpRep::First) {
    std::vector<Sign> signs;
    for (char ch : text) {
      if (ch == '+') {
        signs.push_back(Sign::Plus);
      } else if (ch == '-') {
        signs.push_back(Sign::Minus);
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        continue;
      } else {
        throw ParseError("unexpected character '" + std::string(1, ch) + "' in sign string");
      }
    }
    return from_signs(std::move(signs));
  }
  const std::vector<Item> items = parse_braced(text);
  if (rep == SpRep::Second) {
    for (const Item& item : items) {
      if (item.bracketed) throw ParseError("bracketed run in second-representation input");
    }
  }
  return from_components(items_to_components(items));
}

SignPattern SignPattern::parse(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) return parse(text, SpRep::First);
  return parse(text, SpRep::Third);
}

std::vector<int> SignPattern::components() const {
  std::vector<int> result;
  Sign current = signs_.front();
  int run = 0;
  for (Sign s : signs_) {
    if (s == current) {
      ++run;
    } else {
      result.push_back(run);
      current = s;
      run = 1;
    }
  }
  result.push_back(run);
  return result;
}

std::string SignPattern::first_rep() const {
  std::string out;
  out.reserve(signs_.size());
  for (Sign s : signs_) out.push_back(to_char(s));
  return out;
}

std::string SignPattern::second_rep() const {
  std::ostringstream out;
  out << "S{";
  const std::vector<int> comps = components();
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (i != 0) out << ',';
    out << comps[i];
  }
  out << '}';
  return out.str();
}

std::string SignPattern::third_rep() const {
  std::ostringstream out;
  out << "S{";
  const std::vector<int> comps = components();
  bool first = true;
  std::size_t i = 0;
  while (i < comps.size()) {
    if (!first) out << ',';
    first = false;
    if (comps[i] == 1) {
      std::size_t j = i;
      while (j < comps.size() && comps[j] == 1) ++j;
      out << '[' << (j - i) << ']';
      i = j;
    } else {
      out << comps[i];
      ++i;
    }
  }
  out << '}';
  return out.str();
}

bool SignPattern::operator<(const SignPattern& other) const {
  if (signs_.size() != other.signs_.size()) return signs_.size() < other.signs_.size();
  return signs_ < other.signs_;
}

CpPattern CpPattern::from_letters(std::vector<CpLetter> letters) {
  if (letters.empty()) throw ParseError("cp-word must be nonempty");
  return CpPattern(std::move(letters));
}

CpPattern CpPattern::parse(std::string_view text) {
  std::vector<CpLetter> letters;
  for (char ch : text) {
    if (ch == 'p') {
      letters.push_back(CpLetter::Preserve);
    } else if (ch == 'c') {
      letters.push_back(CpLetter::Change);
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      throw ParseError("unexpected character '" + std::string(1, ch) + "' in cp-word");
    }
  }
  return from_letters(std::move(letters));
}

SignPattern CpPattern::to_sign_pattern() const {
  std::vector<Sign> signs;
  signs.reserve(letters_.size() + 1);
  signs.push_back(Sign::Plus);
  for (CpLetter l : letters_) {
    signs.push_back(l == CpLetter::Preserve ? signs.back() : flipped(signs.back()));
  }
  return SignPattern::from_signs(std::move(signs));
}

std::string CpPattern::text() const {
  std::string out;
  out.reserve(letters_.size());
  for (CpLetter l : letters_) out.push_back(to_char(l));
  return out;
}

CpPattern cpp_of(const SignPattern& sp) {
  std::vector<CpLetter> letters;
  letters.reserve(static_cast<std::size_t>(sp.degree()));
  for (int k = 0; k + 1 < sp.length(); ++k) {
    letters.push_back(sp.at_index(k) == sp.at_index(k + 1) ? CpLetter::Preserve : CpLetter::Change);
  }
  return CpPattern::from_letters(std::move(letters));
}

OrderWord OrderWord::from_letters(std::vector<RootSign> letters) {
  if (letters.empty()) throw ParseError("order word must be nonempty");
  return OrderWord(std::move(letters));
}

OrderWord OrderWord::parse(std::string_view text) {
  std::vector<RootSign> letters;
  for (char ch : text) {
    if (ch == 'N') {
      letters.push_back(RootSign::N);
    } else if (ch == 'P') {
      letters.push_back(RootSign::P);
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      throw ParseError("unexpected character '" + std::string(1, ch) + "' in order word");
    }
  }
  return from_letters(std::move(letters));
}

int OrderWord::count_p() const {
  return static_cast<int>(std::count(letters_.begin(), letters_.end(), RootSign::P));
}

OrderWord OrderWord::reversed() const {
  std::vector<RootSign> letters(letters_.rbegin(), letters_.rend());
  return OrderWord(std::move(letters));
}

OrderWord OrderWord::pn_swapped() const {
  std::vector<RootSign> letters;
  letters.reserve(letters_.size());
  for (RootSign s : letters_) letters.push_back(flipped(s));
  return OrderWord(std::move(letters));
}

std::optional<OrderWord::TwoPositiveStats> OrderWord::two_positive_stats() const {
  if (count_p() != 2) return std::nullopt;
  int lo = -1, hi = -1;
  for (int k = 0; k < length(); ++k) {
    if (letters_[static_cast<std::size_t>(k)] == RootSign::P) {
      if (lo < 0) {
        lo = k;
      } else {
        hi = k;
      }
    }
  }
  TwoPositiveStats stats;
  stats.below = lo;
  stats.between = hi - lo - 1;
  stats.above = length() - 1 - hi;
  return stats;
}

std::string OrderWord::text() const {
  std::string out;
  out.reserve(letters_.size());
  for (RootSign s : letters_) out.push_back(to_char(s));
  return out;
}

OrderWord canonical_order(const SignPattern& sp) {
  const CpPattern word = cpp_of(sp);
  std::vector<RootSign> letters;
  letters.reserve(static_cast<std::size_t>(word.length()));
  for (int k = word.length() - 1; k >= 0; --k) {
    letters.push_back(word.at(k) == CpLetter::Preserve ? RootSign::N : RootSign::P);
  }
  return OrderWord::from_letters(std::move(letters));
}

Counts counts(const SignPattern& sp) {
  Counts result;
  const CpPattern word = cpp_of(sp);
  for (const CpLetter l : word.letters()) {
    if (l == CpLetter::Change) {
      ++result.changes;
    } else {
      ++result.preservations;
    }
  }
  return result;
}

namespace {

SignPattern normalized_leading_plus(std::vector<Sign> signs) {
  if (signs.front() != Sign::Plus) {
    for (Sign& s : signs) s = flipped(s);
  }
  return SignPattern::from_signs(std::move(signs));
}

}  // namespace

SignPattern iota_m(const SignPattern& sp) {
  std::vector<Sign> signs = sp.signs();
  const int d = sp.degree();
  for (int k = 0; k <= d; ++k) {
    if ((d - k) % 2 != 0) signs[static_cast<std::size_t>(k)] = flipped(signs[static_cast<std::size_t>(k)]);
  }
  return normalized_leading_plus(std::move(signs));
}

SignPattern iota_r(const SignPattern& sp) {
  std::vector<Sign> signs(sp.signs().rbegin(), sp.signs().rend());
  return normalized_leading_plus(std::move(signs));
}

SignPattern iota_mr(const SignPattern& sp) { return iota_m(iota_r(sp)); }

std::vector<SignPattern> orbit(const SignPattern& sp) {
  std::vector<SignPattern> members{sp, iota_m(sp), iota_r(sp), iota_mr(sp)};
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return members;
}

bool is_type1(const SignPattern& sp) {
  const int d = sp.degree();
  bool odd_equal = true, even_equal = true;
  std::optional<Sign> odd_sign, even_sign;
  for (int e = 0; e <= d; ++e) {
    const Sign s = sp.at_exponent(e);
    if (e % 2 == 0) {
      if (!even_sign) {
        even_sign = s;
      } else if (*even_sign != s) {
        even_equal = false;
      }
    } else {
      if (!odd_sign) {
        odd_sign = s;
      } else if (*odd_sign != s) {
        odd_equal = false;
      }
    }
  }
  return odd_equal || even_equal;
}

bool is_type2(const SignPattern& sp) {
  const std::vector<int> m = sp.components();
  const int s = static_cast<int>(m.size());
  for (int i = 0; i + 1 < s; ++i) {
    if (m[static_cast<std::size_t>(i)] > 1 && m[static_cast<std::size_t>(i + 1)] > 1) return false;
  }
  for (int i = 1; i + 1 < s; ++i) {
    if (m[static_cast<std::size_t>(i)] == 2) return false;
  }
  return true;
}

std::string_view to_string(CanonicityStatus status) {
  switch (status) {
    case CanonicityStatus::CertifiedCanonical:
      return "certified-canonical";
    case CanonicityStatus::CertifiedNonCanonical:
      return "certified-non-canonical";
    case CanonicityStatus::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

namespace {

// Canonical-family match for a single pattern, not considering the orbit.
std::optional<std::string> canonical_family_rule(const SignPattern& sp) {
  if (is_type1(sp)) return "type 1";
  const std::vector<int> m = sp.components();
  const int s = static_cast<int>(m.size());
  const int d = sp.degree();
  if (s == 2 && m[1] == 1) return "S{m1,1}";
  if (s == 2 && m[0] == 1) return "S{1,m2}";
  if (s == 3 && m[1] == 1) return "S{m1,1,m3}";
  if (s == 3 && m[0] == 1 && m[2] == 1 && m[1] >= 3) return "S{1,m2,1}, m2>=3";
  if (s == 4 && d >= 5 && m[0] == 1 && m[1] == d - 2 && m[2] == 1 && m[3] == 1) return "S{[1],d-2,[2]}";
  return std::nullopt;
}

std::optional<std::string> noncanonical_family_rule(const SignPattern& sp) {
  const std::vector<int> m = sp.components();
  const int s = static_cast<int>(m.size());
  if (s == 2 && m[0] >= 2 && m[1] >= 2) return "S{m1,m2}, m1,m2>=2";
  if (s == 3 && m[0] == 1 && m[1] == 2 && m[2] == 1) return "S{1,2,1}";
  return std::nullopt;
}

}  // namespace

StaticClassification classify_static(const SignPattern& sp) {
  std::vector<SignPattern> members{sp};
  for (SignPattern& member : orbit(sp)) {
    if (!(member == sp)) members.push_back(std::move(member));
  }
  for (const SignPattern& member : members) {
    if (auto rule = canonical_family_rule(member)) {
      std::string note = *rule;
      if (!(member == sp)) note += " (via orbit member " + member.second_rep() + ")";
      return {CanonicityStatus::CertifiedCanonical, std::move(note)};
    }
  }
  if (!is_type2(sp)) {
    std::string note = "not type 2";
    for (const SignPattern& member : members) {
      if (auto rule = noncanonical_family_rule(member)) {
        note = *rule;
        if (!(member == sp)) note += " (via orbit member " + member.second_rep() + ")";
        break;
      }
    }
    return {CanonicityStatus::CertifiedNonCanonical, std::move(note)};
  }
  return {CanonicityStatus::Inconclusive, "no family rule applies"};
}

}  // namespace hyposign
