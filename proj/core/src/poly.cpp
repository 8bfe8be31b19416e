#include "hyposign/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hyposign/errors.hpp"

namespace hyposign {

RationalPoly RationalPoly::from_coeffs(std::vector<Rational> coeffs) {
  if (coeffs.empty()) throw Error("polynomial needs at least one coefficient");
  if (coeffs.back() == 0) throw Error("leading coefficient must be nonzero");
  return RationalPoly(std::move(coeffs));
}

RationalPoly RationalPoly::operator*(const RationalPoly& other) const {
  std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  return RationalPoly::from_coeffs(std::move(out));
}

std::string RationalPoly::pretty() const {
  std::ostringstream out;
  bool first = true;
  for (int e = degree(); e >= 0; --e) {
    const Rational& c = at(e);
    if (c == 0) continue;
    const bool negative = c < 0;
    Rational mag = abs(c);
    if (first) {
      if (negative) out << '-';
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    const bool unit = (mag == 1);
    if (!unit || e == 0) {
      std::string text = rational_to_string(mag);
      if (mag.get_den() == 1) text = mag.get_num().get_str();
      out << text;
    }
    if (e > 0) {
      if (!unit) out << '*';
      out << 'x';
      if (e > 1) out << '^' << e;
    }
  }
  if (first) out << '0';
  return out.str();
}

RationalPoly poly_from_roots(const RootMultiset& roots) {
  if (roots.roots.empty()) throw Error("empty root multiset");
  // Coefficients kept in ascending exponent order throughout.
  std::vector<Rational> coeffs{Rational(1)};
  for (const Rational& root : roots.roots) {
    if (root == 0) throw Error("zero root not allowed");
    // Multiply by (x - root) in place.
    coeffs.push_back(Rational(0));
    for (std::size_t j = coeffs.size() - 1; j > 0; --j) {
      coeffs[j] = coeffs[j - 1] - root * coeffs[j];
    }
    coeffs[0] *= -root;
  }
  return RationalPoly::from_coeffs(std::move(coeffs));
}

PatternWithZeros PatternWithZeros::from_entries(std::vector<TriSign> entries) {
  if (entries.size() < 2) throw Error("pattern needs length >= 2");
  if (entries.front() != TriSign::Plus) throw Error("pattern must start with '+'");
  return PatternWithZeros(std::move(entries));
}

std::vector<int> PatternWithZeros::zero_exponents() const {
  std::vector<int> out;
  const int d = degree();
  for (int k = 0; k <= d; ++k) {
    if (entries_[static_cast<std::size_t>(k)] == TriSign::Zero) out.push_back(d - k);
  }
  return out;
}

std::string PatternWithZeros::text() const {
  std::string out;
  out.reserve(entries_.size());
  for (TriSign s : entries_) out.push_back(to_char(s));
  return out;
}

CoeffPattern sign_pattern_of(const RationalPoly& poly) {
  if (poly.degree() < 1) throw Error("sign pattern needs degree >= 1");
  if (!poly.is_monic()) throw Error("sign pattern requires a monic polynomial");
  bool has_zero = false;
  std::vector<TriSign> entries;
  entries.reserve(static_cast<std::size_t>(poly.degree()) + 1);
  for (int e = poly.degree(); e >= 0; --e) {
    const int s = sgn(poly.at(e));
    if (s > 0) {
      entries.push_back(TriSign::Plus);
    } else if (s < 0) {
      entries.push_back(TriSign::Minus);
    } else {
      entries.push_back(TriSign::Zero);
      has_zero = true;
    }
  }
  if (has_zero) return PatternWithZeros::from_entries(std::move(entries));
  std::vector<Sign> signs;
  signs.reserve(entries.size());
  for (TriSign s : entries) signs.push_back(s == TriSign::Plus ? Sign::Plus : Sign::Minus);
  return SignPattern::from_signs(std::move(signs));
}

SignPattern sign_pattern_strict(const RationalPoly& poly) {
  CoeffPattern pattern = sign_pattern_of(poly);
  if (const auto* with_zeros = std::get_if<PatternWithZeros>(&pattern)) {
    throw ZeroCoefficient("coefficient vanishes at exponent " +
                          std::to_string(with_zeros->zero_exponents().front()));
  }
  return std::get<SignPattern>(std::move(pattern));
}

std::string coeff_pattern_text(const CoeffPattern& pattern) {
  if (const auto* sp = std::get_if<SignPattern>(&pattern)) return sp->first_rep();
  return std::get<PatternWithZeros>(pattern).text();
}

OrderWord order_word_of(const RootMultiset& roots) {
  std::vector<std::size_t> order(roots.roots.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return compare_abs(roots.roots[a], roots.roots[b]) < 0;
  });
  std::vector<RootSign> letters;
  letters.reserve(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i + 1 < order.size() &&
        compare_abs(roots.roots[order[i]], roots.roots[order[i + 1]]) == 0) {
      throw DistinctModuliViolation("two roots share modulus " +
                                    rational_to_string(abs(roots.roots[order[i]])));
    }
    letters.push_back(roots.roots[order[i]] > 0 ? RootSign::P : RootSign::N);
  }
  return OrderWord::from_letters(std::move(letters));
}

RationalPoly reverse_poly(const RationalPoly& poly) {
  if (poly.at(0) == 0) throw Error("reverse of a polynomial with zero constant term");
  std::vector<Rational> coeffs(poly.coeffs().rbegin(), poly.coeffs().rend());
  const Rational lead = coeffs.back();
  for (Rational& c : coeffs) c /= lead;
  return RationalPoly::from_coeffs(std::move(coeffs));
}

RationalPoly negate_var(const RationalPoly& poly) {
  std::vector<Rational> coeffs = poly.coeffs();
  const int d = poly.degree();
  for (int e = 0; e <= d; ++e) {
    if ((d - e) % 2 != 0) coeffs[static_cast<std::size_t>(e)] = -coeffs[static_cast<std::size_t>(e)];
  }
  return RationalPoly::from_coeffs(std::move(coeffs));
}

RationalPoly derivative(const RationalPoly& poly) {
  if (poly.degree() < 1) throw Error("derivative needs degree >= 1");
  std::vector<Rational> coeffs;
  coeffs.reserve(static_cast<std::size_t>(poly.degree()));
  for (int e = 1; e <= poly.degree(); ++e) {
    coeffs.push_back(poly.at(e) * e);
  }
  return RationalPoly::from_coeffs(std::move(coeffs));
}

RationalPoly cluster_family(int ell) {
  if (ell < 2) throw Error("cluster_family needs ell >= 2");
  std::vector<Rational> power{Rational(1)};
  for (int i = 0; i < ell; ++i) {
    power.push_back(Rational(0));
    for (std::size_t j = power.size() - 1; j > 0; --j) {
      power[j] = power[j - 1] + power[j];
    }
  }
  const RationalPoly plus_part = RationalPoly::from_coeffs(std::move(power));
  const RationalPoly square = RationalPoly::from_coeffs({Rational(1), Rational(-2), Rational(1)});
  return square * plus_part;
}

RationalPoly cluster_family_binomial(int ell) {
  if (ell < 2) throw Error("cluster_family_binomial needs ell >= 2");
  // Row C(ell, 0..ell) by the multiplicative recurrence, then the stencil
  // c_j = C(ell,j) - 2 C(ell,j-1) + C(ell,j-2) with out-of-range terms = 0.
  std::vector<BigInt> row(static_cast<std::size_t>(ell) + 1);
  row[0] = 1;
  for (int j = 1; j <= ell; ++j) {
    row[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j - 1)] * (ell - j + 1);
    mpz_divexact_ui(row[static_cast<std::size_t>(j)].get_mpz_t(),
                    row[static_cast<std::size_t>(j)].get_mpz_t(), static_cast<unsigned long>(j));
  }
  auto c = [&](int j) -> BigInt {
    if (j < 0 || j > ell) return BigInt(0);
    return row[static_cast<std::size_t>(j)];
  };
  std::vector<Rational> coeffs;
  coeffs.reserve(static_cast<std::size_t>(ell) + 3);
  for (int j = 0; j <= ell + 2; ++j) {
    coeffs.emplace_back(c(j) - 2 * c(j - 1) + c(j - 2));
  }
  return RationalPoly::from_coeffs(std::move(coeffs));
}

CoeffPattern cluster_family_pattern(int ell) {
  if (ell < 2) throw Error("cluster_family_pattern needs ell >= 2");
  const long r = isqrt_floor(ell + 2);
  if (ell == r * r - 2) {
    const int wing = static_cast<int>(r * (r - 1) / 2);
    const int middle = static_cast<int>(r - 1);
    std::vector<TriSign> entries;
    entries.insert(entries.end(), static_cast<std::size_t>(wing), TriSign::Plus);
    entries.push_back(TriSign::Zero);
    entries.insert(entries.end(), static_cast<std::size_t>(middle), TriSign::Minus);
    entries.push_back(TriSign::Zero);
    entries.insert(entries.end(), static_cast<std::size_t>(wing), TriSign::Plus);
    return PatternWithZeros::from_entries(std::move(entries));
  }
  if ((ell - r) % 2 != 0) {
    const int wing = static_cast<int>((ell - r + 3) / 2);
    return SignPattern::from_components({wing, static_cast<int>(r), wing});
  }
  const int wing = static_cast<int>((ell - r + 2) / 2);
  return SignPattern::from_components({wing, static_cast<int>(r + 1), wing});
}

}  // namespace hyposign
