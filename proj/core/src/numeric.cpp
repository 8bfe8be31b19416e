#include "hyposign/numeric.hpp"

#include <cctype>
#include <cmath>
#include <utility>

#include "hyposign/errors.hpp"

namespace hyposign {

namespace {

bool is_integer_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational rational_from_string(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den)) {
    throw ParseError("bad rational: '" + std::string(text) + "'");
  }
  BigInt p(std::string(num), 10);
  BigInt q(std::string(den), 10);
  if (q == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string rational_to_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

int compare_abs(const Rational& a, const Rational& b) {
  Rational aa = abs(a);
  Rational bb = abs(b);
  return cmp(aa, bb);
}

BigInt binomial(long n, long k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  BigInt c = 1;
  for (long j = 1; j <= k; ++j) {
    c *= (n - k + j);
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(j));
  }
  return c;
}

long isqrt_floor(long n) {
  if (n < 0) throw Error("isqrt_floor of negative value");
  BigInt root;
  BigInt big(static_cast<unsigned long>(n));
  mpz_sqrt(root.get_mpz_t(), big.get_mpz_t());
  return root.get_si();
}

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t basis) {
  std::uint64_t h = basis;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

Rational rationalize(double x, const BigInt& max_den) {
  if (!std::isfinite(x)) throw Error("rationalize: non-finite input");
  // Exact value of the double.
  Rational exact(x);
  exact.canonicalize();
  if (exact.get_den() <= max_den) return exact;

  // Continued-fraction convergents p_k/q_k of the exact value; stop before the
  // denominator bound is exceeded. Recurrence seeds: p_{-2}/q_{-2} = 0/1,
  // p_{-1}/q_{-1} = 1/0.
  BigInt num = exact.get_num();
  BigInt den = exact.get_den();
  BigInt p_prev = 0, q_prev = 1;
  BigInt p_cur = 1, q_cur = 0;
  while (den != 0) {
    BigInt a, rem;
    mpz_fdiv_qr(a.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    BigInt p_next = a * p_cur + p_prev;
    BigInt q_next = a * q_cur + q_prev;
    if (q_next > max_den) break;
    p_prev = p_cur;
    q_prev = q_cur;
    p_cur = p_next;
    q_cur = q_next;
    num = den;
    den = rem;
  }
  if (q_cur == 0) return Rational(0);
  Rational r(p_cur, q_cur);
  r.canonicalize();
  return r;
}

}  // namespace hyposign
