#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace hyposign {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Parses "p" or "p/q" with decimal integer parts. The result is canonical
/// (lowest terms, positive denominator). Throws ParseError on bad input or q = 0.
Rational rational_from_string(std::string_view text);

/// Renders a rational as "p/q" in lowest terms, denominator always present
/// ("3/2", "-21/10", "5/1"). Inverse of rational_from_string.
std::string rational_to_string(const Rational& value);

/// |a| <=> |b| as -1/0/+1, exact.
int compare_abs(const Rational& a, const Rational& b);

/// Binomial coefficient via the multiplicative recurrence; exact for any size.
/// Returns 0 when k < 0 or k > n.
BigInt binomial(long n, long k);

/// floor(sqrt(n)) for n >= 0.
long isqrt_floor(long n);

/// FNV-1a over a byte string; used to derive independent per-task RNG seeds.
std::uint64_t fnv1a(std::string_view bytes, std::uint64_t basis = 1469598103934665603ull);

/// Best rational approximation of x with denominator <= max_den, computed from
/// the continued fraction of x's exact binary value. x must be finite.
Rational rationalize(double x, const BigInt& max_den);

inline double to_double(const Rational& value) { return value.get_d(); }

}  // namespace hyposign
