#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "cryptobench/error.hpp"

namespace cryptobench {

/// Signed arbitrary-precision integer used by the lattice and factoring code.
using ArbitraryInt = boost::multiprecision::cpp_int;

/// Exact square root: r with r*r == x, or nullopt when x is negative or not a
/// perfect square.
inline std::optional<ArbitraryInt> int_sqrt_exact(const ArbitraryInt& x) {
  if (x < 0) return std::nullopt;
  ArbitraryInt r = boost::multiprecision::sqrt(x);
  if (r * r != x) return std::nullopt;
  return r;
}

/// Least nonnegative residue of a modulo m (m > 0).
inline ArbitraryInt mod_floor(const ArbitraryInt& a, const ArbitraryInt& m) {
  ArbitraryInt r = a % m;
  if (r < 0) r += m;
  return r;
}

/// Inverse of a modulo m by the extended Euclidean algorithm.
inline std::optional<ArbitraryInt> mod_inverse(const ArbitraryInt& a, const ArbitraryInt& m) {
  ArbitraryInt old_r = mod_floor(a, m), r = m;
  ArbitraryInt old_s = 1, s = 0;
  while (r != 0) {
    ArbitraryInt quotient = old_r / r;
    ArbitraryInt tmp = old_r - quotient * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quotient * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) return std::nullopt;
  return mod_floor(old_s, m);
}

inline ArbitraryInt pow_mod(const ArbitraryInt& base, const ArbitraryInt& exponent,
                            const ArbitraryInt& modulus) {
  return boost::multiprecision::powm(mod_floor(base, modulus), exponent, modulus);
}

/// Round-to-nearest quotient num/den for den > 0 (ties toward +inf).
inline ArbitraryInt div_round(const ArbitraryInt& num, const ArbitraryInt& den) {
  ArbitraryInt twice = 2 * num + den;
  ArbitraryInt q = twice / (2 * den);
  // cpp_int division truncates toward zero; correct to floor.
  if (twice < 0 && q * (2 * den) != twice) q -= 1;
  return q;
}

/// Parses a decimal integer, ignoring embedded whitespace so that long
/// numbers wrapped across lines parse as-is.
inline ArbitraryInt parse_decimal(std::string_view text) {
  std::string digits;
  bool negative = false;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == '-' && digits.empty() && !negative) {
      negative = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw InvalidInput("not a decimal integer: unexpected character '" + std::string(1, ch) + "'");
    }
    digits.push_back(ch);
  }
  if (digits.empty()) throw InvalidInput("empty decimal integer");
  ArbitraryInt value(digits);
  return negative ? ArbitraryInt(-value) : value;
}

inline std::string to_decimal(const ArbitraryInt& x) { return x.str(); }

inline unsigned bit_length(const ArbitraryInt& x) {
  if (x == 0) return 0;
  ArbitraryInt a = abs(x);
  return static_cast<unsigned>(boost::multiprecision::msb(a)) + 1;
}

}  // namespace cryptobench
