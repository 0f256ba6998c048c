#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cryptobench/error.hpp"

namespace cryptobench {

/// A ternary digit in {-1, 0, 1}. Residue 2 (mod 3) is always stored as -1.
using Trit = std::int8_t;

/// Balanced-ternary digits, least significant first.
using BalancedTritVector = std::vector<Trit>;

/// Maps any integer to its balanced residue mod 3.
constexpr Trit to_trit(int value) noexcept {
  int r = value % 3;
  if (r < 0) r += 3;
  return static_cast<Trit>(r == 2 ? -1 : r);
}

constexpr bool is_trit(int value) noexcept { return value >= -1 && value <= 1; }

/// Little-endian balanced-ternary expansion; 0 encodes to the empty vector.
inline BalancedTritVector balanced_encode(std::uint64_t value) {
  BalancedTritVector digits;
  while (value != 0) {
    std::uint64_t r = value % 3;
    if (r == 2) {
      digits.push_back(-1);
      value = value / 3 + 1;
    } else {
      digits.push_back(static_cast<Trit>(r));
      value /= 3;
    }
  }
  return digits;
}

inline std::int64_t balanced_decode(std::span<const Trit> digits) {
  std::int64_t value = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    if (!is_trit(*it)) throw InvalidInput("balanced ternary digit out of range");
    value = value * 3 + *it;
  }
  return value;
}

}  // namespace cryptobench
