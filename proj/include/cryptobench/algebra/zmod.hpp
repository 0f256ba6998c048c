#pragma once

#include <compare>
#include <cstdint>
#include <ostream>

#include "cryptobench/error.hpp"

namespace cryptobench {

/// Element of Z/ModulusZ kept in canonical range [0, Modulus).
template <std::uint32_t Modulus>
class Residue {
  static_assert(Modulus > 1 && Modulus < (1u << 31));

 public:
  static constexpr std::uint32_t modulus = Modulus;

  constexpr Residue() noexcept = default;

  /// Reduces immediately; negative inputs wrap (-1000 -> 1019 for 2019).
  static constexpr Residue from(std::int64_t value) noexcept {
    std::int64_t r = value % static_cast<std::int64_t>(Modulus);
    if (r < 0) r += Modulus;
    Residue x;
    x.value_ = static_cast<std::uint32_t>(r);
    return x;
  }

  constexpr std::uint32_t value() const noexcept { return value_; }

  friend constexpr Residue operator+(Residue a, Residue b) noexcept {
    return from(static_cast<std::int64_t>(a.value_) + b.value_);
  }
  friend constexpr Residue operator-(Residue a, Residue b) noexcept {
    return from(static_cast<std::int64_t>(a.value_) - b.value_);
  }
  friend constexpr Residue operator*(Residue a, Residue b) noexcept {
    return from(static_cast<std::int64_t>(a.value_) * b.value_);
  }
  constexpr Residue operator-() const noexcept { return from(-static_cast<std::int64_t>(value_)); }

  constexpr Residue pow(std::uint64_t e) const noexcept {
    Residue result = from(1), base = *this;
    while (e != 0) {
      if (e & 1u) result = result * base;
      base = base * base;
      e >>= 1;
    }
    return result;
  }

  friend constexpr bool operator==(Residue, Residue) noexcept = default;
  friend constexpr auto operator<=>(Residue, Residue) noexcept = default;

  friend std::ostream& operator<<(std::ostream& os, Residue r) { return os << r.value_; }

 private:
  std::uint32_t value_ = 0;
};

using Mod2019 = Residue<2019>;

inline constexpr unsigned kMaxDicksonDegree = 64;

/// Dickson polynomial D_degree(y, a) via D_0 = 2, D_1 = y,
/// D_k = y*D_{k-1} - a*D_{k-2}.
template <std::uint32_t M>
constexpr Residue<M> dickson_eval(unsigned degree, Residue<M> y, Residue<M> a) {
  if (degree > kMaxDicksonDegree) throw InvalidInput("Dickson degree above 64");
  Residue<M> prev = Residue<M>::from(2);
  if (degree == 0) return prev;
  Residue<M> cur = y;
  for (unsigned k = 2; k <= degree; ++k) {
    Residue<M> next = y * cur - a * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace cryptobench
