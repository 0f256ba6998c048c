#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cryptobench/error.hpp"

namespace cryptobench {

/// Binary extension field GF(2^n), 3 <= n <= 16, elements stored as n-bit
/// masks in polynomial basis (bit i is the coefficient of X^i).
///
/// Multiplication goes through log/antilog tables built at construction from
/// the reference shift-and-add product (`mul_slow`).
class Gf2nField {
 public:
  using Element = std::uint32_t;

  static constexpr unsigned kMinDegree = 3;
  static constexpr unsigned kMaxDegree = 16;

  /// Built-in irreducible modulus for each degree; n = 3 is X^3 + X + 1 and
  /// n = 8 is the AES polynomial.
  static std::uint32_t default_modulus(unsigned degree) {
    static constexpr std::array<std::uint32_t, 17> table = {
        0, 0, 0,
        0x0B,     // X^3 + X + 1
        0x13,     // X^4 + X + 1
        0x25,     // X^5 + X^2 + 1
        0x43,     // X^6 + X + 1
        0x83,     // X^7 + X + 1
        0x11B,    // X^8 + X^4 + X^3 + X + 1
        0x211,    // X^9 + X^4 + 1
        0x409,    // X^10 + X^3 + 1
        0x805,    // X^11 + X^2 + 1
        0x1053,   // X^12 + X^6 + X^4 + X + 1
        0x201B,   // X^13 + X^4 + X^3 + X + 1
        0x4443,   // X^14 + X^10 + X^6 + X + 1
        0x8003,   // X^15 + X + 1
        0x1100B,  // X^16 + X^12 + X^3 + X + 1
    };
    check_degree(degree);
    return table[degree];
  }

  explicit Gf2nField(unsigned degree) : Gf2nField(degree, default_modulus(degree)) {}

  Gf2nField(unsigned degree, std::uint32_t modulus) : degree_(degree), modulus_(modulus) {
    check_degree(degree);
    if ((modulus >> degree) != 1u) {
      throw InvalidInput("modulus must have degree exactly " + std::to_string(degree));
    }
    if (!is_irreducible(modulus)) {
      throw InvalidInput("modulus " + std::to_string(modulus) + " is reducible over GF(2)");
    }
    build_tables();
  }

  unsigned degree() const noexcept { return degree_; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  std::uint32_t size() const noexcept { return 1u << degree_; }
  bool contains(Element a) const noexcept { return a < size(); }

  static Element add(Element a, Element b) noexcept { return a ^ b; }

  Element mul(Element a, Element b) const {
    check(a);
    check(b);
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = log_[a] + log_[b];
    if (s >= size() - 1) s -= size() - 1;
    return exp_[s];
  }

  /// Reference product: carry-less multiply with interleaved reduction.
  Element mul_slow(Element a, Element b) const {
    check(a);
    check(b);
    return mul_reduce(a, b);
  }

  /// beta^e, with 0^0 = 1.
  Element pow(Element beta, std::uint64_t e) const {
    check(beta);
    if (e == 0) return 1;
    if (beta == 0) return 0;
    std::uint64_t order = size() - 1;
    std::uint64_t s = (static_cast<std::uint64_t>(log_[beta]) * (e % order)) % order;
    return exp_[static_cast<std::size_t>(s)];
  }

  Element inv(Element a) const {
    check(a);
    if (a == 0) throw InvalidInput("zero has no multiplicative inverse");
    std::uint32_t order = size() - 1;
    return exp_[(order - log_[a]) % order];
  }

  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  /// True iff poly (an (n+1)-bit mask) has no factor of degree 1..n/2.
  static bool is_irreducible(std::uint32_t poly) {
    unsigned deg = poly_degree(poly);
    if (deg == 0) return false;
    for (std::uint32_t d = 2; poly_degree(d) <= deg / 2; ++d) {
      if (poly_mod(poly, d) == 0) return false;
    }
    return true;
  }

 private:
  static void check_degree(unsigned degree) {
    if (degree < kMinDegree || degree > kMaxDegree) {
      throw InvalidInput("field degree must be in [3, 16], got " + std::to_string(degree));
    }
  }

  void check(Element a) const {
    if (!contains(a)) {
      throw InvalidInput("element " + std::to_string(a) + " out of range for GF(2^" +
                         std::to_string(degree_) + ")");
    }
  }

  static unsigned poly_degree(std::uint32_t p) {
    unsigned d = 0;
    while (p >>= 1) ++d;
    return d;
  }

  static std::uint32_t poly_mod(std::uint32_t a, std::uint32_t b) {
    unsigned db = poly_degree(b);
    while (a != 0 && poly_degree(a) >= db) a ^= b << (poly_degree(a) - db);
    return a;
  }

  Element mul_reduce(Element a, Element b) const {
    Element r = 0;
    const Element top = 1u << degree_;
    while (b != 0) {
      if (b & 1u) r ^= a;
      b >>= 1;
      a <<= 1;
      if (a & top) a ^= modulus_;
    }
    return r;
  }

  void build_tables() {
    const std::uint32_t order = size() - 1;
    exp_.assign(order, 0);
    log_.assign(size(), 0);
    // Smallest generator of the multiplicative group.
    for (Element g = 2; g < size(); ++g) {
      Element x = 1;
      std::uint32_t k = 0;
      bool primitive = true;
      for (; k < order; ++k) {
        if (k > 0 && x == 1) {
          primitive = false;
          break;
        }
        exp_[k] = x;
        x = mul_reduce(x, g);
      }
      if (primitive && x == 1) break;
    }
    for (std::uint32_t k = 0; k < order; ++k) log_[exp_[k]] = k;
  }

  unsigned degree_;
  std::uint32_t modulus_;
  std::vector<Element> exp_;
  std::vector<std::uint32_t> log_;
};

/// Free-function form of Gf2nField::pow.
inline Gf2nField::Element gf_pow(const Gf2nField& field, Gf2nField::Element beta, std::uint64_t e) {
  return field.pow(beta, e);
}

}  // namespace cryptobench
