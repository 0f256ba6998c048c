#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/miller_rabin.hpp>

#include "cryptobench/algebra/bigint.hpp"
#include "cryptobench/error.hpp"
#include "cryptobench/util/random.hpp"

namespace cryptobench::lattice {

using Vec2 = std::array<ArbitraryInt, 2>;

struct Lattice2Basis {
  Vec2 v1, v2;
};

inline ArbitraryInt dot(const Vec2& a, const Vec2& b) { return a[0] * b[0] + a[1] * b[1]; }
inline ArbitraryInt norm2(const Vec2& a) { return dot(a, a); }
inline ArbitraryInt determinant(const Lattice2Basis& b) {
  return b.v1[0] * b.v2[1] - b.v1[1] * b.v2[0];
}

/// Lagrange-Gauss reduction. The result spans the same lattice, has
/// |v1| <= |v2|, and v1 is a shortest nonzero lattice vector.
inline Lattice2Basis lagrange_gauss(Lattice2Basis b) {
  if (determinant(b) == 0) throw InvalidInput("basis vectors are linearly dependent");
  if (norm2(b.v1) > norm2(b.v2)) std::swap(b.v1, b.v2);
  for (;;) {
    const ArbitraryInt mu = div_round(dot(b.v1, b.v2), norm2(b.v1));
    b.v2[0] -= mu * b.v1[0];
    b.v2[1] -= mu * b.v1[1];
    if (norm2(b.v2) >= norm2(b.v1)) break;
    std::swap(b.v1, b.v2);
  }
  return b;
}

// ---------------------------------------------------------------------------
// Factoring n = p q from h = 3^2019 p^2 + 5^2019 q^2 mod (n^2 + 8*2019).

inline constexpr unsigned kHintExponent = 2019;

struct FactoringInstance {
  ArbitraryInt n;
  ArbitraryInt h;

  ArbitraryInt modulus() const { return n * n + 8 * kHintExponent; }

  /// Two decimal integers (n then h), whitespace separated; wrapped lines
  /// are not supported, each number must sit on its own line. Further
  /// lines are ignored.
  static FactoringInstance parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string a, b;
    if (!(in >> a >> b)) throw InvalidInput("instance needs two integers: n and h");
    FactoringInstance inst{parse_decimal(a), parse_decimal(b)};
    if (inst.n <= 1 || (inst.n & 1) == 0) throw InvalidInput("n must be odd and greater than 1");
    if (inst.h < 0 || inst.h >= inst.modulus()) throw InvalidInput("h must lie in [0, m)");
    return inst;
  }
};

inline ArbitraryInt hint_for(const ArbitraryInt& p, const ArbitraryInt& q) {
  const ArbitraryInt m = p * q * p * q + 8 * kHintExponent;
  return mod_floor(pow_mod(3, kHintExponent, m) * p * p + pow_mod(5, kHintExponent, m) * q * q, m);
}

/// The lattice from the instance: (1, 5^e / 3^e mod m), (0, m).
inline Lattice2Basis hint_lattice(const FactoringInstance& inst) {
  const ArbitraryInt m = inst.modulus();
  const ArbitraryInt t = pow_mod(3, kHintExponent, m);
  const ArbitraryInt u = pow_mod(5, kHintExponent, m);
  auto t_inv = mod_inverse(t, m);
  if (!t_inv) throw NoSolution("3^2019 is not invertible modulo n^2 + 8*2019");
  return {{ArbitraryInt(1), mod_floor(u * *t_inv, m)}, {ArbitraryInt(0), m}};
}

struct FactoringResult {
  ArbitraryInt p, q;
  ArbitraryInt a1, a2;
  int z = 0;
};

namespace detail {

/// Solves a1 P^2 - C P + a2 n^2 = 0 for P = p^2 with p | n.
inline std::optional<ArbitraryInt> solve_for_p(const ArbitraryInt& a1, const ArbitraryInt& a2,
                                               const ArbitraryInt& C, const ArbitraryInt& n) {
  const ArbitraryInt disc = C * C - 4 * a1 * a2 * n * n;
  auto root = int_sqrt_exact(disc);
  if (!root) return std::nullopt;
  for (const ArbitraryInt& num : {ArbitraryInt(C + *root), ArbitraryInt(C - *root)}) {
    if (num <= 0 || num % (2 * a1) != 0) continue;
    auto p = int_sqrt_exact(num / (2 * a1));
    if (p && *p > 1 && *p < n && n % *p == 0) return *p;
  }
  return std::nullopt;
}

}  // namespace detail

/// Recovers (p, q) with p the prime carrying the 3^2019 coefficient. Tries
/// z in order of increasing |z|, first on the shortest reduced vector and
/// then on the second one.
inline FactoringResult factor_with_hint(const FactoringInstance& inst, int z_bound = 10) {
  const ArbitraryInt m = inst.modulus();
  const Lattice2Basis reduced = lagrange_gauss(hint_lattice(inst));
  const ArbitraryInt t_inv = *mod_inverse(pow_mod(3, kHintExponent, m), m);

  for (Vec2 v : {reduced.v1, reduced.v2}) {
    if (v[0] == 0) continue;
    if (v[0] < 0) v = {ArbitraryInt(-v[0]), ArbitraryInt(-v[1])};
    const ArbitraryInt c0 = mod_floor(v[0] * inst.h * t_inv, m);
    for (int step = 0; step <= 2 * z_bound; ++step) {
      // 0, -1, 1, -2, 2, ...
      const int z = (step % 2 == 0) ? step / 2 : -(step + 1) / 2;
      const ArbitraryInt C = c0 + z * m;
      if (auto p = detail::solve_for_p(v[0], v[1], C, inst.n)) {
        return {*p, inst.n / *p, v[0], v[1], z};
      }
    }
  }
  throw NoSolution("no z in [-" + std::to_string(z_bound) + ", " + std::to_string(z_bound) +
                   "] gives an integer factorization");
}

// ---------------------------------------------------------------------------
// Synthetic instances

inline ArbitraryInt random_bits(SplitMix64& rng, unsigned bits) {
  ArbitraryInt x = 0;
  for (unsigned have = 0; have < bits; have += 64) x = (x << 64) | ArbitraryInt(rng());
  x >>= (bits + 63) / 64 * 64 - bits;
  return x;
}

/// Random prime in [2^(bits-1), 2^bits).
inline ArbitraryInt random_prime(SplitMix64& rng, unsigned bits) {
  if (bits < 8) throw InvalidInput("prime size must be at least 8 bits");
  for (;;) {
    ArbitraryInt x = random_bits(rng, bits);
    boost::multiprecision::bit_set(x, bits - 1);
    boost::multiprecision::bit_set(x, 0);
    if (boost::multiprecision::miller_rabin_test(x, 25, rng)) return x;
  }
}

struct SyntheticInstance {
  FactoringInstance instance;
  ArbitraryInt p, q;
};

/// Balanced primes of the given size with h built from the hint formula.
/// Draws again when 3^2019 happens not to be invertible modulo m.
inline SyntheticInstance make_synthetic_instance(std::uint64_t seed, unsigned prime_bits) {
  SplitMix64 rng(seed);
  for (;;) {
    ArbitraryInt p = random_prime(rng, prime_bits);
    ArbitraryInt q = random_prime(rng, prime_bits);
    if (p == q) continue;
    const ArbitraryInt n = p * q;
    const ArbitraryInt m = n * n + 8 * kHintExponent;
    if (m % 3 == 0) continue;
    return {{n, hint_for(p, q)}, p, q};
  }
}

}  // namespace cryptobench::lattice
