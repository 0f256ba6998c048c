#pragma once

#include <bitset>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cryptobench/algebra/bigint.hpp"
#include "cryptobench/error.hpp"
#include "cryptobench/util/random.hpp"

namespace cryptobench::protocols {

// ---------------------------------------------------------------------------
// Secure sum: each participant splits X_i into n additive shares mod
// N = n * N', keeps one and sends one to every other participant. Everyone
// publishes the sum of what they hold, and the published sums add up to the
// total. A single received share is uniform and says nothing about X_i.

struct Message {
  std::size_t sender;
  std::size_t receiver;
  std::uint64_t share;
};

struct SecureSumSession {
  std::size_t n = 0;
  std::uint64_t price = 0;    // N'
  std::uint64_t modulus = 0;  // N = n * N'
  std::vector<std::uint64_t> inputs;
  std::vector<std::vector<std::uint64_t>> shares;  // shares[i][j] = s_{i,j}
  std::vector<Message> log;                        // every off-diagonal share
  std::vector<std::uint64_t> published;            // sum_i s_{i,j} mod N per j
};

struct SecureSumResult {
  std::uint64_t total = 0;
  bool affordable = false;
  SecureSumSession session;
};

inline SecureSumResult secure_sum(const std::vector<std::uint64_t>& inputs, std::uint64_t price,
                                  std::uint64_t seed) {
  if (inputs.empty()) throw InvalidInput("at least one participant is needed");
  if (price == 0) throw InvalidInput("price must be positive");
  const std::uint64_t n = inputs.size();
  if (price > std::numeric_limits<std::uint64_t>::max() / n / 2) {
    throw InvalidInput("n * price overflows 63 bits");
  }
  for (std::uint64_t x : inputs) {
    if (x >= price) throw InvalidInput("input " + std::to_string(x) + " is not below the price");
  }

  SecureSumSession s;
  s.n = n;
  s.price = price;
  s.modulus = n * price;
  s.inputs = inputs;
  s.shares.assign(n, std::vector<std::uint64_t>(n, 0));
  SplitMix64 rng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j + 1 < n; ++j) {
      s.shares[i][j] = rng.below(s.modulus);
      acc = (acc + s.shares[i][j]) % s.modulus;
    }
    s.shares[i][n - 1] = (inputs[i] + s.modulus - acc) % s.modulus;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) s.log.push_back({i, j, s.shares[i][j]});
    }
  }
  s.published.assign(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) s.published[j] = (s.published[j] + s.shares[i][j]) % s.modulus;
  }
  std::uint64_t total = 0;
  for (std::uint64_t v : s.published) total = (total + v) % s.modulus;
  return {total, total >= price, std::move(s)};
}

// ---------------------------------------------------------------------------
// Key flipping: choose i <= j with bits i and j equal to 0 and invert bits
// i..j. Bit 0 is the first (most significant) bit of the key.

template <std::size_t W>
struct KeyState {
  std::bitset<W> bits;  // bits[t] is key bit t; t = 0 is the first bit

  static constexpr std::size_t width = W;

  static KeyState all_ones() {
    KeyState k;
    k.bits.set();
    return k;
  }

  static KeyState from_string(std::string_view s) {
    KeyState k;
    std::size_t t = 0;
    for (char ch : s) {
      if (ch == ' ') continue;
      if (ch != '0' && ch != '1') throw InvalidInput("key digits must be 0/1");
      if (t >= W) throw InvalidInput("key longer than its width");
      k.bits[t++] = ch == '1';
    }
    if (t != W) throw InvalidInput("key shorter than its width");
    return k;
  }

  std::string to_string() const {
    std::string s(W, '0');
    for (std::size_t t = 0; t < W; ++t) s[t] = bits[t] ? '1' : '0';
    return s;
  }

  /// Big-endian value.
  ArbitraryInt value() const {
    ArbitraryInt v = 0;
    for (std::size_t t = 0; t < W; ++t) {
      v <<= 1;
      if (bits[t]) v += 1;
    }
    return v;
  }

  bool has_legal_move() const { return !bits.all(); }

  friend bool operator==(const KeyState&, const KeyState&) = default;
};

template <std::size_t W>
bool key_less(const KeyState<W>& a, const KeyState<W>& b) {
  for (std::size_t t = 0; t < W; ++t) {
    if (a.bits[t] != b.bits[t]) return b.bits[t];
  }
  return false;
}

template <std::size_t W>
KeyState<W> keyflip_step(KeyState<W> k, std::size_t i, std::size_t j) {
  if (i > j || j >= W) throw InvalidInput("segment must satisfy i <= j < width");
  if (k.bits[i] || k.bits[j]) throw InvalidInput("segment endpoints must be 0");
  for (std::size_t t = i; t <= j; ++t) k.bits.flip(t);
  return k;
}

template <std::size_t W>
KeyState<W> keyflip_terminal() {
  return KeyState<W>::all_ones();
}

/// Random legal move: two zero positions drawn uniformly (possibly equal).
template <std::size_t W>
std::optional<std::pair<std::size_t, std::size_t>> random_legal_move(const KeyState<W>& k,
                                                                       SplitMix64& rng) {
  std::vector<std::size_t> zeros;
  for (std::size_t t = 0; t < W; ++t) {
    if (!k.bits[t]) zeros.push_back(t);
  }
  if (zeros.empty()) return std::nullopt;
  std::size_t a = zeros[rng.below(zeros.size())];
  std::size_t b = zeros[rng.below(zeros.size())];
  if (a > b) std::swap(a, b);
  return std::make_pair(a, b);
}

/// Plays random legal moves until none is left; returns the final key and
/// the number of moves.
template <std::size_t W>
std::pair<KeyState<W>, std::uint64_t> play_until_stuck(KeyState<W> k, SplitMix64& rng) {
  std::uint64_t steps = 0;
  while (auto move = random_legal_move(k, rng)) {
    k = keyflip_step(k, move->first, move->second);
    ++steps;
  }
  return {k, steps};
}

// ---------------------------------------------------------------------------
// Repunits

struct RepunitShape {
  std::uint64_t ones = 0;   // a
  std::uint64_t zeros = 0;  // k
  std::string digits() const { return std::string(ones, '1') + std::string(zeros, '0'); }
};

/// Smallest a with 11...1 (a ones) divisible by `modulus`; 1^a 0^k then is
/// divisible too for every k.
inline RepunitShape repunit_multiple(std::uint64_t modulus, std::uint64_t zeros = 0) {
  if (modulus == 0) throw InvalidInput("modulus must be positive");
  if (std::gcd(modulus, std::uint64_t{10}) != 1) throw InvalidInput("modulus must be coprime to 10");
  if (modulus > std::numeric_limits<std::uint64_t>::max() / 16) throw InvalidInput("modulus too large");
  std::uint64_t r = 1 % modulus, a = 1;
  while (r != 0) {
    r = (10 * r + 1) % modulus;
    ++a;
  }
  return {a, zeros};
}

}  // namespace cryptobench::protocols
