#pragma once

#include <array>
#include <atomic>
#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "cryptobench/error.hpp"
#include "cryptobench/util/random.hpp"
#include "cryptobench/util/siphash.hpp"

namespace cryptobench::twinpeaks {

inline constexpr unsigned kRounds = 32;

struct Block128 {
  std::uint32_t a = 0, b = 0, c = 0, d = 0;
  friend constexpr auto operator<=>(const Block128&, const Block128&) = default;
};

using RoundFunction = std::function<std::uint32_t(std::uint32_t, std::uint32_t, std::uint32_t)>;

struct RoundFunctionPair {
  RoundFunction f1;
  RoundFunction f2;
};

/// (a, b, c, d) -> (b, c, d, a ^ fval), where fval = F(b, c, d).
constexpr Block128 forward_round(Block128 s, std::uint32_t fval) noexcept {
  return {s.b, s.c, s.d, s.a ^ fval};
}

/// Inverse of forward_round; fval must be F(a, b, c) of the given state.
constexpr Block128 invert_round(Block128 s, std::uint32_t fval) noexcept {
  return {s.d ^ fval, s.a, s.b, s.c};
}

/// 32 rounds; `odd` serves rounds 1, 3, ..., `even` rounds 2, 4, ...
inline Block128 run_rounds(const RoundFunction& odd, const RoundFunction& even, Block128 x) {
  for (unsigned round = 1; round <= kRounds; ++round) {
    const RoundFunction& f = (round % 2 == 1) ? odd : even;
    x = forward_round(x, f(x.b, x.c, x.d));
  }
  return x;
}

/// E: F1 on odd rounds.
inline Block128 encrypt_with(const RoundFunctionPair& fs, Block128 x) {
  return run_rounds(fs.f1, fs.f2, x);
}

/// I: the incomplete decryption, same rounds with the keys swapped.
inline Block128 incomplete_decrypt_with(const RoundFunctionPair& fs, Block128 x) {
  return run_rounds(fs.f2, fs.f1, x);
}

/// Full decryption with known round functions.
inline Block128 decrypt_with(const RoundFunctionPair& fs, Block128 y) {
  for (unsigned round = kRounds; round >= 1; --round) {
    const RoundFunction& f = (round % 2 == 1) ? fs.f1 : fs.f2;
    y = invert_round(y, f(y.a, y.b, y.c));
  }
  return y;
}

/// Keyed pseudorandom round functions: F_k(a, b, c) is SipHash-2-4 of
/// (k, a, b, c) under the 128-bit key, truncated to 32 bits.
inline RoundFunctionPair keyed_round_functions(const std::array<std::uint8_t, 16>& key) {
  auto make = [key](std::uint8_t which) -> RoundFunction {
    return [key, which](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
      std::array<std::uint8_t, 13> msg{};
      msg[0] = which;
      for (int i = 0; i < 4; ++i) {
        msg[1 + i] = static_cast<std::uint8_t>(a >> (8 * i));
        msg[5 + i] = static_cast<std::uint8_t>(b >> (8 * i));
        msg[9 + i] = static_cast<std::uint8_t>(c >> (8 * i));
      }
      return static_cast<std::uint32_t>(siphash24(key, msg));
    };
  };
  return {make(1), make(2)};
}

/// 128-bit PRF key expanded from a seed.
inline std::array<std::uint8_t, 16> key_from_seed(std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::array<std::uint8_t, 16> key{};
  for (int half = 0; half < 2; ++half) {
    std::uint64_t v = rng();
    for (int i = 0; i < 8; ++i) key[8 * half + i] = static_cast<std::uint8_t>(v >> (8 * i));
  }
  return key;
}

// ---------------------------------------------------------------------------
// Oracles

/// Chosen-plaintext access to E and I. Blocks are processed one by one
/// (ECB), and every processed block is counted.
class BlockOracle {
 public:
  virtual ~BlockOracle() = default;

  virtual std::vector<Block128> encrypt(std::span<const Block128> blocks) = 0;
  virtual std::vector<Block128> incomplete_decrypt(std::span<const Block128> blocks) = 0;

  std::uint64_t encrypt_calls() const noexcept { return encrypt_calls_.load(); }
  std::uint64_t incomplete_decrypt_calls() const noexcept { return decrypt_calls_.load(); }
  std::uint64_t total_calls() const noexcept { return encrypt_calls() + incomplete_decrypt_calls(); }

 protected:
  void count_encrypt(std::uint64_t n) noexcept { encrypt_calls_.fetch_add(n); }
  void count_decrypt(std::uint64_t n) noexcept { decrypt_calls_.fetch_add(n); }

 private:
  std::atomic<std::uint64_t> encrypt_calls_{0};
  std::atomic<std::uint64_t> decrypt_calls_{0};
};

/// In-process oracle holding secret round functions.
class LocalOracle final : public BlockOracle {
 public:
  explicit LocalOracle(RoundFunctionPair secret) : secret_(std::move(secret)) {}

  static LocalOracle from_seed(std::uint64_t seed) {
    return LocalOracle(keyed_round_functions(key_from_seed(seed)));
  }

  LocalOracle(LocalOracle&& other) noexcept : secret_(std::move(other.secret_)) {}

  std::vector<Block128> encrypt(std::span<const Block128> blocks) override {
    count_encrypt(blocks.size());
    std::vector<Block128> out;
    out.reserve(blocks.size());
    for (const Block128& x : blocks) out.push_back(encrypt_with(secret_, x));
    return out;
  }

  std::vector<Block128> incomplete_decrypt(std::span<const Block128> blocks) override {
    count_decrypt(blocks.size());
    std::vector<Block128> out;
    out.reserve(blocks.size());
    for (const Block128& x : blocks) out.push_back(incomplete_decrypt_with(secret_, x));
    return out;
  }

 private:
  RoundFunctionPair secret_;
};

inline Block128 encrypt(BlockOracle& o, Block128 x) {
  return o.encrypt(std::span<const Block128>(&x, 1)).front();
}

inline Block128 incomplete_decrypt(BlockOracle& o, Block128 x) {
  return o.incomplete_decrypt(std::span<const Block128>(&x, 1)).front();
}

// ---------------------------------------------------------------------------
// Hex I/O: big-endian, word a is the first four bytes, lowercase.

inline std::string to_hex(Block128 x) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(32);
  for (std::uint32_t w : {x.a, x.b, x.c, x.d}) {
    for (int shift = 28; shift >= 0; shift -= 4) out.push_back(digits[(w >> shift) & 0xf]);
  }
  return out;
}

inline std::string to_hex(std::span<const Block128> blocks) {
  std::string out;
  for (const Block128& b : blocks) out += to_hex(b);
  return out;
}

/// Parses a concatenation of 32-hex-digit blocks (case-insensitive).
inline std::vector<Block128> parse_blocks_hex(std::string_view hex) {
  std::string clean;
  for (char ch : hex) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (!std::isxdigit(static_cast<unsigned char>(ch))) {
      throw InvalidInput(std::string("invalid hex digit '") + ch + "'");
    }
    clean.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  }
  if (clean.size() % 32 != 0) throw InvalidInput("hex input is not a whole number of 128-bit blocks");
  std::vector<Block128> out;
  for (std::size_t off = 0; off < clean.size(); off += 32) {
    std::array<std::uint32_t, 4> w{};
    for (int i = 0; i < 4; ++i) {
      w[i] = static_cast<std::uint32_t>(std::stoul(clean.substr(off + 8 * i, 8), nullptr, 16));
    }
    out.push_back({w[0], w[1], w[2], w[3]});
  }
  return out;
}

inline Block128 parse_block_hex(std::string_view hex) {
  auto blocks = parse_blocks_hex(hex);
  if (blocks.size() != 1) throw InvalidInput("expected exactly one 128-bit block");
  return blocks.front();
}

// ---------------------------------------------------------------------------
// Slide attack
//
// With E = f_32 o ... o f_1 (f1 on odd rounds) and I the same with keys
// swapped, E o f2 = f2 o I and I o f1 = f1 o E. So for x = (X, a, b, c) and
// y = (a, b, c, X'): if words 2..4 of I(x) equal words 1..3 of E(y) then,
// up to a 2^-96 false-positive rate, y = f2(x) and F2(a, b, c) = X ^ X'.
// F1 is symmetric with E and I exchanged.

struct RecoveryOptions {
  std::uint64_t budget = 1ull << 20;  // oracle blocks per recovered value
  std::size_t batch = 256;            // blocks per oracle request and side
};

struct RecoveryStats {
  std::uint64_t queries = 0;
  std::uint64_t values = 0;
};

namespace detail {

struct Key96 {
  std::uint32_t w0, w1, w2;
  friend bool operator==(const Key96&, const Key96&) = default;
};

struct Key96Hash {
  std::size_t operator()(const Key96& k) const noexcept {
    return static_cast<std::size_t>(
        mix64((static_cast<std::uint64_t>(k.w0) << 32 | k.w1) ^ mix64(k.w2)));
  }
};

}  // namespace detail

/// Recovers F_which(a, b, c) through the oracle by a birthday search.
inline std::uint32_t recover_f_value(BlockOracle& oracle, int which, std::uint32_t a,
                                     std::uint32_t b, std::uint32_t c, std::uint64_t seed,
                                     const RecoveryOptions& opts = {},
                                     RecoveryStats* stats = nullptr) {
  if (which != 1 && which != 2) throw InvalidInput("round function index must be 1 or 2");
  if (opts.batch == 0) throw InvalidInput("batch size must be positive");

  // For F2 the x-side goes through I and the y-side through E; for F1 swapped.
  auto query_x = [&](std::span<const Block128> in) {
    return which == 2 ? oracle.incomplete_decrypt(in) : oracle.encrypt(in);
  };
  auto query_y = [&](std::span<const Block128> in) {
    return which == 2 ? oracle.encrypt(in) : oracle.incomplete_decrypt(in);
  };

  std::unordered_map<detail::Key96, std::uint32_t, detail::Key96Hash> x_side, y_side;
  SplitMix64 rng = SplitMix64::at(
      seed, mix64((static_cast<std::uint64_t>(a) << 32 | b) ^ mix64(c) ^ static_cast<std::uint64_t>(which)));
  std::vector<Block128> xs(opts.batch), ys(opts.batch);
  std::vector<std::uint32_t> x_free(opts.batch), y_free(opts.batch);
  std::uint64_t used = 0;

  while (used + 2 * opts.batch <= opts.budget) {
    for (std::size_t i = 0; i < opts.batch; ++i) {
      const std::uint64_t r = rng();
      x_free[i] = static_cast<std::uint32_t>(r);
      y_free[i] = static_cast<std::uint32_t>(r >> 32);
      xs[i] = {x_free[i], a, b, c};
      ys[i] = {a, b, c, y_free[i]};
    }
    const std::vector<Block128> ix = query_x(xs);
    const std::vector<Block128> ey = query_y(ys);
    used += 2 * opts.batch;
    if (stats) stats->queries += 2 * opts.batch;

    for (std::size_t i = 0; i < opts.batch; ++i) {
      const detail::Key96 kx{ix[i].b, ix[i].c, ix[i].d};
      if (auto it = y_side.find(kx); it != y_side.end()) {
        if (stats) ++stats->values;
        return x_free[i] ^ it->second;
      }
      x_side.emplace(kx, x_free[i]);

      const detail::Key96 ky{ey[i].a, ey[i].b, ey[i].c};
      if (auto it = x_side.find(ky); it != x_side.end()) {
        if (stats) ++stats->values;
        return it->second ^ y_free[i];
      }
      y_side.emplace(ky, y_free[i]);
    }
  }
  throw BudgetExhausted("round function value not recovered within " +
                        std::to_string(opts.budget) + " oracle blocks");
}

/// Decrypts y by peeling rounds 32..1, recovering each needed round-function
/// value through the oracle. Never reads the oracle's secret.
inline Block128 slide_attack_decrypt(BlockOracle& oracle, Block128 y, std::uint64_t seed,
                                     const RecoveryOptions& opts = {},
                                     RecoveryStats* stats = nullptr) {
  std::map<std::tuple<int, std::uint32_t, std::uint32_t, std::uint32_t>, std::uint32_t> known;
  for (unsigned round = kRounds; round >= 1; --round) {
    const int which = (round % 2 == 1) ? 1 : 2;
    const auto key = std::make_tuple(which, y.a, y.b, y.c);
    auto it = known.find(key);
    if (it == known.end()) {
      const std::uint32_t f =
          recover_f_value(oracle, which, y.a, y.b, y.c, mix64(seed + round), opts, stats);
      it = known.emplace(key, f).first;
    }
    y = invert_round(y, it->second);
  }
  return y;
}

}  // namespace cryptobench::twinpeaks
