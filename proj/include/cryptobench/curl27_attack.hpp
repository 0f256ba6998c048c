#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "cryptobench/curl27.hpp"
#include "cryptobench/error.hpp"
#include "cryptobench/util/random.hpp"

namespace cryptobench::curl27 {

/// Curl27-f acting on m-fragmented states, with one trit kept per fragment.
///
/// Steps whose word length n is at least m regroup fragments exactly like
/// the full function with word length n/m (at n = m a triple takes one trit
/// from each of three neighbouring fragments). Steps with n < m act inside
/// single fragments, where every triple is constant and S(t,t,t) = (t',t',t').
class FragmentedCurl {
 public:
  explicit FragmentedCurl(std::size_t m) : m_(m) {
    std::size_t p = 1;
    while (p < m && p < kStateTrits) p *= 3;
    if (m == 0 || p != m || m > kStateTrits) {
      throw InvalidInput("fragment size must be a power of 3 not exceeding 729");
    }
    for (int t = -1; t <= 1; ++t) {
      const Trit tt = static_cast<Trit>(t);
      diagonal_[t + 1] = detail::kSbox.out[detail::triple_index(tt, tt, tt)][0];
    }
  }

  std::size_t fragment() const noexcept { return m_; }
  std::size_t reduced_state_size() const noexcept { return kStateTrits / m_; }
  std::size_t reduced_word_size() const noexcept { return kWordTrits / m_; }

  void permute(std::span<Trit> reduced) const {
    for (unsigned round = 0; round < kRounds; ++round) {
      for (unsigned step = 1; step <= kStepsPerRound; ++step) {
        const std::size_t n = detail::pow3(kStepsPerRound - step);
        if (n >= m_) {
          detail::grouped_step(reduced, n / m_);
        } else {
          for (Trit& t : reduced) t = diagonal_[t + 1];
        }
      }
    }
  }

  /// One trit per aligned m-run of a fragmented word.
  TritString reduce(std::span<const Trit> full) const {
    TritString out;
    out.reserve(full.size() / m_);
    for (std::size_t i = 0; i < full.size(); i += m_) out.push_back(full[i]);
    return out;
  }

 private:
  std::size_t m_;
  std::array<Trit, 3> diagonal_{};
};

/// Length (3^m - 1)/2 of the attack messages; its balanced encoding is m ones.
inline std::uint64_t fragmented_message_length(std::size_t m) {
  std::uint64_t p = 1;
  for (std::size_t i = 0; i < m; ++i) {
    if (p > std::numeric_limits<std::uint64_t>::max() / 3) {
      throw InvalidInput("fragment size too large");
    }
    p *= 3;
  }
  return (p - 1) / 2;
}

struct CollisionSearchOptions {
  std::size_t fragment = 9;
  std::uint64_t budget = 8'000'000;
  std::uint64_t seed = 0;
  unsigned workers = 1;
};

struct CollisionSearchResult {
  TritString first;
  TritString second;
  TritString digest;
  std::uint64_t hashes = 0;  // candidate messages hashed
  std::uint64_t first_index = 0;
  std::uint64_t second_index = 0;
};

namespace detail {

/// Messages of the attack: length (3^m - 1)/2, every full m-fragment
/// constant, trailing partial fragment zero. A fixed prefix of all-zero
/// blocks is shared; the full fragments in the last few blocks are drawn
/// from a counter-based stream keyed by (seed, candidate index).
class FragmentationSearchSpace {
 public:
  static constexpr std::uint64_t kMaxMaterializedTrits = 1ull << 32;

  FragmentationSearchSpace(std::size_t m, std::uint64_t budget, std::uint64_t seed)
      : curl_(m), seed_(seed) {
    if (m != 3 && m != 9 && m != 27) throw InvalidInput("fragment size must be 3, 9 or 27");
    length_ = fragmented_message_length(m);
    if (length_ > kMaxMaterializedTrits) {
      throw InvalidInput("messages of " + std::to_string(length_) +
                         " trits are too long to materialize");
    }
    const std::size_t per_block = kWordTrits / m;
    full_fragments_ = length_ / m;
    blocks_ = (length_ + kWordTrits - 1) / kWordTrits;

    // Enough free fragments that 3^free comfortably exceeds budget^2.
    const double wanted_d = 2.0 * std::log(static_cast<double>(std::max<std::uint64_t>(budget, 3))) /
                                std::log(3.0) + 8.0;
    const std::size_t wanted =
        std::min<std::size_t>(full_fragments_, static_cast<std::size_t>(std::ceil(wanted_d)));
    std::size_t free_blocks = 1;
    while (free_blocks < blocks_ &&
           full_fragments_ - std::min(full_fragments_, (blocks_ - free_blocks) * per_block) < wanted) {
      ++free_blocks;
    }
    prefix_blocks_ = blocks_ - free_blocks;
    first_free_ = std::min<std::uint64_t>(full_fragments_, prefix_blocks_ * per_block);
    free_count_ = static_cast<std::size_t>(full_fragments_ - first_free_);

    // Initial state: W0 = W2 = 0, W1 = m ones, reduced to one trit per fragment.
    CurlState init;
    BalancedTritVector len = balanced_encode(length_);
    std::copy(len.begin(), len.end(), init.word(1).begin());
    if (!is_fragmented(init.trits(), m)) throw InvalidInput("initial state is not fragmented");
    prefix_state_ = curl_.reduce(init.trits());
    for (std::uint64_t b = 0; b < prefix_blocks_; ++b) {
      std::fill_n(prefix_state_.begin(), per_block, Trit{0});
      curl_.permute(prefix_state_);
    }
  }

  std::uint64_t message_length() const noexcept { return length_; }
  std::size_t free_fragments() const noexcept { return free_count_; }
  std::size_t fragment() const noexcept { return curl_.fragment(); }

  void free_trits(std::uint64_t index, std::span<Trit> out) const {
    SplitMix64 rng = SplitMix64::at(seed_, index);
    std::size_t i = 0;
    while (i < out.size()) {
      std::uint64_t word = rng();
      for (int k = 0; k < 40 && i < out.size(); ++k, ++i) {
        out[i] = static_cast<Trit>(static_cast<int>(word % 3) - 1);
        word /= 3;
      }
    }
  }

  /// Reduced digest (243/m trits) of candidate `index`.
  void reduced_digest(std::uint64_t index, std::span<Trit> digest_out, TritString& scratch_state,
                      TritString& scratch_free) const {
    const std::size_t per_block = kWordTrits / curl_.fragment();
    scratch_free.resize(free_count_);
    free_trits(index, scratch_free);
    scratch_state = prefix_state_;
    std::size_t f = 0;
    for (std::uint64_t b = prefix_blocks_; b < blocks_; ++b) {
      for (std::size_t p = 0; p < per_block; ++p) {
        const std::uint64_t g = b * per_block + p;
        scratch_state[p] = (g >= first_free_ && g < full_fragments_) ? scratch_free[f++] : Trit{0};
      }
      curl_.permute(scratch_state);
    }
    std::copy_n(scratch_state.begin(), digest_out.size(), digest_out.begin());
  }

  TritString message(std::uint64_t index) const {
    const std::size_t m = curl_.fragment();
    TritString msg(length_, 0);
    TritString free(free_count_);
    free_trits(index, free);
    for (std::size_t f = 0; f < free_count_; ++f) {
      std::fill_n(msg.begin() + static_cast<std::ptrdiff_t>((first_free_ + f) * m), m, free[f]);
    }
    return msg;
  }

 private:
  FragmentedCurl curl_;
  std::uint64_t seed_;
  std::uint64_t length_ = 0;
  std::uint64_t full_fragments_ = 0;
  std::uint64_t blocks_ = 0;
  std::uint64_t prefix_blocks_ = 0;
  std::uint64_t first_free_ = 0;
  std::size_t free_count_ = 0;
  TritString prefix_state_;
};

/// 64-bit fingerprint; exact base-3 packing when the digest has <= 40 trits.
inline std::uint64_t digest_fingerprint(std::span<const Trit> digest) noexcept {
  auto pack = [&](std::size_t lo, std::size_t hi) {
    std::uint64_t chunk = 0;
    for (std::size_t i = lo; i < hi; ++i) chunk = chunk * 3 + static_cast<std::uint64_t>(digest[i] + 1);
    return chunk;
  };
  if (digest.size() <= 40) return pack(0, digest.size());
  std::uint64_t h = 0;
  for (std::size_t lo = 0; lo < digest.size(); lo += 40) {
    h = mix64(h ^ pack(lo, std::min(digest.size(), lo + 40)));
  }
  return h;
}

/// Open-addressing membership table of (fingerprint tag, candidate index)
/// packed into one 64-bit slot; 0 marks an empty slot.
class FingerprintTable {
 public:
  explicit FingerprintTable(std::uint64_t max_entries) {
    std::uint64_t cap = 1024;
    while (cap < 2 * max_entries) cap <<= 1;
    slots_.assign(cap, 0);
    mask_ = cap - 1;
    index_bits_ = static_cast<unsigned>(std::bit_width(max_entries + 1));
  }

  /// Calls on_match(other_index) for each stored entry with an equal tag;
  /// stops and returns true if it returns true, else inserts `index`.
  template <class OnMatch>
  bool probe_insert(std::uint64_t fingerprint, std::uint64_t index, OnMatch&& on_match) {
    const std::uint64_t tag = fingerprint >> index_bits_;
    std::uint64_t pos = mix64(fingerprint) & mask_;
    while (true) {
      const std::uint64_t slot = slots_[pos];
      if (slot == 0) {
        slots_[pos] = (tag << index_bits_) | (index + 1);
        return false;
      }
      if ((slot >> index_bits_) == tag) {
        const std::uint64_t other = (slot & ((1ull << index_bits_) - 1)) - 1;
        if (on_match(other)) return true;
      }
      pos = (pos + 1) & mask_;
    }
  }

 private:
  std::vector<std::uint64_t> slots_;
  std::uint64_t mask_ = 0;
  unsigned index_bits_ = 0;
};

}  // namespace detail

/// Birthday search for a Curl27 collision among m-fragmented messages of
/// length (3^m - 1)/2. Candidates are hashed in the reduced domain and
/// fingerprinted; a fingerprint hit is re-verified with the full hash.
/// Deterministic in (seed, budget) for any worker count.
inline CollisionSearchResult fragmentation_collision_attack(const CollisionSearchOptions& opts) {
  if (opts.budget < 2) throw InvalidInput("budget must be at least 2");
  const detail::FragmentationSearchSpace space(opts.fragment, opts.budget, opts.seed);
  const std::size_t digest_size = kWordTrits / opts.fragment;
  detail::FingerprintTable table(opts.budget);
  const unsigned workers = std::max(1u, opts.workers);
  constexpr std::uint64_t kBatch = 8192;

  std::vector<std::uint64_t> fingerprints;
  CollisionSearchResult result;
  for (std::uint64_t start = 0; start < opts.budget; start += kBatch) {
    const std::uint64_t count = std::min(kBatch, opts.budget - start);
    fingerprints.assign(count, 0);
    auto work = [&](std::uint64_t lo, std::uint64_t hi) {
      TritString digest(digest_size), state, free;
      for (std::uint64_t i = lo; i < hi; ++i) {
        space.reduced_digest(start + i, digest, state, free);
        fingerprints[i] = detail::digest_fingerprint(digest);
      }
    };
    if (workers == 1) {
      work(0, count);
    } else {
      std::vector<std::jthread> pool;
      const std::uint64_t chunk = (count + workers - 1) / workers;
      for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t lo = std::min(count, w * chunk), hi = std::min(count, lo + chunk);
        if (lo < hi) pool.emplace_back(work, lo, hi);
      }
    }

    for (std::uint64_t i = 0; i < count; ++i) {
      const std::uint64_t index = start + i;
      bool found = table.probe_insert(fingerprints[i], index, [&](std::uint64_t other) {
        TritString a = space.message(other);
        TritString b = space.message(index);
        if (a == b) return false;
        TritString ha = curl_hash(a);
        if (ha != curl_hash(b)) return false;
        result.first = std::move(a);
        result.second = std::move(b);
        result.digest = std::move(ha);
        result.first_index = other;
        result.second_index = index;
        return true;
      });
      if (found) {
        result.hashes = index + 1;
        return result;
      }
    }
  }
  throw BudgetExhausted("no collision among " + std::to_string(opts.budget) +
                        " fragmented messages (m = " + std::to_string(opts.fragment) + ")");
}

/// Expected number of candidates before the first collision, sqrt(pi/2 * 3^(243/m)).
inline double expected_collision_cost(std::size_t m) {
  return std::sqrt(std::acos(-1.0) / 2.0 * std::pow(3.0, static_cast<double>(kWordTrits / m)));
}

}  // namespace cryptobench::curl27
