#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cryptobench/boolfun.hpp"
#include "cryptobench/error.hpp"
#include "cryptobench/util/random.hpp"

namespace cryptobench::sharing {

using boolfun::VectorialMap;

inline constexpr unsigned kWidth = 4;  // shares live in F_2^4
inline constexpr std::uint32_t kValues = 1u << kWidth;
inline constexpr unsigned kMaxTabulatedShares = 3;

/// Component F_i: all n input shares -> one share.
using Component = std::function<std::uint32_t(std::span<const std::uint32_t>)>;

struct SharedFunction {
  unsigned shares = 0;
  std::vector<Component> components;

  std::uint32_t eval(std::size_t i, std::span<const std::uint32_t> x) const {
    return components.at(i)(x) & (kValues - 1);
  }

  /// Lookup-table form for n <= 3: tables[i][x_1 | x_2 << 4 | ...].
  std::vector<std::vector<std::uint32_t>> tabulate() const {
    if (shares > kMaxTabulatedShares) throw InvalidInput("tables are limited to n <= 3 shares");
    const std::size_t points = std::size_t{1} << (kWidth * shares);
    std::vector<std::vector<std::uint32_t>> out(shares, std::vector<std::uint32_t>(points));
    std::vector<std::uint32_t> x(shares);
    for (std::size_t p = 0; p < points; ++p) {
      for (unsigned s = 0; s < shares; ++s) x[s] = (p >> (kWidth * s)) & (kValues - 1);
      for (unsigned i = 0; i < shares; ++i) out[i][p] = eval(i, x);
    }
    return out;
  }

  static SharedFunction from_tables(unsigned n, std::vector<std::vector<std::uint32_t>> tables) {
    if (n == 0 || n > kMaxTabulatedShares || tables.size() != n) {
      throw InvalidInput("expected one table per share, n <= 3");
    }
    const std::size_t points = std::size_t{1} << (kWidth * n);
    for (const auto& t : tables) {
      if (t.size() != points) throw InvalidInput("component table has the wrong size");
      for (std::uint32_t v : t) {
        if (v >= kValues) throw InvalidInput("component output is not a 4-bit value");
      }
    }
    SharedFunction F;
    F.shares = n;
    for (auto& t : tables) {
      F.components.push_back([t = std::move(t)](std::span<const std::uint32_t> x) {
        std::size_t p = 0;
        for (std::size_t s = 0; s < x.size(); ++s) p |= std::size_t{x[s]} << (kWidth * s);
        return t[p];
      });
    }
    return F;
  }

  /// Text form: the share count n, then n tables of 16^n decimal entries.
  static SharedFunction parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    unsigned n = 0;
    if (!(in >> n) || n == 0 || n > kMaxTabulatedShares) throw InvalidInput("bad share count");
    const std::size_t points = std::size_t{1} << (kWidth * n);
    std::vector<std::vector<std::uint32_t>> tables(n, std::vector<std::uint32_t>(points));
    for (auto& t : tables) {
      for (auto& v : t) {
        if (!(in >> v)) throw InvalidInput("truncated component table");
      }
    }
    return from_tables(n, std::move(tables));
  }

  std::string format() const {
    std::string out = std::to_string(shares) + "\n";
    for (const auto& t : tabulate()) {
      for (std::size_t p = 0; p < t.size(); ++p) {
        out += std::to_string(t[p]);
        out += (p % 16 == 15) ? '\n' : ' ';
      }
    }
    return out;
  }
};

namespace detail {

/// Calls fn(x) on every tuple of n shares when 16^n <= 2^16, otherwise on
/// `samples` seeded random tuples.
template <class Fn>
bool for_share_tuples(unsigned n, std::uint64_t samples, std::uint64_t seed, Fn&& fn) {
  std::vector<std::uint32_t> x(n);
  if (n <= 4) {
    const std::size_t points = std::size_t{1} << (kWidth * n);
    for (std::size_t p = 0; p < points; ++p) {
      for (unsigned s = 0; s < n; ++s) x[s] = (p >> (kWidth * s)) & (kValues - 1);
      if (!fn(std::span<const std::uint32_t>(x))) return false;
    }
    return true;
  }
  SplitMix64 rng(seed);
  for (std::uint64_t i = 0; i < samples; ++i) {
    for (auto& v : x) v = static_cast<std::uint32_t>(rng.below(kValues));
    if (!fn(std::span<const std::uint32_t>(x))) return false;
  }
  return true;
}

}  // namespace detail

/// XOR of the components equals f of the XOR of the shares. Exhaustive up
/// to n = 4 (65536 tuples); beyond that 10^5 sampled tuples, which can miss
/// a sparse failure.
inline bool is_sharing(const SharedFunction& F, const VectorialMap& f,
                       std::uint64_t samples = 100'000, std::uint64_t seed = 0) {
  if (f.n != kWidth) throw InvalidInput("shared functions act on F_2^4");
  if (F.components.size() != F.shares || F.shares == 0) throw InvalidInput("malformed sharing");
  return detail::for_share_tuples(F.shares, samples, seed, [&](std::span<const std::uint32_t> x) {
    std::uint32_t sum_in = 0, sum_out = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      sum_in ^= x[i];
      sum_out ^= F.eval(i, x);
    }
    return sum_out == f.table[sum_in];
  });
}

/// F_i ignores x_i for every i.
inline bool is_noncomplete(const SharedFunction& F, std::uint64_t samples = 100'000,
                           std::uint64_t seed = 0) {
  return detail::for_share_tuples(F.shares, samples, seed, [&](std::span<const std::uint32_t> x) {
    std::vector<std::uint32_t> y(x.begin(), x.end());
    for (std::size_t i = 0; i < y.size(); ++i) {
      const std::uint32_t base = F.eval(i, x);
      const std::uint32_t keep = y[i];
      for (std::uint32_t v = 0; v < kValues; ++v) {
        y[i] = v;
        if (F.eval(i, y) != base) return false;
      }
      y[i] = keep;
    }
    return true;
  });
}

/// Whether F, as a map on (F_2^4)^n, is a bijection (n <= 3).
inline bool is_invertible(const SharedFunction& F) {
  const auto tables = F.tabulate();
  const std::size_t points = tables.empty() ? 0 : tables[0].size();
  std::vector<bool> seen(points, false);
  for (std::size_t p = 0; p < points; ++p) {
    std::size_t image = 0;
    for (std::size_t i = 0; i < tables.size(); ++i) image |= std::size_t{tables[i][p]} << (kWidth * i);
    if (seen[image]) return false;
    seen[image] = true;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Affine maps on F_2^4

struct AffinePermutation {
  std::array<std::uint8_t, kWidth> rows{};  // row r: bit c is A[r][c]
  std::uint8_t offset = 0;

  static AffinePermutation identity() { return {{1, 2, 4, 8}, 0}; }

  std::uint32_t linear(std::uint32_t x) const {
    std::uint32_t y = 0;
    for (unsigned r = 0; r < kWidth; ++r) y |= static_cast<std::uint32_t>(std::popcount(rows[r] & x) & 1) << r;
    return y;
  }
  std::uint32_t operator()(std::uint32_t x) const { return linear(x) ^ offset; }

  bool invertible() const {
    std::array<std::uint8_t, kWidth> m = rows;
    unsigned rank = 0;
    for (unsigned col = 0; col < kWidth; ++col) {
      unsigned pivot = rank;
      while (pivot < kWidth && !((m[pivot] >> col) & 1u)) ++pivot;
      if (pivot == kWidth) continue;
      std::swap(m[rank], m[pivot]);
      for (unsigned r = 0; r < kWidth; ++r) {
        if (r != rank && ((m[r] >> col) & 1u)) m[r] ^= m[rank];
      }
      ++rank;
    }
    return rank == kWidth;
  }

  VectorialMap as_map() const {
    std::vector<std::uint32_t> t(kValues);
    for (std::uint32_t x = 0; x < kValues; ++x) t[x] = (*this)(x);
    return {kWidth, std::move(t)};
  }

  /// Four rows of four 0/1 digits (column 0 first), then a 4-digit offset
  /// (bit 0 first).
  static AffinePermutation parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    AffinePermutation a;
    auto read_bits = [&](std::uint8_t& out) {
      std::string tok;
      if (!(in >> tok) || tok.size() != kWidth || tok.find_first_not_of("01") != std::string::npos) {
        throw InvalidInput("expected a 4-digit binary row");
      }
      out = 0;
      for (unsigned c = 0; c < kWidth; ++c) out |= static_cast<std::uint8_t>((tok[c] - '0') << c);
    };
    for (auto& r : a.rows) read_bits(r);
    read_bits(a.offset);
    return a;
  }
};

inline AffinePermutation random_affine(SplitMix64& rng) {
  for (;;) {
    AffinePermutation a;
    for (auto& r : a.rows) r = static_cast<std::uint8_t>(rng.below(kValues));
    a.offset = static_cast<std::uint8_t>(rng.below(kValues));
    if (a.invertible()) return a;
  }
}

/// G sharing b o f o a from a sharing F of f.
inline SharedFunction transport_affine(const SharedFunction& F, const AffinePermutation& a,
                                       const AffinePermutation& b) {
  if (!a.invertible() || !b.invertible()) throw InvalidInput("affine map is not invertible");
  if (F.shares > 16) throw InvalidInput("transport supports at most 16 shares");
  SharedFunction G;
  G.shares = F.shares;
  for (std::size_t i = 0; i < F.components.size(); ++i) {
    G.components.push_back([F, a, b, i](std::span<const std::uint32_t> x) {
      std::array<std::uint32_t, 16> ax{};
      for (std::size_t s = 0; s < x.size(); ++s) ax[s] = a.linear(x[s]);
      ax[0] ^= a.offset;
      const std::uint32_t out = b.linear(F.eval(i, std::span<const std::uint32_t>(ax.data(), x.size())));
      return i == 0 ? out ^ b.offset : out;
    });
  }
  return G;
}

// ---------------------------------------------------------------------------
// The n = 3 construction

/// XOR over all 2^n sub-sums of the shares vanishes for every tuple. Signs
/// drop out in characteristic 2.
inline bool hypercube_condition(const VectorialMap& f, unsigned n = 3) {
  if (f.n != kWidth) throw InvalidInput("shared functions act on F_2^4");
  if (n == 0 || n > 4) throw InvalidInput("hypercube condition is checked for n <= 4");
  return detail::for_share_tuples(n, 0, 0, [&](std::span<const std::uint32_t> x) {
    std::uint32_t acc = 0;
    for (std::uint32_t sigma = 0; sigma < (1u << n); ++sigma) {
      std::uint32_t s = 0;
      for (unsigned i = 0; i < n; ++i) {
        if ((sigma >> i) & 1u) s ^= x[i];
      }
      acc ^= f.table[s];
    }
    return acc == 0;
  });
}

/// F_1 = f(x2) + f(x2 + x3), F_2 = f(x3) + f(x1 + x3), F_3 = f(x1) + f(x1 + x2),
/// with f(0) added to F_1 so that the sum is f(x1 + x2 + x3) when f(0) != 0.
inline SharedFunction construct_n3(const VectorialMap& f) {
  if (!hypercube_condition(f, 3)) throw InvalidInput("f fails the n = 3 hypercube condition");
  const std::vector<std::uint32_t> t = f.table;
  SharedFunction F;
  F.shares = 3;
  F.components.push_back([t](std::span<const std::uint32_t> x) { return t[x[1]] ^ t[x[1] ^ x[2]] ^ t[0]; });
  F.components.push_back([t](std::span<const std::uint32_t> x) { return t[x[2]] ^ t[x[0] ^ x[2]]; });
  F.components.push_back([t](std::span<const std::uint32_t> x) { return t[x[0]] ^ t[x[0] ^ x[1]]; });
  return F;
}

/// F_1 = f(sum), the rest zero: a sharing that is not non-complete.
inline SharedFunction trivial_sharing(const VectorialMap& f, unsigned n = 3) {
  const std::vector<std::uint32_t> t = f.table;
  SharedFunction F;
  F.shares = n;
  F.components.push_back([t](std::span<const std::uint32_t> x) {
    std::uint32_t s = 0;
    for (std::uint32_t v : x) s ^= v;
    return t[s];
  });
  for (unsigned i = 1; i < n; ++i) F.components.push_back([](std::span<const std::uint32_t>) { return 0u; });
  return F;
}

// ---------------------------------------------------------------------------
// Test material: random maps of F_2^4 with bounded degree

/// Triangular map y_i = x_i + q_i(x_0..x_{i-1}) with every q_i of degree
/// <= `degree`; always a permutation.
inline VectorialMap random_triangular(SplitMix64& rng, unsigned degree) {
  std::array<std::vector<std::uint8_t>, kWidth> anf;  // anf[i][u] over monomials in x_0..x_{i-1}
  for (unsigned i = 0; i < kWidth; ++i) {
    anf[i].assign(std::size_t{1} << i, 0);
    for (std::uint32_t u = 0; u < anf[i].size(); ++u) {
      if (static_cast<unsigned>(std::popcount(u)) <= degree) anf[i][u] = rng.below(2) != 0;
    }
  }
  std::vector<std::uint32_t> t(kValues);
  for (std::uint32_t x = 0; x < kValues; ++x) {
    std::uint32_t y = x;
    for (unsigned i = 0; i < kWidth; ++i) {
      const std::uint32_t low = x & ((1u << i) - 1);
      std::uint32_t q = 0;
      for (std::uint32_t u = 0; u < anf[i].size(); ++u) q ^= anf[i][u] & ((low & u) == u);
      y ^= q << i;
    }
    t[x] = y;
  }
  return {kWidth, std::move(t)};
}

/// a2 o T o a1 with T triangular of max degree exactly `degree` (2 or 3).
inline VectorialMap random_permutation_of_degree(SplitMix64& rng, int degree) {
  for (;;) {
    VectorialMap core = random_triangular(rng, static_cast<unsigned>(degree));
    if (boolfun::max_component_degree(core) != degree) continue;
    return boolfun::compose(random_affine(rng).as_map(), boolfun::compose(core, random_affine(rng).as_map()));
  }
}

/// Random function F_2^4 -> F_2^4 whose coordinates have degree <= bound.
inline VectorialMap random_function_of_degree(SplitMix64& rng, unsigned bound) {
  std::vector<std::uint32_t> t(kValues, 0);
  for (unsigned bit = 0; bit < kWidth; ++bit) {
    std::vector<std::uint8_t> anf(kValues, 0);
    for (std::uint32_t u = 0; u < kValues; ++u) {
      if (static_cast<unsigned>(std::popcount(u)) <= bound) anf[u] = rng.below(2) != 0;
    }
    // The Moebius transform is an involution: ANF -> truth table.
    const std::vector<std::uint8_t> tt = boolfun::mobius_transform(anf);
    for (std::uint32_t x = 0; x < kValues; ++x) t[x] |= static_cast<std::uint32_t>(tt[x]) << bit;
  }
  return {kWidth, std::move(t)};
}

}  // namespace cryptobench::sharing
