#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "cryptobench/algebra/gf2n.hpp"
#include "cryptobench/error.hpp"

namespace cryptobench::boolfun {

/// A map F_2^n -> F_2^n as a lookup table of 2^n entries.
struct VectorialMap {
  unsigned n = 0;
  std::vector<std::uint32_t> table;

  VectorialMap() = default;
  VectorialMap(unsigned dim, std::vector<std::uint32_t> values) : n(dim), table(std::move(values)) {
    if (dim == 0 || dim > 16) throw InvalidInput("dimension must be in [1, 16]");
    if (table.size() != (std::size_t{1} << dim)) {
      throw InvalidInput("table must have 2^" + std::to_string(dim) + " entries");
    }
    for (std::uint32_t v : table) {
      if (v >= size()) throw InvalidInput("output " + std::to_string(v) + " is not an n-bit value");
    }
  }

  std::uint32_t size() const noexcept { return 1u << n; }
  std::uint32_t operator()(std::uint32_t x) const { return table.at(x); }

  static VectorialMap identity(unsigned dim) {
    std::vector<std::uint32_t> t(std::size_t{1} << dim);
    std::iota(t.begin(), t.end(), 0u);
    return {dim, std::move(t)};
  }

  /// 2^n whitespace-separated decimal outputs; n is inferred. Lines
  /// starting with ';' are comments.
  static VectorialMap parse(std::string_view text) {
    std::istringstream lines{std::string(text)};
    std::vector<std::uint32_t> values;
    std::string line, tok;
    while (std::getline(lines, line)) {
      if (!line.empty() && line[0] == ';') continue;
      std::istringstream in(line);
      while (in >> tok) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(tok.c_str(), &end, 10);
        if (end == tok.c_str() || *end != '\0') throw InvalidInput("invalid table entry '" + tok + "'");
        values.push_back(static_cast<std::uint32_t>(v));
      }
    }
    if (values.empty() || !std::has_single_bit(values.size())) {
      throw InvalidInput("table length must be a power of two");
    }
    return {static_cast<unsigned>(std::countr_zero(values.size())), std::move(values)};
  }

  friend bool operator==(const VectorialMap&, const VectorialMap&) = default;
};

inline std::string format_map(const VectorialMap& f) {
  std::string out;
  for (std::size_t i = 0; i < f.table.size(); ++i) {
    if (i != 0) out += (i % 16 == 0) ? '\n' : ' ';
    out += std::to_string(f.table[i]);
  }
  return out;
}

/// x -> x^e in GF(2^n), with 0 -> 0 for every e (so e = -1 gives the inverse
/// map extended by 0 -> 0).
inline VectorialMap power_map(const Gf2nField& field, std::uint64_t e) {
  std::vector<std::uint32_t> t(field.size());
  for (std::uint32_t x = 1; x < field.size(); ++x) t[x] = field.pow(x, e);
  return {field.degree(), std::move(t)};
}

inline VectorialMap inverse_map(const Gf2nField& field) {
  return power_map(field, field.size() - 2);
}

inline bool is_permutation(const VectorialMap& g) {
  std::vector<bool> seen(g.size(), false);
  for (std::uint32_t v : g.table) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

inline bool is_involution(const VectorialMap& g) {
  for (std::uint32_t x = 0; x < g.size(); ++x) {
    if (g.table[g.table[x]] != x) return false;
  }
  return true;
}

inline VectorialMap compose(const VectorialMap& outer, const VectorialMap& inner) {
  if (outer.n != inner.n) throw InvalidInput("dimension mismatch");
  std::vector<std::uint32_t> t(inner.size());
  for (std::uint32_t x = 0; x < inner.size(); ++x) t[x] = outer.table[inner.table[x]];
  return {inner.n, std::move(t)};
}

// ---------------------------------------------------------------------------
// Involutions

struct InvolutionProfile {
  std::vector<std::uint32_t> fixed_points;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> transpositions;  // first < second
  std::vector<std::uint32_t> lambda_multiset;  // a ^ a' per transposition
  std::vector<std::uint32_t> b_multiset;       // c ^ c' per pair of fixed points
  std::set<std::uint32_t> lambda_set;
  std::set<std::uint32_t> b_set;
};

inline InvolutionProfile involution_profile(const VectorialMap& g) {
  if (!is_involution(g)) throw InvalidInput("map is not an involution");
  InvolutionProfile p;
  for (std::uint32_t x = 0; x < g.size(); ++x) {
    const std::uint32_t y = g.table[x];
    if (y == x) {
      p.fixed_points.push_back(x);
    } else if (x < y) {
      p.transpositions.emplace_back(x, y);
      p.lambda_multiset.push_back(x ^ y);
    }
  }
  for (std::size_t i = 0; i < p.fixed_points.size(); ++i) {
    for (std::size_t j = i + 1; j < p.fixed_points.size(); ++j) {
      p.b_multiset.push_back(p.fixed_points[i] ^ p.fixed_points[j]);
    }
  }
  p.lambda_set.insert(p.lambda_multiset.begin(), p.lambda_multiset.end());
  p.b_set.insert(p.b_multiset.begin(), p.b_multiset.end());
  return p;
}

// ---------------------------------------------------------------------------
// Differential properties

inline std::uint32_t difference_count(const VectorialMap& g, std::uint32_t a, std::uint32_t b) {
  if (a >= g.size() || b >= g.size()) throw InvalidInput("difference out of range");
  std::uint32_t count = 0;
  for (std::uint32_t x = 0; x < g.size(); ++x) count += (g.table[x ^ a] ^ g.table[x]) == b;
  return count;
}

/// max over a != 0 and all b of d_{a,b}; one DDT row at a time.
inline std::uint32_t differential_uniformity(const VectorialMap& g) {
  std::uint32_t best = 0;
  std::vector<std::uint32_t> row(g.size());
  for (std::uint32_t a = 1; a < g.size(); ++a) {
    std::fill(row.begin(), row.end(), 0u);
    for (std::uint32_t x = 0; x < g.size(); ++x) ++row[g.table[x ^ a] ^ g.table[x]];
    best = std::max(best, *std::max_element(row.begin(), row.end()));
  }
  return best;
}

inline bool is_apn(const VectorialMap& g) { return g.n >= 1 && differential_uniformity(g) <= 2; }

/// |FixP| <= 1 + sqrt(2^(n-1) - 1) and B ∩ Λ = ∅ for an APN involution.
inline bool fixed_point_bound_check(const VectorialMap& g) {
  if (!is_involution(g) || !is_apn(g)) throw InvalidInput("map is not an APN involution");
  const InvolutionProfile p = involution_profile(g);
  const double bound = 1.0 + std::sqrt(std::ldexp(1.0, static_cast<int>(g.n) - 1) - 1.0);
  if (static_cast<double>(p.fixed_points.size()) > bound) return false;
  for (std::uint32_t v : p.b_set) {
    if (p.lambda_set.contains(v)) return false;
  }
  return true;
}

/// All involutions of {0, ..., 2^n - 1} (fixed points allowed) that are APN.
inline std::vector<VectorialMap> enumerate_apn_involutions(unsigned n) {
  if (n < 1 || n > 3) throw InvalidInput("involution enumeration supports n = 1, 2, 3 only");
  const std::uint32_t size = 1u << n;
  std::vector<VectorialMap> found;
  std::vector<std::uint32_t> t(size, size);  // size = unassigned
  auto rec = [&](auto&& self) -> void {
    std::uint32_t i = 0;
    while (i < size && t[i] != size) ++i;
    if (i == size) {
      VectorialMap g(n, t);
      if (is_apn(g)) found.push_back(std::move(g));
      return;
    }
    t[i] = i;
    self(self);
    for (std::uint32_t j = i + 1; j < size; ++j) {
      if (t[j] != size) continue;
      t[i] = j;
      t[j] = i;
      self(self);
      t[j] = size;
    }
    t[i] = size;
  };
  rec(rec);
  return found;
}

// ---------------------------------------------------------------------------
// Boolean functions: ANF and Walsh spectrum

/// Truth table (0/1 per input) to ANF coefficients, in place.
inline std::vector<std::uint8_t> mobius_transform(std::vector<std::uint8_t> f) {
  for (std::size_t step = 1; step < f.size(); step <<= 1) {
    for (std::size_t x = 0; x < f.size(); ++x) {
      if (x & step) f[x] ^= f[x ^ step];
    }
  }
  return f;
}

/// Highest monomial weight in the ANF; -1 for the zero function.
inline int algebraic_degree(const std::vector<std::uint8_t>& truth_table) {
  const std::vector<std::uint8_t> anf = mobius_transform(truth_table);
  int deg = -1;
  for (std::size_t u = 0; u < anf.size(); ++u) {
    if (anf[u]) deg = std::max(deg, std::popcount(static_cast<unsigned>(u)));
  }
  return deg;
}

inline std::vector<std::uint8_t> component(const VectorialMap& s, std::uint32_t mask) {
  std::vector<std::uint8_t> f(s.size());
  for (std::uint32_t x = 0; x < s.size(); ++x) f[x] = std::popcount(s.table[x] & mask) & 1;
  return f;
}

inline std::vector<int> walsh_spectrum(const std::vector<std::uint8_t>& f) {
  std::vector<int> w(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) w[x] = f[x] ? -1 : 1;
  for (std::size_t h = 1; h < w.size(); h <<= 1) {
    for (std::size_t i = 0; i < w.size(); i += 2 * h) {
      for (std::size_t j = i; j < i + h; ++j) {
        const int a = w[j], b = w[j + h];
        w[j] = a + b;
        w[j + h] = a - b;
      }
    }
  }
  return w;
}

/// Minimum over nonzero masks of the component degree.
inline int min_component_degree(const VectorialMap& s) {
  int best = static_cast<int>(s.n) + 1;
  for (std::uint32_t c = 1; c < s.size(); ++c) best = std::min(best, algebraic_degree(component(s, c)));
  return best;
}

/// Maximum over nonzero masks of the component degree.
inline int max_component_degree(const VectorialMap& s) {
  int best = -1;
  for (std::uint32_t c = 1; c < s.size(); ++c) best = std::max(best, algebraic_degree(component(s, c)));
  return best;
}

inline int nonlinearity(const VectorialMap& s) {
  int max_abs = 0;
  for (std::uint32_t c = 1; c < s.size(); ++c) {
    for (int v : walsh_spectrum(component(s, c))) max_abs = std::max(max_abs, std::abs(v));
  }
  return static_cast<int>(s.size() / 2) - max_abs / 2;
}

namespace detail {

/// Incremental GF(2) basis of bit vectors with leading-bit pivots.
class Gf2Basis {
 public:
  explicit Gf2Basis(std::size_t bits) : words_((bits + 63) / 64) {}

  /// Inserts v; returns false when v is already in the span.
  bool insert(std::vector<std::uint64_t> v) {
    for (const auto& [pivot, row] : rows_) {
      if ((v[pivot / 64] >> (pivot % 64)) & 1u) {
        for (std::size_t i = 0; i < words_; ++i) v[i] ^= row[i];
      }
    }
    for (std::size_t i = 0; i < words_; ++i) {
      if (v[i] != 0) {
        const std::size_t pivot = 64 * i + static_cast<std::size_t>(std::countr_zero(v[i]));
        // Keep the basis fully reduced on pivots so one pass suffices.
        for (auto& [p, row] : rows_) {
          if ((row[pivot / 64] >> (pivot % 64)) & 1u) {
            for (std::size_t k = 0; k < words_; ++k) row[k] ^= v[k];
          }
        }
        rows_.emplace_back(pivot, std::move(v));
        return true;
      }
    }
    return false;
  }

 private:
  std::size_t words_;
  std::vector<std::pair<std::size_t, std::vector<std::uint64_t>>> rows_;
};

}  // namespace detail

/// Graph algebraic immunity: least d such that some nonzero function of
/// degree <= d in the 2n variables (x, y) vanishes on {(x, s(x))}. Monomials
/// are inserted in graded lexicographic order; the first one that is
/// dependent on its predecessors (as evaluation vectors on the graph) proves
/// an annihilator of its degree.
inline int graph_algebraic_immunity(const VectorialMap& s) {
  const unsigned vars = 2 * s.n;
  const std::size_t points = s.size();
  std::vector<std::uint32_t> graph(points);
  for (std::uint32_t x = 0; x < points; ++x) graph[x] = x | (s.table[x] << s.n);

  detail::Gf2Basis basis(points);
  auto evaluate = [&](std::uint32_t mono) {
    std::vector<std::uint64_t> v((points + 63) / 64, 0);
    for (std::size_t i = 0; i < points; ++i) {
      if ((graph[i] & mono) == mono) v[i / 64] |= std::uint64_t{1} << (i % 64);
    }
    return v;
  };

  for (unsigned d = 0; d <= vars; ++d) {
    // Degree-d monomials in lexicographic order of their variable sets.
    std::vector<unsigned> idx(d);
    std::iota(idx.begin(), idx.end(), 0u);
    for (;;) {
      std::uint32_t mono = 0;
      for (unsigned v : idx) mono |= 1u << v;
      if (!basis.insert(evaluate(mono))) return static_cast<int>(d);
      int pos = static_cast<int>(d) - 1;
      while (pos >= 0 && idx[pos] == vars - d + static_cast<unsigned>(pos)) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (unsigned k = static_cast<unsigned>(pos) + 1; k < d; ++k) idx[k] = idx[k - 1] + 1;
    }
  }
  return static_cast<int>(vars);
}

struct SboxMetrics {
  int deg = 0, nl = 0, du = 0, ai = 0;
  friend bool operator==(const SboxMetrics&, const SboxMetrics&) = default;
};

inline SboxMetrics sbox_metrics(const VectorialMap& s) {
  return {min_component_degree(s), nonlinearity(s), static_cast<int>(differential_uniformity(s)),
          graph_algebraic_immunity(s)};
}

// ---------------------------------------------------------------------------
// Conjecture check: for F(b) = b^(4^k - 2^k + 1) on GF(2^n) and
// Δ = {F(b) + F(b + 1) + 1}, every pair of distinct nonzero v1, v2 has
// exactly 2^(2n-3) solutions of v1 x + v2 y + (v1 + v2) z = 0 in Δ^3.

struct ConjectureReport {
  unsigned n = 0, k = 0;
  std::size_t delta_size = 0;
  std::uint64_t expected = 0;
  std::uint64_t pairs = 0;
  std::map<std::uint64_t, std::uint64_t> count_histogram;  // count -> number of pairs
  bool pass = false;
};

inline std::vector<std::uint32_t> conjecture_delta(const Gf2nField& field, unsigned k) {
  const std::uint64_t order = field.size() - 1;
  const std::uint64_t e = ((std::uint64_t{1} << (2 * k)) - (std::uint64_t{1} << k) + 1) % order;
  auto F = [&](std::uint32_t b) { return b == 0 ? 0u : field.pow(b, e == 0 ? order : e); };
  std::set<std::uint32_t> delta;
  for (std::uint32_t b = 0; b < field.size(); ++b) delta.insert(F(b) ^ F(b ^ 1u) ^ 1u);
  return {delta.begin(), delta.end()};
}

inline ConjectureReport conjecture_verify(unsigned n, unsigned k, unsigned workers = 1) {
  if (k == 0 || std::gcd(n, k) != 1) throw InvalidInput("k must be coprime with n");
  if (k > 16) throw InvalidInput("k above 16 is not supported");
  const Gf2nField field(n);
  const std::vector<std::uint32_t> delta = conjecture_delta(field, k);
  std::vector<std::uint8_t> member(field.size(), 0);
  for (std::uint32_t d : delta) member[d] = 1;

  const std::uint32_t q = field.size();
  // Per-v1 histograms merged in order keep the result independent of workers.
  std::vector<std::map<std::uint64_t, std::uint64_t>> partial(q);
  auto work = [&](std::uint32_t v1) {
    std::vector<std::uint32_t> v1x(delta.size());
    for (std::size_t i = 0; i < delta.size(); ++i) v1x[i] = field.mul(v1, delta[i]);
    for (std::uint32_t v2 = 1; v2 < q; ++v2) {
      if (v2 == v1) continue;
      const std::uint32_t inv = field.inv(v1 ^ v2);
      std::uint64_t count = 0;
      for (std::uint32_t y : delta) {
        const std::uint32_t v2y = field.mul(v2, y);
        for (std::uint32_t a : v1x) count += member[field.mul(a ^ v2y, inv)];
      }
      ++partial[v1][count];
    }
  };
  const unsigned threads = std::max(1u, workers);
  if (threads == 1) {
    for (std::uint32_t v1 = 1; v1 < q; ++v1) work(v1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (std::uint32_t v1 = 1 + t; v1 < q; v1 += threads) work(v1);
      });
    }
    for (auto& th : pool) th.join();
  }

  ConjectureReport r;
  r.n = n;
  r.k = k;
  r.delta_size = delta.size();
  r.expected = std::uint64_t{1} << (2 * n - 3);
  for (const auto& h : partial) {
    for (const auto& [count, pairs] : h) {
      r.count_histogram[count] += pairs;
      r.pairs += pairs;
    }
  }
  r.pass = r.count_histogram.size() == 1 && r.count_histogram.begin()->first == r.expected;
  return r;
}

}  // namespace cryptobench::boolfun
