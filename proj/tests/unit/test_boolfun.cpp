#include <catch_amalgamated.hpp>

#include <bit>

#include "cryptobench/boolfun.hpp"
#include "cryptobench/bundle.hpp"
#include "cryptobench/util/random.hpp"

using namespace cryptobench;
using namespace cryptobench::boolfun;

namespace {

// nl by distance to every affine function a.x + c.
int nl_brute(const VectorialMap& s) {
  int best = 1 << 30;
  for (std::uint32_t c = 1; c < s.size(); ++c) {
    for (std::uint32_t a = 0; a < s.size(); ++a) {
      int dist = 0;
      for (std::uint32_t x = 0; x < s.size(); ++x) {
        dist += (std::popcount(c & s(x)) & 1) != (std::popcount(a & x) & 1);
      }
      best = std::min({best, dist, static_cast<int>(s.size()) - dist});
    }
  }
  return best;
}

// Least degree of a nonzero polynomial in (x, y) vanishing on the graph, by
// trying every subset of monomials of bounded degree. Only for n = 2.
int ai_brute(const VectorialMap& s) {
  const unsigned vars = 2 * s.n;
  for (int d = 0; d <= static_cast<int>(vars); ++d) {
    std::vector<std::uint32_t> monos;
    for (std::uint32_t m = 0; m < (1u << vars); ++m) {
      if (std::popcount(m) <= d) monos.push_back(m);
    }
    for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << monos.size()); ++pick) {
      bool zero = true;
      for (std::uint32_t x = 0; x < s.size() && zero; ++x) {
        const std::uint32_t pt = x | (s(x) << s.n);
        int v = 0;
        for (std::size_t i = 0; i < monos.size(); ++i) {
          if (((pick >> i) & 1) && (pt & monos[i]) == monos[i]) v ^= 1;
        }
        zero = v == 0;
      }
      if (zero) return d;
    }
  }
  return static_cast<int>(vars);
}

VectorialMap random_permutation(SplitMix64& rng, unsigned n) {
  std::vector<std::uint32_t> t(std::size_t{1} << n);
  std::iota(t.begin(), t.end(), 0u);
  for (std::size_t i = t.size() - 1; i > 0; --i) std::swap(t[i], t[rng.below(i + 1)]);
  return {n, t};
}

}  // namespace

TEST_CASE("map construction and parsing", "[boolfun]") {
  CHECK_THROWS_AS(VectorialMap(2, {0, 1, 2}), InvalidInput);
  CHECK_THROWS_AS(VectorialMap(2, {0, 1, 2, 4}), InvalidInput);
  const VectorialMap p = VectorialMap::parse("; comment\n0 1\n3 2\n");
  CHECK(p.n == 2);
  CHECK(VectorialMap::parse(format_map(p)).table == p.table);
  CHECK(is_involution(p));
  CHECK(is_permutation(p));
  CHECK_FALSE(is_permutation(VectorialMap(2, {0, 0, 1, 2})));
  CHECK(compose(p, p).table == VectorialMap::identity(2).table);
}

TEST_CASE("involution profile", "[boolfun]") {
  const InvolutionProfile pr = involution_profile(VectorialMap(3, {0, 1, 3, 2, 7, 5, 6, 4}));
  CHECK(pr.fixed_points == std::vector<std::uint32_t>{0, 1, 5, 6});
  CHECK(pr.transpositions.size() == 2);
  CHECK(pr.lambda_set == std::set<std::uint32_t>{1, 3});
  CHECK(pr.b_multiset.size() == 6);
  CHECK_THROWS_AS(involution_profile(VectorialMap(2, {1, 2, 3, 0})), InvalidInput);
}

TEST_CASE("differential uniformity", "[boolfun]") {
  const Gf2nField f5(5), f3(3);
  const VectorialMap inv = inverse_map(f5);
  CHECK(is_apn(inv));
  CHECK(is_involution(inv));
  CHECK(is_apn(power_map(f3, 3)));
  CHECK(differential_uniformity(VectorialMap::identity(4)) == 16);
  CHECK_FALSE(is_apn(VectorialMap::identity(3)));
  CHECK(differential_uniformity(inverse_map(Gf2nField(4))) == 4);
  // Row sums of the difference table are 2^n.
  std::uint32_t total = 0;
  for (std::uint32_t b = 0; b < 32; ++b) total += difference_count(inv, 7, b);
  CHECK(total == 32);
  CHECK(fixed_point_bound_check(inv));
  CHECK_THROWS_AS(fixed_point_bound_check(VectorialMap::identity(3)), InvalidInput);
}

TEST_CASE("apn involution enumeration", "[boolfun]") {
  // Counts from an independent enumeration.
  CHECK(enumerate_apn_involutions(1).size() == 2);
  CHECK(enumerate_apn_involutions(2).empty());
  const auto m3 = enumerate_apn_involutions(3);
  CHECK(m3.size() == 224);
  for (const VectorialMap& g : m3) {
    REQUIRE(is_involution(g));
    REQUIRE(fixed_point_bound_check(g));
  }
  CHECK_THROWS_AS(enumerate_apn_involutions(4), InvalidInput);
}

TEST_CASE("s-box metrics", "[boolfun]") {
  CHECK(sbox_metrics(VectorialMap::identity(4)) == SboxMetrics{1, 0, 16, 1});
  const SboxMetrics aes = sbox_metrics(VectorialMap::parse(bundle::asset("aes_sbox")));
  CHECK(aes == SboxMetrics{7, 112, 4, 2});
  CHECK(algebraic_degree({0, 0, 0, 1}) == 2);
  CHECK(algebraic_degree({0, 0, 0, 0}) == -1);
  CHECK(walsh_spectrum({0, 0, 0, 0}) == std::vector<int>{4, 0, 0, 0});

  SplitMix64 rng(31);
  for (unsigned n : {2u, 3u, 4u}) {
    for (int trial = 0; trial < 10; ++trial) {
      const VectorialMap s = random_permutation(rng, n);
      REQUIRE(nonlinearity(s) == nl_brute(s));
      // du is invariant under conjugation by a bit permutation.
      std::vector<std::uint32_t> swapped(s.size());
      auto swap01 = [](std::uint32_t x) { return (x & ~3u) | ((x & 1u) << 1) | ((x >> 1) & 1u); };
      for (std::uint32_t x = 0; x < s.size(); ++x) swapped[swap01(x)] = swap01(s(x));
      REQUIRE(differential_uniformity(VectorialMap(n, swapped)) == differential_uniformity(s));
    }
  }
  for (int trial = 0; trial < 10; ++trial) {
    const VectorialMap s = random_permutation(rng, 2);
    REQUIRE(graph_algebraic_immunity(s) == ai_brute(s));
  }
  REQUIRE(graph_algebraic_immunity(VectorialMap(2, {0, 0, 0, 0})) == ai_brute(VectorialMap(2, {0, 0, 0, 0})));
}

TEST_CASE("conjecture counts", "[boolfun]") {
  const ConjectureReport r3 = conjecture_verify(3, 1);
  CHECK(r3.pass);
  CHECK(r3.expected == 8);
  CHECK(r3.pairs == 7 * 6);
  const ConjectureReport r6 = conjecture_verify(6, 1, 2);
  CHECK(r6.pass);
  CHECK(r6.expected == 512);
  CHECK(r6.count_histogram == conjecture_verify(6, 1, 1).count_histogram);
  CHECK_THROWS_AS(conjecture_verify(3, 3), InvalidInput);
  CHECK_THROWS_AS(conjecture_verify(4, 2), InvalidInput);
}
