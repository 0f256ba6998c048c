#include <catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "cryptobench/bundle.hpp"
#include "cryptobench/curl27.hpp"
#include "cryptobench/curl27_attack.hpp"
#include "cryptobench/util/random.hpp"

using namespace cryptobench;
using namespace cryptobench::curl27;

namespace {

// F transcribed on residues {0, 1, 2} with 2 read back as -1; shares no
// code with the balanced evaluation in the library.
Trit sbox_direct(int a, int b, int c) {
  auto r = [](int t) { return t < 0 ? 2 : t; };
  const int x = r(a), y = r(b), z = r(c);
  int v = x * x * y * y * z + x * x * y * z * z + 2 * x * y * y * z * z + x * x * y * y + 2 * x * x * y * z +
          x * x * z * z + x * y * y * z + 2 * x * x * z + x * y * y + 2 * x * z * z + y * y * z + y * z * z +
          2 * x * x + 2 * y * y + y * z + 2 * z * z + 2 * z + 1;
  v %= 3;
  return static_cast<Trit>(v == 2 ? -1 : v);
}

std::pair<TritString, TritString> known_collision() {
  const auto ls = bundle::lines(bundle::asset("collision"));
  return {parse_fragment_notation(ls.at(0)), parse_fragment_notation(ls.at(1))};
}

TritString random_trits(SplitMix64& rng, std::size_t n) {
  TritString t(n);
  for (auto& x : t) x = static_cast<Trit>(static_cast<int>(rng.below(3)) - 1);
  return t;
}

}  // namespace

TEST_CASE("sbox is a permutation with a constant diagonal", "[curl27]") {
  std::set<std::array<Trit, 3>> images;
  for (int a = -1; a <= 1; ++a) {
    for (int b = -1; b <= 1; ++b) {
      for (int c = -1; c <= 1; ++c) {
        const auto out = detail::kSbox.out[detail::triple_index(Trit(a), Trit(b), Trit(c))];
        images.insert(out);
        REQUIRE(out == std::array<Trit, 3>{sbox_direct(a, b, c), sbox_direct(b, c, a), sbox_direct(c, a, b)});
        if (a == b && b == c) {
          CHECK(out[0] == out[1]);
          CHECK(out[1] == out[2]);
        }
      }
    }
  }
  CHECK(images.size() == 27);
  const auto zero = detail::kSbox.out[detail::triple_index(0, 0, 0)];
  CHECK(zero == std::array<Trit, 3>{1, 1, 1});
}

TEST_CASE("known collision", "[curl27]") {
  const auto [x, x2] = known_collision();
  REQUIRE(x.size() == 9841);
  REQUIRE(x2.size() == 9841);
  CHECK(x != x2);
  const TritString h = curl_hash(x);
  CHECK(h.size() == kWordTrits);
  CHECK(h == curl_hash(x2));
  CHECK(verify_collision(x, x2));
  CHECK_FALSE(verify_collision(x, x));
  TritString longer = x;
  longer.push_back(0);
  CHECK_FALSE(verify_collision(x, longer));
  // Every full 9-fragment of the block after the zero prefix is constant.
  const std::span<const Trit> block(x.data() + 243 * 39, 243);
  CHECK(is_fragmented(block, 9));
}

TEST_CASE("hash edge cases", "[curl27]") {
  CHECK(curl_hash({}) == TritString(kWordTrits, 0));
  // One zero block unrolled by hand.
  CurlState s;
  const auto len = balanced_encode(243);
  std::copy(len.begin(), len.end(), s.word(1).begin());
  s = curlf(s);
  const TritString direct(s.word(0).begin(), s.word(0).end());
  CHECK(curl_hash(TritString(243, 0)) == direct);
  // Same padded block, different length word.
  CHECK(curl_hash(TritString(242, 0)) != curl_hash(TritString(243, 0)));
}

TEST_CASE("fragmentation and expansion predicates", "[curl27]") {
  CHECK(is_fragmented(TritString{0, 0, 0, 1, 1, 1}, 3));
  CHECK_FALSE(is_fragmented(TritString{0, 0, 1, 1, 1, 1}, 3));
  CHECK_THROWS_AS(is_fragmented(TritString{0, 0}, 3), InvalidInput);
  TritString w;
  for (int i = 0; i < 81; ++i) w.insert(w.end(), {0, 1, -1});
  CHECK(is_expanded3(w));
  CHECK(is_expanded3(TritString(243, 0)));
  w[3] = 1;
  CHECK_FALSE(is_expanded3(w));
  CHECK_THROWS_AS(is_expanded3(TritString(10, 0)), InvalidInput);
}

TEST_CASE("curlf preserves fragmentation including m = 729", "[curl27]") {
  SplitMix64 rng(11);
  for (std::size_t m : {3u, 9u, 27u, 81u, 243u, 729u}) {
    for (int trial = 0; trial < 50; ++trial) {
      const TritString u = random_trits(rng, kStateTrits / m);
      const TritString full = expand_fragments(u, m);
      CurlState s;
      std::copy(full.begin(), full.end(), s.trits().begin());
      s = curlf(s);
      REQUIRE(is_fragmented(s.trits(), m));
    }
  }
}

TEST_CASE("fragmented permutation agrees with the full one", "[curl27]") {
  SplitMix64 rng(12);
  for (std::size_t m : {3u, 9u, 27u}) {
    FragmentedCurl fc(m);
    for (int trial = 0; trial < 20; ++trial) {
      TritString reduced = random_trits(rng, kStateTrits / m);
      CurlState s;
      const TritString full = expand_fragments(reduced, m);
      std::copy(full.begin(), full.end(), s.trits().begin());
      s = curlf(s);
      fc.permute(reduced);
      REQUIRE(fc.reduce(s.trits()) == reduced);
    }
  }
  CHECK_THROWS_AS(FragmentedCurl(4), InvalidInput);
}

TEST_CASE("fragment notation", "[curl27]") {
  CHECK(parse_fragment_notation("0^{3} 1") == TritString{0, 0, 0, 1});
  CHECK(parse_fragment_notation("(1T)^[2]") == TritString{1, 1, -1, -1});
  CHECK(parse_fragment_notation("0^{2*3}").size() == 6);
  CHECK_THROWS_AS(parse_fragment_notation("2"), InvalidInput);
  CHECK(parse_trits("-1, 0,1") == TritString{-1, 0, 1});
  CHECK(format_trits(TritString{-1, 0, 1}) == "-1,0,1");
  CHECK_THROWS_AS(parse_trits("2"), InvalidInput);
}

TEST_CASE("reduced digests match full hashes of the candidates", "[curl27]") {
  const detail::FragmentationSearchSpace space(9, 8'000'000, 77);
  const FragmentedCurl fc(9);
  TritString digest(kWordTrits / 9), state, free;
  for (std::uint64_t index : {0ull, 1ull, 12345ull}) {
    const TritString msg = space.message(index);
    REQUIRE(msg.size() == 9841);
    space.reduced_digest(index, digest, state, free);
    CHECK(fc.reduce(curl_hash(msg)) == digest);
    CHECK(is_fragmented(std::span<const Trit>(msg.data(), 9837), 9));
    CHECK(std::all_of(msg.end() - 4, msg.end(), [](Trit t) { return t == 0; }));
  }
  CHECK(space.message(1) != space.message(2));
}

TEST_CASE("attack scope limits", "[curl27]") {
  CollisionSearchOptions opts;
  opts.fragment = 27;
  CHECK_THROWS_AS(fragmentation_collision_attack(opts), InvalidInput);  // 3.8e12-trit messages
  opts.fragment = 3;
  opts.budget = 1000;
  CHECK_THROWS_AS(fragmentation_collision_attack(opts), BudgetExhausted);  // 13-trit messages, 81-trit digest
  opts.fragment = 9;
  opts.budget = 100;
  CHECK_THROWS_AS(fragmentation_collision_attack(opts), BudgetExhausted);
  opts.budget = 1;
  CHECK_THROWS_AS(fragmentation_collision_attack(opts), InvalidInput);
}

TEST_CASE("fingerprint table reports equal tags", "[curl27]") {
  detail::FingerprintTable table(100);
  int calls = 0;
  CHECK_FALSE(table.probe_insert(42, 0, [&](std::uint64_t) { ++calls; return false; }));
  CHECK_FALSE(table.probe_insert(43, 1, [&](std::uint64_t) { ++calls; return false; }));
  std::uint64_t seen = 99;
  CHECK(table.probe_insert(42, 2, [&](std::uint64_t other) { seen = other; return true; }));
  CHECK(seen == 0);
  CHECK(calls == 0);
}

TEST_CASE("expected cost figures", "[curl27]") {
  CHECK(expected_collision_cost(9) == Catch::Approx(std::sqrt(std::acos(-1.0) / 2 * std::pow(3.0, 27))));
  CHECK(expected_collision_cost(9) < 8e6);
  CHECK(fragmented_message_length(9) == 9841);
}
