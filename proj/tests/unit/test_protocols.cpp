#include <catch_amalgamated.hpp>

#include <boost/math/distributions/chi_squared.hpp>

#include "cryptobench/protocols.hpp"

using namespace cryptobench;
using namespace cryptobench::protocols;

TEST_CASE("secure sum worked example", "[protocols]") {
  const SecureSumResult r = secure_sum({5, 7, 8}, 10, 1);
  CHECK(r.total == 20);
  CHECK(r.affordable);
  CHECK(r.session.modulus == 30);
  CHECK(r.session.log.size() == 6);
  for (std::size_t i = 0; i < 3; ++i) {
    std::uint64_t acc = 0;
    for (std::uint64_t v : r.session.shares[i]) acc += v;
    CHECK(acc % 30 == r.session.inputs[i]);
  }
  CHECK_FALSE(secure_sum({0, 0, 0}, 10, 1).affordable);
  CHECK(secure_sum({9}, 10, 1).total == 9);
  CHECK_THROWS_AS(secure_sum({10, 0}, 10, 1), InvalidInput);
  CHECK_THROWS_AS(secure_sum({}, 10, 1), InvalidInput);
  CHECK_THROWS_AS(secure_sum({1}, 0, 1), InvalidInput);
}

TEST_CASE("a received share is uniform whatever the input", "[protocols]") {
  // Goodness of fit of s_{0,1} against uniform on Z_30, for a fixed input.
  constexpr int kRuns = 10'000;
  for (std::uint64_t x : {0ull, 9ull}) {
    std::vector<int> hist(30, 0);
    for (int run = 0; run < kRuns; ++run) {
      const SecureSumResult r = secure_sum({x, 3, 4}, 10, 1000 + static_cast<std::uint64_t>(run));
      ++hist[r.session.shares[0][1]];
    }
    const double expected = kRuns / 30.0;
    double stat = 0;
    for (int h : hist) stat += (h - expected) * (h - expected) / expected;
    const boost::math::chi_squared dist(29);
    CHECK(boost::math::cdf(boost::math::complement(dist, stat)) > 0.01);
  }
}

TEST_CASE("key flipping", "[protocols]") {
  const auto k = KeyState<16>::from_string("11001 01101110 011");
  const auto k2 = keyflip_step(k, 5, 12);
  CHECK(k2 == KeyState<16>::from_string("11001 10010001 011"));
  CHECK(key_less(k, k2));
  CHECK(k2.value() > k.value());
  CHECK_THROWS_AS(keyflip_step(k, 0, 5), InvalidInput);
  CHECK_THROWS_AS(keyflip_step(k, 12, 5), InvalidInput);
  CHECK_THROWS_AS(KeyState<4>::from_string("101"), InvalidInput);
  CHECK_THROWS_AS(KeyState<4>::from_string("1012"), InvalidInput);

  SplitMix64 rng(5);
  CHECK_FALSE(KeyState<8>::all_ones().has_legal_move());
  CHECK_FALSE(random_legal_move(KeyState<8>::all_ones(), rng).has_value());

  // A lone zero flips to one and the value grows by exactly 2^(width - 1 - t).
  for (std::size_t t : {0u, 511u, 1023u}) {
    auto one_zero = KeyState<1024>::all_ones();
    one_zero.bits[t] = false;
    const auto after = keyflip_step(one_zero, t, t);
    CHECK(after == keyflip_terminal<1024>());
    CHECK(after.value() - one_zero.value() == ArbitraryInt(1) << (1023 - t));
  }

  const auto [end, steps] = play_until_stuck(KeyState<16>{}, rng);
  CHECK(end == KeyState<16>::all_ones());
  CHECK(steps > 0);
}

TEMPLATE_TEST_CASE_SIG("every move increases the key", "[protocols]", ((std::size_t W), W), 8, 64, 1024) {
  SplitMix64 rng(W);
  KeyState<W> k;
  for (int step = 0; step < 500; ++step) {
    auto move = random_legal_move(k, rng);
    if (!move) break;
    const KeyState<W> next = keyflip_step(k, move->first, move->second);
    REQUIRE(key_less(k, next));
    REQUIRE(next.value() > k.value());
    k = next;
  }
}

TEST_CASE("repunit multiples", "[protocols]") {
  CHECK(repunit_multiple(3).ones == 3);
  CHECK(repunit_multiple(7).ones == 6);
  const RepunitShape s = repunit_multiple(2019, 1);
  CHECK(s.ones == 672);
  CHECK(parse_decimal(s.digits()) % 2019 == 0);
  // Minimality against direct big-integer division.
  ArbitraryInt rep = 0;
  for (int a = 1; a < 672; ++a) {
    rep = rep * 10 + 1;
    REQUIRE(rep % 2019 != 0);
  }
  CHECK_THROWS_AS(repunit_multiple(10), InvalidInput);
  CHECK_THROWS_AS(repunit_multiple(0), InvalidInput);
}
