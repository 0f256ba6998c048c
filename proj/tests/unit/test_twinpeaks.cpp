#include <catch_amalgamated.hpp>

#include "cryptobench/bundle.hpp"
#include "cryptobench/twinpeaks.hpp"
#include "cryptobench/util/random.hpp"

using namespace cryptobench;
using namespace cryptobench::twinpeaks;

namespace {

// Cheap keyed functions; the birthday statistics do not care about PRF quality.
RoundFunctionPair cheap_functions(std::uint64_t seed) {
  auto make = [seed](std::uint64_t which) -> RoundFunction {
    return [seed, which](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
      return static_cast<std::uint32_t>(mix64(seed ^ mix64(which ^ (std::uint64_t{a} << 32 | b)) ^ c));
    };
  };
  return {make(1), make(2)};
}

Block128 random_block(SplitMix64& rng) {
  const std::uint64_t u = rng(), v = rng();
  return {static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(u >> 32), static_cast<std::uint32_t>(v),
          static_cast<std::uint32_t>(v >> 32)};
}

const RoundFunction zero = [](std::uint32_t, std::uint32_t, std::uint32_t) { return 0u; };

}  // namespace

TEST_CASE("zero round functions give the identity", "[twinpeaks]") {
  const RoundFunctionPair z{zero, zero};
  SplitMix64 rng(1);
  for (int i = 0; i < 10; ++i) {
    const Block128 x = random_block(rng);
    CHECK(encrypt_with(z, x) == x);
    CHECK(incomplete_decrypt_with(z, x) == x);
  }
  CHECK(invert_round({1, 2, 3, 4}, 0) == Block128{4, 1, 2, 3});
}

TEST_CASE("round inverse and full decryption", "[twinpeaks]") {
  SplitMix64 rng(2);
  const RoundFunctionPair fs = keyed_round_functions(key_from_seed(3));
  for (int i = 0; i < 100; ++i) {
    const Block128 x = random_block(rng);
    const std::uint32_t fv = fs.f1(x.b, x.c, x.d);
    REQUIRE(invert_round(forward_round(x, fv), fv) == x);
    REQUIRE(decrypt_with(fs, encrypt_with(fs, x)) == x);
  }
}

TEST_CASE("equal round functions make I equal E", "[twinpeaks]") {
  const RoundFunctionPair fs = keyed_round_functions(key_from_seed(4));
  const RoundFunctionPair same{fs.f1, fs.f1};
  SplitMix64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const Block128 x = random_block(rng);
    REQUIRE(encrypt_with(same, x) == incomplete_decrypt_with(same, x));
  }
}

TEST_CASE("slide relations between E, I and single rounds", "[twinpeaks]") {
  // With f_k(s) = forward_round(s, F_k(b, c, d)): I(f1(x)) = f1(E(x)) and E(f2(x)) = f2(I(x)).
  const RoundFunctionPair fs = keyed_round_functions(key_from_seed(6));
  auto f1 = [&](Block128 s) { return forward_round(s, fs.f1(s.b, s.c, s.d)); };
  auto f2 = [&](Block128 s) { return forward_round(s, fs.f2(s.b, s.c, s.d)); };
  SplitMix64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    const Block128 x = random_block(rng);
    REQUIRE(incomplete_decrypt_with(fs, f1(x)) == f1(encrypt_with(fs, x)));
    REQUIRE(encrypt_with(fs, f2(x)) == f2(incomplete_decrypt_with(fs, x)));
  }
}

TEST_CASE("oracle counts every block", "[twinpeaks]") {
  LocalOracle o = LocalOracle::from_seed(8);
  std::vector<Block128> blocks(5);
  o.encrypt(blocks);
  o.incomplete_decrypt(std::span<const Block128>(blocks.data(), 2));
  encrypt(o, Block128{});
  CHECK(o.encrypt_calls() == 6);
  CHECK(o.incomplete_decrypt_calls() == 2);
  CHECK(o.total_calls() == 8);
}

TEST_CASE("hex block format is big-endian", "[twinpeaks]") {
  const std::string hex = bundle::lines(bundle::asset("twinpeaks_ciphertext")).at(0);
  const Block128 y = parse_block_hex(hex);
  CHECK(y.a == 0xe473f19aU);
  CHECK(y.d == 0xd57dd241U);
  CHECK(to_hex(y) == hex);
  CHECK(parse_blocks_hex(hex + hex).size() == 2);
  CHECK_THROWS_AS(parse_block_hex("e4"), InvalidInput);
}

TEST_CASE("recover_f_value returns the true value", "[twinpeaks]") {
  const RoundFunctionPair fs = cheap_functions(9);
  LocalOracle o(fs);
  SplitMix64 rng(10);
  for (int which : {1, 2}) {
    for (int i = 0; i < 4; ++i) {
      const Block128 t = random_block(rng);
      const std::uint32_t got = recover_f_value(o, which, t.a, t.b, t.c, rng());
      CHECK(got == (which == 1 ? fs.f1 : fs.f2)(t.a, t.b, t.c));
    }
  }
  CHECK_THROWS_AS(recover_f_value(o, 3, 0, 0, 0, 0), InvalidInput);
  RecoveryOptions tiny;
  tiny.budget = 1024;
  CHECK_THROWS_AS(recover_f_value(o, 1, 1, 2, 3, 4, tiny), BudgetExhausted);
}

TEST_CASE("recovery cost is about 2 * 2^16 blocks", "[twinpeaks]") {
  LocalOracle o(cheap_functions(11));
  SplitMix64 rng(12);
  RecoveryStats stats;
  for (int i = 0; i < 50; ++i) {
    const Block128 t = random_block(rng);
    recover_f_value(o, 1 + static_cast<int>(i % 2), t.a, t.b, t.c, rng(), {}, &stats);
  }
  CHECK(stats.values == 50);
  CHECK(stats.queries == o.total_calls());
  const double mean = static_cast<double>(stats.queries) / 50.0;
  CHECK(mean > std::ldexp(1.0, 17) / 4);
  CHECK(mean < std::ldexp(1.0, 17) * 4);
}

TEST_CASE("slide attack decrypts without the secret", "[twinpeaks]") {
  // About 2^22 oracle blocks per decryption, so only a few.
  SplitMix64 rng(13);
  for (int instance = 0; instance < 2; ++instance) {
    LocalOracle o(cheap_functions(rng()));
    for (int i = 0; i < 3; ++i) {
      const Block128 x = random_block(rng);
      const Block128 y = encrypt(o, x);
      const Block128 got = slide_attack_decrypt(o, y, rng());
      REQUIRE(got == x);
      REQUIRE(encrypt(o, got) == y);
    }
  }
}
