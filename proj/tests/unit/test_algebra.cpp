#include <catch_amalgamated.hpp>

#include "cryptobench/algebra/balanced_ternary.hpp"
#include "cryptobench/algebra/bigint.hpp"
#include "cryptobench/algebra/gf2n.hpp"
#include "cryptobench/algebra/zmod.hpp"
#include "cryptobench/util/fnv.hpp"
#include "cryptobench/util/random.hpp"
#include "cryptobench/util/siphash.hpp"

using namespace cryptobench;

namespace {

// Schoolbook carry-less multiply then reduce, bit by bit.
std::uint32_t naive_gf_mul(std::uint32_t a, std::uint32_t b, std::uint32_t poly, unsigned n) {
  std::uint64_t prod = 0;
  for (unsigned i = 0; i < n; ++i) {
    if ((b >> i) & 1u) prod ^= static_cast<std::uint64_t>(a) << i;
  }
  for (int bit = 2 * static_cast<int>(n) - 2; bit >= static_cast<int>(n); --bit) {
    if ((prod >> bit) & 1u) prod ^= static_cast<std::uint64_t>(poly) << (bit - n);
  }
  return static_cast<std::uint32_t>(prod);
}

}  // namespace

TEST_CASE("gf pow small cases", "[algebra]") {
  Gf2nField f3(3);
  CHECK(f3.modulus() == 0b1011);
  CHECK(f3.pow(0b010, 3) == 0b011);  // X^3 = X + 1
  for (std::uint32_t b = 1; b < 8; ++b) {
    CHECK(f3.pow(b, 7) == 1);
    CHECK(f3.pow(b, 1) == b);
  }
}

TEST_CASE("gf mul matches naive reduction and field laws", "[algebra]") {
  SplitMix64 rng(7);
  for (unsigned n = 3; n <= 8; ++n) {
    Gf2nField f(n);
    for (int i = 0; i < 10'000; ++i) {
      const std::uint32_t a = rng.below(f.size()), b = rng.below(f.size()), c = rng.below(f.size());
      REQUIRE(f.mul(a, b) == naive_gf_mul(a, b, f.modulus(), n));
      REQUIRE(f.mul(a, b) == f.mul(b, a));
      REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      REQUIRE(f.mul(a, b ^ c) == (f.mul(a, b) ^ f.mul(a, c)));
      if (a != 0) REQUIRE(f.mul(a, f.inv(a)) == 1);
    }
  }
}

TEST_CASE("gf rejects reducible modulus", "[algebra]") {
  CHECK_THROWS_AS(Gf2nField(4, 0b10101), InvalidInput);  // (X^2+X+1)^2
  CHECK_THROWS_AS(Gf2nField(2), InvalidInput);
}

TEST_CASE("balanced ternary encode", "[algebra]") {
  CHECK(balanced_encode(25) == BalancedTritVector{1, -1, 0, 1});
  CHECK(balanced_encode(0).empty());
  CHECK(balanced_encode(1) == BalancedTritVector{1});
  std::uint64_t limit = 1;
  for (int i = 0; i < 20; ++i) limit *= 3;
  SplitMix64 rng(3);
  for (int i = 0; i < 20'000; ++i) {
    const std::uint64_t v = i < 1000 ? static_cast<std::uint64_t>(i) : rng.below(limit);
    const BalancedTritVector t = balanced_encode(v);
    for (Trit d : t) REQUIRE(is_trit(d));
    REQUIRE(balanced_decode(t) == static_cast<std::int64_t>(v));
  }
}

TEST_CASE("dickson polynomials mod 2019", "[algebra]") {
  const auto a = Mod2019::from(22);
  for (std::uint32_t y = 0; y < 2019; ++y) {
    const auto v = Mod2019::from(y);
    REQUIRE(dickson_eval(1, v, a) == v);
    const std::int64_t yy = y;
    const std::int64_t direct = (yy * yy % 2019 * yy % 2019 * yy % 2019 * yy + 1909 * (yy * yy % 2019 * yy % 2019) + 401 * yy) % 2019;
    REQUIRE(dickson_eval(5, v, a).value() == static_cast<std::uint32_t>(direct));
    // D_4(y, a) = D_2(D_2(y, a), a^2)
    REQUIRE(dickson_eval(4, v, a) == dickson_eval(2, dickson_eval(2, v, a), a * a));
  }
  CHECK(Mod2019::from(-1000).value() == 1019);
  CHECK(Mod2019::from(2222).value() == 203);
}

TEST_CASE("exact integer square roots", "[algebra]") {
  CHECK(int_sqrt_exact(144) == ArbitraryInt(12));
  CHECK_FALSE(int_sqrt_exact(145).has_value());
  CHECK(int_sqrt_exact(0) == ArbitraryInt(0));
  CHECK_FALSE(int_sqrt_exact(-4).has_value());
  const ArbitraryInt big = parse_decimal("123456789012345678901234567890");
  CHECK(int_sqrt_exact(big * big) == big);
  CHECK_FALSE(int_sqrt_exact(big * big + 1).has_value());
}

TEST_CASE("bigint helpers", "[algebra]") {
  CHECK(parse_decimal("12 34\n56") == ArbitraryInt(123456));
  CHECK(mod_inverse(3, 7) == ArbitraryInt(5));
  CHECK_FALSE(mod_inverse(6, 9).has_value());
  CHECK(pow_mod(3, 2019, 1000) == ArbitraryInt(467));  // 3^2019 mod 1000, from Python pow
  CHECK(mod_floor(-7, 5) == ArbitraryInt(3));
  CHECK(bit_length(ArbitraryInt(255)) == 8);
}

TEST_CASE("siphash reference vectors", "[algebra]") {
  // Key 00..0f; messages 00..(len-1); from the reference implementation's vectors.h.
  std::array<std::uint8_t, 16> key{};
  for (int i = 0; i < 16; ++i) key[i] = static_cast<std::uint8_t>(i);
  std::vector<std::uint8_t> msg;
  CHECK(siphash24(key, msg) == 0x726fdb47dd0e0e31ULL);
  for (int i = 0; i < 8; ++i) msg.push_back(static_cast<std::uint8_t>(i));
  CHECK(siphash24(key, msg) == 0x93f5f5799a932462ULL);
  for (int i = 8; i < 15; ++i) msg.push_back(static_cast<std::uint8_t>(i));
  CHECK(siphash24(key, msg) == 0xa129ca6149be45e5ULL);
}

TEST_CASE("fnv and splitmix are stable", "[algebra]") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  SplitMix64 a(1), b(1);
  for (int i = 0; i < 100; ++i) REQUIRE(a() == b());
  SplitMix64 r(5);
  for (int i = 0; i < 1000; ++i) REQUIRE(r.below(7) < 7);
}
