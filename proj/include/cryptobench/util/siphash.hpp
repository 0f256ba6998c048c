#pragma once

#include <array>
#include <cstdint>
#include <span>

namespace cryptobench {

/// SipHash-2-4 with a 128-bit key, 64-bit output.
inline std::uint64_t siphash24(const std::array<std::uint8_t, 16>& key,
                               std::span<const std::uint8_t> msg) noexcept {
  auto load64 = [](const std::uint8_t* p) {
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | p[i];
    return v;
  };
  auto rotl = [](std::uint64_t x, int b) { return (x << b) | (x >> (64 - b)); };

  const std::uint64_t k0 = load64(key.data()), k1 = load64(key.data() + 8);
  std::uint64_t v0 = 0x736f6d6570736575ULL ^ k0;
  std::uint64_t v1 = 0x646f72616e646f6dULL ^ k1;
  std::uint64_t v2 = 0x6c7967656e657261ULL ^ k0;
  std::uint64_t v3 = 0x7465646279746573ULL ^ k1;

  auto round = [&] {
    v0 += v1; v1 = rotl(v1, 13); v1 ^= v0; v0 = rotl(v0, 32);
    v2 += v3; v3 = rotl(v3, 16); v3 ^= v2;
    v0 += v3; v3 = rotl(v3, 21); v3 ^= v0;
    v2 += v1; v1 = rotl(v1, 17); v1 ^= v2; v2 = rotl(v2, 32);
  };

  const std::size_t full = msg.size() / 8 * 8;
  for (std::size_t i = 0; i < full; i += 8) {
    const std::uint64_t m = load64(msg.data() + i);
    v3 ^= m;
    round();
    round();
    v0 ^= m;
  }
  std::uint64_t b = static_cast<std::uint64_t>(msg.size()) << 56;
  for (std::size_t i = full; i < msg.size(); ++i) {
    b |= static_cast<std::uint64_t>(msg[i]) << (8 * (i - full));
  }
  v3 ^= b;
  round();
  round();
  v0 ^= b;
  v2 ^= 0xff;
  round();
  round();
  round();
  round();
  return v0 ^ v1 ^ v2 ^ v3;
}

}  // namespace cryptobench
