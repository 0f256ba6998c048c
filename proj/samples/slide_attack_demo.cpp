// Slide attack on a locally keyed TwinPeaks instance: encrypt a random block,
// then decrypt it again through oracle queries only.

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "cryptobench/twinpeaks.hpp"
#include "cryptobench/util/random.hpp"

using namespace cryptobench;
using namespace cryptobench::twinpeaks;

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 7;
  LocalOracle oracle = LocalOracle::from_seed(seed);
  SplitMix64 rng(seed ^ 0x5eed);

  const std::uint64_t u = rng(), v = rng();
  const Block128 x{static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(u >> 32),
                   static_cast<std::uint32_t>(v), static_cast<std::uint32_t>(v >> 32)};
  const Block128 y = encrypt(oracle, x);
  std::printf("plaintext   %s\nciphertext  %s\n", to_hex(x).c_str(), to_hex(y).c_str());

  RecoveryStats stats;
  const Block128 got = slide_attack_decrypt(oracle, y, rng(), {}, &stats);
  std::printf("recovered   %s  (%s)\n", to_hex(got).c_str(), got == x ? "match" : "MISMATCH");
  std::printf("round values recovered %llu, oracle blocks %llu (2^%.2f)\n",
              static_cast<unsigned long long>(stats.values), static_cast<unsigned long long>(stats.queries),
              std::log2(static_cast<double>(stats.queries)));
  return got == x ? 0 : 1;
}
