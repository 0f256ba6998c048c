// Solves the two classical challenges from the bundled data and prints the
// intermediate results.

#include <cstdio>

#include "cryptobench/bundle.hpp"
#include "cryptobench/classical/hamming.hpp"
#include "cryptobench/classical/qam.hpp"
#include "cryptobench/classical/rotor.hpp"

using namespace cryptobench;
using namespace cryptobench::classical;

int main() {
  const std::string ct = bundle::lines(bundle::asset("rotor_ciphertext")).at(0);
  std::printf("rotor ciphertext  %s\n", ct.c_str());
  for (const RotorCandidate& c : rotor_bruteforce(ct)) {
    std::printf("  %-7s %s  coverage %.2f\n", std::string(key_name(c.key)).c_str(), c.plaintext.c_str(),
                dictionary_coverage(c.plaintext));
  }

  const CorrectedStream p1 = correct_stream(printed_hex_to_bits(bundle::asset("qam_part1")));
  const CorrectedStream p2 = correct_stream(printed_hex_to_bits(bundle::asset("qam_part2")));
  std::printf("\nqam part 1: %zu codewords, %zu corrected\n", p1.codewords.size(), p1.corrections);
  std::printf("qam part 2: %zu codewords, %zu corrected\n", p2.codewords.size(), p2.corrections);

  // Frequency ranks are what the keys were read off from.
  for (const auto& [word, n] : codeword_frequencies(p1.codewords)) {
    std::printf("  %s  data %s  x%zu\n", word.c_str(), hamming_decode(word).data.c_str(), n);
  }

  const std::string consonants = apply_substitution(p1.codewords, SubstitutionKey::parse(bundle::asset("qam_key1")));
  const std::string vowels = apply_substitution(p2.codewords, SubstitutionKey::parse(bundle::asset("qam_key2")));
  const std::string text = normalize_punctuation(interleave(consonants, vowels, bundle::asset("qam_layout")), "*@");
  std::printf("\n%s\n", text.c_str());
  return 0;
}
