#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>
#include <string>
#include <string_view>

namespace cryptobench::classical {

/// English letter frequencies in percent, a..z (Lewand).
inline constexpr std::array<double, 26> kEnglishFrequencies = {
    8.167, 1.492, 2.782, 4.253, 12.702, 2.228, 2.015, 6.094, 6.966, 0.153, 0.772, 4.025, 2.406,
    6.749, 7.507, 1.929, 0.095, 5.987, 6.327, 9.056, 2.758, 0.978, 2.360, 0.150, 1.974, 0.074,
};

/// Letters from most to least common under the reference table.
inline std::string english_frequency_order() {
  std::string letters(26, ' ');
  std::iota(letters.begin(), letters.end(), 'a');
  std::stable_sort(letters.begin(), letters.end(), [](char x, char y) {
    return kEnglishFrequencies[x - 'a'] > kEnglishFrequencies[y - 'a'];
  });
  return letters;
}

/// Chi-squared distance between the text's relative letter histogram and the
/// reference; lower is more English-like. Non-letters are ignored. Working on
/// relative frequencies makes the score invariant under repeating the text.
inline double score_english(std::string_view text) {
  std::array<double, 26> counts{};
  double total = 0;
  for (char ch : text) {
    const unsigned char u = static_cast<unsigned char>(ch);
    if (!std::isalpha(u)) continue;
    counts[std::tolower(u) - 'a'] += 1;
    total += 1;
  }
  if (total == 0) return 0.0;
  double chi = 0;
  for (int i = 0; i < 26; ++i) {
    const double expected = kEnglishFrequencies[i] / 100.0;
    const double observed = counts[i] / total;
    chi += (observed - expected) * (observed - expected) / expected;
  }
  return chi;
}

}  // namespace cryptobench::classical
