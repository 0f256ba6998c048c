#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cryptobench/error.hpp"

namespace cryptobench::classical {

inline constexpr std::string_view kRotorAlphabet = "OPRSTY";

enum class RotorKey : int { red = 0, white, purple, green, yellow, blue };

inline constexpr std::array<std::string_view, 6> kRotorKeyNames = {"red",   "white",  "purple",
                                                                   "green", "yellow", "blue"};

inline std::string_view key_name(RotorKey k) { return kRotorKeyNames.at(static_cast<int>(k)); }

inline RotorKey parse_rotor_key(std::string_view name) {
  for (std::size_t i = 0; i < kRotorKeyNames.size(); ++i) {
    if (kRotorKeyNames[i] == name) return static_cast<RotorKey>(i);
  }
  throw InvalidInput("unknown rotor key '" + std::string(name) + "'");
}

/// Six substitutions on {O,P,R,S,T,Y}; row r maps kRotorAlphabet[i] to
/// rows[r][i]. Rows are stored in the rotor's cyclic order.
struct PositionTables {
  std::array<std::string, 6> rows;

  static PositionTables standard() {
    return {{"TYSROP",    // red
             "RSOPYT",    // white
             "YRPTSO",    // purple
             "SRPOYT",    // green
             "STYOPR",    // yellow
             "RTOYPS"}};  // blue
  }

  /// One row per line: a color name followed by the images of O P R S T Y.
  /// Rows may come in any order; ';' starts a comment line.
  static PositionTables parse(std::string_view text) {
    PositionTables t;
    std::array<bool, 6> seen{};
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == ';') continue;
      std::istringstream fields(line);
      std::string color, letter, row;
      if (!(fields >> color)) continue;
      while (fields >> letter) row += letter;
      const auto k = static_cast<std::size_t>(parse_rotor_key(color));
      if (row.size() != 6) throw InvalidInput("row for " + color + " needs six letters");
      t.rows[k] = row;
      seen[k] = true;
    }
    for (bool s : seen) {
      if (!s) throw InvalidInput("rotor tables need all six positions");
    }
    return t;
  }

  char apply(std::size_t position, char letter) const {
    const std::size_t i = kRotorAlphabet.find(letter);
    if (i == std::string_view::npos) {
      throw InvalidInput(std::string("character '") + letter + "' is not in the rotor alphabet");
    }
    return rows[position % 6][i];
  }

  /// Each row is an involution with no fixed point (the reflector property).
  bool reflector_property() const {
    for (const std::string& row : rows) {
      if (row.size() != 6) return false;
      for (std::size_t i = 0; i < 6; ++i) {
        const std::size_t j = kRotorAlphabet.find(row[i]);
        if (j == std::string_view::npos || j == i || row[j] != kRotorAlphabet[i]) return false;
      }
    }
    return true;
  }
};

/// The rotor advances one position after every letter, so letter t is
/// substituted by the table at position (key + t) mod 6.
inline std::string rotor_encrypt(RotorKey key, std::string_view text,
                                 const PositionTables& tables = PositionTables::standard()) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t t = 0; t < text.size(); ++t) {
    out.push_back(tables.apply(static_cast<std::size_t>(key) + t, text[t]));
  }
  return out;
}

struct RotorCandidate {
  RotorKey key;
  std::string plaintext;
};

/// All six decryptions; since every position table is an involution,
/// decryption is encryption.
inline std::vector<RotorCandidate> rotor_bruteforce(
    std::string_view ciphertext, const PositionTables& tables = PositionTables::standard()) {
  std::vector<RotorCandidate> out;
  for (int k = 0; k < 6; ++k) {
    const auto key = static_cast<RotorKey>(k);
    out.push_back({key, rotor_encrypt(key, ciphertext, tables)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Plausibility on a six-letter alphabet. Letter statistics are useless here,
// so the score is dictionary coverage: the largest fraction of the text that
// can be split into known words (of length >= 2), computed by DP.

inline const std::vector<std::string_view>& rotor_dictionary() {
  static const std::vector<std::string_view> words = {
      "OOPS", "OPT", "OPTS", "OR", "OY", "PORT", "PORTS", "POST", "POSTS", "POSY", "POT",
      "POTS", "POTTY", "PRO", "PROP", "PROPS", "PROS", "PRY", "ROOST", "ROOT", "ROOTS", "ROOTY",
      "ROSY", "ROT", "ROTOR", "ROTORS", "ROTS", "SO", "SOP", "SORRY", "SORT", "SORTS", "SPORT",
      "SPORTS", "SPOT", "SPOTS", "SPRY", "SPY", "STOOP", "STOP", "STOPS", "STORY", "TO", "TOO",
      "TOP", "TOPS", "TORT", "TOSS", "TOT", "TOTS", "TOY", "TOYS", "TROOP", "TROOPS", "TROT",
      "TRY", "TRYST", "TYPO", "TYPOS",
  };
  return words;
}

inline double dictionary_coverage(std::string_view text) {
  if (text.empty()) return 0.0;
  const auto& dict = rotor_dictionary();
  // best[i] = max letters covered by words in text[0, i).
  std::vector<std::size_t> best(text.size() + 1, 0);
  for (std::size_t i = 1; i <= text.size(); ++i) {
    best[i] = best[i - 1];
    for (std::string_view w : dict) {
      if (w.size() <= i && text.substr(i - w.size(), w.size()) == w) {
        best[i] = std::max(best[i], best[i - w.size()] + w.size());
      }
    }
  }
  return static_cast<double>(best.back()) / static_cast<double>(text.size());
}

inline constexpr double kRotorCoverageThreshold = 0.9;

/// Candidates whose dictionary coverage reaches the threshold.
inline std::vector<RotorCandidate> plausible_rotor_candidates(
    std::string_view ciphertext, double threshold = kRotorCoverageThreshold,
    const PositionTables& tables = PositionTables::standard()) {
  std::vector<RotorCandidate> out;
  for (RotorCandidate& c : rotor_bruteforce(ciphertext, tables)) {
    if (dictionary_coverage(c.plaintext) >= threshold) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace cryptobench::classical
