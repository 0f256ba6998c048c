#pragma once

#include <array>
#include <bitset>
#include <cctype>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cryptobench/error.hpp"

namespace cryptobench::classical {

// Bit strings are kept as '0'/'1' text with position 1 first; that is how the
// codewords are tabulated, and it keeps table lookups readable.
using Codeword = std::string;

/// Hamming(7,4) with the parity-check columns in lexicographic order, i.e.
/// column i is i in binary (top row most significant).
struct HammingCode {
  static constexpr std::array<std::array<int, 7>, 3> H = {{
      {0, 0, 0, 1, 1, 1, 1},
      {0, 1, 1, 0, 0, 1, 1},
      {1, 0, 1, 0, 1, 0, 1},
  }};
  static constexpr std::array<std::array<int, 7>, 4> G = {{
      {1, 1, 1, 0, 0, 0, 0},
      {1, 0, 0, 1, 1, 0, 0},
      {0, 1, 0, 1, 0, 1, 0},
      {1, 1, 0, 1, 0, 0, 1},
  }};
  // G has identity columns here, so these carry the data bits.
  static constexpr std::array<int, 4> kDataPositions = {3, 5, 6, 7};
};

inline void check_bits(std::string_view bits, std::size_t width) {
  if (bits.size() != width) {
    throw InvalidInput("expected " + std::to_string(width) + " bits, got " +
                       std::to_string(bits.size()));
  }
  for (char ch : bits) {
    if (ch != '0' && ch != '1') throw InvalidInput(std::string("invalid bit '") + ch + "'");
  }
}

/// d . G over GF(2); d is 4 bits.
inline Codeword hamming_encode(std::string_view data) {
  check_bits(data, 4);
  Codeword w(7, '0');
  for (int r = 0; r < 4; ++r) {
    if (data[r] != '1') continue;
    for (int c = 0; c < 7; ++c) {
      if (HammingCode::G[r][c]) w[c] = w[c] == '1' ? '0' : '1';
    }
  }
  return w;
}

/// H . w^T read as a number; equals the error position for a single flip.
inline int hamming_syndrome(std::string_view word) {
  check_bits(word, 7);
  int s = 0;
  for (int row = 0; row < 3; ++row) {
    int parity = 0;
    for (int c = 0; c < 7; ++c) parity ^= HammingCode::H[row][c] & (word[c] - '0');
    s = 2 * s + parity;
  }
  return s;
}

struct HammingDecoded {
  std::string data;          // 4 bits
  Codeword corrected;        // 7 bits
  int corrected_position;    // 1..7, or 0 when the word was a codeword
};

inline HammingDecoded hamming_decode(std::string_view word) {
  const int s = hamming_syndrome(word);
  Codeword w(word);
  if (s != 0) w[s - 1] = w[s - 1] == '1' ? '0' : '1';
  std::string data;
  for (int p : HammingCode::kDataPositions) data.push_back(w[p - 1]);
  return {data, w, s};
}

// ---------------------------------------------------------------------------
// Hex plumbing

/// Expands hex digits MSB-first. `trailing` (a bit string) is appended and
/// then `drop_trailing` bits are removed from the end; the result must split
/// into 7-bit words. Whitespace is skipped.
inline std::string hex_to_bits(std::string_view hex, std::size_t drop_trailing = 0,
                               std::string_view trailing = {}) {
  if (drop_trailing >= 4) throw InvalidInput("drop_trailing must be below 4");
  std::string bits;
  for (char ch : hex) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (!std::isxdigit(static_cast<unsigned char>(ch))) {
      throw InvalidInput(std::string("invalid hex digit '") + ch + "'");
    }
    const int v = std::stoi(std::string(1, ch), nullptr, 16);
    bits += std::bitset<4>(static_cast<unsigned long>(v)).to_string();
  }
  for (char ch : trailing) {
    if (ch != '0' && ch != '1') throw InvalidInput("trailing bits must be 0/1");
    bits.push_back(ch);
  }
  if (drop_trailing > bits.size()) throw InvalidInput("nothing left to drop");
  bits.resize(bits.size() - drop_trailing);
  if (bits.size() % 7 != 0) {
    throw InvalidInput("bit length " + std::to_string(bits.size()) + " is not a multiple of 7");
  }
  return bits;
}

/// Ciphertexts are printed as hex, optionally followed by extra binary digits
/// in the form "(0)_2". Splits that suffix off and returns the bits.
inline std::string printed_hex_to_bits(std::string_view text) {
  std::string hex, extra;
  const std::size_t open = text.find('(');
  if (open == std::string_view::npos) return hex_to_bits(text);
  const std::size_t close = text.find(')', open);
  if (close == std::string_view::npos) throw InvalidInput("unterminated binary suffix");
  hex = std::string(text.substr(0, open));
  extra = std::string(text.substr(open + 1, close - open - 1));
  std::string_view rest = text.substr(close + 1);
  if (!rest.empty() && rest != "_2" && rest.find_first_not_of(" \t\r\n_2") != std::string_view::npos) {
    throw InvalidInput("unexpected text after binary suffix");
  }
  return hex_to_bits(hex, 0, extra);
}

inline std::vector<Codeword> split_words(std::string_view bits) {
  if (bits.size() % 7 != 0) throw InvalidInput("bit length is not a multiple of 7");
  std::vector<Codeword> out;
  for (std::size_t i = 0; i < bits.size(); i += 7) out.emplace_back(bits.substr(i, 7));
  return out;
}

struct CorrectedStream {
  std::vector<Codeword> codewords;
  std::size_t corrections = 0;
};

inline CorrectedStream correct_stream(std::string_view bits) {
  CorrectedStream out;
  for (const Codeword& w : split_words(bits)) {
    HammingDecoded d = hamming_decode(w);
    if (d.corrected_position != 0) ++out.corrections;
    out.codewords.push_back(std::move(d.corrected));
  }
  return out;
}

inline std::map<Codeword, std::size_t> codeword_frequencies(const std::vector<Codeword>& words) {
  std::map<Codeword, std::size_t> counts;
  for (const Codeword& w : words) ++counts[w];
  return counts;
}

}  // namespace cryptobench::classical
