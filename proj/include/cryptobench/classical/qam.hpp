#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cryptobench/classical/hamming.hpp"
#include "cryptobench/error.hpp"

namespace cryptobench::classical {

/// Codeword -> output glyph. Injective.
class SubstitutionKey {
 public:
  SubstitutionKey() = default;

  void add(const Codeword& word, char glyph) {
    check_bits(word, 7);
    if (map_.contains(word)) throw InvalidInput("codeword " + word + " mapped twice");
    if (!glyphs_.insert(glyph).second) {
      throw InvalidInput(std::string("glyph '") + glyph + "' assigned to two codewords");
    }
    map_.emplace(word, glyph);
  }

  bool contains(const Codeword& word) const { return map_.contains(word); }

  char at(const Codeword& word) const {
    auto it = map_.find(word);
    if (it == map_.end()) throw InvalidInput("unmapped codeword " + word);
    return it->second;
  }

  std::size_t size() const noexcept { return map_.size(); }
  const std::map<Codeword, char>& entries() const noexcept { return map_; }

  /// Text form: one "<codeword> <glyph>" per line. The glyph is a single
  /// character or the word `space`; lines starting with ';' are comments.
  static SubstitutionKey parse(std::string_view text) {
    SubstitutionKey key;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line[0] == ';') continue;
      std::istringstream fields(line);
      std::string word, glyph;
      if (!(fields >> word >> glyph)) throw InvalidInput("malformed key line '" + line + "'");
      if (glyph == "space") {
        key.add(word, ' ');
      } else if (glyph.size() == 1) {
        key.add(word, glyph[0]);
      } else {
        throw InvalidInput("glyph must be one character or 'space', got '" + glyph + "'");
      }
    }
    return key;
  }

 private:
  std::map<Codeword, char> map_;
  std::set<char> glyphs_;
};

inline std::string apply_substitution(const std::vector<Codeword>& words,
                                      const SubstitutionKey& key) {
  std::string out;
  out.reserve(words.size());
  for (const Codeword& w : words) out.push_back(key.at(w));
  return out;
}

/// Key sending the i-th codeword of `order` to the i-th hex digit, e.g. the
/// codewords ranked by frequency.
inline SubstitutionKey rank_key(const std::vector<Codeword>& order) {
  static constexpr std::string_view digits = "0123456789ABCDEF";
  if (order.size() > digits.size()) throw InvalidInput("at most 16 codewords can be ranked");
  SubstitutionKey key;
  for (std::size_t i = 0; i < order.size(); ++i) key.add(order[i], digits[i]);
  return key;
}

/// Merges two streams: `layout` has 'c' where the next character of `first`
/// goes and 'v' for `second`. Both streams must be used up exactly.
inline std::string interleave(std::string_view first, std::string_view second,
                              std::string_view layout) {
  std::string out;
  std::size_t i = 0, j = 0;
  for (char slot : layout) {
    if (slot == 'c') {
      if (i >= first.size()) throw InvalidInput("layout needs more consonant-stream symbols");
      out.push_back(first[i++]);
    } else if (slot == 'v') {
      if (j >= second.size()) throw InvalidInput("layout needs more vowel-stream symbols");
      out.push_back(second[j++]);
    } else if (slot != '\n' && slot != ' ') {
      throw InvalidInput(std::string("invalid layout symbol '") + slot + "'");
    }
  }
  if (i != first.size() || j != second.size()) throw InvalidInput("layout leaves symbols unused");
  return out;
}

/// Replaces every character of `marks` by '#'.
inline std::string normalize_punctuation(std::string text, std::string_view marks) {
  for (char& ch : text) {
    if (marks.find(ch) != std::string_view::npos) ch = '#';
  }
  return text;
}

/// Number of characters outside `other` between consecutive marks of `marks`.
inline std::vector<std::size_t> consonants_per_segment(std::string_view text,
                                                       std::string_view other,
                                                       std::string_view marks) {
  std::vector<std::size_t> out;
  std::size_t count = 0;
  for (char ch : text) {
    if (marks.find(ch) != std::string_view::npos) {
      out.push_back(count);
      count = 0;
    } else if (other.find(ch) == std::string_view::npos) {
      ++count;
    }
  }
  if (count != 0) out.push_back(count);
  return out;
}

}  // namespace cryptobench::classical
