#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cryptobench/algebra/balanced_ternary.hpp"
#include "cryptobench/error.hpp"

namespace cryptobench::curl27 {

inline constexpr std::size_t kWordTrits = 243;
inline constexpr std::size_t kStateTrits = 729;
inline constexpr unsigned kRounds = 27;
inline constexpr unsigned kStepsPerRound = 6;

using TritString = std::vector<Trit>;

/// The S-box coordinate polynomial F(a, b, c) over Z/3, balanced output.
constexpr Trit sbox_polynomial(int a, int b, int c) noexcept {
  const int a2 = a * a, b2 = b * b, c2 = c * c;
  const int v = a2 * b2 * c + a2 * b * c2 - a * b2 * c2 + a2 * b2 - a2 * b * c + a2 * c2 +
                a * b2 * c - a2 * c + a * b2 - a * c2 + b2 * c + b * c2 - a2 - b2 + b * c - c2 -
                c + 1;
  return to_trit(v);
}

using TritTriple = std::array<Trit, 3>;

/// S(a, b, c) = (F(a,b,c), F(b,c,a), F(c,a,b)).
constexpr TritTriple sbox_apply(Trit a, Trit b, Trit c) noexcept {
  return {sbox_polynomial(a, b, c), sbox_polynomial(b, c, a), sbox_polynomial(c, a, b)};
}

namespace detail {

constexpr int triple_index(Trit a, Trit b, Trit c) noexcept {
  return 9 * (a + 1) + 3 * (b + 1) + (c + 1);
}

struct SboxTable {
  std::array<TritTriple, 27> out{};
  constexpr SboxTable() {
    for (int a = -1; a <= 1; ++a)
      for (int b = -1; b <= 1; ++b)
        for (int c = -1; c <= 1; ++c)
          out[triple_index(a, b, c)] = sbox_apply(static_cast<Trit>(a), static_cast<Trit>(b),
                                                  static_cast<Trit>(c));
  }
};

inline constexpr SboxTable kSbox{};

constexpr std::size_t pow3(unsigned e) noexcept {
  std::size_t r = 1;
  while (e-- != 0) r *= 3;
  return r;
}

/// One grouping step over `w` (size 3 * words * n): triple (w, j) is the
/// positions (3wn + j, 3wn + n + j, 3wn + 2n + j).
inline void grouped_step(std::span<Trit> w, std::size_t n) noexcept {
  const std::size_t words = w.size() / (3 * n);
  for (std::size_t g = 0; g < words; ++g) {
    Trit* base = w.data() + 3 * g * n;
    for (std::size_t j = 0; j < n; ++j) {
      const TritTriple& o = kSbox.out[triple_index(base[j], base[n + j], base[2 * n + j])];
      base[j] = o[0];
      base[n + j] = o[1];
      base[2 * n + j] = o[2];
    }
  }
}

}  // namespace detail

/// The 729-trit sponge state W0 || W1 || W2.
class CurlState {
 public:
  CurlState() { trits_.fill(0); }

  std::span<Trit, kStateTrits> trits() noexcept { return trits_; }
  std::span<const Trit, kStateTrits> trits() const noexcept { return trits_; }

  std::span<Trit, kWordTrits> word(std::size_t i) noexcept {
    return std::span<Trit, kStateTrits>(trits_).subspan(i * kWordTrits).first<kWordTrits>();
  }
  std::span<const Trit, kWordTrits> word(std::size_t i) const noexcept {
    return std::span<const Trit, kStateTrits>(trits_).subspan(i * kWordTrits).first<kWordTrits>();
  }

  friend bool operator==(const CurlState&, const CurlState&) = default;

 private:
  std::array<Trit, kStateTrits> trits_;
};

/// Applies the 27-round sponge function in place.
inline void curlf_inplace(std::span<Trit, kStateTrits> w) noexcept {
  for (unsigned round = 0; round < kRounds; ++round) {
    for (unsigned step = 1; step <= kStepsPerRound; ++step) {
      detail::grouped_step(w, detail::pow3(kStepsPerRound - step));
    }
  }
}

inline CurlState curlf(CurlState state) {
  curlf_inplace(state.trits());
  return state;
}

/// Curl27(x): zero-pad to a multiple of 243, W1 = balanced length, absorb
/// each block into W0 and permute, return W0. The empty string hashes to the
/// untouched all-zero W0.
inline TritString curl_hash(std::span<const Trit> x) {
  CurlState state;
  BalancedTritVector length = balanced_encode(x.size());
  if (length.size() > kWordTrits) throw InvalidInput("message length does not fit in 243 trits");
  std::copy(length.begin(), length.end(), state.word(1).begin());
  auto w0 = state.word(0);
  for (std::size_t offset = 0; offset < x.size(); offset += kWordTrits) {
    const std::size_t take = std::min(kWordTrits, x.size() - offset);
    std::copy_n(x.begin() + static_cast<std::ptrdiff_t>(offset), take, w0.begin());
    std::fill(w0.begin() + static_cast<std::ptrdiff_t>(take), w0.end(), Trit{0});
    curlf_inplace(state.trits());
  }
  return TritString(w0.begin(), w0.end());
}

/// True iff every aligned run of m trits is constant.
inline bool is_fragmented(std::span<const Trit> word, std::size_t m) {
  if (m == 0 || word.size() % m != 0) {
    throw InvalidInput("word length " + std::to_string(word.size()) + " not divisible by " +
                       std::to_string(m));
  }
  for (std::size_t start = 0; start < word.size(); start += m) {
    for (std::size_t k = 1; k < m; ++k) {
      if (word[start + k] != word[start]) return false;
    }
  }
  return true;
}

/// True iff the 243-trit word has the form (abc)^81.
inline bool is_expanded3(std::span<const Trit> word) {
  if (word.size() != kWordTrits) throw InvalidInput("3-expansion is defined on 243-trit words");
  for (std::size_t i = 3; i < word.size(); ++i) {
    if (word[i] != word[i - 3]) return false;
  }
  return true;
}

inline bool verify_collision(std::span<const Trit> x, std::span<const Trit> x2) {
  if (std::equal(x.begin(), x.end(), x2.begin(), x2.end())) return false;
  return curl_hash(x) == curl_hash(x2);
}

/// u^[m]: each trit of u repeated m times.
inline TritString expand_fragments(std::span<const Trit> u, std::size_t m) {
  TritString out;
  out.reserve(u.size() * m);
  for (Trit t : u) out.insert(out.end(), m, t);
  return out;
}

// ---------------------------------------------------------------------------
// Text formats

/// Parses one line of comma-separated trits ("-1,0,1"). Whitespace is ignored;
/// an empty line is the empty string.
inline TritString parse_trits(std::string_view line) {
  TritString out;
  std::size_t pos = 0;
  bool expect_value = false;
  while (pos <= line.size()) {
    std::size_t comma = line.find(',', pos);
    if (comma == std::string_view::npos) comma = line.size();
    std::string token;
    for (char ch : line.substr(pos, comma - pos)) {
      if (!std::isspace(static_cast<unsigned char>(ch))) token.push_back(ch);
    }
    if (token.empty()) {
      if (expect_value || comma != line.size()) throw InvalidInput("empty trit token");
    } else {
      int value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc{} || ptr != token.data() + token.size() || !is_trit(value)) {
        throw InvalidInput("invalid trit '" + token + "'");
      }
      out.push_back(static_cast<Trit>(value));
    }
    expect_value = comma != line.size();
    pos = comma + 1;
  }
  return out;
}

inline std::string format_trits(std::span<const Trit> trits) {
  std::string out;
  out.reserve(trits.size() * 2);
  for (std::size_t i = 0; i < trits.size(); ++i) {
    if (i != 0) out.push_back(',');
    out += std::to_string(static_cast<int>(trits[i]));
  }
  return out;
}

/// Expands the compact notation used to print messages, e.g.
/// "0^{243*39} (101100110 101111100)^[9] 0^{121}". Terms: `d^{k}` repeats a
/// single digit, `(digits)^[m]` is the m-fold fragment expansion, a bare digit
/// stands for itself. Digits are 0, 1 and `T` for -1.
inline TritString parse_fragment_notation(std::string_view text) {
  auto digit = [](char ch) -> Trit {
    switch (ch) {
      case '0': return 0;
      case '1': return 1;
      case 'T': return -1;
      default: throw InvalidInput(std::string("invalid trit digit '") + ch + "'");
    }
  };
  auto parse_product = [](std::string_view expr) -> std::size_t {
    std::size_t result = 1;
    std::size_t pos = 0;
    while (pos <= expr.size()) {
      std::size_t star = expr.find('*', pos);
      if (star == std::string_view::npos) star = expr.size();
      std::size_t factor = 0;
      std::string_view f = expr.substr(pos, star - pos);
      auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), factor);
      if (ec != std::errc{} || ptr != f.data() + f.size()) {
        throw InvalidInput("invalid repetition count '" + std::string(expr) + "'");
      }
      result *= factor;
      pos = star + 1;
    }
    return result;
  };
  auto read_bracketed = [&](std::size_t& i, char open, char close) -> std::string_view {
    if (i >= text.size() || text[i] != open) throw InvalidInput("malformed fragment notation");
    std::size_t end = text.find(close, i);
    if (end == std::string_view::npos) throw InvalidInput("unterminated bracket");
    std::string_view inner = text.substr(i + 1, end - i - 1);
    i = end + 1;
    return inner;
  };

  TritString out;
  std::size_t i = 0;
  while (i < text.size()) {
    char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (ch == '(') {
      std::string_view inner = read_bracketed(i, '(', ')');
      TritString u;
      for (char d : inner) {
        if (!std::isspace(static_cast<unsigned char>(d))) u.push_back(digit(d));
      }
      if (i + 1 < text.size() && text[i] == '^' && text[i + 1] == '[') {
        ++i;
        std::size_t m = parse_product(read_bracketed(i, '[', ']'));
        TritString e = expand_fragments(u, m);
        out.insert(out.end(), e.begin(), e.end());
      } else {
        out.insert(out.end(), u.begin(), u.end());
      }
      continue;
    }
    Trit t = digit(ch);
    ++i;
    if (i + 1 < text.size() && text[i] == '^' && text[i + 1] == '{') {
      ++i;
      out.insert(out.end(), parse_product(read_bracketed(i, '{', '}')), t);
    } else {
      out.push_back(t);
    }
  }
  return out;
}

}  // namespace cryptobench::curl27
