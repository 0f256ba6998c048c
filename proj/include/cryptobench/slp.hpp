#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cryptobench/algebra/zmod.hpp"
#include "cryptobench/error.hpp"

namespace cryptobench::slp {

using Value = Mod2019;

enum class Op { load_input, load_constant, subtract, multiply };

struct SlpCommand {
  int target = 0;             // the i in S_i as written
  Op op = Op::load_input;
  std::string digits;         // constant as typed
  int j = 0, k = 0;           // operand registers for subtract/multiply
};

enum class DigitPolicy {
  broken,      // at most 4 digits, each 1 or 5
  calc,        // one of 2, 22, 222, 2222
  permissive,  // any nonnegative integer; debugging only
};

inline DigitPolicy parse_policy(std::string_view name) {
  if (name == "broken") return DigitPolicy::broken;
  if (name == "calc") return DigitPolicy::calc;
  if (name == "permissive") return DigitPolicy::permissive;
  throw InvalidInput("unknown digit policy '" + std::string(name) + "'");
}

struct SlpProgram {
  std::vector<SlpCommand> commands;
};

namespace detail {

inline std::string strip(std::string_view s) {
  std::string out;
  for (char ch : s) {
    if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
  }
  return out;
}

/// "S12" or "S_12" or "S_{12}" -> 12.
inline std::optional<int> register_ref(std::string_view s) {
  if (s.empty() || (s[0] != 'S' && s[0] != 's')) return std::nullopt;
  s.remove_prefix(1);
  if (!s.empty() && s[0] == '_') s.remove_prefix(1);
  if (s.size() >= 2 && s.front() == '{' && s.back() == '}') s = s.substr(1, s.size() - 2);
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace detail

/// One command per line: `S3 = 55`, `S4 = S2 - S3`, `S5 = S4 * S4`, `S1 = y`.
/// Whitespace is ignored; blank lines and lines starting with '#' are skipped.
inline SlpCommand parse_command(std::string_view line) {
  const std::string s = detail::strip(line);
  const std::size_t eq = s.find('=');
  if (eq == std::string::npos) throw InvalidInput("missing '=' in '" + std::string(line) + "'");
  SlpCommand cmd;
  auto lhs = detail::register_ref(std::string_view(s).substr(0, eq));
  if (!lhs) throw InvalidInput("left side must be a register in '" + std::string(line) + "'");
  cmd.target = *lhs;
  const std::string rhs = s.substr(eq + 1);
  if (rhs == "y" || rhs == "Y") {
    cmd.op = Op::load_input;
    return cmd;
  }
  if (!rhs.empty() && std::all_of(rhs.begin(), rhs.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    cmd.op = Op::load_constant;
    cmd.digits = rhs;
    return cmd;
  }
  const std::size_t op_pos = rhs.find_first_of("-*");
  if (op_pos == std::string::npos) {
    throw InvalidInput("unrecognized right side '" + rhs + "'");
  }
  auto j = detail::register_ref(std::string_view(rhs).substr(0, op_pos));
  auto k = detail::register_ref(std::string_view(rhs).substr(op_pos + 1));
  if (!j || !k) throw InvalidInput("operands must be registers in '" + rhs + "'");
  cmd.op = rhs[op_pos] == '-' ? Op::subtract : Op::multiply;
  cmd.j = *j;
  cmd.k = *k;
  return cmd;
}

inline SlpProgram parse_program(std::string_view text) {
  SlpProgram p;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const std::string s = detail::strip(line);
    if (s.empty() || s[0] == '#') continue;
    p.commands.push_back(parse_command(line));
  }
  return p;
}

inline std::string format_command(const SlpCommand& c) {
  const std::string lhs = "S" + std::to_string(c.target) + " = ";
  switch (c.op) {
    case Op::load_input: return lhs + "y";
    case Op::load_constant: return lhs + c.digits;
    case Op::subtract: return lhs + "S" + std::to_string(c.j) + " - S" + std::to_string(c.k);
    case Op::multiply: return lhs + "S" + std::to_string(c.j) + " * S" + std::to_string(c.k);
  }
  return lhs;
}

struct Violation {
  std::size_t command;  // 1-based position in the list
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

inline bool constant_allowed(std::string_view digits, DigitPolicy policy) {
  switch (policy) {
    case DigitPolicy::broken:
      return !digits.empty() && digits.size() <= 4 &&
             digits.find_first_not_of("15") == std::string_view::npos;
    case DigitPolicy::calc:
      return digits == "2" || digits == "22" || digits == "222" || digits == "2222";
    case DigitPolicy::permissive:
      return !digits.empty();
  }
  return false;
}

inline ValidationReport validate(const SlpProgram& p, DigitPolicy policy) {
  ValidationReport r;
  auto add = [&](std::size_t i, std::string msg) { r.violations.push_back({i, std::move(msg)}); };
  if (p.commands.empty()) add(0, "empty program");
  for (std::size_t idx = 0; idx < p.commands.size(); ++idx) {
    const SlpCommand& c = p.commands[idx];
    const int i = static_cast<int>(idx + 1);
    if (c.target != i) add(idx + 1, "assigns S" + std::to_string(c.target) + ", expected S" + std::to_string(i));
    if (idx == 0 && c.op != Op::load_input) add(1, "first command must be S1 = y");
    if (c.op == Op::load_constant && !constant_allowed(c.digits, policy)) {
      add(idx + 1, "constant " + c.digits + " not allowed by the digit policy");
    }
    if (c.op == Op::subtract || c.op == Op::multiply) {
      for (int operand : {c.j, c.k}) {
        if (operand < 1 || operand >= i) {
          add(idx + 1, "operand S" + std::to_string(operand) + " violates 1 <= j,k < " + std::to_string(i));
        }
      }
    }
  }
  return r;
}

/// Runs without validation; operands must still be in range.
inline Value run_unchecked(const SlpProgram& p, Value y) {
  std::vector<Value> regs;
  regs.reserve(p.commands.size());
  for (const SlpCommand& c : p.commands) {
    auto reg = [&](int r) {
      if (r < 1 || static_cast<std::size_t>(r) > regs.size()) {
        throw InvalidInput("register S" + std::to_string(r) + " read before assignment");
      }
      return regs[static_cast<std::size_t>(r - 1)];
    };
    switch (c.op) {
      case Op::load_input: regs.push_back(y); break;
      case Op::load_constant: {
        // Constants reduce on entry.
        std::int64_t v = 0;
        for (char d : c.digits) v = (v * 10 + (d - '0')) % Value::modulus;
        regs.push_back(Value::from(v));
        break;
      }
      case Op::subtract: regs.push_back(reg(c.j) - reg(c.k)); break;
      case Op::multiply: regs.push_back(reg(c.j) * reg(c.k)); break;
    }
  }
  if (regs.empty()) throw InvalidInput("empty program");
  return regs.back();
}

inline Value run(const SlpProgram& p, Value y, DigitPolicy policy) {
  ValidationReport r = validate(p, policy);
  if (!r.ok()) {
    const Violation& v = r.violations.front();
    throw InvalidInput("invalid program at command " + std::to_string(v.command) + ": " + v.message);
  }
  return run_unchecked(p, y);
}

// ---------------------------------------------------------------------------
// Targets

/// Coefficients in descending degree, reduced mod 2019.
using Polynomial = std::vector<Value>;

inline Polynomial parse_polynomial(std::string_view text) {
  if (text == "f2019") text = "1,0,1909,0,401,0";
  Polynomial out;
  const std::string s = detail::strip(text);
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    if (comma == std::string::npos) comma = s.size();
    std::string_view tok = std::string_view(s).substr(pos, comma - pos);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw InvalidInput("invalid coefficient '" + std::string(tok) + "'");
    }
    out.push_back(Value::from(v));
    pos = comma + 1;
  }
  return out;
}

inline Value horner(const Polynomial& coeffs, Value y) {
  Value acc = Value::from(0);
  for (Value c : coeffs) acc = acc * y + c;
  return acc;
}

struct Equivalence {
  bool equal = true;
  std::optional<std::uint32_t> counterexample;
};

/// Exhaustive comparison against the target over all 2019 residues.
inline Equivalence verify_equivalence(const SlpProgram& p, const Polynomial& target,
                                      DigitPolicy policy) {
  ValidationReport r = validate(p, policy);
  if (!r.ok()) throw InvalidInput("invalid program: " + r.violations.front().message);
  for (std::uint32_t y = 0; y < Value::modulus; ++y) {
    const Value v = Value::from(y);
    if (run_unchecked(p, v) != horner(target, v)) return {false, y};
  }
  return {};
}

}  // namespace cryptobench::slp
