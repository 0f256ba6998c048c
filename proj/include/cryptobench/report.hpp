#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "cryptobench/util/fnv.hpp"

namespace cryptobench {

/// Line-oriented key=value report with a fixed field order:
///
///   command=<name>
///   inputs=<fnv1a64 of the inputs, hex>
///   metric.<key>=<value>          (insertion order)
///   check.<name>=pass|fail|skip [detail]
///   outcome=pass|fail
///
/// Nothing machine-dependent (timings, thread ids, paths) goes in, so equal
/// inputs and seed give byte-identical text.
class Report {
 public:
  enum class Status { pass, fail, skip };

  struct Check {
    std::string name;
    Status status;
    std::string detail;
  };

  explicit Report(std::string command = {}) : command_(std::move(command)) {}

  void add_input(std::string_view bytes) {
    inputs_ = fnv1a64(bytes, inputs_);
    inputs_ = fnv1a64("\x1f", inputs_);
  }

  template <class T>
  void metric(std::string key, const T& value) {
    if constexpr (std::is_convertible_v<const T&, std::string_view>) {
      metrics_.emplace_back(std::move(key), std::string(std::string_view(value)));
    } else if constexpr (std::is_same_v<T, bool>) {
      metrics_.emplace_back(std::move(key), value ? "true" : "false");
    } else {
      metrics_.emplace_back(std::move(key), std::to_string(value));
    }
  }

  void check(std::string name, bool ok, std::string detail = {}) {
    checks_.push_back({std::move(name), ok ? Status::pass : Status::fail, std::move(detail)});
  }

  void skip(std::string name, std::string detail = {}) {
    checks_.push_back({std::move(name), Status::skip, std::move(detail)});
  }

  bool passed() const noexcept {
    for (const Check& c : checks_) {
      if (c.status == Status::fail) return false;
    }
    return true;
  }

  const std::vector<Check>& checks() const noexcept { return checks_; }
  const std::string& command() const noexcept { return command_; }

  static std::string_view status_name(Status s) {
    switch (s) {
      case Status::pass: return "pass";
      case Status::fail: return "fail";
      case Status::skip: return "skip";
    }
    return "fail";
  }

  std::string serialize() const {
    std::string out = "command=" + command_ + "\n";
    out += "inputs=" + hex64(inputs_) + "\n";
    for (const auto& [k, v] : metrics_) out += "metric." + k + "=" + v + "\n";
    for (const Check& c : checks_) {
      out += "check." + c.name + "=" + std::string(status_name(c.status));
      if (!c.detail.empty()) out += " " + c.detail;
      out += "\n";
    }
    out += std::string("outcome=") + (passed() ? "pass" : "fail") + "\n";
    return out;
  }

 private:
  std::string command_;
  std::uint64_t inputs_ = 0xcbf29ce484222325ULL;
  std::vector<std::pair<std::string, std::string>> metrics_;
  std::vector<Check> checks_;
};

}  // namespace cryptobench
