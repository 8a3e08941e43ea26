#pragma once

#include <optional>
#include <string>

namespace hanoi {

/// Outcome of one exhaustive structural check. A failing check always
/// carries a human-readable counterexample.
struct CheckResult {
  std::string name;
  bool pass = true;
  // Set when the check's precondition excludes the instance (e.g. n = 1).
  bool skipped = false;
  std::optional<std::string> counterexample;
  std::string note;

  static CheckResult ok(std::string name, std::string note = {}) {
    return {std::move(name), true, false, std::nullopt, std::move(note)};
  }
  static CheckResult fail(std::string name, std::string why) {
    return {std::move(name), false, false, std::move(why), {}};
  }
  static CheckResult skip(std::string name, std::string why) {
    return {std::move(name), true, true, std::nullopt, std::move(why)};
  }
};

}  // namespace hanoi
