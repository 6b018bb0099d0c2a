#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace lieq {

struct CheckLine {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ReproReport {
  std::string target;
  std::vector<CheckLine> checks;

  [[nodiscard]] bool passed() const;
  [[nodiscard]] std::string render() const;
};

const std::vector<std::string>& reproduce_targets();

/// Runs one named configuration against the embedded golden data. Unknown
/// targets throw SpecError.
ReproReport reproduce(const std::string& target, int threads = 1);

/// Contents of fixtures/golden.json, compiled in.
std::string_view golden_json_text();

}  // namespace lieq
