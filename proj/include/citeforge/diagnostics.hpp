#pragma once

#include <optional>
#include <string>
#include <vector>

namespace citeforge {

struct Warning {
  std::optional<int> line;
  std::string key;
  std::string text;
  bool operator==(const Warning&) const = default;
};

// Advisory notes about inputs that are processed faithfully but are likely
// not what the author meant (empty optional brackets, spaces in keys).
struct LintNote {
  int line = 0;
  std::string code;
  std::string message;
  bool operator==(const LintNote&) const = default;
};

struct Diagnostics {
  std::vector<Warning> warnings;
  std::vector<std::string> messages;
  std::vector<LintNote> lint;
  bool operator==(const Diagnostics&) const = default;
};

}  // namespace citeforge
