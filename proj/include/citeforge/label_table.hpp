#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace citeforge {

// Name under which a citation key's label lives: "b@" + key, bytewise.
std::string label_name(std::string_view key);

struct Undefined {
  bool operator==(const Undefined&) const = default;
};
// The raw key, shown in typewriter after a first undefined cite.
struct Fallback {
  std::string key;
  bool operator==(const Fallback&) const = default;
};
struct Defined {
  std::string label;
  bool operator==(const Defined&) const = default;
};

using LabelState = std::variant<Undefined, Fallback, Defined>;

class LabelTable {
 public:
  // Undefined for keys never seen.
  LabelState state(std::string_view key) const;

  void define(std::string_view key, std::string label);
  void set_fallback(std::string_view key);

  // Entries keyed by label name ("b@key").
  const std::map<std::string, LabelState, std::less<>>& entries() const { return entries_; }

  bool operator==(const LabelTable&) const = default;

 private:
  std::map<std::string, LabelState, std::less<>> entries_;
};

}  // namespace citeforge
