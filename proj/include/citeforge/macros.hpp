#pragma once

// \newcommand with 0-9 undelimited parameters. Bodies are expanded against
// the macros already defined when the definition is made (edef semantics),
// leaving the #1..#9 markers in place.

#include "citeforge/scanner.hpp"

#include <map>
#include <span>
#include <string>
#include <string_view>

namespace citeforge {

inline constexpr int kDefaultExpansionDepth = 256;

struct MacroDef {
  std::string name;
  int num_params = 0;
  std::string body;
  bool operator==(const MacroDef&) const = default;
};

using MacroTable = std::map<std::string, MacroDef, std::less<>>;

// 0 for an empty optional argument, else the TeX integer it spells.
// Throws MacroError for counts outside 0..9 or text that is not a number.
int parse_param_count(const OptionalArg& nparams);

// `name` may carry its escape character ("\foo" or "foo").
void define_newcommand(MacroTable& defs, std::string_view name, const OptionalArg& nparams,
                       std::string_view body, int max_depth = kDefaultExpansionDepth);

// Replaces #k with args[k-1] and ## with #.
std::string substitute_params(std::string_view body, std::span<const std::string> args);

// Expands every defined macro until none is left. A replacement produced by
// an expansion nested `max_depth` deep raises MacroError naming the macro.
std::string expand_macros(const MacroTable& defs, std::string_view text,
                          int max_depth = kDefaultExpansionDepth);

}  // namespace citeforge
