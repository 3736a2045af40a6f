#include "citeforge/macros.hpp"

#include "citeforge/errors.hpp"

#include <cctype>
#include <vector>

namespace citeforge {

namespace {

bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

}  // namespace

int parse_param_count(const OptionalArg& nparams) {
  if (nparams.empty()) return 0;
  std::string_view text = nparams.text;
  std::size_t i = 0;
  bool negative = false;
  // TeX accepts any run of signs and spaces before the digits.
  while (i < text.size() && (text[i] == '+' || text[i] == '-' || text[i] == ' ')) {
    if (text[i] == '-') negative = !negative;
    ++i;
  }
  std::size_t digits_start = i;
  long value = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    value = std::min(value * 10 + (text[i] - '0'), 1'000'000'000L);
    ++i;
  }
  bool has_digits = i > digits_start;
  while (i < text.size() && text[i] == ' ') ++i;
  if (!has_digits || i != text.size()) {
    throw MacroError("Missing number: `" + nparams.text + "' is not a parameter count");
  }
  if (negative) value = -value;
  if (value > 9) throw MacroError(std::to_string(value) + " is too many parameters");
  if (value < 0) throw MacroError(std::to_string(value) + " is too few parameters");
  return static_cast<int>(value);
}

void define_newcommand(MacroTable& defs, std::string_view name, const OptionalArg& nparams,
                       std::string_view body, int max_depth) {
  while (!name.empty() && is_space_char(name.front())) name.remove_prefix(1);
  while (!name.empty() && is_space_char(name.back())) name.remove_suffix(1);
  if (!name.empty() && name.front() == '\\') name.remove_prefix(1);
  if (name.empty()) throw MacroError("\\newcommand needs a command name");

  int count = parse_param_count(nparams);
  std::string expanded = expand_macros(defs, body, max_depth);
  defs.insert_or_assign(std::string(name), MacroDef{std::string(name), count, std::move(expanded)});
}

std::string substitute_params(std::string_view body, std::span<const std::string> args) {
  std::string out;
  out.reserve(body.size());
  for (std::size_t i = 0; i < body.size(); ++i) {
    char c = body[i];
    if (c != '#' || i + 1 >= body.size()) {
      out += c;
      continue;
    }
    char next = body[i + 1];
    if (next == '#') {
      out += '#';
      ++i;
    } else if (next >= '1' && next <= '9' && static_cast<std::size_t>(next - '0') <= args.size()) {
      out += args[next - '1'];
      ++i;
    } else {
      out += c;
    }
  }
  return out;
}

std::string expand_macros(const MacroTable& defs, std::string_view text, int max_depth) {
  if (defs.empty()) return std::string(text);

  // depth[i] is how many expansions produced buf[i].
  std::string buf(text);
  std::vector<int> depth(buf.size(), 0);
  std::string out;
  std::size_t i = 0;
  while (i < buf.size()) {
    if (buf[i] != '\\' || i + 1 >= buf.size()) {
      out += buf[i++];
      continue;
    }
    std::size_t end = i + 2;
    bool control_word = is_alpha(buf[i + 1]);
    if (control_word) {
      while (end < buf.size() && is_alpha(buf[end])) ++end;
    }
    std::string name = buf.substr(i + 1, end - i - 1);
    auto it = defs.find(name);
    if (it == defs.end()) {
      out.append(buf, i, end - i);
      i = end;
      continue;
    }

    int level = depth[i] + 1;
    if (level > max_depth) {
      throw MacroError("expansion of \\" + name + " exceeded depth " + std::to_string(max_depth));
    }
    std::size_t args_start = end;
    if (control_word) {
      while (args_start < buf.size() && is_space_char(buf[args_start])) ++args_start;
    }
    std::vector<std::string> args;
    std::size_t consumed = 0;
    if (it->second.num_params > 0) {
      CharStream stream(buf.substr(args_start), {.strip_comments = false});
      try {
        for (int k = 0; k < it->second.num_params; ++k) args.push_back(scan_group_arg(stream));
      } catch (const ScanError& e) {
        throw MacroError("argument of \\" + name + ": " + e.what(), e.line());
      }
      consumed = stream.position();
    }

    std::string replacement = substitute_params(it->second.body, args);
    std::size_t erase_end = args_start + consumed;
    buf.replace(i, erase_end - i, replacement);
    depth.erase(depth.begin() + static_cast<std::ptrdiff_t>(i),
                depth.begin() + static_cast<std::ptrdiff_t>(erase_end));
    depth.insert(depth.begin() + static_cast<std::ptrdiff_t>(i), replacement.size(), level);
  }
  return out;
}

}  // namespace citeforge
