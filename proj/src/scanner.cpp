#include "citeforge/scanner.hpp"

#include "citeforge/errors.hpp"

#include <cctype>

namespace citeforge {

namespace {

bool is_letter(char c, const StreamOptions& options) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0 || (options.at_is_letter && c == '@');
}

// Appends through the `}` matching an already consumed `{`. The closing
// brace itself is not appended.
void read_balanced(CharStream& stream, std::string& out, int open_line) {
  int depth = 1;
  while (true) {
    if (stream.at_end()) {
      throw ScanError(ScanErrorCode::UnbalancedGroup,
                      "unbalanced group opened on line " + std::to_string(open_line), open_line);
    }
    char c = stream.get();
    if (c == '\\') {
      out += c;
      if (!stream.at_end_raw()) out += stream.get_raw();
      continue;
    }
    if (c == '{') {
      ++depth;
    } else if (c == '}') {
      if (--depth == 0) return;
    }
    out += c;
  }
}

// True when `text` is exactly one brace group, `{...}`.
bool is_single_group(std::string_view text) {
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') return false;
  int depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '\\') {
      ++i;
      continue;
    }
    if (c == '{') ++depth;
    if (c == '}' && --depth == 0) return i + 1 == text.size();
  }
  return false;
}

}  // namespace

CharStream::CharStream(std::string content, StreamOptions options)
    : content_(std::move(content)), options_(options) {}

void CharStream::advance() {
  if (content_[position_] == '\n') ++line_;
  ++position_;
}

void CharStream::skip_comment() {
  if (!options_.strip_comments) return;
  while (position_ < content_.size() && content_[position_] == '%') {
    while (position_ < content_.size() && content_[position_] != '\n') advance();
    if (position_ < content_.size()) advance();
  }
}

bool CharStream::at_end() {
  skip_comment();
  return position_ >= content_.size();
}

char CharStream::peek() {
  skip_comment();
  return position_ < content_.size() ? content_[position_] : '\0';
}

char CharStream::get() {
  skip_comment();
  if (position_ >= content_.size()) return '\0';
  char c = content_[position_];
  advance();
  return c;
}

char CharStream::get_raw() {
  if (position_ >= content_.size()) return '\0';
  char c = content_[position_];
  advance();
  return c;
}

void CharStream::skip_spaces() {
  while (!at_end() && is_space_char(peek())) get();
}

bool is_space_char(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

OptionalArg scan_optional_arg(CharStream& stream) {
  stream.skip_spaces();
  OptionalArg result;
  if (stream.at_end() || stream.peek() != '[') return result;

  int open_line = stream.line();
  stream.get();
  result.bracketed = true;
  std::string text;
  while (true) {
    if (stream.at_end()) {
      throw ScanError(ScanErrorCode::UnterminatedOptional,
                      "unterminated [ opened on line " + std::to_string(open_line), open_line);
    }
    char c = stream.get();
    if (c == ']') break;
    if (c == '\\') {
      text += c;
      if (!stream.at_end_raw()) text += stream.get_raw();
    } else if (c == '{') {
      text += c;
      read_balanced(stream, text, stream.line());
      text += '}';
    } else if (c == '}') {
      throw ScanError(ScanErrorCode::UnbalancedGroup,
                      "extra } inside [ opened on line " + std::to_string(open_line),
                      stream.line());
    } else {
      text += c;
    }
  }
  // A delimited argument that is one whole group loses its outer braces.
  if (is_single_group(text)) text = text.substr(1, text.size() - 2);
  result.present_nonempty = !text.empty();
  result.text = std::move(text);
  return result;
}

std::string scan_group_arg(CharStream& stream) {
  stream.skip_spaces();
  int line = stream.line();
  if (stream.at_end()) {
    throw ScanError(ScanErrorCode::UnexpectedEnd, "argument expected before end of input", line);
  }
  char c = stream.get();
  if (c == '{') {
    std::string out;
    read_balanced(stream, out, line);
    return out;
  }
  if (c == '}') {
    throw ScanError(ScanErrorCode::UnbalancedGroup, "argument begins with an extra }", line);
  }
  if (c == '\\') {
    if (stream.at_end_raw()) return "\\";
    return "\\" + scan_command_name(stream);
  }
  return std::string(1, c);
}

std::vector<std::string> split_comma_list(std::string_view list) {
  std::vector<std::string> items;
  if (list.empty()) return items;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = list.find(',', start);
    if (comma == std::string_view::npos) {
      items.emplace_back(list.substr(start));
      return items;
    }
    items.emplace_back(list.substr(start, comma - start));
    start = comma + 1;
  }
}

std::string collapse_spaces(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool in_space = false;
  for (char c : text) {
    if (is_space_char(c)) {
      if (!in_space) out += ' ';
      in_space = true;
    } else {
      out += c;
      in_space = false;
    }
  }
  return out;
}

std::string scan_command_name(CharStream& stream) {
  if (stream.at_end_raw()) return {};
  char first = stream.get_raw();
  std::string name(1, first);
  if (!is_letter(first, stream.options())) return name;
  while (!stream.at_end_raw()) {
    char c = stream.content()[stream.position()];
    if (!is_letter(c, stream.options())) break;
    name += stream.get_raw();
  }
  return name;
}

CommandInvocation scan_arguments(CharStream& stream, std::string name, const Arity& arity,
                                 int line) {
  CommandInvocation cmd;
  cmd.name = std::move(name);
  cmd.source_line = line;
  for (ArgKind kind : arity) {
    if (kind == ArgKind::Optional) {
      cmd.optional = scan_optional_arg(stream);
      cmd.optional.text = collapse_spaces(cmd.optional.text);
    } else {
      cmd.args.push_back(collapse_spaces(scan_group_arg(stream)));
    }
  }
  return cmd;
}

std::optional<ScanItem> next_command(CharStream& stream, const ArityTable& known) {
  if (stream.at_end()) return std::nullopt;

  TextRun run;
  run.source_line = stream.line();
  if (stream.peek() == '\\') {
    stream.get();
    std::string name = scan_command_name(stream);
    if (auto it = known.find(name); it != known.end()) {
      return scan_arguments(stream, std::move(name), it->second, run.source_line);
    }
    run.text = "\\" + name;
  }
  while (!stream.at_end() && stream.peek() != '\\') run.text += stream.get();
  return run;
}

const ArityTable& document_commands() {
  static const ArityTable table{
      {"cite", {ArgKind::Optional, ArgKind::Group}},
      {"nocite", {ArgKind::Group}},
      {"bibliography", {ArgKind::Group}},
      {"bibliographystyle", {ArgKind::Group}},
  };
  return table;
}

const ArityTable& standard_commands() {
  static const ArityTable table = [] {
    ArityTable t = document_commands();
    t.emplace("bibitem", Arity{ArgKind::Optional, ArgKind::Group});
    t.emplace("newcommand", Arity{ArgKind::Group, ArgKind::Optional, ArgKind::Group});
    t.emplace("begin", Arity{ArgKind::Group, ArgKind::Group});
    t.emplace("end", Arity{ArgKind::Group});
    t.emplace("newblock", Arity{});
    return t;
  }();
  return table;
}

}  // namespace citeforge
