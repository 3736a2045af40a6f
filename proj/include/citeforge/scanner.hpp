#pragma once

// Scanning primitives for the TeX subset used by documents and .bbl files:
// a character stream with line tracking and comment stripping, optional
// bracket arguments found by space-skipping lookahead, balanced group
// arguments, comma lists, and a table-driven command reader.

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace citeforge {

struct StreamOptions {
  // Drop `%` through end of line. Escaped `\%` is never a comment.
  bool strip_comments = true;
  // Treat `@` as a letter in control words (the aux-reading regime).
  bool at_is_letter = false;
};

class CharStream {
 public:
  explicit CharStream(std::string content, StreamOptions options = {});

  // These skip any comment sitting at the current position first.
  bool at_end();
  char peek();
  char get();

  // Raw access, used for the character after an escape.
  bool at_end_raw() const { return position_ >= content_.size(); }
  char get_raw();

  // Consumes spaces, tabs and line breaks (and comments between them).
  void skip_spaces();

  std::size_t position() const { return position_; }
  int line() const { return line_; }
  const std::string& content() const { return content_; }
  const StreamOptions& options() const { return options_; }

 private:
  void skip_comment();
  void advance();

  std::string content_;
  StreamOptions options_;
  std::size_t position_ = 0;
  int line_ = 1;
};

struct OptionalArg {
  // False for an absent argument and for `[]` alike.
  bool present_nonempty = false;
  std::string text;
  // Brackets were written, whatever they held.
  bool bracketed = false;

  bool empty() const { return !present_nonempty; }
};

enum class ArgKind { Optional, Group };
using Arity = std::vector<ArgKind>;
using ArityTable = std::map<std::string, Arity, std::less<>>;

struct CommandInvocation {
  std::string name;
  OptionalArg optional;
  std::vector<std::string> args;
  int source_line = 1;
};

struct TextRun {
  std::string text;
  int source_line = 1;
};

using ScanItem = std::variant<CommandInvocation, TextRun>;

bool is_space_char(char c);

OptionalArg scan_optional_arg(CharStream& stream);

// Undelimited argument: a balanced `{...}` group with its outer braces
// stripped, or else the single next token.
std::string scan_group_arg(CharStream& stream);

std::vector<std::string> split_comma_list(std::string_view list);

// Collapses each run of spaces, tabs and line breaks into one space, the way
// TeX's reader turns an argument spread over several lines into tokens.
std::string collapse_spaces(std::string_view text);

// Reads a control sequence name; the escape character is already consumed.
std::string scan_command_name(CharStream& stream);

// Scans arguments in `arity` order; argument text goes through collapse_spaces.
CommandInvocation scan_arguments(CharStream& stream, std::string name, const Arity& arity,
                                 int line);

std::optional<ScanItem> next_command(CharStream& stream, const ArityTable& known);

// cite, nocite, bibliography, bibliographystyle.
const ArityTable& document_commands();
// Everything recognized anywhere: the document set plus bibitem, newcommand,
// begin, end and newblock.
const ArityTable& standard_commands();

}  // namespace citeforge
