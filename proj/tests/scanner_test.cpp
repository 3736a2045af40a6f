#include "citeforge/errors.hpp"
#include "citeforge/scanner.hpp"

#include <gtest/gtest.h>

#include <random>

namespace citeforge {
namespace {

std::string rest(CharStream& s) { return s.content().substr(s.position()); }

// Independent reference: split on commas with no trimming at all.
std::vector<std::string> naive_split(const std::string& text) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::string item;
  for (char c : text) {
    if (c == ',') {
      out.push_back(item);
      item.clear();
    } else {
      item += c;
    }
  }
  out.push_back(item);
  return out;
}

TEST(ScanOptionalArg, SkipsSpacesThenReadsBracket) {
  CharStream s("  [Knu84]{key}");
  auto arg = scan_optional_arg(s);
  EXPECT_TRUE(arg.present_nonempty);
  EXPECT_EQ(arg.text, "Knu84");
  EXPECT_EQ(rest(s), "{key}");
}

TEST(ScanOptionalArg, AbsentLeavesNextCharacter) {
  CharStream s("{key}");
  auto arg = scan_optional_arg(s);
  EXPECT_FALSE(arg.present_nonempty);
  EXPECT_FALSE(arg.bracketed);
  EXPECT_EQ(arg.text, "");
  EXPECT_EQ(rest(s), "{key}");
}

TEST(ScanOptionalArg, BracketInsideGroupDoesNotClose) {
  CharStream s("[a{]}b]");
  EXPECT_EQ(scan_optional_arg(s).text, "a{]}b");
  EXPECT_TRUE(s.at_end());
}

TEST(ScanOptionalArg, EmptyBracketsLookAbsent) {
  CharStream s("[]{k}");
  auto arg = scan_optional_arg(s);
  EXPECT_FALSE(arg.present_nonempty);
  EXPECT_TRUE(arg.bracketed);
  EXPECT_EQ(arg.text, "");
  EXPECT_EQ(rest(s), "{k}");
}

TEST(ScanOptionalArg, WholeGroupArgumentLosesBraces) {
  CharStream s("[{a]b}]x");
  EXPECT_EQ(scan_optional_arg(s).text, "a]b");
  CharStream t("[{a}{b}]");
  EXPECT_EQ(scan_optional_arg(t).text, "{a}{b}");
}

TEST(ScanOptionalArg, LineBreaksAndCommentsAreSkipped) {
  CharStream s(" \n  % comment\n [x]");
  EXPECT_EQ(scan_optional_arg(s).text, "x");
  EXPECT_EQ(s.line(), 3);
}

TEST(ScanOptionalArg, UnterminatedNamesOpeningLine) {
  CharStream s("\n\n[abc");
  try {
    scan_optional_arg(s);
    FAIL() << "expected ScanError";
  } catch (const ScanError& e) {
    EXPECT_EQ(e.code(), ScanErrorCode::UnterminatedOptional);
    EXPECT_EQ(e.line(), 3);
  }
}

TEST(ScanOptionalArg, NeverConsumesNonSpaceWithoutBracket) {
  std::mt19937 rng(7);
  const std::string alphabet = " \n\tab{}\\x";
  for (int trial = 0; trial < 500; ++trial) {
    std::string prefix(rng() % 4, ' ');
    std::string tail;
    tail += alphabet[3 + rng() % (alphabet.size() - 3)];
    for (int k = rng() % 6; k > 0; --k) tail += alphabet[rng() % alphabet.size()];
    CharStream s(prefix + tail);
    auto arg = scan_optional_arg(s);
    EXPECT_FALSE(arg.bracketed);
    EXPECT_EQ(rest(s), tail);
  }
}

TEST(ScanGroupArg, Basic) {
  CharStream a("{abc}");
  EXPECT_EQ(scan_group_arg(a), "abc");
  CharStream b("{a{b}c}");
  EXPECT_EQ(scan_group_arg(b), "a{b}c");
}

TEST(ScanGroupArg, EscapedBracesDoNotCount) {
  CharStream s("{a\\}b}rest");
  EXPECT_EQ(scan_group_arg(s), "a\\}b");
  EXPECT_EQ(rest(s), "rest");
}

TEST(ScanGroupArg, UnbalancedIsAnError) {
  CharStream s("{a");
  try {
    scan_group_arg(s);
    FAIL() << "expected ScanError";
  } catch (const ScanError& e) {
    EXPECT_EQ(e.code(), ScanErrorCode::UnbalancedGroup);
    EXPECT_EQ(e.line(), 1);
  }
}

TEST(ScanGroupArg, SingleTokenWithoutBraces) {
  CharStream s("  \\foo{x}");
  EXPECT_EQ(scan_group_arg(s), "\\foo");
  CharStream t("xy");
  EXPECT_EQ(scan_group_arg(t), "x");
  CharStream e("   ");
  EXPECT_THROW(scan_group_arg(e), ScanError);
}

// Random balanced groups: the scan returns exactly the inside and the
// stream ends up just after the matching brace.
TEST(ScanGroupArg, BalancedRandomGroupsReturnToDepthZero) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    std::string inner;
    int depth = 0;
    for (int k = rng() % 30; k > 0; --k) {
      switch (rng() % 5) {
        case 0:
          inner += '{';
          ++depth;
          break;
        case 1:
          if (depth > 0) {
            inner += '}';
            --depth;
          }
          break;
        default:
          inner += static_cast<char>('a' + rng() % 3);
      }
    }
    inner += std::string(depth, '}');
    CharStream s("{" + inner + "}tail");
    EXPECT_EQ(scan_group_arg(s), inner);
    EXPECT_EQ(rest(s), "tail");
  }
}

TEST(SplitCommaList, Examples) {
  EXPECT_EQ(split_comma_list("a,b,c"), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_TRUE(split_comma_list("").empty());
  EXPECT_EQ(split_comma_list("a, b"), naive_split("a, b"));
  EXPECT_EQ(split_comma_list("a, b"), (std::vector<std::string>{"a", " b"}));
  EXPECT_EQ(split_comma_list("a,,b"), (std::vector<std::string>{"a", "", "b"}));
}

TEST(SplitCommaList, ConcatenationProperty) {
  std::mt19937 rng(3);
  auto item = [&] {
    std::string s;
    for (int k = 1 + rng() % 5; k > 0; --k) s += static_cast<char>(" abxy"[rng() % 5]);
    return s;
  };
  for (int trial = 0; trial < 200; ++trial) {
    std::string a = item();
    std::string b = item();
    auto joined = split_comma_list(a + "," + b);
    auto left = split_comma_list(a);
    auto right = split_comma_list(b);
    left.insert(left.end(), right.begin(), right.end());
    EXPECT_EQ(joined, left);
    EXPECT_EQ(joined, naive_split(a + "," + b));
  }
}

TEST(NextCommand, CiteWithNote) {
  CharStream s("\\cite[p.~3]{a,b} rest");
  auto item = next_command(s, standard_commands());
  ASSERT_TRUE(item);
  auto* cmd = std::get_if<CommandInvocation>(&*item);
  ASSERT_NE(cmd, nullptr);
  EXPECT_EQ(cmd->name, "cite");
  EXPECT_EQ(cmd->optional.text, "p.~3");
  EXPECT_EQ(cmd->args, (std::vector<std::string>{"a,b"}));
  EXPECT_EQ(cmd->source_line, 1);

  auto text = next_command(s, standard_commands());
  ASSERT_TRUE(text);
  EXPECT_EQ(std::get<TextRun>(*text).text, " rest");
  EXPECT_FALSE(next_command(s, standard_commands()));
}

TEST(NextCommand, PlainTextRun) {
  CharStream s("hello world");
  auto item = next_command(s, standard_commands());
  ASSERT_TRUE(item);
  EXPECT_EQ(std::get<TextRun>(*item).text, "hello world");
}

TEST(NextCommand, UnknownCommandPassesThrough) {
  CharStream s("\\unknowncmd x");
  auto item = next_command(s, standard_commands());
  ASSERT_TRUE(item);
  EXPECT_EQ(std::get<TextRun>(*item).text, "\\unknowncmd x");
}

TEST(NextCommand, NewcommandTakesOptionalAfterName) {
  CharStream s("\\newcommand{\\mk}[1]{B#1B}");
  auto item = next_command(s, standard_commands());
  auto& cmd = std::get<CommandInvocation>(*item);
  EXPECT_EQ(cmd.args, (std::vector<std::string>{"\\mk", "B#1B"}));
  EXPECT_EQ(cmd.optional.text, "1");
}

TEST(NextCommand, ArgumentsSpreadOverLinesCollapseToSpaces) {
  CharStream s("\\cite{a,\n   b}");
  auto item = next_command(s, standard_commands());
  EXPECT_EQ(std::get<CommandInvocation>(*item).args[0], "a, b");
}

TEST(NextCommand, EscapedPercentIsNotAComment) {
  CharStream s("50\\% off % dropped\nnext");
  std::string all;
  while (auto item = next_command(s, standard_commands())) all += std::get<TextRun>(*item).text;
  EXPECT_EQ(all, "50\\% off next");
}

TEST(NextCommand, RoundTripWithoutRecognizedCommands) {
  std::mt19937 rng(42);
  const std::vector<std::string> pieces = {"a",  "b",   " ",      "\n",     "{", "}", "[", "]",
                                           "~",  ",",   "\\foo",  "\\bar ", "\\\\", "\\{", ".", "\\"};
  for (int trial = 0; trial < 500; ++trial) {
    std::string doc;
    for (int k = rng() % 40; k > 0; --k) doc += pieces[rng() % pieces.size()];
    CharStream s(doc);
    std::string rebuilt;
    while (auto item = next_command(s, standard_commands())) {
      auto* run = std::get_if<TextRun>(&*item);
      ASSERT_NE(run, nullptr) << doc;
      rebuilt += run->text;
    }
    EXPECT_EQ(rebuilt, doc);
  }
}

TEST(CharStream, LineTracksNewlinesBeforePosition) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    std::string text;
    for (int k = rng() % 50; k > 0; --k) text += "ab\n%c"[rng() % 5];
    CharStream s(text);
    while (!s.at_end()) {
      s.get();
      int newlines = 0;
      for (std::size_t i = 0; i < s.position(); ++i) newlines += text[i] == '\n';
      ASSERT_EQ(s.line(), 1 + newlines);
      ASSERT_LE(s.position(), text.size());
    }
  }
}

}  // namespace
}  // namespace citeforge
