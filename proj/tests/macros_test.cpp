#include "citeforge/errors.hpp"
#include "citeforge/macros.hpp"

#include <gtest/gtest.h>

namespace citeforge {
namespace {

OptionalArg count(std::string text) { return {!text.empty(), text, true}; }

TEST(DefineNewcommand, OneParameter) {
  MacroTable defs;
  define_newcommand(defs, "mkbib", count("1"), "B#1B");
  EXPECT_EQ(defs.at("mkbib").num_params, 1);
  EXPECT_EQ(expand_macros(defs, "\\mkbib{x}"), "BxB");
}

TEST(DefineNewcommand, NameWithEscape) {
  MacroTable defs;
  define_newcommand(defs, " \\foo ", {}, "F");
  EXPECT_TRUE(defs.contains("foo"));
  EXPECT_EQ(expand_macros(defs, "\\foo bar"), "Fbar");
}

TEST(DefineNewcommand, TooManyAndTooFew) {
  MacroTable defs;
  try {
    define_newcommand(defs, "m", count("10"), "x");
    FAIL();
  } catch (const MacroError& e) {
    EXPECT_STREQ(e.what(), "10 is too many parameters");
  }
  try {
    define_newcommand(defs, "m", count("-1"), "x");
    FAIL();
  } catch (const MacroError& e) {
    EXPECT_STREQ(e.what(), "-1 is too few parameters");
  }
  EXPECT_THROW(define_newcommand(defs, "m", count("x"), "x"), MacroError);
  EXPECT_TRUE(defs.empty());
}

TEST(DefineNewcommand, EmptyCountMeansZero) {
  MacroTable defs;
  define_newcommand(defs, "z", count(""), "Z");
  EXPECT_EQ(defs.at("z").num_params, 0);
  EXPECT_EQ(parse_param_count(count(" 9 ")), 9);
  EXPECT_EQ(parse_param_count(count("+3")), 3);
}

// Two-stage trace: \b's body is "\a#1" with \a = "A" at definition time,
// so the stored body is "A#1"; redefining \a afterwards cannot reach it.
TEST(DefineNewcommand, BodyExpandedAtDefinitionTime) {
  MacroTable defs;
  define_newcommand(defs, "a", {}, "A");
  define_newcommand(defs, "b", count("1"), "\\a#1");
  EXPECT_EQ(defs.at("b").body, "A#1");
  define_newcommand(defs, "a", {}, "Z");
  EXPECT_EQ(expand_macros(defs, "\\b{x}"), "Ax");
}

TEST(DefineNewcommand, RedefinitionUsesOldMeaning) {
  MacroTable defs;
  define_newcommand(defs, "a", {}, "x");
  define_newcommand(defs, "a", {}, "\\a\\a");
  EXPECT_EQ(expand_macros(defs, "\\a"), "xx");
}

TEST(DefineNewcommand, NineParameters) {
  MacroTable defs;
  define_newcommand(defs, "nine", count("9"), "#9#8#7#6#5#4#3#2#1");
  EXPECT_EQ(expand_macros(defs, "\\nine{1}{2}{3}{4}{5}{6}{7}{8}{9}"), "987654321");
}

TEST(ExpandMacros, IdentityWithoutDefinitions) {
  MacroTable defs;
  EXPECT_EQ(expand_macros(defs, "\\em{x} #1 \\foo"), "\\em{x} #1 \\foo");
}

TEST(ExpandMacros, UnknownCommandsKept) {
  MacroTable defs;
  define_newcommand(defs, "a", {}, "A");
  EXPECT_EQ(expand_macros(defs, "\\ab \\a{} \\\\a"), "\\ab A{} \\\\a");
}

TEST(ExpandMacros, NestedArgumentsAndDoubledHash) {
  MacroTable defs;
  define_newcommand(defs, "p", count("2"), "(#1|#2)");
  EXPECT_EQ(expand_macros(defs, "\\p{\\p{a}{b}}{c}"), "((a|b)|c)");
  EXPECT_EQ(substitute_params("##1#1#3", std::vector<std::string>{"x"}), "#1x#3");
}

TEST(ExpandMacros, SelfRecursionHitsDepthCap) {
  MacroTable defs;
  defs["loop"] = {"loop", 0, "\\loop"};
  try {
    expand_macros(defs, "\\loop");
    FAIL() << "expected MacroError";
  } catch (const MacroError& e) {
    EXPECT_NE(std::string(e.what()).find("\\loop"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("256"), std::string::npos);
  }
  defs["grow"] = {"grow", 0, "x\\grow"};
  EXPECT_THROW(expand_macros(defs, "\\grow"), MacroError);
}

TEST(ExpandMacros, ChainWithinCapSucceeds) {
  MacroTable defs;
  defs["a"] = {"a", 0, "\\b"};
  defs["b"] = {"b", 0, "c"};
  EXPECT_EQ(expand_macros(defs, "\\a", 2), "c");
  EXPECT_THROW(expand_macros(defs, "\\a", 1), MacroError);
}

TEST(ExpandMacros, DepthCountsNestingNotTotal) {
  MacroTable defs;
  defs["x"] = {"x", 0, "y"};
  std::string many;
  for (int i = 0; i < 1000; ++i) many += "\\x{}";
  EXPECT_EQ(expand_macros(defs, many, 2).size(), 3000u);
}

TEST(ExpandMacros, MissingArgumentIsMacroError) {
  MacroTable defs;
  define_newcommand(defs, "m", count("1"), "#1");
  EXPECT_THROW(expand_macros(defs, "\\m"), MacroError);
}

}  // namespace
}  // namespace citeforge
