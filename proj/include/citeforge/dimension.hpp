#pragma once

// Exact lengths in pt/em/ex. Values are rationals so label widths and
// indents compare exactly.

#include <boost/rational.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace citeforge {

using Rational = boost::rational<std::int64_t>;

enum class Unit { pt, em, ex };

struct Length {
  Rational value{0};
  Unit unit = Unit::pt;
  bool operator==(const Length&) const = default;
};

// Natural size with optional stretch and shrink, as in "1.5ex plus .5ex minus .5ex".
struct Dimension {
  Length natural;
  std::optional<Length> stretch;
  std::optional<Length> shrink;
  bool operator==(const Dimension&) const = default;
};

struct UnitScale {
  Rational em_pt{10};
  Rational ex_pt{5};

  static UnitScale from_em(Rational em_pt) { return {em_pt, em_pt / 2}; }
  Rational to_pt(const Length& length) const;
};

// Same-unit sums stay in that unit; mixed sums are taken in pt.
Length add(const Length& a, const Length& b, const UnitScale& scale);

// Decimal text such as "10", ".5", "-0.07". Throws std::invalid_argument.
Rational parse_decimal(std::string_view text);
// Exact decimal when the denominator allows it, otherwise "num/den".
std::string format_decimal(const Rational& value);
double to_double(const Rational& value);

Length parse_length(std::string_view text);
Dimension parse_dimension(std::string_view text);

std::string unit_name(Unit unit);
std::string to_string(const Length& length);
std::string to_string(const Dimension& dimension);

}  // namespace citeforge
