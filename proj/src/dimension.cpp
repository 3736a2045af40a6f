#include "citeforge/dimension.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace citeforge {

Rational UnitScale::to_pt(const Length& length) const {
  switch (length.unit) {
    case Unit::pt:
      return length.value;
    case Unit::em:
      return length.value * em_pt;
    case Unit::ex:
      return length.value * ex_pt;
  }
  return length.value;
}

Length add(const Length& a, const Length& b, const UnitScale& scale) {
  if (a.unit == b.unit) return {a.value + b.value, a.unit};
  return {scale.to_pt(a) + scale.to_pt(b), Unit::pt};
}

Rational parse_decimal(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  std::int64_t numerator = 0;
  std::int64_t denominator = 1;
  bool any_digit = false;
  bool seen_point = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c == '.' && !seen_point) {
      seen_point = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("not a decimal number: " + std::string(text));
    }
    any_digit = true;
    if (numerator > 100'000'000'000'000LL) throw std::invalid_argument("number too long");
    numerator = numerator * 10 + (c - '0');
    if (seen_point) denominator *= 10;
  }
  if (!any_digit) throw std::invalid_argument("not a decimal number: " + std::string(text));
  Rational value(numerator, denominator);
  return negative ? -value : value;
}

std::string format_decimal(const Rational& value) {
  std::int64_t den = value.denominator();
  std::int64_t rest = den;
  int twos = 0;
  int fives = 0;
  while (rest % 2 == 0) rest /= 2, ++twos;
  while (rest % 5 == 0) rest /= 5, ++fives;
  if (rest != 1) return std::to_string(value.numerator()) + "/" + std::to_string(den);

  int digits = std::max(twos, fives);
  std::int64_t scale = 1;
  for (int k = 0; k < digits; ++k) scale *= 10;
  std::int64_t scaled = value.numerator() * (scale / den);
  bool negative = scaled < 0;
  std::uint64_t magnitude = negative ? 0 - static_cast<std::uint64_t>(scaled) : scaled;
  std::string whole = std::to_string(magnitude / scale);
  std::string out = (negative ? "-" : "") + whole;
  if (digits > 0) {
    std::string frac = std::to_string(magnitude % scale);
    out += "." + std::string(digits - frac.size(), '0') + frac;
  }
  return out;
}

double to_double(const Rational& value) {
  return static_cast<double>(value.numerator()) / static_cast<double>(value.denominator());
}

std::string unit_name(Unit unit) {
  switch (unit) {
    case Unit::pt:
      return "pt";
    case Unit::em:
      return "em";
    case Unit::ex:
      return "ex";
  }
  return "pt";
}

Length parse_length(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.size() < 2) throw std::invalid_argument("not a length: " + std::string(text));
  std::string_view unit = text.substr(text.size() - 2);
  Length length;
  if (unit == "pt") {
    length.unit = Unit::pt;
  } else if (unit == "em") {
    length.unit = Unit::em;
  } else if (unit == "ex") {
    length.unit = Unit::ex;
  } else {
    throw std::invalid_argument("unknown unit in: " + std::string(text));
  }
  std::string_view number = text.substr(0, text.size() - 2);
  while (!number.empty() && number.back() == ' ') number.remove_suffix(1);
  length.value = parse_decimal(number);
  return length;
}

Dimension parse_dimension(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);

  // Units may be attached ("1.5ex") or separate ("1.5 ex").
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const auto& w = words[i];
    if (w == "plus" || w == "minus") {
      parts.push_back(w);
    } else if (i + 1 < words.size() && (words[i + 1] == "pt" || words[i + 1] == "em" || words[i + 1] == "ex")) {
      parts.push_back(w + words[i + 1]);
      ++i;
    } else {
      parts.push_back(w);
    }
  }
  if (parts.empty()) throw std::invalid_argument("empty dimension");

  Dimension dim;
  dim.natural = parse_length(parts[0]);
  std::size_t i = 1;
  if (i < parts.size() && parts[i] == "plus") {
    if (i + 1 >= parts.size()) throw std::invalid_argument("plus without a length");
    dim.stretch = parse_length(parts[i + 1]);
    i += 2;
  }
  if (i < parts.size() && parts[i] == "minus") {
    if (i + 1 >= parts.size()) throw std::invalid_argument("minus without a length");
    dim.shrink = parse_length(parts[i + 1]);
    i += 2;
  }
  if (i != parts.size()) throw std::invalid_argument("trailing text in dimension: " + std::string(text));
  return dim;
}

std::string to_string(const Length& length) {
  return format_decimal(length.value) + unit_name(length.unit);
}

std::string to_string(const Dimension& dimension) {
  std::string out = to_string(dimension.natural);
  if (dimension.stretch) out += " plus " + to_string(*dimension.stretch);
  if (dimension.shrink) out += " minus " + to_string(*dimension.shrink);
  return out;
}

}  // namespace citeforge
