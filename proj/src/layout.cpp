#include "citeforge/layout.hpp"

#include "citeforge/errors.hpp"

#include <cstdio>
#include <string>

namespace citeforge {

namespace {

// Minimal UTF-8 decoder; malformed bytes come back as themselves.
char32_t next_code_point(std::string_view text, std::size_t& i) {
  auto byte = [&](std::size_t k) { return static_cast<unsigned char>(text[k]); };
  unsigned char lead = byte(i);
  int extra = lead >= 0xF0 ? 3 : lead >= 0xE0 ? 2 : lead >= 0xC0 ? 1 : 0;
  if (extra > 0 && i + extra >= text.size()) {
    ++i;
    return lead;
  }
  char32_t cp = extra == 0 ? lead : lead & (0x3F >> extra);
  for (int k = 1; k <= extra; ++k) {
    if ((byte(i + k) & 0xC0) != 0x80) {
      ++i;
      return lead;
    }
    cp = (cp << 6) | (byte(i + k) & 0x3F);
  }
  i += extra + 1;
  return cp;
}

std::string describe(char32_t cp) {
  if (cp < 0x80) return std::string("'") + static_cast<char>(cp) + "'";
  char buf[16];
  std::snprintf(buf, sizeof buf, "U+%04X", static_cast<unsigned>(cp));
  return buf;
}

}  // namespace

Length measure_label(std::string_view label, const WidthMetric& metric) {
  std::string boxed = "[" + std::string(label) + "]";
  Rational total(0);
  for (std::size_t i = 0; i < boxed.size();) {
    char32_t cp = next_code_point(boxed, i);
    if (auto it = metric.widths.find(cp); it != metric.widths.end()) {
      total += it->second;
    } else if (metric.fallback) {
      total += *metric.fallback;
    } else {
      throw MeasureError("no width for character " + describe(cp), cp);
    }
  }
  return {total, Unit::em};
}

}  // namespace citeforge
