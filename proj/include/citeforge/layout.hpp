#pragma once

#include "citeforge/dimension.hpp"

#include <map>
#include <optional>
#include <string_view>

namespace citeforge {

// Per-character label widths in em. Characters without an entry take
// `fallback` when set; otherwise measuring them is an error.
struct WidthMetric {
  std::map<char32_t, Rational> widths;
  std::optional<Rational> fallback;

  static WidthMetric uniform(Rational width_em) { return {{}, width_em}; }
};

// Width of "[" + label + "]" in em. Throws MeasureError.
Length measure_label(std::string_view label, const WidthMetric& metric);

// Paragraph-shape metadata for a rendered bibliography. Recorded, never
// interpreted.
struct LayoutParams {
  Length biblabelwidth{Rational(0), Unit::pt};
  Length biblabelextraspace{Rational(1, 2), Unit::em};
  Dimension parskip{{Rational(3, 2), Unit::ex},
                    Length{Rational(1, 2), Unit::ex},
                    Length{Rational(1, 2), Unit::ex}};
  int clubpenalty = 4000;
  int widowpenalty = 4000;
  int tolerance = 10000;
  Length hfuzz{Rational(1, 2), Unit::pt};
  bool frenchspacing = true;

  // biblabelwidth + biblabelextraspace.
  Length hangindent(const UnitScale& scale) const {
    return add(biblabelwidth, biblabelextraspace, scale);
  }

  bool operator==(const LayoutParams&) const = default;
};

// Inter-block glue inserted at \newblock.
inline Dimension newblock_glue() {
  return {{Rational(11, 100), Unit::em},
          Length{Rational(33, 100), Unit::em},
          Length{Rational(7, 100), Unit::em}};
}

}  // namespace citeforge
