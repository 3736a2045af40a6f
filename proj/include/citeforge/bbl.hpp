#pragma once

// Processing of .bbl files: the thebibliography environment, numbered and
// alpha \bibitem labels with their citedef write-back, \newblock blocks,
// font switches, \newcommand definitions and label-box layout.

#include "citeforge/aux_protocol.hpp"
#include "citeforge/citation.hpp"
#include "citeforge/diagnostics.hpp"
#include "citeforge/layout.hpp"
#include "citeforge/macros.hpp"

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace citeforge {

// Which side of the label box the fill goes on. Fixed by the first
// \bibitem of an environment.
enum class Alignment { unset, labels_left, labels_right };

std::string to_string(Alignment alignment);

struct BibItem {
  std::string key;
  std::string label;
  bool alpha = false;
  Alignment alignment = Alignment::unset;
  // One fragment per \newblock-separated block.
  std::vector<RenderedFragment> body;
  int line = 0;

  bool operator==(const BibItem&) const = default;
};

struct Bibliography {
  std::vector<BibItem> items;
  LayoutParams layout;
  Alignment alignment = Alignment::unset;
  Dimension newblock_glue = citeforge::newblock_glue();

  bool operator==(const Bibliography&) const = default;
};

struct BblConfig {
  WidthMetric metric = WidthMetric::uniform(Rational(1, 2));
  UnitScale scale;
  // Applied to the layout defaults before the file is read.
  std::function<void(LayoutParams&)> hook;
  // Definitions visible to the file. Copied; the caller's table never changes.
  MacroTable macros;
  int max_depth = kDefaultExpansionDepth;
  bool line_numbers = true;
};

struct BblState {
  explicit BblState(const BblConfig& config);

  WidthMetric metric;
  UnitScale scale;
  int max_depth;
  LayoutParams layout;
  // Extra space after the label box as configured (post-hook).
  Length configured_extraspace;
  int item_counter = 0;
  Alignment alignment = Alignment::unset;
  bool in_environment = false;
  MacroTable macros;
  std::vector<BibItem> items;
};

void begin_thebibliography(BblState& state, std::string_view widest);

// Assigns the label, defines it in `table` and writes the matching citedef.
// An empty optional argument, `[]` included, takes the numbered path.
BibItem bibitem(BblState& state, const OptionalArg& optional, std::string_view key,
                AuxSession& session, LabelTable& table, Diagnostics& diag, int line = 0);

Bibliography process_bbl(std::string_view content, const BblConfig& config, CiteContext& ctx);

}  // namespace citeforge
