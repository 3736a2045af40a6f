#pragma once

// \cite and \nocite: aux record emission, label lookup, bracketed rendering
// and the one-shot undefined-citation warning.

#include "citeforge/aux_protocol.hpp"
#include "citeforge/diagnostics.hpp"
#include "citeforge/label_table.hpp"
#include "citeforge/scanner.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace citeforge {

enum class Style { plain, typewriter, emphasis, smallcaps };

struct Span {
  Style style = Style::plain;
  std::string text;
  bool operator==(const Span&) const = default;
};

struct RenderedFragment {
  std::vector<Span> spans;

  // Adjacent spans of the same style are merged; empty text is dropped.
  void append(Style style, std::string_view text);
  void append(const RenderedFragment& other);
  std::string text() const;
  bool empty() const { return spans.empty(); }

  bool operator==(const RenderedFragment&) const = default;
};

struct CiteStyleHooks {
  std::string open = "[";
  std::string close = "]";
  std::string separator = ", ";
  std::function<std::string(std::string_view)> note_format = [](std::string_view note) {
    return ", " + std::string(note);
  };
};

// Everything a citation command touches during a pass.
struct CiteContext {
  AuxSession& session;
  LabelTable& table;
  const CiteStyleHooks& hooks;
  Diagnostics& diag;
  bool line_numbers = true;
};

struct CiteOneResult {
  RenderedFragment fragment;
  std::optional<std::string> warning;
};

// "42: Undefined citation `x'." (no prefix without a line).
std::string undefined_citation_message(std::string_view key, std::optional<int> line);

CiteOneResult cite_one(std::string_view key, LabelTable& table, bool warnings_enabled,
                       std::optional<int> line);

// Writes one \citation record holding `keys` verbatim.
void nocite(CiteContext& ctx, std::string_view keys, int line);

RenderedFragment cite(CiteContext& ctx, std::string_view keys, const OptionalArg& note, int line);

void citedef(LabelTable& table, std::string_view key, std::string label);

}  // namespace citeforge
