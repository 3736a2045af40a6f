#include "citeforge/report.hpp"

namespace citeforge {

namespace {

using nlohmann::json;

json length_json(const Length& length, const UnitScale& scale) {
  Rational pt = scale.to_pt(length);
  return {{"pt", to_double(pt)}, {"exact_pt", format_decimal(pt)}, {"source", to_string(length)}};
}

json dimension_json(const Dimension& dim, const UnitScale& scale) {
  json out = length_json(dim.natural, scale);
  out["source"] = to_string(dim);
  if (dim.stretch) out["stretch"] = length_json(*dim.stretch, scale);
  if (dim.shrink) out["shrink"] = length_json(*dim.shrink, scale);
  return out;
}

std::string style_tag(Style style) {
  switch (style) {
    case Style::typewriter:
      return "tt";
    case Style::emphasis:
      return "em";
    case Style::smallcaps:
      return "sc";
    case Style::plain:
      break;
  }
  return "";
}

}  // namespace

std::string render(const RenderedFragment& fragment, RenderMode mode) {
  std::string out;
  for (const auto& span : fragment.spans) {
    if (mode == RenderMode::annotated && span.style != Style::plain) {
      out += "⟨" + style_tag(span.style) + ":" + span.text + "⟩";
    } else {
      out += span.text;
    }
  }
  return out;
}

json layout_json(const LayoutParams& layout, const UnitScale& scale) {
  return {
      {"biblabelwidth", length_json(layout.biblabelwidth, scale)},
      {"biblabelextraspace", length_json(layout.biblabelextraspace, scale)},
      {"hangindent", length_json(layout.hangindent(scale), scale)},
      {"parskip", dimension_json(layout.parskip, scale)},
      {"clubpenalty", layout.clubpenalty},
      {"widowpenalty", layout.widowpenalty},
      {"tolerance", layout.tolerance},
      {"hfuzz", length_json(layout.hfuzz, scale)},
      {"frenchspacing", layout.frenchspacing},
  };
}

json bibliography_json(const Bibliography& bib, const UnitScale& scale) {
  json items = json::array();
  for (const auto& item : bib.items) {
    json blocks = json::array();
    for (const auto& block : item.body) blocks.push_back(render(block, RenderMode::annotated));
    items.push_back({{"key", item.key},
                     {"label", item.label},
                     {"alpha", item.alpha},
                     {"line", item.line},
                     {"blocks", blocks}});
  }
  return {{"items", items},
          {"alignment", to_string(bib.alignment)},
          {"layout", layout_json(bib.layout, scale)},
          {"newblock_glue", dimension_json(bib.newblock_glue, scale)}};
}

json make_report(const FixpointResult& result, const JobConfig& cfg) {
  const PassResult& pass = result.final_pass;
  UnitScale scale = cfg.scale();

  json warnings = json::array();
  for (const auto& w : pass.diagnostics.warnings) {
    warnings.push_back({{"line", w.line ? json(*w.line) : json(nullptr)},
                        {"key", w.key},
                        {"message", w.text}});
  }
  json lint = json::array();
  for (const auto& note : pass.diagnostics.lint) {
    lint.push_back({{"line", note.line}, {"code", note.code}, {"message", note.message}});
  }
  json citations = json::object();
  for (const auto& [name, state] : pass.labels.entries()) {
    std::string key = name.substr(2);
    if (auto* defined = std::get_if<Defined>(&state)) {
      citations[key] = {{"state", "defined"}, {"label", defined->label}};
    } else if (auto* fallback = std::get_if<Fallback>(&state)) {
      citations[key] = {{"state", "fallback"}, {"label", fallback->key}};
    }
  }

  json report = {
      {"jobname", cfg.jobname},
      {"passes_used", result.passes_used},
      {"converged", result.converged},
      {"warnings", warnings},
      {"messages", pass.diagnostics.messages},
      {"citations", citations},
      {"undefined", undefined_keys(pass.labels)},
      {"lint", lint},
      {"nobreak_before_bibliography", pass.nobreak_before_bibliography},
      {"aux", result.final_aux},
  };
  report["bibliography"] = pass.bibliography ? bibliography_json(*pass.bibliography, scale) : json(nullptr);
  if (!result.converged) report["previous_aux"] = result.previous_aux;
  return report;
}

}  // namespace citeforge
