#include "citeforge/citation.hpp"

namespace citeforge {

std::string label_name(std::string_view key) { return "b@" + std::string(key); }

LabelState LabelTable::state(std::string_view key) const {
  auto it = entries_.find(label_name(key));
  return it == entries_.end() ? LabelState{Undefined{}} : it->second;
}

void LabelTable::define(std::string_view key, std::string label) {
  entries_.insert_or_assign(label_name(key), Defined{std::move(label)});
}

void LabelTable::set_fallback(std::string_view key) {
  entries_.insert_or_assign(label_name(key), Fallback{std::string(key)});
}

void RenderedFragment::append(Style style, std::string_view text) {
  if (text.empty()) return;
  if (!spans.empty() && spans.back().style == style) {
    spans.back().text += text;
  } else {
    spans.push_back({style, std::string(text)});
  }
}

void RenderedFragment::append(const RenderedFragment& other) {
  for (const auto& span : other.spans) append(span.style, span.text);
}

std::string RenderedFragment::text() const {
  std::string out;
  for (const auto& span : spans) out += span.text;
  return out;
}

std::string undefined_citation_message(std::string_view key, std::optional<int> line) {
  std::string prefix = line ? std::to_string(*line) + ": " : std::string();
  return prefix + "Undefined citation `" + std::string(key) + "'.";
}

CiteOneResult cite_one(std::string_view key, LabelTable& table, bool warnings_enabled,
                       std::optional<int> line) {
  CiteOneResult result;
  LabelState state = table.state(key);
  if (auto* defined = std::get_if<Defined>(&state)) {
    result.fragment.append(Style::plain, defined->label);
    return result;
  }
  if (std::holds_alternative<Undefined>(state)) {
    if (warnings_enabled) result.warning = undefined_citation_message(key, line);
    table.set_fallback(key);
  }
  result.fragment.spans.push_back({Style::typewriter, std::string(key)});
  return result;
}

void nocite(CiteContext& ctx, std::string_view keys, int line) {
  ensure_aux_read(ctx.session, ctx.table, ctx.diag);
  write_record(ctx.session, AuxRecord::citation(std::string(keys)));
  for (const auto& key : split_comma_list(keys)) {
    if (key.find_first_of(" \t") != std::string::npos) {
      ctx.diag.lint.push_back({line, "key-contains-space",
                               "citation key `" + key + "' contains a space"});
    }
  }
}

RenderedFragment cite(CiteContext& ctx, std::string_view keys, const OptionalArg& note, int line) {
  nocite(ctx, keys, line);

  RenderedFragment out;
  out.append(Style::plain, ctx.hooks.open);
  bool first = true;
  for (const auto& key : split_comma_list(keys)) {
    if (!first) out.append(Style::plain, ctx.hooks.separator);
    first = false;
    std::optional<int> where = ctx.line_numbers ? std::optional<int>(line) : std::nullopt;
    auto one = cite_one(key, ctx.table, ctx.session.warnings_enabled, where);
    if (one.warning) ctx.diag.warnings.push_back({where, key, *one.warning});
    for (auto& span : one.fragment.spans) {
      // Fallback labels stay one unbreakable span of their own.
      if (span.style == Style::typewriter) {
        out.spans.push_back(std::move(span));
      } else {
        out.append(span.style, span.text);
      }
    }
  }
  if (!note.empty()) out.append(Style::plain, ctx.hooks.note_format(note.text));
  out.append(Style::plain, ctx.hooks.close);
  return out;
}

void citedef(LabelTable& table, std::string_view key, std::string label) {
  table.define(key, std::move(label));
}

}  // namespace citeforge
