#include "citeforge/bbl.hpp"

#include "citeforge/errors.hpp"
#include "citeforge/scanner.hpp"

#include <cctype>
#include <optional>
#include <set>

namespace citeforge {

std::string to_string(Alignment alignment) {
  switch (alignment) {
    case Alignment::unset:
      return "unset";
    case Alignment::labels_left:
      return "labels_left";
    case Alignment::labels_right:
      return "labels_right";
  }
  return "unset";
}

BblState::BblState(const BblConfig& config)
    : metric(config.metric), scale(config.scale), max_depth(config.max_depth), macros(config.macros) {
  if (config.hook) config.hook(layout);
  configured_extraspace = layout.biblabelextraspace;
}

void begin_thebibliography(BblState& state, std::string_view widest) {
  state.layout.biblabelwidth = measure_label(widest, state.metric);
  state.layout.biblabelextraspace = state.configured_extraspace;
  state.item_counter = 0;
  state.alignment = Alignment::unset;
  state.in_environment = true;
}

BibItem bibitem(BblState& state, const OptionalArg& optional, std::string_view key,
                AuxSession& session, LabelTable& table, Diagnostics& diag, int line) {
  if (!state.in_environment) throw StructureError("\\bibitem outside thebibliography", line);

  BibItem item;
  item.key = std::string(key);
  item.line = line;
  if (optional.empty()) {
    if (optional.bracketed) {
      diag.lint.push_back({line, "empty-bracket-label",
                           "\\bibitem[]{" + item.key + "} has an empty label and is numbered"});
    }
    item.label = std::to_string(++state.item_counter);
    if (state.alignment == Alignment::unset) state.alignment = Alignment::labels_right;
  } else {
    item.alpha = true;
    item.label = collapse_spaces(expand_macros(state.macros, optional.text, state.max_depth));
    if (state.alignment == Alignment::unset) state.alignment = Alignment::labels_left;
  }
  item.alignment = state.alignment;
  citedef(table, item.key, item.label);
  write_record(session, AuxRecord::citedef(item.key, item.label));
  return item;
}

namespace {

Style switch_style(std::string_view name, bool& matched) {
  matched = true;
  if (name == "em" || name == "bblem" || name == "it") return Style::emphasis;
  if (name == "sc" || name == "bblsc") return Style::smallcaps;
  if (name == "rm" || name == "bblrm") return Style::plain;
  if (name == "tt") return Style::typewriter;
  matched = false;
  return Style::plain;
}

bool is_printable_symbol(char c) {
  return c == '&' || c == '%' || c == '$' || c == '#' || c == '_' || c == '{' || c == '}';
}

void trim_trailing_space(RenderedFragment& block) {
  while (!block.spans.empty()) {
    auto& text = block.spans.back().text;
    while (!text.empty() && text.back() == ' ') text.pop_back();
    if (!text.empty()) return;
    block.spans.pop_back();
  }
}

class BblProcessor {
 public:
  BblProcessor(const BblConfig& config, CiteContext& ctx) : state_(config), ctx_(ctx) {}

  Bibliography run(std::string_view content) {
    CharStream stream{std::string(content)};
    process(stream, std::nullopt);
    if (!style_stack_.empty()) {
      throw ScanError(ScanErrorCode::UnbalancedGroup, "group left open at end of file", stream.line());
    }
    finish_block();

    Bibliography bib;
    bib.items = std::move(state_.items);
    bib.layout = state_.layout;
    bib.alignment = state_.alignment;
    return bib;
  }

 private:
  // `fixed_line` is set while reading a macro expansion: diagnostics then
  // point at the invocation.
  void process(CharStream& stream, std::optional<int> fixed_line) {
    while (!stream.at_end()) {
      int line = fixed_line.value_or(stream.line());
      char c = stream.peek();
      if (c == '\\') {
        stream.get();
        if (stream.at_end_raw()) {
          emit_text("\\", line);
          continue;
        }
        std::string name = scan_command_name(stream);
        handle_command(name, stream, line);
      } else if (c == '{') {
        stream.get();
        style_stack_.push_back(style_);
      } else if (c == '}') {
        stream.get();
        if (style_stack_.empty()) throw StructureError("extra }", line);
        style_ = style_stack_.back();
        style_stack_.pop_back();
      } else if (is_space_char(c)) {
        stream.skip_spaces();
        emit_space();
      } else {
        std::string run;
        while (!stream.at_end()) {
          char d = stream.peek();
          if (d == '\\' || d == '{' || d == '}' || is_space_char(d)) break;
          run += stream.get();
        }
        emit_text(run, line);
      }
    }
  }

  void handle_command(const std::string& name, CharStream& stream, int line) {
    bool control_word = name.size() > 1 || std::isalpha(static_cast<unsigned char>(name[0]));
    const auto& table = standard_commands();

    if (name == "begin") {
      auto cmd = scan_arguments(stream, name, table.at("begin"), line);
      if (cmd.args[0] != "thebibliography") {
        ctx_.diag.lint.push_back(
            {line, "unexpected-environment", "\\begin{" + cmd.args[0] + "} treated as thebibliography"});
      }
      finish_block();
      begin_thebibliography(state_, cmd.args[1]);
      return;
    }
    if (name == "end") {
      scan_arguments(stream, name, table.at("end"), line);
      finish_block();
      state_.in_environment = false;
      return;
    }
    if (name == "bibitem") {
      auto cmd = scan_arguments(stream, name, table.at("bibitem"), line);
      finish_block();
      state_.items.push_back(
          bibitem(state_, cmd.optional, cmd.args[0], ctx_.session, ctx_.table, ctx_.diag, line));
      state_.items.back().body.emplace_back();
      stream.skip_spaces();
      return;
    }
    if (name == "newblock" || name == "bblnewblock") {
      require_item(line);
      finish_block();
      state_.items.back().body.emplace_back();
      stream.skip_spaces();
      return;
    }
    if (name == "newcommand") {
      auto cmd = scan_arguments(stream, name, table.at("newcommand"), line);
      try {
        define_newcommand(state_.macros, cmd.args[0], cmd.optional, cmd.args[1], state_.max_depth);
      } catch (Error& e) {
        throw MacroError(e.what(), line);
      }
      return;
    }
    if (name == "cite" || name == "nocite") {
      auto cmd = scan_arguments(stream, name, table.at(name), line);
      if (name == "nocite") {
        nocite(ctx_, cmd.args[0], line);
      } else {
        require_item(line);
        current_block().append(cite(ctx_, cmd.args[0], cmd.optional, line));
      }
      return;
    }
    bool is_style = false;
    Style style = switch_style(name, is_style);
    if (is_style) {
      style_ = style;
      stream.skip_spaces();
      return;
    }
    if (auto it = state_.macros.find(name); it != state_.macros.end()) {
      expand_invocation(it->second, stream, line);
      return;
    }
    if (!control_word && is_printable_symbol(name[0])) {
      emit_text(name, line);
      return;
    }
    if (name == " ") {
      emit_text(" ", line);
      return;
    }
    if (reported_unknown_.insert(name).second) {
      ctx_.diag.lint.push_back({line, "unknown-command", "\\" + name + " passed through as text"});
    }
    emit_text("\\" + name, line);
  }

  void expand_invocation(const MacroDef& def, CharStream& stream, int line) {
    std::vector<std::string> args;
    try {
      for (int k = 0; k < def.num_params; ++k) args.push_back(scan_group_arg(stream));
    } catch (const ScanError& e) {
      throw MacroError("argument of \\" + def.name + ": " + e.what(), line);
    }
    if (def.num_params == 0) stream.skip_spaces();
    std::string expanded;
    try {
      expanded = expand_macros(state_.macros, substitute_params(def.body, args), state_.max_depth - 1);
    } catch (const MacroError& e) {
      throw MacroError(e.what(), line);
    }
    CharStream inner{expanded, {.strip_comments = false}};
    process(inner, line);
  }

  void require_item(int line) {
    if (!state_.in_environment) throw StructureError("text outside thebibliography", line);
    if (state_.items.empty()) throw StructureError("text before the first \\bibitem", line);
  }

  RenderedFragment& current_block() { return state_.items.back().body.back(); }

  void emit_text(std::string_view text, int line) {
    if (text.empty()) return;
    require_item(line);
    current_block().append(style_, text);
  }

  void emit_space() {
    if (!state_.in_environment || state_.items.empty()) return;
    auto& block = current_block();
    if (block.empty()) return;
    const auto& last = block.spans.back().text;
    if (!last.empty() && last.back() == ' ') return;
    block.append(style_, " ");
  }

  void finish_block() {
    if (!state_.items.empty() && !state_.items.back().body.empty()) trim_trailing_space(current_block());
  }

  BblState state_;
  CiteContext& ctx_;
  Style style_ = Style::plain;
  std::vector<Style> style_stack_;
  std::set<std::string> reported_unknown_;
};

}  // namespace

Bibliography process_bbl(std::string_view content, const BblConfig& config, CiteContext& ctx) {
  return BblProcessor(config, ctx).run(content);
}

}  // namespace citeforge
