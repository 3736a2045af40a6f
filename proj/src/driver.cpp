#include "citeforge/driver.hpp"

#include "citeforge/aux_protocol.hpp"
#include "citeforge/errors.hpp"
#include "citeforge/scanner.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace citeforge {

bool MemoryFileAccess::exists(const std::string& path) {
  std::lock_guard lock(mutex_);
  return files_.contains(path);
}

std::optional<std::string> MemoryFileAccess::read(const std::string& path) {
  std::lock_guard lock(mutex_);
  auto it = files_.find(path);
  if (it == files_.end()) return std::nullopt;
  return it->second;
}

void MemoryFileAccess::write(const std::string& path, std::string_view bytes) {
  std::lock_guard lock(mutex_);
  files_.insert_or_assign(path, std::string(bytes));
  writes_.push_back(path);
}

void MemoryFileAccess::put(const std::string& path, std::string content) {
  std::lock_guard lock(mutex_);
  files_.insert_or_assign(path, std::move(content));
}

void MemoryFileAccess::remove(const std::string& path) {
  std::lock_guard lock(mutex_);
  files_.erase(path);
}

std::vector<std::string> MemoryFileAccess::write_log() const {
  std::lock_guard lock(mutex_);
  return writes_;
}

bool DiskFileAccess::exists(const std::string& path) {
  std::lock_guard lock(mutex_);
  std::ifstream in(root_ / path, std::ios::binary);
  return in.good();
}

std::optional<std::string> DiskFileAccess::read(const std::string& path) {
  std::lock_guard lock(mutex_);
  std::ifstream in(root_ / path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void DiskFileAccess::write(const std::string& path, std::string_view bytes) {
  std::lock_guard lock(mutex_);
  std::ofstream out(root_ / path, std::ios::binary | std::ios::trunc);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("cannot write " + (root_ / path).string());
}

std::string probe_path(const std::optional<std::string>& base, std::string_view ext,
                       const JobConfig& cfg) {
  std::string path = base && !base->empty() ? *base : cfg.jobname;
  if (!ext.empty()) path += "." + std::string(ext);
  return path;
}

bool file_exists(const std::optional<std::string>& base, std::string_view ext, const JobConfig& cfg,
                 FileAccess& fs) {
  return fs.exists(probe_path(base, ext, cfg));
}

std::vector<std::string> undefined_keys(const LabelTable& table) {
  std::vector<std::string> keys;
  for (const auto& [name, state] : table.entries()) {
    if (auto* fallback = std::get_if<Fallback>(&state)) keys.push_back(fallback->key);
  }
  return keys;
}

namespace {

void append_bibliography(RenderedFragment& out, const Bibliography& bib) {
  for (const auto& item : bib.items) {
    out.append(Style::plain, "[" + item.label + "] ");
    bool first = true;
    for (const auto& block : item.body) {
      if (block.empty()) continue;
      if (!first) out.append(Style::plain, " ");
      first = false;
      out.append(block);
    }
    out.append(Style::plain, "\n");
  }
}

class PassRunner {
 public:
  PassRunner(const JobConfig& cfg, FileAccess& fs)
      : cfg_(cfg),
        fs_(fs),
        session_(cfg.no_aux),
        ctx_{session_, result_.labels, cfg.hooks, result_.diagnostics, cfg.diagnostics_line_numbers} {}

  PassResult run(std::string_view document) {
    if (!cfg_.no_aux && file_exists(std::nullopt, "aux", cfg_, fs_)) {
      session_.prior_aux = fs_.read(cfg_.aux_path());
    }
    std::string source_name = cfg_.document_name.empty() ? cfg_.jobname + ".tex" : cfg_.document_name;
    try {
      CharStream stream{std::string(document)};
      while (auto item = next_command(stream, document_commands())) {
        if (auto* run = std::get_if<TextRun>(&*item)) {
          result_.rendered.append(Style::plain, run->text);
        } else {
          dispatch(std::get<CommandInvocation>(*item));
        }
      }
    } catch (Error& e) {
      if (e.file().empty()) e.set_file(source_name);
      throw;
    }

    result_.aux_bytes = serialize_records(session_.pending_writes);
    if (!cfg_.no_aux) fs_.write(cfg_.aux_path(), result_.aux_bytes);
    return std::move(result_);
  }

 private:
  void dispatch(const CommandInvocation& cmd) {
    if (cmd.name == "cite") {
      result_.rendered.append(cite(ctx_, cmd.args[0], cmd.optional, cmd.source_line));
    } else if (cmd.name == "nocite") {
      nocite(ctx_, cmd.args[0], cmd.source_line);
    } else if (cmd.name == "bibliographystyle") {
      ensure_aux_read(session_, result_.labels, result_.diagnostics);
      write_record(session_, AuxRecord::bibstyle(cmd.args[0]));
    } else if (cmd.name == "bibliography") {
      ensure_aux_read(session_, result_.labels, result_.diagnostics);
      write_record(session_, AuxRecord::bibdata(cmd.args[0]));
      include_bbl();
    }
  }

  void include_bbl() {
    std::string path = probe_path(cfg_.bbl_name(), "bbl", cfg_);
    if (!file_exists(cfg_.bbl_name(), "bbl", cfg_, fs_)) {
      result_.diagnostics.messages.push_back("No file " + path + ".");
      return;
    }
    auto content = fs_.read(path).value_or(std::string());

    BblConfig config;
    config.metric = cfg_.metric;
    config.scale = cfg_.scale();
    config.hook = cfg_.bbl_hook;
    config.line_numbers = cfg_.diagnostics_line_numbers;
    try {
      Bibliography bib = process_bbl(content, config, ctx_);
      result_.nobreak_before_bibliography = true;
      append_bibliography(result_.rendered, bib);
      if (result_.bibliography) {
        auto& items = result_.bibliography->items;
        items.insert(items.end(), bib.items.begin(), bib.items.end());
        result_.bibliography->layout = bib.layout;
        result_.bibliography->alignment = bib.alignment;
      } else {
        result_.bibliography = std::move(bib);
      }
    } catch (Error& e) {
      if (e.file().empty()) e.set_file(path);
      throw;
    }
  }

  const JobConfig& cfg_;
  FileAccess& fs_;
  PassResult result_;
  AuxSession session_;
  CiteContext ctx_;
};

}  // namespace

PassResult run_pass(const JobConfig& cfg, std::string_view document, FileAccess& fs) {
  return PassRunner(cfg, fs).run(document);
}

FixpointResult run_to_fixpoint(const JobConfig& cfg, std::string_view document, FileAccess& fs,
                               const PassObserver& observer) {
  if (cfg.max_passes < 1) throw std::invalid_argument("max_passes must be at least 1");

  FixpointResult out;
  for (int pass = 1; pass <= cfg.max_passes; ++pass) {
    PassResult result = run_pass(cfg, document, fs);
    out.previous_aux = std::move(out.final_aux);
    out.final_aux = result.aux_bytes;
    out.passes_used = pass;
    out.final_pass = std::move(result);
    if (observer) observer(pass, out.final_pass, fs);
    if (pass > 1 && out.final_aux == out.previous_aux) {
      out.converged = true;
      break;
    }
  }
  return out;
}

}  // namespace citeforge
