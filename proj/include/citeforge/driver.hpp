#pragma once

// Pass orchestration: one left-to-right pass over a document, the aux
// rewrite at its end, and repetition until the aux file stops changing.

#include "citeforge/bbl.hpp"
#include "citeforge/citation.hpp"
#include "citeforge/diagnostics.hpp"
#include "citeforge/dimension.hpp"
#include "citeforge/label_table.hpp"
#include "citeforge/layout.hpp"

#include <filesystem>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace citeforge {

// All file traffic of a job goes through this interface. Implementations
// serialize access, so distinct jobs may share one instance.
class FileAccess {
 public:
  virtual ~FileAccess() = default;
  virtual bool exists(const std::string& path) = 0;
  virtual std::optional<std::string> read(const std::string& path) = 0;
  virtual void write(const std::string& path, std::string_view bytes) = 0;
};

class MemoryFileAccess : public FileAccess {
 public:
  bool exists(const std::string& path) override;
  std::optional<std::string> read(const std::string& path) override;
  void write(const std::string& path, std::string_view bytes) override;

  // Fixture setup; not recorded as writes.
  void put(const std::string& path, std::string content);
  void remove(const std::string& path);

  // Every path passed to write(), in order.
  std::vector<std::string> write_log() const;

 private:
  mutable std::mutex mutex_;
  std::map<std::string, std::string> files_;
  std::vector<std::string> writes_;
};

// Paths resolve against `root`.
class DiskFileAccess : public FileAccess {
 public:
  explicit DiskFileAccess(std::filesystem::path root) : root_(std::move(root)) {}

  bool exists(const std::string& path) override;
  std::optional<std::string> read(const std::string& path) override;
  void write(const std::string& path, std::string_view bytes) override;

 private:
  std::mutex mutex_;
  std::filesystem::path root_;
};

struct JobConfig {
  std::string jobname = "texput";
  std::optional<std::string> bbl_basename;
  bool no_aux = false;
  int max_passes = 4;
  Rational em_size{10};
  WidthMetric metric = WidthMetric::uniform(Rational(1, 2));
  bool diagnostics_line_numbers = true;
  CiteStyleHooks hooks;
  std::function<void(LayoutParams&)> bbl_hook;
  // Name used in error locations; "<jobname>.tex" when empty.
  std::string document_name;

  const std::string& bbl_name() const { return bbl_basename ? *bbl_basename : jobname; }
  std::string aux_path() const { return jobname + ".aux"; }
  std::string bbl_path() const { return bbl_name() + ".bbl"; }
  UnitScale scale() const { return UnitScale::from_em(em_size); }
};

// "<base or jobname>" plus ".<ext>" unless ext is empty.
std::string probe_path(const std::optional<std::string>& base, std::string_view ext,
                       const JobConfig& cfg);
bool file_exists(const std::optional<std::string>& base, std::string_view ext, const JobConfig& cfg,
                 FileAccess& fs);

struct PassResult {
  RenderedFragment rendered;
  std::string aux_bytes;
  Diagnostics diagnostics;
  std::optional<Bibliography> bibliography;
  bool nobreak_before_bibliography = false;
  LabelTable labels;

  bool operator==(const PassResult&) const = default;
};

// Keys that ended the pass with a typewriter fallback label.
std::vector<std::string> undefined_keys(const LabelTable& table);

// Throws Error (with file and line set) on scan, structure or macro errors.
PassResult run_pass(const JobConfig& cfg, std::string_view document, FileAccess& fs);

struct FixpointResult {
  PassResult final_pass;
  int passes_used = 0;
  bool converged = false;
  // Aux bytes of the last two passes, for diffing when not converged.
  std::string previous_aux;
  std::string final_aux;
};

// Called after every pass, before the next one starts.
using PassObserver = std::function<void(int pass, const PassResult& result, FileAccess& fs)>;

FixpointResult run_to_fixpoint(const JobConfig& cfg, std::string_view document, FileAccess& fs,
                               const PassObserver& observer = {});

}  // namespace citeforge
