// citeforge: resolve citations in a plain-TeX document by running passes
// over it until its .aux file stops changing.

#include "citeforge/driver.hpp"
#include "citeforge/errors.hpp"
#include "citeforge/report.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

enum ExitCode { kConverged = 0, kUndefined = 1, kNoConvergence = 2, kParseError = 3 };

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Plain-TeX citation resolver (aux/bbl protocol)"};
  app.require_subcommand(1);

  auto* resolve = app.add_subcommand("resolve", "Run passes over a document until citations resolve");
  std::string input;
  std::string jobname;
  std::string bbl_basename;
  bool no_aux = false;
  int max_passes = 4;
  std::string em_size = "10";
  std::string report_mode = "none";
  std::string render_mode = "plain";

  resolve->add_option("file", input, "Document to process (.tex)")->required();
  resolve->add_option("--jobname", jobname, "Job name; defaults to the file's stem");
  resolve->add_option("--bbl-basename", bbl_basename, "Base name of the .bbl file; defaults to the job name");
  resolve->add_flag("--no-aux-file", no_aux, "Neither read nor write the .aux file; no warnings");
  resolve->add_option("--max-passes", max_passes, "Upper bound on passes")->check(CLI::PositiveNumber);
  resolve->add_option("--em-size", em_size, "Size of 1em in pt");
  resolve->add_option("--report", report_mode, "Emit a JSON report on stdout")
      ->check(CLI::IsMember({"json", "none"}));
  resolve->add_option("--render", render_mode, "Output styling")->check(CLI::IsMember({"plain", "annotated"}));

  CLI11_PARSE(app, argc, argv);

  std::filesystem::path path(input);
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "citeforge: cannot read " << input << "\n";
    return kParseError;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  std::string document = buffer.str();

  citeforge::JobConfig cfg;
  cfg.jobname = jobname.empty() ? path.stem().string() : jobname;
  if (!bbl_basename.empty()) cfg.bbl_basename = bbl_basename;
  cfg.no_aux = no_aux;
  cfg.max_passes = max_passes;
  cfg.document_name = input;
  try {
    cfg.em_size = citeforge::parse_decimal(em_size);
  } catch (const std::exception& e) {
    std::cerr << "citeforge: --em-size: " << e.what() << "\n";
    return kParseError;
  }

  std::filesystem::path root = path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");
  citeforge::DiskFileAccess fs(root);
  auto mode = render_mode == "annotated" ? citeforge::RenderMode::annotated : citeforge::RenderMode::plain;

  citeforge::FixpointResult result;
  try {
    result = citeforge::run_to_fixpoint(cfg, document, fs);
  } catch (const citeforge::Error& e) {
    std::cerr << e.diagnostic() << "\n";
    if (report_mode == "json") {
      std::cout << nlohmann::json{{"error", e.diagnostic()}}.dump(2) << "\n";
    }
    return kParseError;
  }

  const auto& pass = result.final_pass;
  for (const auto& message : pass.diagnostics.messages) std::cerr << message << "\n";
  for (const auto& warning : pass.diagnostics.warnings) std::cerr << warning.text << "\n";
  for (const auto& note : pass.diagnostics.lint) {
    std::cerr << "lint: " << note.line << ": " << note.message << "\n";
  }

  std::string rendered = citeforge::render(pass.rendered, mode);
  if (report_mode == "json") {
    auto report = citeforge::make_report(result, cfg);
    report["rendered"] = rendered;
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << rendered;
  }

  if (!result.converged) {
    std::cerr << "citeforge: no fixpoint after " << result.passes_used << " passes\n";
    return kNoConvergence;
  }
  return citeforge::undefined_keys(pass.labels).empty() ? kConverged : kUndefined;
}
