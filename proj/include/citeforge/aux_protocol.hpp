#pragma once

// The .aux file: four record kinds written in document order during a pass
// and read back at the first citation command of the next pass.

#include "citeforge/diagnostics.hpp"
#include "citeforge/label_table.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace citeforge {

enum class AuxRecordKind { Citation, BibData, BibStyle, CiteDef };

struct AuxRecord {
  AuxRecordKind kind = AuxRecordKind::Citation;
  // Keys, database list or style name; for CiteDef, the citation key.
  std::string payload;
  // CiteDef only.
  std::string label;

  static AuxRecord citation(std::string keys) { return {AuxRecordKind::Citation, std::move(keys), {}}; }
  static AuxRecord bibdata(std::string dbs) { return {AuxRecordKind::BibData, std::move(dbs), {}}; }
  static AuxRecord bibstyle(std::string s) { return {AuxRecordKind::BibStyle, std::move(s), {}}; }
  static AuxRecord citedef(std::string key, std::string label) {
    return {AuxRecordKind::CiteDef, std::move(key), std::move(label)};
  }

  bool operator==(const AuxRecord&) const = default;
};

inline constexpr std::string_view kNoAuxMessage =
    "No .aux file; I won't give you warnings about undefined citations.";

struct AuxSession {
  explicit AuxSession(bool no_aux = false)
      : read_done(no_aux), warnings_enabled(!no_aux), no_aux_mode(no_aux) {}

  bool read_done;
  bool warnings_enabled;
  bool no_aux_mode;
  std::vector<AuxRecord> pending_writes;
  // Contents of the aux file left by the previous pass, if one existed.
  std::optional<std::string> prior_aux;
};

// One serialized line, newline included. Throws FormatError if a payload
// contains a newline.
std::string format_record(const AuxRecord& record);
std::string serialize_records(std::span<const AuxRecord> records);

// Appends in call order; a no-op in no-aux mode.
void write_record(AuxSession& session, AuxRecord record);

// Loads citedefs into `table`. Line breaks are deleted before parsing, so a
// record may be split anywhere. No-op once the session has read. Throws
// AuxCorruptError on unknown records or unparseable residue.
void read_aux(AuxSession& session, std::string_view content, LabelTable& table);

// Parses every record without touching any session state.
std::vector<AuxRecord> parse_aux(std::string_view content);

std::string handle_missing_aux(AuxSession& session);

// First-use trigger shared by every citation command: reads prior_aux, or
// disables warnings and reports the missing file.
void ensure_aux_read(AuxSession& session, LabelTable& table, Diagnostics& diag);

}  // namespace citeforge
