#include "citeforge/aux_protocol.hpp"

#include "citeforge/errors.hpp"
#include "citeforge/scanner.hpp"

namespace citeforge {

namespace {

void check_payload(std::string_view text) {
  if (text.find('\n') != std::string_view::npos) {
    throw FormatError("aux record payload contains a newline");
  }
}

}  // namespace

std::string format_record(const AuxRecord& record) {
  check_payload(record.payload);
  switch (record.kind) {
    case AuxRecordKind::Citation:
      return "\\citation{" + record.payload + "}\n";
    case AuxRecordKind::BibData:
      return "\\bibdata{" + record.payload + "}\n";
    case AuxRecordKind::BibStyle:
      return "\\bibstyle{" + record.payload + "}\n";
    case AuxRecordKind::CiteDef:
      check_payload(record.label);
      return "\\@citedef{" + record.payload + "}{" + record.label + "}\n";
  }
  return {};
}

std::string serialize_records(std::span<const AuxRecord> records) {
  std::string out;
  for (const auto& r : records) out += format_record(r);
  return out;
}

void write_record(AuxSession& session, AuxRecord record) {
  if (session.no_aux_mode) return;
  session.pending_writes.push_back(std::move(record));
}

std::vector<AuxRecord> parse_aux(std::string_view content) {
  // Offsets in errors refer to the original bytes, so remember where each
  // surviving byte came from.
  std::string joined;
  std::vector<std::size_t> origin;
  joined.reserve(content.size());
  for (std::size_t i = 0; i < content.size(); ++i) {
    if (content[i] == '\n' || content[i] == '\r') continue;
    joined += content[i];
    origin.push_back(i);
  }
  auto original_offset = [&](std::size_t pos) {
    return pos < origin.size() ? origin[pos] : content.size();
  };

  CharStream stream(joined, {.strip_comments = false, .at_is_letter = true});
  std::vector<AuxRecord> records;
  while (true) {
    stream.skip_spaces();
    if (stream.at_end()) break;
    std::size_t start = stream.position();
    if (stream.get() != '\\') {
      throw AuxCorruptError("unexpected text in aux file", original_offset(start));
    }
    std::string name = scan_command_name(stream);
    try {
      if (name == "citation") {
        records.push_back(AuxRecord::citation(scan_group_arg(stream)));
      } else if (name == "bibdata") {
        records.push_back(AuxRecord::bibdata(scan_group_arg(stream)));
      } else if (name == "bibstyle") {
        records.push_back(AuxRecord::bibstyle(scan_group_arg(stream)));
      } else if (name == "@citedef") {
        std::string key = scan_group_arg(stream);
        std::string label = scan_group_arg(stream);
        records.push_back(AuxRecord::citedef(std::move(key), std::move(label)));
      } else {
        throw AuxCorruptError("unknown aux record \\" + name, original_offset(start));
      }
    } catch (const ScanError& e) {
      throw AuxCorruptError(std::string("malformed \\") + name + " record: " + e.what(),
                            original_offset(start));
    }
  }
  return records;
}

void read_aux(AuxSession& session, std::string_view content, LabelTable& table) {
  if (session.read_done) return;
  session.read_done = true;
  for (auto& record : parse_aux(content)) {
    if (record.kind == AuxRecordKind::CiteDef) table.define(record.payload, std::move(record.label));
  }
}

std::string handle_missing_aux(AuxSession& session) {
  session.read_done = true;
  session.warnings_enabled = false;
  return std::string(kNoAuxMessage);
}

void ensure_aux_read(AuxSession& session, LabelTable& table, Diagnostics& diag) {
  if (session.read_done) return;
  if (session.prior_aux) {
    read_aux(session, *session.prior_aux, table);
  } else {
    diag.messages.push_back(handle_missing_aux(session));
  }
}

}  // namespace citeforge
