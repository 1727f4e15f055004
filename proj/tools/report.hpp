#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "qcw/worlds.hpp"

namespace qcw {

using Json = nlohmann::ordered_json;

inline constexpr int kReportFormatVersion = 1;

// Deterministic writer for report documents: 2-space indentation, arrays of
// primitives on one line, doubles printed with up to 17 significant digits
// (enough to reproduce the exact double on re-parse). Re-serializing a parsed
// document yields the original bytes.
std::string dump_report(const Json& document);

// Parse counterpart of dump_report (insertion order preserved).
Json parse_report(std::string_view text);

// Report body for a tracked run: format_version, per-step world structure
// (amplitudes as [re, im] pairs), the split/merge events, and the
// information audit.
Json trace_document(const WorldTrace& world_trace, const InformationAudit& audit,
                    int format_version = kReportFormatVersion);

std::string serialize_trace(const WorldTrace& world_trace, const InformationAudit& audit,
                            int format_version = kReportFormatVersion);

}  // namespace qcw
