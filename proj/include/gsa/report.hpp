// JSON and text rendering of audit reports and suite indexes.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "gsa/audit.hpp"

namespace gsa {

using Json = nlohmann::ordered_json;

Json to_json(const AuditReport& r);
Json to_json(const AuditConfig& c);

/// Human-readable summary; the witness and counterexample lists are capped.
std::string to_text(const AuditReport& r);

/// Sorts by claim id, then input digest, then label and mode, so that report
/// order does not depend on the order audits ran in.
void sort_reports(std::vector<AuditReport>& reports);

/// Index document: resolved configuration, per-claim verdict tallies, and one
/// entry per report.
Json suite_index(const std::vector<AuditReport>& reports, const AuditConfig& config);

/// Two-space indented JSON with a trailing newline.
std::string dump(const Json& j);

}  // namespace gsa
