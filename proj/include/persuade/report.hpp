#pragma once

#include <string>

#include "persuade/beliefs.hpp"
#include "persuade/jsonl.hpp"
#include "persuade/learn.hpp"
#include "persuade/tasks.hpp"

#include <nlohmann/json_fwd.hpp>

namespace persuade {

// JSON layouts are stable and deterministic: ordered keys, no volatile
// fields outside the "meta" object (which carries the timestamp and is the
// only part excluded from byte-comparisons).

nlohmann::ordered_json to_json(const ValidationReport& report);
nlohmann::ordered_json to_json(const CVReport& report, bool include_predictions = false);
nlohmann::ordered_json to_json(const McNemarResult& result);
nlohmann::ordered_json to_json(const IdeologyExperimentReport& report);
nlohmann::ordered_json to_json(const AblationReport& report);

/// Markdown results table: baseline, user features, linguistic features and
/// combined sections plus the language-ceiling note.
std::string ablation_markdown(const AblationReport& report);

/// Correlation matrix as CSV with labeled rows/columns; a leading '#'
/// comment documents the MTP/CMV side-pairing convention.
std::string correlation_csv(const CorrelationMatrix& matrix);

/// Wraps `body` with a meta header and writes it atomically.
void write_report_json(const std::string& path, nlohmann::ordered_json body);

std::string current_timestamp_utc();

}  // namespace persuade
