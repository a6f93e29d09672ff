#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "persuade/corpus.hpp"

namespace persuade {

enum class IngestMode { Strict, Lenient };

struct ValidationIssue {
  enum class Severity { Warning, Error };
  Severity severity = Severity::Error;
  std::string file;
  int line = 0;  // 1-based; 0 when not tied to a line
  std::string message;

  std::string format() const;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  int dropped_debates = 0;
  int dropped_users = 0;
  int dropped_votes = 0;
  // Debater ids referenced by a debate but absent from users.jsonl. Flagged,
  // never fatal.
  std::vector<std::string> debaters_missing_profile;

  int error_count() const;
  int warning_count() const;
  bool has_errors() const { return error_count() > 0; }
};

class ValidationError : public std::runtime_error {
 public:
  ValidationError(const std::string& message, ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

struct LoadResult {
  Corpus corpus;
  ValidationReport report;
};

/// Loads and validates the three JSON-lines files. In strict mode any
/// validation error throws ValidationError carrying the full report; in
/// lenient mode offending records are dropped and counted. When
/// `issue_catalog_path` is empty the catalog is derived as the sorted union
/// of issue names seen across users (with a warning).
LoadResult load_corpus(const std::string& debates_path, const std::string& users_path,
                       const std::string& votes_path, IngestMode mode = IngestMode::Strict,
                       const std::string& issue_catalog_path = "");

/// Inverse of load_corpus for valid corpora (round-trip safe). Writes are
/// atomic (temp file + rename).
void save_corpus(const Corpus& corpus, const std::string& debates_path,
                 const std::string& users_path, const std::string& votes_path);

/// One issue name per line, order-significant; '#' comments and blank lines
/// are skipped. Throws on duplicates.
std::vector<std::string> load_issue_catalog(const std::string& path);
void save_issue_catalog(const std::vector<std::string>& catalog, const std::string& path);

/// Writes `content` to `path` via a temp file in the same directory followed
/// by a rename.
void atomic_write_file(const std::string& path, const std::string& content);

}  // namespace persuade
