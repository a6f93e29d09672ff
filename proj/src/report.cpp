#include "persuade/report.hpp"

#include <ctime>
#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

namespace persuade {

using nlohmann::ordered_json;

std::string current_timestamp_utc() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

ordered_json to_json(const ValidationReport& report) {
  ordered_json issues = ordered_json::array();
  for (const auto& issue : report.issues) {
    issues.push_back({{"severity",
                       issue.severity == ValidationIssue::Severity::Error ? "error" : "warning"},
                      {"file", issue.file},
                      {"line", issue.line},
                      {"message", issue.message}});
  }
  return ordered_json{{"errors", report.error_count()},
                      {"warnings", report.warning_count()},
                      {"dropped",
                       {{"debates", report.dropped_debates},
                        {"users", report.dropped_users},
                        {"votes", report.dropped_votes}}},
                      {"debaters_missing_profile", report.debaters_missing_profile},
                      {"issues", std::move(issues)}};
}

ordered_json to_json(const McNemarResult& result) {
  return ordered_json{
      {"b", result.b},
      {"c", result.c},
      {"statistic", result.statistic},
      {"p_value", result.p_value},
      {"method",
       result.method == McNemarMethod::ExactBinomial ? "exact_binomial" : "chi_square_corrected"},
  };
}

ordered_json to_json(const CVReport& report, bool include_predictions) {
  ordered_json folds = ordered_json::array();
  for (const auto& fold : report.folds) {
    folds.push_back({{"accuracy", fold.accuracy},
                     {"penalty", to_string(fold.penalty)},
                     {"c", fold.c},
                     {"inner_mean_accuracy", fold.inner_mean_accuracy},
                     {"test_size", fold.test_size}});
  }
  long long pooled_hits = 0;
  for (const auto& p : report.predictions) pooled_hits += p.predicted == p.label ? 1 : 0;
  ordered_json out{
      {"mean_accuracy", report.mean_accuracy},
      {"pooled_accuracy", report.predictions.empty()
                              ? 0.0
                              : static_cast<double>(pooled_hits) /
                                    static_cast<double>(report.predictions.size())},
      {"baseline_accuracy", report.baseline_accuracy},
      {"folding", to_string(report.folding)},
      {"seed", report.seed},
      {"folds", std::move(folds)},
  };
  if (include_predictions) {
    ordered_json predictions = ordered_json::array();
    for (const auto& p : report.predictions) {
      predictions.push_back({{"index", p.index},
                             {"fold", p.fold},
                             {"label", p.label},
                             {"predicted", p.predicted},
                             {"probability", p.probability},
                             {"baseline", p.baseline_predicted}});
    }
    out["predictions"] = std::move(predictions);
  }
  return out;
}

ordered_json to_json(const IdeologyExperimentReport& report) {
  return ordered_json{
      {"kind", to_string(report.kind)},
      {"labels", {report.label_a, report.label_b}},
      {"user_count", report.user_count},
      {"count_a", report.count_a},
      {"count_b", report.count_b},
      {"excluded_ns", report.excluded_ns},
      {"majority_accuracy", report.majority_accuracy},
      {"model_accuracy", report.cv.mean_accuracy},
      {"mcnemar", to_json(report.significance)},
      {"cv", to_json(report.cv)},
  };
}

ordered_json to_json(const AblationReport& report) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : report.rows) {
    ordered_json entry{
        {"name", row.name},
        {"groups", row.groups},
        {"user_only", row.user_only},
        {"linguistic_only", row.linguistic_only},
        {"mean_accuracy", row.cv.mean_accuracy},
        {"vs_baseline_p", row.vs_baseline.p_value},
        {"cv", to_json(row.cv)},
        {"mcnemar_vs_baseline", to_json(row.vs_baseline)},
    };
    if (row.vs_best_user.has_value()) {
      entry["mcnemar_vs_best_user"] = to_json(*row.vs_best_user);
    }
    rows.push_back(std::move(entry));
  }
  return ordered_json{
      {"task", to_string(report.task)},
      {"category", report.category},
      {"ideology_pair", {report.ideology_pair.first, report.ideology_pair.second}},
      {"instance_count", report.instance_count},
      {"debate_count", report.debate_count},
      {"majority_accuracy", report.majority_accuracy},
      {"language_ceiling", report.language_ceiling},
      {"best_user_row", report.best_user_row},
      {"rows", std::move(rows)},
  };
}

namespace {

std::string percent(double fraction) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << fraction * 100.0 << "%";
  return os.str();
}

std::string p_text(const McNemarResult& r) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(2) << r.p_value;
  return os.str();
}

void markdown_section(std::ostringstream& os, const std::string& title,
                      const std::vector<const AblationRow*>& rows) {
  if (rows.empty()) return;
  os << "| **" << title << "** | | |\n";
  for (const AblationRow* row : rows) {
    os << "| " << row->name << " | " << percent(row->cv.mean_accuracy) << " | "
       << p_text(row->vs_baseline) << " |\n";
  }
}

}  // namespace

std::string ablation_markdown(const AblationReport& report) {
  std::ostringstream os;
  os << "## " << to_string(report.task) << " — category " << report.category << " ("
     << report.ideology_pair.first << " vs " << report.ideology_pair.second << ")\n\n";
  os << report.instance_count << " instances over " << report.debate_count << " debates.\n\n";
  os << "| Feature set | Accuracy | p vs majority |\n";
  os << "| --- | --- | --- |\n";
  os << "| **Baseline** | | |\n";
  os << "| Majority | " << percent(report.majority_accuracy) << " | |\n";

  std::vector<const AblationRow*> user_rows;
  std::vector<const AblationRow*> ling_rows;
  std::vector<const AblationRow*> combined_rows;
  for (const auto& row : report.rows) {
    if (row.user_only) {
      user_rows.push_back(&row);
    } else if (row.linguistic_only) {
      ling_rows.push_back(&row);
    } else {
      combined_rows.push_back(&row);
    }
  }
  markdown_section(os, "User-based features", user_rows);
  markdown_section(os, "Linguistic features", ling_rows);
  markdown_section(os, "User-based + linguistic features", combined_rows);
  os << "\nThe maximum accuracy achievable with language features only is "
     << percent(report.language_ceiling)
     << " (language features are identical for every voter of a debate).\n";
  return os.str();
}

std::string correlation_csv(const CorrelationMatrix& matrix) {
  std::ostringstream os;
  os << "# MTP/CMV cells pair each side indicator with that side's own more-total-points /\n";
  os << "# convinced-voter variant; the MTP-CMV cell averages the two same-side pairings.\n";
  os << "label";
  for (const auto& label : matrix.labels) os << "," << label;
  os << "\n";
  os << std::setprecision(17);
  for (int i = 0; i < kCorrelationVariableCount; ++i) {
    os << matrix.labels[i];
    for (int j = 0; j < kCorrelationVariableCount; ++j) os << "," << matrix.r[i][j];
    os << "\n";
  }
  return os.str();
}

void write_report_json(const std::string& path, ordered_json body) {
  ordered_json wrapped;
  wrapped["meta"] = {{"generated_at", current_timestamp_utc()}, {"tool", "persuade"}};
  for (auto& [key, value] : body.items()) wrapped[key] = std::move(value);
  atomic_write_file(path, wrapped.dump(2) + "\n");
}

}  // namespace persuade
