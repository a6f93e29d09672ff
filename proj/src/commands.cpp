#include "persuade/commands.hpp"

#include <filesystem>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "persuade/report.hpp"

namespace persuade {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

void ensure_out_dir(const RunConfig& config) {
  if (!config.out_dir.empty()) fs::create_directories(config.out_dir);
}

std::string out_path(const RunConfig& config, const std::string& name) {
  return (fs::path(config.out_dir) / name).string();
}

LoadResult load(const RunConfig& config) {
  if (config.debates_path.empty() || config.users_path.empty() || config.votes_path.empty()) {
    throw std::invalid_argument("debates/users/votes paths are required (see docs/config.md)");
  }
  return load_corpus(config.debates_path, config.users_path, config.votes_path, config.mode,
                     config.issue_catalog_path);
}

int report_validation_failure(const RunConfig& config, const ValidationError& error,
                              std::ostream& err) {
  err << error.what() << "\n";
  for (const auto& issue : error.report().issues) err << "  " << issue.format() << "\n";
  ensure_out_dir(config);
  write_report_json(out_path(config, "ingest_report.json"),
                    ordered_json{{"status", "validation_failed"},
                                 {"validation", to_json(error.report())}});
  return kExitValidation;
}

}  // namespace

int cmd_ingest(const RunConfig& config, std::ostream& out, std::ostream& err) {
  LoadResult loaded;
  try {
    loaded = load(config);
  } catch (const ValidationError& e) {
    return report_validation_failure(config, e, err);
  }
  const Corpus& corpus = loaded.corpus;

  std::map<std::string, int> categories;
  for (const auto& [id, debate] : corpus.debates) ++categories[debate.category];
  int complete_profiles = 0;
  for (const auto& [id, user] : corpus.users) {
    bool complete = !corpus.issue_catalog.empty();
    for (const auto& issue : corpus.issue_catalog) {
      auto it = user.big_issue_opinions.find(issue);
      if (it == user.big_issue_opinions.end() || it->second == Opinion::NotSaying) {
        complete = false;
        break;
      }
    }
    complete_profiles += complete ? 1 : 0;
  }
  int changed = 0;
  for (const Vote& vote : corpus.votes) changed += stance_changed(vote) ? 1 : 0;

  ordered_json category_json = ordered_json::object();
  for (const auto& [name, count] : categories) category_json[name] = count;
  ordered_json body{
      {"status", "ok"},
      {"counts",
       {{"debates", corpus.debates.size()},
        {"users", corpus.users.size()},
        {"votes", corpus.votes.size()},
        {"issue_catalog", corpus.issue_catalog.size()}}},
      {"categories", std::move(category_json)},
      {"users_with_complete_big_issues", complete_profiles},
      {"votes_with_stance_change", changed},
      {"validation", to_json(loaded.report)},
  };
  ensure_out_dir(config);
  write_report_json(out_path(config, "ingest_report.json"), std::move(body));

  out << "debates: " << corpus.debates.size() << ", users: " << corpus.users.size()
      << ", votes: " << corpus.votes.size() << "\n";
  out << "votes with stance change: " << changed << "\n";
  out << "users with complete big-issue profiles: " << complete_profiles << "\n";
  out << "validation: " << loaded.report.error_count() << " error(s), "
      << loaded.report.warning_count() << " warning(s)\n";
  out << "wrote " << out_path(config, "ingest_report.json") << "\n";
  return kExitOk;
}

int cmd_analyze_votes(const RunConfig& config, std::ostream& out, std::ostream& err) {
  LoadResult loaded;
  try {
    loaded = load(config);
  } catch (const ValidationError& e) {
    return report_validation_failure(config, e, err);
  }
  if (loaded.corpus.votes.size() < 2) {
    err << "need at least 2 votes to correlate\n";
    return kExitEmptyExperiment;
  }
  const CorrelationMatrix matrix =
      vote_dimension_correlations(loaded.corpus.votes, config.weights);

  ensure_out_dir(config);
  atomic_write_file(out_path(config, "vote_correlations.csv"), correlation_csv(matrix));

  // Rank the dimension variables by their correlation with same-side total
  // points and convinced voters.
  auto ranked = [&](int target_row) {
    std::vector<std::pair<std::string, double>> order;
    for (int i = 0; i < 8; ++i) order.emplace_back(matrix.labels[i], matrix.r[i][target_row]);
    std::stable_sort(order.begin(), order.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    return order;
  };
  const auto by_points = ranked(8);
  const auto by_convinced = ranked(9);

  ordered_json ranking{{"by_total_points", ordered_json::array()},
                       {"by_convinced_voters", ordered_json::array()}};
  for (const auto& [label, r] : by_points) {
    ranking["by_total_points"].push_back({{"dimension", label}, {"r", r}});
  }
  for (const auto& [label, r] : by_convinced) {
    ranking["by_convinced_voters"].push_back({{"dimension", label}, {"r", r}});
  }
  ordered_json body{{"vote_count", loaded.corpus.votes.size()},
                    {"zero_variance", matrix.zero_variance},
                    {"ranking", std::move(ranking)}};
  write_report_json(out_path(config, "vote_correlations.json"), std::move(body));

  out << "wrote " << out_path(config, "vote_correlations.csv") << "\n";
  out << "most correlated with total points: " << by_points.front().first << " (r = "
      << std::setprecision(4) << by_points.front().second << ")\n";
  out << "most correlated with convinced voters: " << by_convinced.front().first << " (r = "
      << by_convinced.front().second << ")\n";
  return kExitOk;
}

int cmd_encode_beliefs(const RunConfig& config, std::ostream& out, std::ostream& err) {
  LoadResult loaded;
  try {
    loaded = load(config);
  } catch (const ValidationError& e) {
    return report_validation_failure(config, e, err);
  }
  const Corpus& corpus = loaded.corpus;
  if (corpus.issue_catalog.empty()) {
    err << "empty issue catalog; supply issue_catalog\n";
    return kExitEmptyExperiment;
  }

  std::ostringstream csv;
  csv << "user_id,political_ideology,religious_ideology";
  for (const auto& issue : corpus.issue_catalog) {
    for (const char* slot : {"PRO", "CON", "N_O", "UND"}) csv << "," << issue << ":" << slot;
  }
  csv << "\n";
  int encoded = 0;
  int skipped_ns = 0;
  for (const auto& [id, user] : corpus.users) {
    BigIssuesVector vec;
    try {
      vec = encode_big_issues(user, corpus.issue_catalog);
    } catch (const BeliefError& e) {
      if (e.code() == BeliefErrorCode::NsPresent) {
        ++skipped_ns;
        continue;
      }
      throw;
    }
    csv << id << "," << user.political_ideology.value_or("") << ","
        << user.religious_ideology.value_or("");
    for (const double x : vec) csv << "," << x;
    csv << "\n";
    ++encoded;
  }
  ensure_out_dir(config);
  atomic_write_file(out_path(config, "big_issues.csv"), csv.str());
  out << "encoded " << encoded << " users (" << skipped_ns << " skipped for N/S), wrote "
      << out_path(config, "big_issues.csv") << "\n";
  return encoded > 0 ? kExitOk : kExitEmptyExperiment;
}

int cmd_pca(const RunConfig& config, std::ostream& out, std::ostream& err) {
  LoadResult loaded;
  try {
    loaded = load(config);
  } catch (const ValidationError& e) {
    return report_validation_failure(config, e, err);
  }
  const Corpus& corpus = loaded.corpus;

  const std::string label_a = fold_label(config.ideology_pair.first);
  const std::string label_b = fold_label(config.ideology_pair.second);
  std::vector<BigIssuesVector> vectors;
  std::vector<std::string> ids;
  std::vector<std::string> labels;
  for (const auto& [id, user] : corpus.users) {
    const auto& declared = config.ideology_kind == IdeologyKind::Political
                               ? user.political_ideology
                               : user.religious_ideology;
    if (!declared.has_value()) continue;
    const std::string folded = fold_label(*declared);
    if (folded != label_a && folded != label_b) continue;
    try {
      vectors.push_back(encode_big_issues(user, corpus.issue_catalog));
    } catch (const BeliefError& e) {
      if (e.code() == BeliefErrorCode::NsPresent) continue;
      throw;
    }
    ids.push_back(id);
    labels.push_back(*declared);
  }
  if (vectors.size() < 3) {
    err << "need at least 3 eligible users after N/S elimination, got " << vectors.size() << "\n";
    return kExitEmptyExperiment;
  }

  const PcaProjection projection = pca_project(vectors);
  std::ostringstream csv;
  csv << std::setprecision(17);
  csv << "# explained_variance," << projection.explained_variance[0] << ","
      << projection.explained_variance[1] << "\n";
  csv << "user_id,x,y,label\n";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    csv << ids[i] << "," << projection.projected[i][0] << "," << projection.projected[i][1]
        << "," << labels[i] << "\n";
  }
  ensure_out_dir(config);
  atomic_write_file(out_path(config, "pca_projection.csv"), csv.str());
  out << "projected " << ids.size() << " users, wrote "
      << out_path(config, "pca_projection.csv") << "\n";
  out << "explained variance: " << projection.explained_variance[0] << ", "
      << projection.explained_variance[1]
      << (projection.second_axis_degenerate ? " (second axis degenerate)" : "") << "\n";
  return kExitOk;
}

int cmd_classify_ideology(const RunConfig& config, std::ostream& out, std::ostream& err) {
  LoadResult loaded;
  try {
    loaded = load(config);
  } catch (const ValidationError& e) {
    return report_validation_failure(config, e, err);
  }
  IdeologyExperimentReport report;
  try {
    report = ideology_classification_experiment(loaded.corpus, config.ideology_kind,
                                                config.ideology_pair, config.cv);
  } catch (const BeliefError& e) {
    err << e.what() << "\n";
    return kExitEmptyExperiment;
  }
  ensure_out_dir(config);
  write_report_json(out_path(config, "ideology_classification.json"), to_json(report));
  out << to_string(report.kind) << " ideology, " << report.label_a << " vs " << report.label_b
      << " (" << report.user_count << " users)\n";
  out << std::fixed << std::setprecision(2);
  out << "majority baseline: " << report.majority_accuracy * 100.0 << "%\n";
  out << "BigIssues model:   " << report.cv.mean_accuracy * 100.0 << "%\n";
  out << "McNemar p-value:   " << std::scientific << std::setprecision(3)
      << report.significance.p_value << "\n";
  return kExitOk;
}

int cmd_run_task(const RunConfig& config, std::ostream& out, std::ostream& err) {
  LoadResult loaded;
  try {
    loaded = load(config);
  } catch (const ValidationError& e) {
    return report_validation_failure(config, e, err);
  }
  AblationConfig ablation;
  ablation.cv = config.cv;
  ablation.weights = config.weights;
  ablation.tfidf = config.tfidf;
  ablation.include_singletons = config.ablation_singletons;
  ablation.combos = config.ablation_combos;

  AblationReport report;
  try {
    report = run_ablation(loaded.corpus, config.task_spec, config.load_lexicons(), ablation);
  } catch (const EmptyInstanceSetError& e) {
    err << e.what() << "\n";
    return kExitEmptyExperiment;
  }

  ensure_out_dir(config);
  write_report_json(out_path(config, "task_report.json"), to_json(report));
  atomic_write_file(out_path(config, "task_report.md"), ablation_markdown(report));

  // Feature-importance view: refit the best row on all instances with its
  // most-selected fold configuration and export the standardized weights.
  const AblationRow& best = report.rows.front();
  Penalty refit_penalty = Penalty::L2;
  double refit_c = 1.0;
  {
    std::map<std::pair<int, double>, int> votes;
    for (const auto& fold : best.cv.folds) {
      ++votes[{fold.penalty == Penalty::L2 ? 1 : 0, fold.c}];
    }
    int top = -1;
    for (const auto& [key, count] : votes) {
      const bool better = count > top ||
                          (count == top && (key.second > refit_c ||
                                            (key.second == refit_c && key.first == 1)));
      if (better) {
        top = count;
        refit_penalty = key.first == 1 ? Penalty::L2 : Penalty::L1;
        refit_c = key.second;
      }
    }
  }
  std::vector<TaskInstance> instances =
      build_task_instances(loaded.corpus, config.task_spec, config.weights);
  TaskFeatureProvider provider(loaded.corpus, instances, config.load_lexicons(), best.groups,
                               config.tfidf);
  std::vector<int> all_rows(instances.size());
  for (std::size_t i = 0; i < instances.size(); ++i) all_rows[i] = static_cast<int>(i);
  const DatasetMatrix full = provider.build(all_rows, all_rows);
  const TrainedModel refit =
      train_logreg(full, refit_penalty, refit_c, config.cv.grid.optim_options());
  export_weights_tsv(refit, full.feature_names, out_path(config, "task_weights.tsv"));

  out << ablation_markdown(report);
  out << "\nbest row '" << best.name << "' refit with " << to_string(refit_penalty)
      << ", C = " << refit_c << "; weights in " << out_path(config, "task_weights.tsv") << "\n";
  out << "wrote " << out_path(config, "task_report.json") << " and "
      << out_path(config, "task_report.md") << "\n";
  return kExitOk;
}

int cmd_ceiling(const RunConfig& config, std::ostream& out, std::ostream& err) {
  LoadResult loaded;
  try {
    loaded = load(config);
  } catch (const ValidationError& e) {
    return report_validation_failure(config, e, err);
  }
  std::vector<TaskInstance> instances;
  try {
    instances = build_task_instances(loaded.corpus, config.task_spec, config.weights);
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }
  if (instances.empty()) {
    err << "no task instances under the configured filters\n";
    return kExitEmptyExperiment;
  }
  const double ceiling = language_only_ceiling(instances);
  ensure_out_dir(config);
  write_report_json(out_path(config, "ceiling.json"),
                    ordered_json{{"task", to_string(config.task_spec.task)},
                                 {"category", config.task_spec.category_filter.empty()
                                                  ? "ALL"
                                                  : config.task_spec.category_filter},
                                 {"instance_count", instances.size()},
                                 {"language_only_ceiling", ceiling}});
  out << "instances: " << instances.size() << "\n";
  out << "language-only ceiling: " << std::fixed << std::setprecision(4) << ceiling << "\n";
  return kExitOk;
}

int cmd_gen_synthetic(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    config.synth.validate();
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }
  const Corpus corpus = generate_synthetic_corpus(config.synth);
  ensure_out_dir(config);
  const std::string debates = out_path(config, "debates.jsonl");
  const std::string users = out_path(config, "users.jsonl");
  const std::string votes = out_path(config, "votes.jsonl");
  const std::string issues = out_path(config, "issues.txt");
  save_corpus(corpus, debates, users, votes);
  save_issue_catalog(corpus.issue_catalog, issues);
  out << "wrote " << debates << " (" << corpus.debates.size() << " debates), " << users << " ("
      << corpus.users.size() << " users), " << votes << " (" << corpus.votes.size()
      << " votes), " << issues << "\n";
  return kExitOk;
}

}  // namespace persuade
