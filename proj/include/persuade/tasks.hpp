#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "persuade/beliefs.hpp"
#include "persuade/corpus.hpp"
#include "persuade/learn.hpp"
#include "persuade/textfeat.hpp"

namespace persuade {

enum class TaskKind { Task1Religious, Task2Political };
const char* to_string(TaskKind k);
TaskKind parse_task_kind(std::string_view text);

// User-feature group names (each contributes a voter-vs-PRO and a
// voter-vs-CON column).
inline constexpr const char* kGroupOpinionSimilarity = "opinion_similarity";
inline constexpr const char* kGroupMatchingPolitical = "matching_political";
inline constexpr const char* kGroupMatchingReligious = "matching_religious";

const std::vector<std::string>& user_groups();
/// user_groups() followed by linguistic_groups().
std::vector<std::string> all_feature_groups();
bool is_user_group(std::string_view group);

struct TaskSpec {
  TaskKind task = TaskKind::Task1Religious;
  std::string category_filter;  // empty = ALL categories
  std::pair<std::string, std::string> ideology_pair;
  std::vector<std::string> feature_groups;  // non-empty; universe for ablation

  static TaskSpec task1_defaults();  // (Atheist, Christian), category Religion
  static TaskSpec task2_defaults();  // (Conservative, Liberal), category Politics
  IdeologyKind controlled_kind() const;
  void validate() const;
};

/// One (voter, debate) prediction unit. The user-feature block is stored on
/// the instance (all user groups, selected or not, so ablation rows can
/// slice without rebuilding); linguistic blocks are debate-level and live in
/// the feature provider. Lenient encoding is used here so the instance set
/// is identical across feature subsets: an N/S or missing issue becomes an
/// all-zero block in the similarity encoding, and a matching feature is 0
/// unless both profiles declare that ideology kind.
struct TaskInstance {
  std::string voter_id;
  std::string debate_id;
  int label = 0;  // 1 = PRO side
  std::vector<double> user_features;  // layout: user_feature_names()
};

/// sim_pro, sim_con, match_political_pro, match_political_con,
/// match_religious_pro, match_religious_con.
const std::vector<std::string>& user_feature_names();

/// Task 1 (Criterion 2, controlling for the religious ideology pair): keep
/// debates in the category whose debaters declare the two distinct
/// ideologies; keep voters declaring one of them whose stance changed and
/// whose post-stance is not TIE. Label = post-stance side. Sorted by
/// (debate_id, voter_id).
std::vector<TaskInstance> build_task1_instances(const Corpus& corpus, const TaskSpec& spec);

/// Task 2 (Criterion 1, controlling for the political ideology pair): all
/// voters declaring either ideology, label = side with more total points for
/// that vote; equal points excluded. Sorted by (debate_id, voter_id).
std::vector<TaskInstance> build_task2_instances(const Corpus& corpus, const TaskSpec& spec,
                                                const PointWeights& weights = PointWeights{});

std::vector<TaskInstance> build_task_instances(const Corpus& corpus, const TaskSpec& spec,
                                               const PointWeights& weights = PointWeights{});

/// Linguistic features are constant within a debate, so no language-only
/// model can beat sum over debates of max(#PRO-labeled, #CON-labeled) / N.
double language_only_ceiling(const std::vector<TaskInstance>& instances);

class EmptyInstanceSetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Debate-level token streams and scalar linguistic features, extracted once
/// and shared across feature providers (ablation runs many subsets over the
/// same debates).
class DebateFeatureCache;
std::shared_ptr<DebateFeatureCache> make_debate_feature_cache(const Corpus& corpus,
                                                              const LexiconSet& lexicons);

/// FeatureProvider over task instances. Scalar linguistic features are
/// extracted once per debate; the tf-idf vocabulary (when the tfidf group is
/// selected) is refit on every build() from the fit rows' debates only.
/// Selected groups may be user groups, linguistic groups, or single
/// argument-lexicon categories ("arglex:<category>"). The corpus behind the
/// cache must outlive the provider.
class TaskFeatureProvider : public FeatureProvider {
 public:
  TaskFeatureProvider(const Corpus& corpus, std::vector<TaskInstance> instances,
                      const LexiconSet& lexicons, std::vector<std::string> selected_groups,
                      const TfidfOptions& tfidf_options = {});
  TaskFeatureProvider(std::shared_ptr<DebateFeatureCache> cache,
                      std::vector<TaskInstance> instances,
                      std::vector<std::string> selected_groups,
                      const TfidfOptions& tfidf_options = {});
  ~TaskFeatureProvider() override;

  int instance_count() const override;
  const std::vector<int>& labels() const override;
  const std::vector<std::string>& groups() const override;
  DatasetMatrix build(const std::vector<int>& fit_rows,
                      const std::vector<int>& emit_rows) override;

  const std::vector<TaskInstance>& instances() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// --- Ablation ----------------------------------------------------------------

struct AblationRow {
  std::string name;
  std::vector<std::string> groups;
  bool user_only = false;
  bool linguistic_only = false;
  CVReport cv;
  McNemarResult vs_baseline;
  std::optional<McNemarResult> vs_best_user;
};

struct AblationReport {
  TaskKind task = TaskKind::Task1Religious;
  std::string category;  // "ALL" when unfiltered
  std::pair<std::string, std::string> ideology_pair;
  int instance_count = 0;
  int debate_count = 0;
  double majority_accuracy = 0.0;   // pooled per-fold majority baseline
  double language_ceiling = 0.0;
  std::string best_user_row;        // empty when no user rows ran
  std::vector<AblationRow> rows;    // sorted by mean accuracy, descending
};

struct AblationConfig {
  CvConfig cv;
  PointWeights weights;
  TfidfOptions tfidf;
  bool include_singletons = true;
  // Extra named feature-group combinations, run in addition to the
  // singleton / user-only / linguistic-only / combined rows.
  std::vector<std::pair<std::string, std::vector<std::string>>> combos;
};

/// Runs nested CV for every requested feature subset on one shared outer
/// fold split, attaching McNemar significance against the majority baseline
/// and against the best user-only row. Hard-asserts that no
/// linguistic-only row beats the language-only ceiling. Throws
/// EmptyInstanceSetError when the task filters leave nothing.
AblationReport run_ablation(const Corpus& corpus, const TaskSpec& spec,
                            const LexiconSet& lexicons, const AblationConfig& config);

}  // namespace persuade
