#include "persuade/tasks.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

namespace persuade {

const char* to_string(TaskKind k) {
  return k == TaskKind::Task1Religious ? "task1_religious" : "task2_political";
}

TaskKind parse_task_kind(std::string_view text) {
  if (text == "task1_religious" || text == "task1") return TaskKind::Task1Religious;
  if (text == "task2_political" || text == "task2") return TaskKind::Task2Political;
  throw std::invalid_argument("unknown task: '" + std::string(text) + "'");
}

const std::vector<std::string>& user_groups() {
  static const std::vector<std::string> groups = {
      kGroupOpinionSimilarity, kGroupMatchingPolitical, kGroupMatchingReligious};
  return groups;
}

std::vector<std::string> all_feature_groups() {
  std::vector<std::string> groups = user_groups();
  const auto& ling = linguistic_groups();
  groups.insert(groups.end(), ling.begin(), ling.end());
  return groups;
}

bool is_user_group(std::string_view group) {
  const auto& groups = user_groups();
  return std::find(groups.begin(), groups.end(), group) != groups.end();
}

TaskSpec TaskSpec::task1_defaults() {
  TaskSpec spec;
  spec.task = TaskKind::Task1Religious;
  spec.category_filter = "Religion";
  spec.ideology_pair = {"Atheist", "Christian"};
  spec.feature_groups = all_feature_groups();
  return spec;
}

TaskSpec TaskSpec::task2_defaults() {
  TaskSpec spec;
  spec.task = TaskKind::Task2Political;
  spec.category_filter = "Politics";
  spec.ideology_pair = {"Conservative", "Liberal"};
  spec.feature_groups = all_feature_groups();
  return spec;
}

IdeologyKind TaskSpec::controlled_kind() const {
  return task == TaskKind::Task1Religious ? IdeologyKind::Religious : IdeologyKind::Political;
}

void TaskSpec::validate() const {
  if (fold_label(ideology_pair.first) == fold_label(ideology_pair.second)) {
    throw std::invalid_argument("ideology pair labels must be distinct");
  }
  if (feature_groups.empty()) {
    throw std::invalid_argument("feature_groups must not be empty");
  }
}

const std::vector<std::string>& user_feature_names() {
  static const std::vector<std::string> names = {
      "sim_pro",           "sim_con",           "match_political_pro",
      "match_political_con", "match_religious_pro", "match_religious_con"};
  return names;
}

namespace {

// Lenient BigIssues encoding for instance features: N/S and missing issues
// become all-zero blocks so every instance gets a defined similarity value
// (the strict encode_big_issues contract stays untouched).
BigIssuesVector encode_lenient(const UserProfile& profile,
                               const std::vector<std::string>& catalog) {
  BigIssuesVector vec(catalog.size() * kOpinionSlotCount, 0.0);
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    auto it = profile.big_issue_opinions.find(catalog[i]);
    if (it == profile.big_issue_opinions.end()) continue;
    int slot = -1;
    switch (it->second) {
      case Opinion::Pro: slot = 0; break;
      case Opinion::Con: slot = 1; break;
      case Opinion::NoOpinion: slot = 2; break;
      case Opinion::Undecided: slot = 3; break;
      case Opinion::NotSaying: slot = -1; break;
    }
    if (slot >= 0) vec[i * kOpinionSlotCount + slot] = 1.0;
  }
  return vec;
}

// 1 only when both profiles declare the kind and the folded labels match.
double lenient_match(const UserProfile& a, const UserProfile& b, IdeologyKind kind) {
  const auto& da = kind == IdeologyKind::Political ? a.political_ideology : a.religious_ideology;
  const auto& db = kind == IdeologyKind::Political ? b.political_ideology : b.religious_ideology;
  if (!da.has_value() || !db.has_value()) return 0.0;
  return fold_label(*da) == fold_label(*db) ? 1.0 : 0.0;
}

std::vector<double> build_user_features(const Corpus& corpus, const UserProfile& voter,
                                        const UserProfile& pro, const UserProfile& con) {
  const BigIssuesVector voter_vec = encode_lenient(voter, corpus.issue_catalog);
  const BigIssuesVector pro_vec = encode_lenient(pro, corpus.issue_catalog);
  const BigIssuesVector con_vec = encode_lenient(con, corpus.issue_catalog);
  return {
      opinion_similarity(voter_vec, pro_vec),
      opinion_similarity(voter_vec, con_vec),
      lenient_match(voter, pro, IdeologyKind::Political),
      lenient_match(voter, con, IdeologyKind::Political),
      lenient_match(voter, pro, IdeologyKind::Religious),
      lenient_match(voter, con, IdeologyKind::Religious),
  };
}

const std::optional<std::string>& declared_ideology(const UserProfile& user, IdeologyKind kind) {
  return kind == IdeologyKind::Political ? user.political_ideology : user.religious_ideology;
}

struct ControlledDebate {
  const Debate* debate;
  const UserProfile* pro;
  const UserProfile* con;
};

// Debates passing the category filter whose debaters declare the two
// distinct controlled ideologies.
std::map<std::string, ControlledDebate> controlled_pool(const Corpus& corpus,
                                                        const TaskSpec& spec) {
  const IdeologyKind kind = spec.controlled_kind();
  const std::string label_a = fold_label(spec.ideology_pair.first);
  const std::string label_b = fold_label(spec.ideology_pair.second);
  const std::string category = fold_label(spec.category_filter);

  std::map<std::string, ControlledDebate> pool;
  for (const auto& [id, debate] : corpus.debates) {
    if (!category.empty() && fold_label(debate.category) != category) continue;
    const auto pro_it = corpus.users.find(debate.pro_debater);
    const auto con_it = corpus.users.find(debate.con_debater);
    if (pro_it == corpus.users.end() || con_it == corpus.users.end()) continue;
    const auto& pro_label = declared_ideology(pro_it->second, kind);
    const auto& con_label = declared_ideology(con_it->second, kind);
    if (!pro_label.has_value() || !con_label.has_value()) continue;
    const std::string pro_folded = fold_label(*pro_label);
    const std::string con_folded = fold_label(*con_label);
    const bool covers_pair = (pro_folded == label_a && con_folded == label_b) ||
                             (pro_folded == label_b && con_folded == label_a);
    if (!covers_pair) continue;
    pool.emplace(id, ControlledDebate{&debate, &pro_it->second, &con_it->second});
  }
  return pool;
}

bool voter_in_pair(const UserProfile& voter, const TaskSpec& spec) {
  const auto& declared = declared_ideology(voter, spec.controlled_kind());
  if (!declared.has_value()) return false;
  const std::string folded = fold_label(*declared);
  return folded == fold_label(spec.ideology_pair.first) ||
         folded == fold_label(spec.ideology_pair.second);
}

void sort_instances(std::vector<TaskInstance>& instances) {
  std::sort(instances.begin(), instances.end(), [](const TaskInstance& a, const TaskInstance& b) {
    if (a.debate_id != b.debate_id) return a.debate_id < b.debate_id;
    return a.voter_id < b.voter_id;
  });
}

}  // namespace

std::vector<TaskInstance> build_task1_instances(const Corpus& corpus, const TaskSpec& spec) {
  if (spec.task != TaskKind::Task1Religious) {
    throw std::invalid_argument("build_task1_instances needs a task1_religious spec");
  }
  spec.validate();
  const auto pool = controlled_pool(corpus, spec);

  std::vector<TaskInstance> instances;
  for (const Vote& vote : corpus.votes) {
    const auto it = pool.find(vote.debate_id);
    if (it == pool.end()) continue;
    const auto voter_it = corpus.users.find(vote.voter_id);
    if (voter_it == corpus.users.end() || !voter_in_pair(voter_it->second, spec)) continue;
    if (!stance_changed(vote) || vote.post_stance == Stance::Tie) continue;

    TaskInstance instance;
    instance.voter_id = vote.voter_id;
    instance.debate_id = vote.debate_id;
    instance.label = vote.post_stance == Stance::Pro ? 1 : 0;
    instance.user_features =
        build_user_features(corpus, voter_it->second, *it->second.pro, *it->second.con);
    instances.push_back(std::move(instance));
  }
  sort_instances(instances);
  return instances;
}

std::vector<TaskInstance> build_task2_instances(const Corpus& corpus, const TaskSpec& spec,
                                                const PointWeights& weights) {
  if (spec.task != TaskKind::Task2Political) {
    throw std::invalid_argument("build_task2_instances needs a task2_political spec");
  }
  spec.validate();
  weights.validate();
  const auto pool = controlled_pool(corpus, spec);

  std::vector<TaskInstance> instances;
  for (const Vote& vote : corpus.votes) {
    const auto it = pool.find(vote.debate_id);
    if (it == pool.end()) continue;
    const auto voter_it = corpus.users.find(vote.voter_id);
    if (voter_it == corpus.users.end() || !voter_in_pair(voter_it->second, spec)) continue;
    const PointTotals totals = total_points(vote, weights);
    if (totals.pro == totals.con) continue;

    TaskInstance instance;
    instance.voter_id = vote.voter_id;
    instance.debate_id = vote.debate_id;
    instance.label = totals.pro > totals.con ? 1 : 0;
    instance.user_features =
        build_user_features(corpus, voter_it->second, *it->second.pro, *it->second.con);
    instances.push_back(std::move(instance));
  }
  sort_instances(instances);
  return instances;
}

std::vector<TaskInstance> build_task_instances(const Corpus& corpus, const TaskSpec& spec,
                                               const PointWeights& weights) {
  return spec.task == TaskKind::Task1Religious ? build_task1_instances(corpus, spec)
                                               : build_task2_instances(corpus, spec, weights);
}

double language_only_ceiling(const std::vector<TaskInstance>& instances) {
  if (instances.empty()) throw std::invalid_argument("language_only_ceiling of empty set");
  std::map<std::string, std::pair<int, int>> per_debate;  // (pro, con) label counts
  for (const TaskInstance& instance : instances) {
    auto& counts = per_debate[instance.debate_id];
    instance.label == 1 ? ++counts.first : ++counts.second;
  }
  long long best = 0;
  for (const auto& [id, counts] : per_debate) best += std::max(counts.first, counts.second);
  return static_cast<double>(best) / static_cast<double>(instances.size());
}

// --- Feature provider --------------------------------------------------------

namespace {

struct DebateSideData {
  std::vector<std::string> tokens;
  std::vector<double> scalars;
};

}  // namespace

class DebateFeatureCache {
 public:
  DebateFeatureCache(const Corpus& corpus, LexiconSet lexicons)
      : corpus_(&corpus), lexicons_(std::move(lexicons)),
        layout_(scalar_feature_layout(lexicons_)) {}

  const Corpus& corpus() const { return *corpus_; }
  const LexiconSet& lexicons() const { return lexicons_; }
  const std::vector<ScalarFeatureInfo>& layout() const { return layout_; }

  const std::array<DebateSideData, 2>& sides(const std::string& debate_id) {
    auto it = by_debate_.find(debate_id);
    if (it != by_debate_.end()) return it->second;
    const Debate& debate = corpus_->debates.at(debate_id);
    std::array<DebateSideData, 2> data;
    for (int s = 0; s < 2; ++s) {
      const SideText text = side_text(debate, s == 0 ? Stance::Pro : Stance::Con);
      data[s].tokens = tokenize(text.text);
      data[s].scalars = extract_features(text, lexicons_, scalar_model_).scalars;
    }
    return by_debate_.emplace(debate_id, std::move(data)).first->second;
  }

 private:
  const Corpus* corpus_;
  LexiconSet lexicons_;
  std::vector<ScalarFeatureInfo> layout_;
  // Empty-vocabulary model so extract_features runs once per debate side;
  // the tf-idf block it produces is empty and unused here.
  TfidfModel scalar_model_ = TfidfModel::fit({SideText{}});
  std::map<std::string, std::array<DebateSideData, 2>> by_debate_;
};

std::shared_ptr<DebateFeatureCache> make_debate_feature_cache(const Corpus& corpus,
                                                              const LexiconSet& lexicons) {
  return std::make_shared<DebateFeatureCache>(corpus, lexicons);
}

struct TaskFeatureProvider::Impl {
  std::shared_ptr<DebateFeatureCache> cache;
  std::vector<TaskInstance> instances;
  TfidfOptions tfidf_options;

  std::vector<int> labels;
  std::vector<std::string> debate_ids;  // per instance
  std::vector<int> user_columns;    // indices into user_features
  std::vector<int> scalar_columns;  // indices into the scalar layout
  bool use_tfidf = false;
};

namespace {

void resolve_groups(const std::vector<std::string>& selected,
                    const std::vector<ScalarFeatureInfo>& layout, std::vector<int>& user_columns,
                    std::vector<int>& scalar_columns, bool& use_tfidf) {
  std::set<int> user_set;
  std::set<int> scalar_set;
  use_tfidf = false;
  const auto& ling = linguistic_groups();
  for (const std::string& group : selected) {
    if (group == kGroupOpinionSimilarity) {
      user_set.insert(0);
      user_set.insert(1);
    } else if (group == kGroupMatchingPolitical) {
      user_set.insert(2);
      user_set.insert(3);
    } else if (group == kGroupMatchingReligious) {
      user_set.insert(4);
      user_set.insert(5);
    } else if (group == kGroupTfidf) {
      use_tfidf = true;
    } else if (std::find(ling.begin(), ling.end(), group) != ling.end()) {
      for (std::size_t i = 0; i < layout.size(); ++i) {
        if (layout[i].group == group) scalar_set.insert(static_cast<int>(i));
      }
    } else if (group.starts_with("arglex:")) {
      bool found = false;
      for (std::size_t i = 0; i < layout.size(); ++i) {
        if (layout[i].name == group) {
          scalar_set.insert(static_cast<int>(i));
          found = true;
        }
      }
      if (!found) {
        throw std::invalid_argument("unknown argument-lexicon category selector '" + group + "'");
      }
    } else {
      throw std::invalid_argument("unknown feature group '" + group + "'");
    }
  }
  user_columns.assign(user_set.begin(), user_set.end());
  scalar_columns.assign(scalar_set.begin(), scalar_set.end());
}

}  // namespace

TaskFeatureProvider::TaskFeatureProvider(const Corpus& corpus,
                                         std::vector<TaskInstance> instances,
                                         const LexiconSet& lexicons,
                                         std::vector<std::string> selected_groups,
                                         const TfidfOptions& tfidf_options)
    : TaskFeatureProvider(std::make_shared<DebateFeatureCache>(corpus, lexicons),
                          std::move(instances), std::move(selected_groups), tfidf_options) {}

TaskFeatureProvider::TaskFeatureProvider(std::shared_ptr<DebateFeatureCache> cache,
                                         std::vector<TaskInstance> instances,
                                         std::vector<std::string> selected_groups,
                                         const TfidfOptions& tfidf_options)
    : impl_(std::make_unique<Impl>()) {
  if (selected_groups.empty()) throw std::invalid_argument("no feature groups selected");
  impl_->cache = std::move(cache);
  impl_->instances = std::move(instances);
  impl_->tfidf_options = tfidf_options;
  impl_->labels.reserve(impl_->instances.size());
  impl_->debate_ids.reserve(impl_->instances.size());
  for (const TaskInstance& instance : impl_->instances) {
    impl_->labels.push_back(instance.label);
    impl_->debate_ids.push_back(instance.debate_id);
  }
  resolve_groups(selected_groups, impl_->cache->layout(), impl_->user_columns,
                 impl_->scalar_columns, impl_->use_tfidf);
  if (impl_->user_columns.empty() && impl_->scalar_columns.empty() && !impl_->use_tfidf) {
    throw std::invalid_argument("feature selection resolves to zero columns");
  }
}

TaskFeatureProvider::~TaskFeatureProvider() = default;

int TaskFeatureProvider::instance_count() const {
  return static_cast<int>(impl_->instances.size());
}

const std::vector<int>& TaskFeatureProvider::labels() const { return impl_->labels; }

const std::vector<std::string>& TaskFeatureProvider::groups() const {
  return impl_->debate_ids;
}

const std::vector<TaskInstance>& TaskFeatureProvider::instances() const {
  return impl_->instances;
}

DatasetMatrix TaskFeatureProvider::build(const std::vector<int>& fit_rows,
                                         const std::vector<int>& emit_rows) {
  Impl& impl = *impl_;

  // Fold-local tf-idf: vocabulary from the fit rows' debates only.
  TfidfModel tfidf = TfidfModel::fit({SideText{}});
  std::map<std::string, std::array<std::vector<double>, 2>> tfidf_blocks;
  if (impl.use_tfidf) {
    std::set<std::string> fit_debates;
    for (const int row : fit_rows) fit_debates.insert(impl.instances[row].debate_id);
    std::vector<SideText> docs;
    docs.reserve(fit_debates.size() * 2);
    for (const std::string& debate_id : fit_debates) {
      const Debate& debate = impl.cache->corpus().debates.at(debate_id);
      docs.push_back(side_text(debate, Stance::Pro));
      docs.push_back(side_text(debate, Stance::Con));
    }
    tfidf = TfidfModel::fit(docs, impl.tfidf_options);
    std::set<std::string> emit_debates;
    for (const int row : emit_rows) emit_debates.insert(impl.instances[row].debate_id);
    for (const std::string& debate_id : emit_debates) {
      const auto& sides = impl.cache->sides(debate_id);
      tfidf_blocks[debate_id] = {tfidf.transform(sides[0].tokens),
                                 tfidf.transform(sides[1].tokens)};
    }
  }

  const std::vector<ScalarFeatureInfo>& layout = impl.cache->layout();
  const int vocab = impl.use_tfidf ? static_cast<int>(tfidf.vocabulary().size()) : 0;
  const int side_width = static_cast<int>(impl.scalar_columns.size()) + vocab;
  const int cols = static_cast<int>(impl.user_columns.size()) + 2 * side_width;

  DatasetMatrix out;
  out.rows = static_cast<int>(emit_rows.size());
  out.cols = cols;
  out.values.reserve(static_cast<std::size_t>(out.rows) * cols);
  for (const int col : impl.user_columns) {
    out.feature_names.push_back("user:" + user_feature_names()[col]);
  }
  for (const char* side : {"pro", "con"}) {
    for (const int col : impl.scalar_columns) {
      out.feature_names.push_back(std::string(side) + ":" + layout[col].name);
    }
    for (int t = 0; t < vocab; ++t) {
      out.feature_names.push_back(std::string(side) + ":tfidf:" + tfidf.terms()[t]);
    }
  }

  for (const int row : emit_rows) {
    const TaskInstance& instance = impl.instances[row];
    const auto& sides = impl.cache->sides(instance.debate_id);
    for (const int col : impl.user_columns) {
      out.values.push_back(instance.user_features[col]);
    }
    for (int s = 0; s < 2; ++s) {
      for (const int col : impl.scalar_columns) out.values.push_back(sides[s].scalars[col]);
      if (impl.use_tfidf) {
        const auto& block = tfidf_blocks.at(instance.debate_id)[s];
        out.values.insert(out.values.end(), block.begin(), block.end());
      }
    }
    out.labels.push_back(instance.label);
    out.group_ids.push_back(instance.debate_id);
  }
  return out;
}

// --- Ablation ----------------------------------------------------------------

namespace {

std::string normalized_key(std::vector<std::string> groups) {
  std::sort(groups.begin(), groups.end());
  std::string key;
  for (const auto& g : groups) {
    key += g;
    key += '|';
  }
  return key;
}

double pooled_accuracy(const CVReport& cv) {
  long long hits = 0;
  for (const auto& p : cv.predictions) hits += p.predicted == p.label ? 1 : 0;
  return static_cast<double>(hits) / static_cast<double>(cv.predictions.size());
}

}  // namespace

AblationReport run_ablation(const Corpus& corpus, const TaskSpec& spec,
                            const LexiconSet& lexicons, const AblationConfig& config) {
  spec.validate();
  std::vector<TaskInstance> instances = build_task_instances(corpus, spec, config.weights);
  if (instances.empty()) {
    std::ostringstream os;
    os << "no instances for " << to_string(spec.task) << " (category "
       << (spec.category_filter.empty() ? "ALL" : spec.category_filter) << ", pair "
       << spec.ideology_pair.first << "/" << spec.ideology_pair.second << ")";
    throw EmptyInstanceSetError(os.str());
  }

  AblationReport report;
  report.task = spec.task;
  report.category = spec.category_filter.empty() ? "ALL" : spec.category_filter;
  report.ideology_pair = spec.ideology_pair;
  report.instance_count = static_cast<int>(instances.size());
  {
    std::set<std::string> debates;
    for (const auto& instance : instances) debates.insert(instance.debate_id);
    report.debate_count = static_cast<int>(debates.size());
  }
  report.language_ceiling = language_only_ceiling(instances);

  // Row plan: singletons, configured combos, then the three canonical rows.
  std::vector<std::string> user_selected;
  std::vector<std::string> ling_selected;
  for (const std::string& group : spec.feature_groups) {
    (is_user_group(group) ? user_selected : ling_selected).push_back(group);
  }
  std::vector<std::pair<std::string, std::vector<std::string>>> plan;
  if (config.include_singletons) {
    for (const std::string& group : spec.feature_groups) plan.emplace_back(group, std::vector{group});
  }
  for (const auto& combo : config.combos) plan.push_back(combo);
  if (!user_selected.empty()) plan.emplace_back("user-only", user_selected);
  if (!ling_selected.empty()) plan.emplace_back("linguistic-only", ling_selected);
  if (!user_selected.empty() && !ling_selected.empty()) {
    plan.emplace_back("combined", spec.feature_groups);
  }

  // One shared outer split so every row (and the baseline) sees the same
  // folds; predictions stay instance-aligned for McNemar.
  std::vector<int> labels;
  std::vector<std::string> debate_ids;
  for (const auto& instance : instances) {
    labels.push_back(instance.label);
    debate_ids.push_back(instance.debate_id);
  }
  const std::vector<std::vector<int>> outer_folds =
      make_folds(labels, debate_ids, config.cv.outer_folds, config.cv.folding,
                 RandomSource(config.cv.seed).fork(0));

  auto cache = make_debate_feature_cache(corpus, lexicons);
  std::map<std::string, std::size_t> computed;  // normalized group set -> row index
  for (const auto& [name, groups] : plan) {
    AblationRow row;
    row.name = name;
    row.groups = groups;
    row.user_only = std::all_of(groups.begin(), groups.end(),
                                [](const std::string& g) { return is_user_group(g); });
    row.linguistic_only = std::all_of(groups.begin(), groups.end(),
                                      [](const std::string& g) { return !is_user_group(g); });
    const std::string key = normalized_key(groups);
    if (auto it = computed.find(key); it != computed.end()) {
      row.cv = report.rows[it->second].cv;  // identical subset already ran
    } else {
      TaskFeatureProvider provider(cache, instances, groups, config.tfidf);
      row.cv = nested_cv(provider, config.cv, &outer_folds);
      computed.emplace(key, report.rows.size());
    }
    report.rows.push_back(std::move(row));
  }

  report.majority_accuracy = report.rows.front().cv.baseline_accuracy;
  const std::vector<int> truth = report.rows.front().cv.true_labels();
  const std::vector<int> baseline = report.rows.front().cv.baseline_labels();

  // Best user-only row by mean accuracy (ties keep plan order).
  std::size_t best_user = report.rows.size();
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const AblationRow& row = report.rows[i];
    if (!row.user_only) continue;
    if (best_user == report.rows.size() ||
        row.cv.mean_accuracy > report.rows[best_user].cv.mean_accuracy) {
      best_user = i;
    }
  }
  std::vector<int> best_user_preds;
  if (best_user < report.rows.size()) {
    report.best_user_row = report.rows[best_user].name;
    best_user_preds = report.rows[best_user].cv.predicted_labels();
  }

  for (AblationRow& row : report.rows) {
    row.vs_baseline = mcnemar(row.cv.predicted_labels(), baseline, truth);
    if (!best_user_preds.empty()) {
      row.vs_best_user = mcnemar(row.cv.predicted_labels(), best_user_preds, truth);
    }
    if (row.linguistic_only) {
      // Language features cannot tell voters of one debate apart; any
      // pooled accuracy above the ceiling means leakage or a bug.
      const double pooled = pooled_accuracy(row.cv);
      if (pooled > report.language_ceiling + 1e-9) {
        throw std::logic_error("linguistic-only row '" + row.name + "' accuracy " +
                               std::to_string(pooled) + " exceeds language ceiling " +
                               std::to_string(report.language_ceiling));
      }
    }
  }

  std::stable_sort(report.rows.begin(), report.rows.end(),
                   [](const AblationRow& a, const AblationRow& b) {
                     return a.cv.mean_accuracy > b.cv.mean_accuracy;
                   });
  return report;
}

}  // namespace persuade
