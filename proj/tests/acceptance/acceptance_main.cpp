// Acceptance suite: one criterion per section, one PASS/FAIL line each.
// Eigen serves as the independent dense eigensolver oracle; everything else
// is checked against closed forms, brute force, or quadrature computed here.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "persuade/beliefs.hpp"
#include "persuade/corpus.hpp"
#include "persuade/jsonl.hpp"
#include "persuade/learn.hpp"
#include "persuade/random.hpp"
#include "persuade/report.hpp"
#include "persuade/synthetic.hpp"
#include "persuade/tasks.hpp"
#include "persuade/textfeat.hpp"

using namespace persuade;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool condition, const std::string& message) {
  if (!condition) throw Failure(message);
}

std::string format_double(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

void require_close(double actual, double expected, double tolerance, const std::string& what) {
  if (std::abs(actual - expected) > tolerance) {
    throw Failure(what + ": got " + format_double(actual) + ", expected " +
                  format_double(expected) + " +/- " + format_double(tolerance));
  }
}

// ---------------------------------------------------------------------------
// Criterion 1: BigIssues encoding.

void criterion_1() {
  const std::vector<std::string> catalog = {"Abortion", "AffirmativeAction", "Welfare"};
  UserProfile user;
  user.user_id = "fig5";
  user.big_issue_opinions = {{"Abortion", Opinion::Con},
                             {"AffirmativeAction", Opinion::Con},
                             {"Welfare", Opinion::Pro}};
  const BigIssuesVector expected = {0, 1, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0};
  require(encode_big_issues(user, catalog) == expected,
          "CON/CON/PRO must encode as [0100 0100 1000]");

  RandomSource rng(1);
  const Opinion choices[] = {Opinion::Pro, Opinion::Con, Opinion::NoOpinion, Opinion::Undecided};
  for (int trial = 0; trial < 500; ++trial) {
    const int k = 1 + static_cast<int>(rng.next_below(24));
    std::vector<std::string> issues;
    UserProfile random_user;
    random_user.user_id = "r";
    for (int i = 0; i < k; ++i) {
      issues.push_back("Issue" + std::to_string(i));
      random_user.big_issue_opinions[issues.back()] = choices[rng.next_below(4)];
    }
    const BigIssuesVector vec = encode_big_issues(random_user, issues);
    require(vec.size() == static_cast<std::size_t>(4 * k), "vector length must be 4K");
    for (int i = 0; i < k; ++i) {
      double sum = 0.0;
      for (int s = 0; s < 4; ++s) {
        const double x = vec[i * 4 + s];
        require(x == 0.0 || x == 1.0, "entries must be 0/1");
        sum += x;
      }
      require(sum == 1.0, "each 4-slot block must be one-hot");
    }
  }
}

// ---------------------------------------------------------------------------
// Criterion 2: logistic-regression oracles.

void criterion_2() {
  RandomSource rng(2);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const int rows = 5 + static_cast<int>(rng.next_below(30));
    const int cols = 1 + static_cast<int>(rng.next_below(5));
    std::vector<double> x;
    std::vector<int> labels;
    for (int i = 0; i < rows * cols; ++i) x.push_back(rng.next_gaussian());
    for (int i = 0; i < rows; ++i) labels.push_back(static_cast<int>(rng.next_below(2)));
    const Penalty penalty = trial % 2 == 0 ? Penalty::L2 : Penalty::L1;
    const double c = std::pow(10.0, static_cast<double>(rng.next_below(7)) - 3.0);
    const LogisticObjective objective(x, rows, cols, labels, penalty, c);

    std::vector<double> w(cols);
    for (auto& v : w) v = rng.next_gaussian();
    const double b = rng.next_gaussian();
    std::vector<double> grad(cols);
    double grad_b = 0.0;
    objective.smooth_gradient(w, b, grad, grad_b);

    const double h = 1e-6;
    for (int j = 0; j <= cols; ++j) {
      auto value_at = [&](double delta) {
        std::vector<double> wp = w;
        double bp = b;
        (j < cols ? wp[j] : bp) += delta;
        return objective.smooth_value(wp, bp);
      };
      const double numeric = (value_at(h) - value_at(-h)) / (2.0 * h);
      const double analytic = j < cols ? grad[j] : grad_b;
      const double scale = std::max({1.0, std::abs(numeric), std::abs(analytic)});
      worst = std::max(worst, std::abs(numeric - analytic) / scale);
    }
  }
  require(worst < 1e-5,
          "max relative gradient error " + format_double(worst) + " must stay below 1e-5");

  // L1 at C -> 0: exact zeros, intercept = empirical log-odds.
  DatasetMatrix data;
  data.rows = 60;
  data.cols = 4;
  for (int i = 0; i < data.rows * data.cols; ++i) data.values.push_back(rng.next_gaussian());
  int positives = 0;
  for (int i = 0; i < data.rows; ++i) {
    data.labels.push_back(static_cast<int>(rng.next_below(2)));
    positives += data.labels.back();
  }
  OptimOptions options;
  options.tolerance = 1e-18;
  options.max_iterations = 200000;
  const TrainedModel model = train_logreg(data, Penalty::L1, 1e-6, options);
  for (const double w : model.weights) {
    require(w == 0.0, "all weights must be exactly zero at C = 1e-6");
  }
  const double p = static_cast<double>(positives) / data.rows;
  require_close(model.intercept, std::log(p / (1.0 - p)), 1e-6,
                "intercept must equal the empirical log-odds");
}

// ---------------------------------------------------------------------------
// Criterion 3: nested CV sanity on null and separable data.

void criterion_3() {
  CvConfig config;
  double total = 0.0;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    RandomSource rng(9000 + seed);
    DatasetMatrix data;
    data.rows = 500;
    data.cols = 10;
    for (int i = 0; i < data.rows * data.cols; ++i) data.values.push_back(rng.next_gaussian());
    for (int i = 0; i < data.rows; ++i) {
      data.labels.push_back(static_cast<int>(rng.next_below(2)));
    }
    config.seed = seed;
    total += nested_cv(data, config).mean_accuracy;
  }
  const double null_mean = total / 5.0;
  require(null_mean >= 0.43 && null_mean <= 0.57,
          "null-data accuracy " + format_double(null_mean) + " must lie in [0.43, 0.57]");

  RandomSource rng(77);
  DatasetMatrix separable;
  separable.rows = 500;
  separable.cols = 10;
  separable.labels.resize(separable.rows);
  for (int i = 0; i < separable.rows; ++i) {
    separable.labels[i] = static_cast<int>(rng.next_below(2));
    for (int j = 0; j < separable.cols; ++j) {
      double value = rng.next_gaussian();
      if (j == 0) value += separable.labels[i] == 1 ? 3.0 : -3.0;
      separable.values.push_back(value);
    }
  }
  config.seed = 1;
  const double separable_accuracy = nested_cv(separable, config).mean_accuracy;
  require(separable_accuracy >= 0.95, "separable-data accuracy " +
                                          format_double(separable_accuracy) +
                                          " must reach 0.95");
}

// ---------------------------------------------------------------------------
// Criterion 4: McNemar against binomial-sum and chi-square CDF oracles.

double chi2_sf_oracle(double x) {
  // Simpson quadrature of the chi-square(1) density over [x, x + 60].
  auto pdf = [](double t) {
    return std::exp(-t / 2.0) / std::sqrt(2.0 * 3.14159265358979323846 * t);
  };
  const double upper = x + 60.0;
  const int steps = 400000;
  const double h = (upper - x) / steps;
  double sum = pdf(x + 1e-12) + pdf(upper);
  for (int i = 1; i < steps; ++i) sum += pdf(x + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  return sum * h / 3.0;
}

void criterion_4() {
  {
    std::vector<int> labels(30, 1);
    std::vector<int> a(30, 1);
    std::vector<int> b(30, 1);
    for (int i = 0; i < 5; ++i) b[i] = 0;
    for (int i = 5; i < 20; ++i) a[i] = 0;
    const McNemarResult r = mcnemar(a, b, labels);
    require(r.b == 5 && r.c == 15, "discordant counts must be b=5, c=15");
    require(r.method == McNemarMethod::ExactBinomial, "b+c < 25 must use the exact test");
    double tail = 0.0;
    for (int k = 0; k <= 5; ++k) {
      double binom = 1.0;
      for (int i = 0; i < k; ++i) binom = binom * (20 - i) / (i + 1);
      tail += binom;
    }
    const double oracle = std::min(1.0, 2.0 * tail / std::pow(2.0, 20));
    require_close(r.p_value, oracle, 1e-12, "exact binomial p-value vs sum oracle");
    require_close(r.p_value, 0.0414, 1e-3, "b=5,c=15 p-value");
  }
  {
    std::vector<int> labels(90, 1);
    std::vector<int> a(90, 1);
    std::vector<int> b(90, 1);
    for (int i = 0; i < 30; ++i) b[i] = 0;
    for (int i = 30; i < 90; ++i) a[i] = 0;
    const McNemarResult r = mcnemar(a, b, labels);
    require(r.method == McNemarMethod::ChiSquareCorrected, "b+c >= 25 must use chi-square");
    require_close(r.statistic, 9.344, 1e-3, "corrected statistic (|b-c|-1)^2/(b+c)");
    require_close(r.p_value, chi2_sf_oracle(r.statistic), 1e-4,
                  "chi-square p-value vs quadrature oracle");
  }
}

// ---------------------------------------------------------------------------
// Criterion 5: language-only ceiling equals exhaustive brute force.

void criterion_5() {
  RandomSource rng(5);
  for (int fixture = 0; fixture < 20; ++fixture) {
    std::vector<TaskInstance> instances;
    const int debates = 5;
    for (int d = 0; d < debates; ++d) {
      const int voters = 1 + static_cast<int>(rng.next_below(6));
      for (int v = 0; v < voters; ++v) {
        TaskInstance instance;
        instance.debate_id = "d" + std::to_string(d);
        instance.voter_id = "v" + std::to_string(v);
        instance.label = static_cast<int>(rng.next_below(2));
        instances.push_back(std::move(instance));
      }
    }
    int best = 0;
    for (int mask = 0; mask < (1 << debates); ++mask) {
      int correct = 0;
      for (const auto& instance : instances) {
        const int d = instance.debate_id.back() - '0';
        correct += ((mask >> d) & 1) == instance.label ? 1 : 0;
      }
      best = std::max(best, correct);
    }
    const double expected = static_cast<double>(best) / static_cast<double>(instances.size());
    if (language_only_ceiling(instances) != expected) {
      throw Failure("fixture " + std::to_string(fixture) +
                    ": ceiling formula must exactly equal brute force");
    }
  }
}

// ---------------------------------------------------------------------------
// Criteria 6 and 10: planted-effect end-to-end run, repeated for determinism.

struct PlantedRun {
  AblationReport report;
  std::string json_no_meta;
  std::string markdown;
};

PlantedRun planted_run(const std::filesystem::path& dir) {
  SyntheticParams params;
  params.n_debates = 400;
  params.voters_per_debate = 5;
  params.p_match = 0.8;
  params.seed = 20180415;
  const Corpus corpus = generate_synthetic_corpus(params);

  TaskSpec spec = TaskSpec::task2_defaults();
  spec.category_filter.clear();
  spec.feature_groups = all_feature_groups();

  AblationConfig config;
  config.cv.seed = 6;
  config.cv.grid.c_grid = {0.01, 1.0, 100.0};
  config.tfidf.max_features = 300;
  config.include_singletons = false;
  config.combos = {{"matching-ideology-only", {kGroupMatchingPolitical}}};

  PlantedRun run;
  run.report = run_ablation(corpus, spec, LexiconSet::builtin(), config);
  std::filesystem::create_directories(dir);
  write_report_json((dir / "task_report.json").string(), to_json(run.report));
  run.markdown = ablation_markdown(run.report);
  atomic_write_file((dir / "task_report.md").string(), run.markdown);

  std::ifstream in(dir / "task_report.json");
  auto parsed = nlohmann::json::parse(in);
  parsed.erase("meta");
  run.json_no_meta = parsed.dump();
  return run;
}

double row_accuracy(const AblationReport& report, const std::string& name) {
  for (const auto& row : report.rows) {
    if (row.name == name) return row.cv.mean_accuracy;
  }
  throw Failure("missing ablation row '" + name + "'");
}

void criterion_6(const PlantedRun& run) {
  const double matching = row_accuracy(run.report, "matching-ideology-only");
  require(matching >= 0.77 && matching <= 0.83,
          "matching-ideology-only accuracy " + format_double(matching) +
              " must lie in [0.77, 0.83]");
  // run_ablation hard-asserts linguistic-only <= ceiling internally; verify
  // here as well against the report.
  long long hits = 0;
  std::size_t count = 0;
  for (const auto& row : run.report.rows) {
    if (row.name != "linguistic-only") continue;
    for (const auto& p : row.cv.predictions) hits += p.predicted == p.label ? 1 : 0;
    count = row.cv.predictions.size();
  }
  require(count > 0, "linguistic-only row must exist");
  const double linguistic = static_cast<double>(hits) / static_cast<double>(count);
  require(linguistic <= run.report.language_ceiling + 1e-12,
          "linguistic-only accuracy " + format_double(linguistic) +
              " must not exceed the language ceiling " +
              format_double(run.report.language_ceiling));
  const double combined = row_accuracy(run.report, "combined");
  require(combined >= matching - 0.02, "combined accuracy " + format_double(combined) +
                                           " must reach matching-only - 0.02 = " +
                                           format_double(matching - 0.02));
}

// ---------------------------------------------------------------------------
// Criterion 7: PCA vs Eigen oracle, planted-cluster separation.

void criterion_7() {
  SyntheticParams params;
  params.n_debates = 60;
  params.voters_per_debate = 3;
  params.p_issue_align = 0.9;
  params.issue_count = 10;
  params.seed = 7;
  const Corpus corpus = generate_synthetic_corpus(params);

  std::vector<BigIssuesVector> vectors;
  std::vector<int> cluster;  // 0/1 political label
  for (const auto& [id, user] : corpus.users) {
    vectors.push_back(encode_big_issues(user, corpus.issue_catalog));
    cluster.push_back(fold_label(*user.political_ideology) == "conservative" ? 0 : 1);
  }
  const PcaProjection projection = pca_project(vectors);

  // Independent oracle: Eigen's dense symmetric eigensolver over a covariance
  // recomputed here from scratch.
  const int d = static_cast<int>(vectors.front().size());
  const int n = static_cast<int>(vectors.size());
  Eigen::MatrixXd x(n, d);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < d; ++j) x(i, j) = vectors[i][j];
  }
  const Eigen::RowVectorXd mean = x.colwise().mean();
  const Eigen::MatrixXd centered = x.rowwise() - mean;
  const Eigen::MatrixXd covariance = centered.transpose() * centered / double(n - 1);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(covariance);
  require(solver.info() == Eigen::Success, "Eigen solver must converge");
  const Eigen::VectorXd eigenvalues = solver.eigenvalues();  // ascending
  require_close(projection.explained_variance[0], eigenvalues(d - 1), 1e-8,
                "top eigenvalue vs Eigen oracle");
  require_close(projection.explained_variance[1], eigenvalues(d - 2), 1e-8,
                "second eigenvalue vs Eigen oracle");

  // Cluster separation in the projected plane.
  double centroid[2][2] = {{0, 0}, {0, 0}};
  int counts[2] = {0, 0};
  for (int i = 0; i < n; ++i) {
    centroid[cluster[i]][0] += projection.projected[i][0];
    centroid[cluster[i]][1] += projection.projected[i][1];
    ++counts[cluster[i]];
  }
  for (int c = 0; c < 2; ++c) {
    require(counts[c] > 0, "both clusters must be populated");
    centroid[c][0] /= counts[c];
    centroid[c][1] /= counts[c];
  }
  double within = 0.0;
  for (int i = 0; i < n; ++i) {
    const double dx = projection.projected[i][0] - centroid[cluster[i]][0];
    const double dy = projection.projected[i][1] - centroid[cluster[i]][1];
    within += std::sqrt(dx * dx + dy * dy);
  }
  within /= n;
  const double bx = centroid[0][0] - centroid[1][0];
  const double by = centroid[0][1] - centroid[1][1];
  const double between = std::sqrt(bx * bx + by * by);
  require(between > 3.0 * within,
          "between-cluster distance " + format_double(between) +
              " must exceed 3x mean within-cluster distance " + format_double(within));
}

// ---------------------------------------------------------------------------
// Criterion 8: planted vote correlations.

void criterion_8() {
  SyntheticParams params;
  params.n_debates = 200;
  params.voters_per_debate = 4;
  params.p_follow_arguments = 1.0;
  params.p_follow_sources = 1.0;  // arguments deterministically set the points winner
  params.seed = 8;
  const Corpus corpus = generate_synthetic_corpus(params);
  const CorrelationMatrix matrix =
      vote_dimension_correlations(corpus.votes, PointWeights{});
  require_close(matrix.at("CCA", "MTP"), 1.0, 1e-9, "CCA-CMTP correlation");
  require_close(matrix.at("CCA", "CMV"), 1.0, 1e-9, "CCA-CCMV correlation");
}

// ---------------------------------------------------------------------------
// Criterion 9 (gated): reproduce the published accuracies from real data.

struct GatedSkipped : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void criterion_9() {
  const char* dir = std::getenv("PERSUADE_REAL_DATA_DIR");
  if (dir == nullptr || std::string(dir).empty()) {
    throw GatedSkipped(
        "gated: set PERSUADE_REAL_DATA_DIR to a directory with debates.jsonl, users.jsonl, "
        "votes.jsonl, issues.txt converted from the original corpus");
  }
  const std::filesystem::path base(dir);
  const LoadResult loaded =
      load_corpus((base / "debates.jsonl").string(), (base / "users.jsonl").string(),
                  (base / "votes.jsonl").string(), IngestMode::Lenient,
                  std::filesystem::exists(base / "issues.txt") ? (base / "issues.txt").string()
                                                               : std::string());
  const Corpus& corpus = loaded.corpus;
  CvConfig cv;
  cv.seed = 1;

  // Table 1.
  const auto political = ideology_classification_experiment(
      corpus, IdeologyKind::Political, {"Conservative", "Liberal"}, cv);
  require_close(political.majority_accuracy, 0.5770, 0.02, "Table 1 political majority");
  require_close(political.cv.mean_accuracy, 0.9243, 0.02, "Table 1 political BigIssues");
  const auto religious = ideology_classification_experiment(
      corpus, IdeologyKind::Religious, {"Atheist", "Christian"}, cv);
  require_close(religious.majority_accuracy, 0.5270, 0.02, "Table 1 religious majority");
  require_close(religious.cv.mean_accuracy, 0.8281, 0.02, "Table 1 religious BigIssues");

  // Tables 3-6 headline rows: majority, the best user feature, the reported
  // best combination.
  struct TableSpec {
    const char* name;
    TaskSpec task;
    std::vector<std::pair<std::string, std::vector<std::string>>> combos;
    double majority;
    std::vector<std::pair<std::string, double>> expected_rows;
  };
  const std::vector<std::string> table5_linguistic = {
      "arglex:rhetorical_questions", "arglex:emphasizing", "arglex:approval",
      kGroupExclamation, kGroupQuestions, kGroupPoliteness, kGroupOpponent,
      kGroupEvidence, kGroupModals, kGroupLinks, kGroupNumbers};
  std::vector<std::string> table5_combined = table5_linguistic;
  table5_combined.push_back(kGroupMatchingPolitical);

  std::vector<TableSpec> tables;
  {
    TableSpec t3{"Table 3 (Task 1, Religion)", TaskSpec::task1_defaults(), {}, 0.5610, {}};
    t3.combos = {{"user+connotation", {kGroupMatchingReligious, kGroupConnotation}}};
    t3.expected_rows = {{"matching_religious", 0.6537}, {"user+connotation", 0.6642}};
    tables.push_back(std::move(t3));

    TableSpec t4{"Table 4 (Task 1, all categories)", TaskSpec::task1_defaults(), {}, 0.5731, {}};
    t4.task.category_filter.clear();
    t4.combos = {{"user+length+exclamation",
                  {kGroupMatchingReligious, kGroupOpinionSimilarity, kGroupLength,
                   kGroupExclamation}}};
    t4.expected_rows = {{"matching_religious", 0.6279}, {"user+length+exclamation", 0.6574}};
    tables.push_back(std::move(t4));

    TableSpec t5{"Table 5 (Task 2, Politics)", TaskSpec::task2_defaults(), {}, 0.5091, {}};
    t5.combos = {{"linguistic-set", table5_linguistic}, {"user+linguistic-set", table5_combined}};
    t5.expected_rows = {{"matching_political", 0.8040},
                        {"linguistic-set", 0.5960},
                        {"user+linguistic-set", 0.8181}};
    tables.push_back(std::move(t5));

    TableSpec t6{"Table 6 (Task 2, all categories)", TaskSpec::task2_defaults(), {}, 0.5175, {}};
    t6.task.category_filter.clear();
    t6.combos = {{"user+length+tfidf",
                  {kGroupOpinionSimilarity, kGroupLength, kGroupTfidf}}};
    t6.expected_rows = {{"opinion_similarity", 0.7396}, {"user+length+tfidf", 0.7520}};
    tables.push_back(std::move(t6));
  }

  for (TableSpec& table : tables) {
    AblationConfig config;
    config.cv = cv;
    config.combos = table.combos;
    const AblationReport report =
        run_ablation(corpus, table.task, LexiconSet::builtin(), config);
    require_close(report.majority_accuracy, table.majority, 0.02,
                  std::string(table.name) + " majority");
    for (const auto& [row, expected] : table.expected_rows) {
      require_close(row_accuracy(report, row), expected, 0.02,
                    std::string(table.name) + " " + row);
    }
  }
}

void criterion_10(const PlantedRun& first, const std::filesystem::path& scratch) {
  const PlantedRun second = planted_run(scratch / "run_b");
  require(first.json_no_meta == second.json_no_meta,
          "two identically-seeded runs must produce byte-identical JSON (meta excluded)");
  require(first.markdown == second.markdown,
          "two identically-seeded runs must produce byte-identical markdown");
}

}  // namespace

int main() {
  const std::filesystem::path scratch =
      std::filesystem::temp_directory_path() / "persuade_acceptance";
  std::filesystem::remove_all(scratch);

  int failures = 0;
  PlantedRun planted;
  bool planted_ok = false;

  struct Entry {
    int number;
    const char* description;
    std::function<void()> run;
    double budget_seconds;  // 0 = unbudgeted
  };
  const std::vector<Entry> entries = {
      {1, "BigIssues encoding matches the worked example; blocks stay one-hot", criterion_1, 1.0},
      {2, "logistic gradient matches finite differences; L1 at C=1e-6 collapses to the prior",
       criterion_2, 10.0},
      {3, "nested CV near chance on random labels, >= 0.95 on separable data", criterion_3, 60.0},
      {4, "McNemar matches binomial-sum and chi-square oracles", criterion_4, 0.0},
      {5, "language-only ceiling equals brute force on 20 random fixtures", criterion_5, 0.0},
      {6, "planted effect: matching-only in [0.77, 0.83]; linguistic <= ceiling; combined holds",
       [&] {
         planted = planted_run(scratch / "run_a");
         planted_ok = true;
         criterion_6(planted);
       },
       120.0},
      {7, "PCA eigenvalues match Eigen within 1e-8; planted clusters separate 3x", criterion_7,
       0.0},
      {8, "arguments dimension drives total points: CCA-CMTP correlation is 1", criterion_8,
       0.0},
      {9, "gated reproduction of Tables 1 and 3-6 from user-supplied data", criterion_9, 0.0},
      {10, "criterion-6 reruns are byte-identical",
       [&] {
         if (!planted_ok) throw Failure("criterion 6 did not produce a run to compare");
         criterion_10(planted, scratch);
       },
       0.0},
  };

  for (const auto& entry : entries) {
    const auto start = std::chrono::steady_clock::now();
    std::string status = "PASS";
    std::string detail;
    try {
      entry.run();
    } catch (const GatedSkipped& e) {
      status = "SKIP";
      detail = e.what();
    } catch (const std::exception& e) {
      status = "FAIL";
      detail = e.what();
      ++failures;
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (status == "PASS" && entry.budget_seconds > 0.0 && elapsed > entry.budget_seconds) {
      status = "FAIL";
      detail = "runtime " + format_double(elapsed) + "s exceeded budget " +
               format_double(entry.budget_seconds) + "s";
      ++failures;
    }
    std::ostringstream line;
    line << status << " CRITERION " << entry.number << ": " << entry.description << " ["
         << format_double(elapsed) << "s]";
    if (!detail.empty()) line << " -- " << detail;
    std::cout << line.str() << std::endl;
  }

  std::cout << (failures == 0 ? "ACCEPTANCE SUITE PASSED" : "ACCEPTANCE SUITE FAILED")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
