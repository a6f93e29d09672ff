#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "persuade/random.hpp"

namespace persuade {

enum class Penalty { L1, L2 };
const char* to_string(Penalty p);
Penalty parse_penalty(std::string_view text);

/// Dense row-major design matrix with binary labels. `group_ids` (optional,
/// same length as rows when present) carry debate ids for grouped folding.
struct DatasetMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> values;  // rows * cols, row-major
  std::vector<int> labels;     // 0 or 1
  std::vector<std::string> group_ids;
  std::vector<std::string> feature_names;

  double at(int r, int c) const { return values[static_cast<std::size_t>(r) * cols + c]; }
  std::span<const double> row(int r) const {
    return {values.data() + static_cast<std::size_t>(r) * cols, static_cast<std::size_t>(cols)};
  }
  /// Throws std::invalid_argument on NaN/infinite entries, N < 2, labels
  /// outside {0,1} or shape mismatches.
  void validate() const;
};

struct OptimOptions {
  double tolerance = 1e-6;
  int max_iterations = 10000;
  bool record_history = false;  // keep per-iteration objective values
};

/// Hyperparameter grid searched by nested_cv: every penalty crossed with
/// every C. Larger C means weaker regularization (objective R(w) + C*loss).
struct RegConfig {
  std::vector<Penalty> penalties{Penalty::L1, Penalty::L2};
  std::vector<double> c_grid;  // defaults to 1e-5 .. 1e5 in decade steps
  double tolerance = 1e-6;
  int max_iterations = 10000;

  static RegConfig defaults();
  OptimOptions optim_options() const { return {tolerance, max_iterations, false}; }
};

enum class OptimStatus { Converged, MaxIterations };

/// Logistic regression model in standardized feature space. Standardization
/// parameters come from the training data; constant features are flagged and
/// their weights forced to exactly 0.
struct TrainedModel {
  std::vector<double> weights;
  double intercept = 0.0;
  Penalty penalty = Penalty::L2;
  double c = 1.0;
  std::vector<double> feature_mean;
  std::vector<double> feature_std;      // 1.0 placeholder for constant features
  std::vector<bool> constant_feature;
  OptimStatus status = OptimStatus::Converged;
  int iterations = 0;
  double objective = 0.0;
  std::vector<double> objective_history;  // filled when record_history set
};

/// Minimizes R(w) + C * sum_i log(1 + exp(-y_i (w.x_i + b))), y in {-1,+1},
/// R = 0.5*||w||^2 (L2) or ||w||_1 (L1), intercept unpenalized. Monotone
/// proximal-gradient method with backtracking; the contract is the optimum,
/// not the algorithm. Throws std::invalid_argument on single-class data.
TrainedModel train_logreg(const DatasetMatrix& data, Penalty penalty, double c,
                          const OptimOptions& options = {});

struct Prediction {
  std::vector<int> labels;
  std::vector<double> probabilities;
};

/// probability = logistic(w.x_std + b); label = probability >= 0.5.
Prediction predict(const TrainedModel& model, const DatasetMatrix& rows);

double accuracy(const std::vector<int>& predicted, const std::vector<int>& truth);

/// Most frequent training label, ties broken toward label 1.
int majority_label(const std::vector<int>& labels);
double majority_baseline(const std::vector<int>& train_labels,
                         const std::vector<int>& test_labels);

/// Exposes the training objective for oracle tests (finite-difference
/// gradient checks). `smooth_*` cover everything except the L1 term.
class LogisticObjective {
 public:
  LogisticObjective(std::vector<double> x_row_major, int rows, int cols, std::vector<int> labels,
                    Penalty penalty, double c);

  double value(std::span<const double> w, double b) const;         // full objective
  double smooth_value(std::span<const double> w, double b) const;  // C*loss (+ L2 term)
  void smooth_gradient(std::span<const double> w, double b, std::span<double> grad_w,
                       double& grad_b) const;
  /// Norm of the minimal subgradient of the full objective at (w, b).
  double optimality_residual(std::span<const double> w, double b) const;

  int rows() const { return rows_; }
  int cols() const { return cols_; }

 private:
  std::vector<double> x_;
  int rows_;
  int cols_;
  std::vector<int> labels_;
  Penalty penalty_;
  double c_;
};

// --- Cross-validation -------------------------------------------------------

enum class Folding { Stratified, GroupedByDebate };
const char* to_string(Folding f);
Folding parse_folding(std::string_view text);

struct CvConfig {
  int outer_folds = 5;
  int inner_folds = 3;
  Folding folding = Folding::Stratified;
  std::uint64_t seed = 0;
  RegConfig grid = RegConfig::defaults();
};

struct InstancePrediction {
  int index = 0;
  int fold = 0;
  int label = 0;
  int predicted = 0;
  double probability = 0.0;
  int baseline_predicted = 0;
};

struct FoldOutcome {
  double accuracy = 0.0;
  Penalty penalty = Penalty::L2;
  double c = 1.0;
  double inner_mean_accuracy = 0.0;
  int test_size = 0;
};

struct CVReport {
  std::vector<FoldOutcome> folds;
  double mean_accuracy = 0.0;
  double baseline_accuracy = 0.0;
  std::vector<InstancePrediction> predictions;  // one per instance, by index
  Folding folding = Folding::Stratified;
  std::uint64_t seed = 0;

  std::vector<int> predicted_labels() const;
  std::vector<int> baseline_labels() const;
  std::vector<int> true_labels() const;
};

/// Feature source for nested CV. build() must fit any data-dependent
/// featurization (tf-idf vocabulary, ...) on `fit_rows` only, then emit the
/// feature matrix for `emit_rows`; nested_cv never passes evaluation rows in
/// `fit_rows`. Labels/groups are instance-intrinsic and fixed.
class FeatureProvider {
 public:
  virtual ~FeatureProvider() = default;
  virtual int instance_count() const = 0;
  virtual const std::vector<int>& labels() const = 0;
  virtual const std::vector<std::string>& groups() const = 0;  // may be empty
  virtual DatasetMatrix build(const std::vector<int>& fit_rows,
                              const std::vector<int>& emit_rows) = 0;
};

/// Fold-independent features (no fitting): build() ignores fit_rows.
class MatrixFeatureProvider : public FeatureProvider {
 public:
  explicit MatrixFeatureProvider(DatasetMatrix data);
  int instance_count() const override { return data_.rows; }
  const std::vector<int>& labels() const override { return data_.labels; }
  const std::vector<std::string>& groups() const override { return data_.group_ids; }
  DatasetMatrix build(const std::vector<int>& fit_rows,
                      const std::vector<int>& emit_rows) override;

 private:
  DatasetMatrix data_;
};

/// Deterministic fold assignment. Stratified: per-class shuffle + round
/// robin. Grouped: groups shuffled, each assigned to the currently smallest
/// fold. Throws std::invalid_argument when folds are infeasible (empty fold
/// or single-class training side).
std::vector<std::vector<int>> make_folds(const std::vector<int>& labels,
                                         const std::vector<std::string>& groups, int fold_count,
                                         Folding folding, RandomSource rng);

/// 5x3 nested cross-validation with (penalty x C) grid search by inner mean
/// accuracy; ties resolved toward larger C, then L2. Deterministic given the
/// seed. `fixed_outer_folds`, when given, replaces the internal outer split
/// (used by ablation so every feature subset sees identical folds).
CVReport nested_cv(FeatureProvider& provider, const CvConfig& config,
                   const std::vector<std::vector<int>>* fixed_outer_folds = nullptr);
CVReport nested_cv(const DatasetMatrix& data, const CvConfig& config);

// --- McNemar ----------------------------------------------------------------

enum class McNemarMethod { ExactBinomial, ChiSquareCorrected };

struct McNemarResult {
  long long b = 0;  // A right, B wrong
  long long c = 0;  // A wrong, B right
  double statistic = 0.0;
  double p_value = 1.0;
  McNemarMethod method = McNemarMethod::ExactBinomial;
};

/// Exact two-sided binomial test when b + c < 25, else chi-square with
/// continuity correction: (|b-c|-1)^2 / (b+c). Throws on length mismatch.
McNemarResult mcnemar(const std::vector<int>& preds_a, const std::vector<int>& preds_b,
                      const std::vector<int>& labels);

/// Survival function of the chi-square distribution with one degree of
/// freedom (used for the corrected test).
double chi_square1_sf(double x);

/// feature_name <TAB> weight, one line per feature plus the intercept.
/// Weights are reported in standardized feature space (comparable across
/// features).
void export_weights_tsv(const TrainedModel& model, const std::vector<std::string>& feature_names,
                        const std::string& path);

}  // namespace persuade
