#include "persuade/learn.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "persuade/jsonl.hpp"

namespace persuade {

const char* to_string(Penalty p) { return p == Penalty::L1 ? "l1" : "l2"; }

Penalty parse_penalty(std::string_view text) {
  if (text == "l1" || text == "L1") return Penalty::L1;
  if (text == "l2" || text == "L2") return Penalty::L2;
  throw std::invalid_argument("unknown penalty: '" + std::string(text) + "'");
}

const char* to_string(Folding f) {
  return f == Folding::Stratified ? "stratified" : "grouped";
}

Folding parse_folding(std::string_view text) {
  if (text == "stratified") return Folding::Stratified;
  if (text == "grouped") return Folding::GroupedByDebate;
  throw std::invalid_argument("unknown folding mode: '" + std::string(text) + "'");
}

void DatasetMatrix::validate() const {
  if (rows < 2) throw std::invalid_argument("dataset needs at least 2 rows");
  if (cols < 1) throw std::invalid_argument("dataset needs at least 1 column");
  if (values.size() != static_cast<std::size_t>(rows) * cols) {
    throw std::invalid_argument("dataset value buffer does not match rows*cols");
  }
  if (labels.size() != static_cast<std::size_t>(rows)) {
    throw std::invalid_argument("labels length must equal row count");
  }
  if (!group_ids.empty() && group_ids.size() != static_cast<std::size_t>(rows)) {
    throw std::invalid_argument("group_ids length must equal row count");
  }
  for (const double v : values) {
    if (!std::isfinite(v)) throw std::invalid_argument("dataset contains NaN/inf");
  }
  for (const int label : labels) {
    if (label != 0 && label != 1) throw std::invalid_argument("labels must be 0 or 1");
  }
}

RegConfig RegConfig::defaults() {
  RegConfig config;
  for (int k = -5; k <= 5; ++k) config.c_grid.push_back(std::pow(10.0, k));
  return config;
}

namespace {

double sigmoid(double t) {
  if (t >= 0.0) return 1.0 / (1.0 + std::exp(-t));
  const double e = std::exp(t);
  return e / (1.0 + e);
}

// log(1 + exp(-t)), stable for large |t|.
double log1p_exp_neg(double t) {
  if (t >= 0.0) return std::log1p(std::exp(-t));
  return -t + std::log1p(std::exp(t));
}

}  // namespace

LogisticObjective::LogisticObjective(std::vector<double> x_row_major, int rows, int cols,
                                     std::vector<int> labels, Penalty penalty, double c)
    : x_(std::move(x_row_major)), rows_(rows), cols_(cols), labels_(std::move(labels)),
      penalty_(penalty), c_(c) {
  if (x_.size() != static_cast<std::size_t>(rows_) * cols_ ||
      labels_.size() != static_cast<std::size_t>(rows_)) {
    throw std::invalid_argument("objective shape mismatch");
  }
}

double LogisticObjective::smooth_value(std::span<const double> w, double b) const {
  double loss = 0.0;
  for (int i = 0; i < rows_; ++i) {
    const double* row = x_.data() + static_cast<std::size_t>(i) * cols_;
    double t = b;
    for (int j = 0; j < cols_; ++j) t += w[j] * row[j];
    const double y = labels_[i] == 1 ? 1.0 : -1.0;
    loss += log1p_exp_neg(y * t);
  }
  double value = c_ * loss;
  if (penalty_ == Penalty::L2) {
    double sq = 0.0;
    for (int j = 0; j < cols_; ++j) sq += w[j] * w[j];
    value += 0.5 * sq;
  }
  return value;
}

double LogisticObjective::value(std::span<const double> w, double b) const {
  double value = smooth_value(w, b);
  if (penalty_ == Penalty::L1) {
    double l1 = 0.0;
    for (int j = 0; j < cols_; ++j) l1 += std::abs(w[j]);
    value += l1;
  }
  return value;
}

void LogisticObjective::smooth_gradient(std::span<const double> w, double b,
                                        std::span<double> grad_w, double& grad_b) const {
  std::fill(grad_w.begin(), grad_w.end(), 0.0);
  grad_b = 0.0;
  for (int i = 0; i < rows_; ++i) {
    const double* row = x_.data() + static_cast<std::size_t>(i) * cols_;
    double t = b;
    for (int j = 0; j < cols_; ++j) t += w[j] * row[j];
    const double y = labels_[i] == 1 ? 1.0 : -1.0;
    // d/dt log(1+exp(-y t)) = -y * sigmoid(-y t)
    const double r = c_ * (-y) * sigmoid(-y * t);
    for (int j = 0; j < cols_; ++j) grad_w[j] += r * row[j];
    grad_b += r;
  }
  if (penalty_ == Penalty::L2) {
    for (int j = 0; j < cols_; ++j) grad_w[j] += w[j];
  }
}

double LogisticObjective::optimality_residual(std::span<const double> w, double b) const {
  std::vector<double> grad(cols_, 0.0);
  double grad_b = 0.0;
  smooth_gradient(w, b, grad, grad_b);
  double sq = grad_b * grad_b;
  for (int j = 0; j < cols_; ++j) {
    double r = grad[j];
    if (penalty_ == Penalty::L1) {
      r = w[j] != 0.0 ? grad[j] + (w[j] > 0.0 ? 1.0 : -1.0)
                      : std::max(0.0, std::abs(grad[j]) - 1.0);
    }
    sq += r * r;
  }
  return std::sqrt(sq);
}

namespace {

struct Standardization {
  std::vector<double> mean;
  std::vector<double> std;  // 1.0 for constant features
  std::vector<bool> constant;
};

Standardization standardize(const DatasetMatrix& data, std::vector<double>& out) {
  const int n = data.rows;
  const int d = data.cols;
  Standardization s;
  s.mean.assign(d, 0.0);
  s.std.assign(d, 1.0);
  s.constant.assign(d, false);
  for (int i = 0; i < n; ++i) {
    const auto row = data.row(i);
    for (int j = 0; j < d; ++j) s.mean[j] += row[j];
  }
  for (int j = 0; j < d; ++j) s.mean[j] /= n;
  std::vector<double> var(d, 0.0);
  for (int i = 0; i < n; ++i) {
    const auto row = data.row(i);
    for (int j = 0; j < d; ++j) {
      const double diff = row[j] - s.mean[j];
      var[j] += diff * diff;
    }
  }
  for (int j = 0; j < d; ++j) {
    var[j] /= n;
    if (var[j] < 1e-24) {
      s.constant[j] = true;
      s.std[j] = 1.0;
    } else {
      s.std[j] = std::sqrt(var[j]);
    }
  }
  out.resize(static_cast<std::size_t>(n) * d);
  for (int i = 0; i < n; ++i) {
    const auto row = data.row(i);
    for (int j = 0; j < d; ++j) {
      // Constant columns standardize to exactly 0 (x == mean).
      out[static_cast<std::size_t>(i) * d + j] = (row[j] - s.mean[j]) / s.std[j];
    }
  }
  return s;
}

void soft_threshold(std::span<const double> u, double amount, std::span<double> out) {
  for (std::size_t j = 0; j < u.size(); ++j) {
    if (u[j] > amount) {
      out[j] = u[j] - amount;
    } else if (u[j] < -amount) {
      out[j] = u[j] + amount;
    } else {
      out[j] = 0.0;
    }
  }
}

}  // namespace

TrainedModel train_logreg(const DatasetMatrix& data, Penalty penalty, double c,
                          const OptimOptions& options) {
  data.validate();
  if (c <= 0.0) throw std::invalid_argument("C must be positive");
  const bool has_pos = std::find(data.labels.begin(), data.labels.end(), 1) != data.labels.end();
  const bool has_neg = std::find(data.labels.begin(), data.labels.end(), 0) != data.labels.end();
  if (!has_pos || !has_neg) {
    throw std::invalid_argument("training data must contain both classes");
  }

  const int d = data.cols;
  std::vector<double> standardized;
  Standardization stats = standardize(data, standardized);
  LogisticObjective objective(std::move(standardized), data.rows, d, data.labels, penalty, c);

  // Monotone accelerated proximal gradient with backtracking line search.
  std::vector<double> x(d + 1, 0.0);  // x[0..d-1] = w, x[d] = b
  std::vector<double> y = x;
  std::vector<double> grad(d + 1, 0.0);
  std::vector<double> candidate(d + 1, 0.0);
  std::vector<double> history;

  auto full_value = [&](const std::vector<double>& p) {
    return objective.value({p.data(), static_cast<std::size_t>(d)}, p[d]);
  };
  auto smooth = [&](const std::vector<double>& p) {
    return objective.smooth_value({p.data(), static_cast<std::size_t>(d)}, p[d]);
  };
  auto gradient_at = [&](const std::vector<double>& p) {
    double gb = 0.0;
    objective.smooth_gradient({p.data(), static_cast<std::size_t>(d)}, p[d],
                              {grad.data(), static_cast<std::size_t>(d)}, gb);
    grad[d] = gb;
  };
  // Proximal step from `from` with step `eta` into `candidate`; returns the
  // smooth value at the candidate once the backtracking condition holds.
  auto prox_step = [&](const std::vector<double>& from, double smooth_from, double& eta) {
    for (;;) {
      for (int j = 0; j <= d; ++j) candidate[j] = from[j] - eta * grad[j];
      if (penalty == Penalty::L1) {
        soft_threshold({candidate.data(), static_cast<std::size_t>(d)}, eta,
                       {candidate.data(), static_cast<std::size_t>(d)});
      }
      double dot = 0.0;
      double sq = 0.0;
      for (int j = 0; j <= d; ++j) {
        const double diff = candidate[j] - from[j];
        dot += grad[j] * diff;
        sq += diff * diff;
      }
      const double smooth_candidate = smooth(candidate);
      if (smooth_candidate <= smooth_from + dot + sq / (2.0 * eta) + 1e-12 * std::abs(smooth_from)) {
        return smooth_candidate;
      }
      if (eta < 1e-18) return smooth_candidate;  // step floor; accept
      eta *= 0.5;
    }
  };

  auto l1_of = [&](const std::vector<double>& p) {
    if (penalty != Penalty::L1) return 0.0;
    double s = 0.0;
    for (int j = 0; j < d; ++j) s += std::abs(p[j]);
    return s;
  };

  double fx = full_value(x);
  double eta = 1.0;
  double momentum = 1.0;
  OptimStatus status = OptimStatus::MaxIterations;
  int iterations = options.max_iterations;
  if (options.record_history) history.push_back(fx);

  for (int iter = 1; iter <= options.max_iterations; ++iter) {
    gradient_at(y);
    const double smooth_y = smooth(y);
    double f_candidate = prox_step(y, smooth_y, eta) + l1_of(candidate);

    if (f_candidate > fx) {
      // Monotone fallback: plain proximal step from x (guaranteed descent).
      gradient_at(x);
      const double smooth_x = smooth(x);
      f_candidate = prox_step(x, smooth_x, eta) + l1_of(candidate);
      momentum = 1.0;  // restart acceleration
    }

    const double previous = fx;
    const double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * momentum * momentum));
    for (int j = 0; j <= d; ++j) {
      const double x_new = candidate[j];
      y[j] = x_new + ((momentum - 1.0) / t_next) * (x_new - x[j]);
      x[j] = x_new;
    }
    momentum = t_next;
    fx = std::min(f_candidate, previous);
    if (options.record_history) history.push_back(fx);
    eta = std::min(eta * 1.3, 1e12);

    if (std::abs(previous - f_candidate) <
        options.tolerance * std::max(1.0, std::abs(f_candidate))) {
      status = OptimStatus::Converged;
      iterations = iter;
      break;
    }
  }

  TrainedModel model;
  model.weights.assign(x.begin(), x.begin() + d);
  model.intercept = x[d];
  model.penalty = penalty;
  model.c = c;
  model.feature_mean = std::move(stats.mean);
  model.feature_std = std::move(stats.std);
  model.constant_feature = std::move(stats.constant);
  model.status = status;
  model.iterations = iterations;
  model.objective = fx;
  model.objective_history = std::move(history);
  // Constant columns never receive gradient signal; force exact zeros.
  for (int j = 0; j < d; ++j) {
    if (model.constant_feature[j]) model.weights[j] = 0.0;
  }
  return model;
}

Prediction predict(const TrainedModel& model, const DatasetMatrix& rows) {
  if (rows.cols != static_cast<int>(model.weights.size())) {
    throw std::invalid_argument("feature dimension mismatch: model has " +
                                std::to_string(model.weights.size()) + ", rows have " +
                                std::to_string(rows.cols));
  }
  Prediction out;
  out.labels.reserve(rows.rows);
  out.probabilities.reserve(rows.rows);
  for (int i = 0; i < rows.rows; ++i) {
    const auto row = rows.row(i);
    double t = model.intercept;
    for (int j = 0; j < rows.cols; ++j) {
      if (model.constant_feature[j]) continue;
      t += model.weights[j] * ((row[j] - model.feature_mean[j]) / model.feature_std[j]);
    }
    const double p = sigmoid(t);
    out.probabilities.push_back(p);
    out.labels.push_back(p >= 0.5 ? 1 : 0);
  }
  return out;
}

double accuracy(const std::vector<int>& predicted, const std::vector<int>& truth) {
  if (predicted.size() != truth.size() || truth.empty()) {
    throw std::invalid_argument("accuracy needs equal-length non-empty vectors");
  }
  int correct = 0;
  for (std::size_t i = 0; i < truth.size(); ++i) correct += predicted[i] == truth[i] ? 1 : 0;
  return static_cast<double>(correct) / static_cast<double>(truth.size());
}

int majority_label(const std::vector<int>& labels) {
  if (labels.empty()) throw std::invalid_argument("majority of empty label set");
  const long long ones = std::count(labels.begin(), labels.end(), 1);
  const long long zeros = static_cast<long long>(labels.size()) - ones;
  return ones >= zeros ? 1 : 0;  // ties toward label 1
}

double majority_baseline(const std::vector<int>& train_labels,
                         const std::vector<int>& test_labels) {
  const int label = majority_label(train_labels);
  if (test_labels.empty()) throw std::invalid_argument("empty test labels");
  const long long hits = std::count(test_labels.begin(), test_labels.end(), label);
  return static_cast<double>(hits) / static_cast<double>(test_labels.size());
}

// --- Folds -------------------------------------------------------------------

std::vector<std::vector<int>> make_folds(const std::vector<int>& labels,
                                         const std::vector<std::string>& groups, int fold_count,
                                         Folding folding, RandomSource rng) {
  const int n = static_cast<int>(labels.size());
  if (fold_count < 2) throw std::invalid_argument("need at least 2 folds");
  if (n < fold_count) throw std::invalid_argument("fewer instances than folds");

  std::vector<std::vector<int>> folds(fold_count);
  if (folding == Folding::Stratified) {
    int cursor = 0;
    for (const int cls : {1, 0}) {
      std::vector<int> members;
      for (int i = 0; i < n; ++i) {
        if (labels[i] == cls) members.push_back(i);
      }
      rng.shuffle(members);
      for (const int idx : members) {
        folds[cursor].push_back(idx);
        cursor = (cursor + 1) % fold_count;
      }
    }
  } else {
    if (groups.size() != labels.size()) {
      throw std::invalid_argument("grouped folding requires group ids for every instance");
    }
    std::map<std::string, std::vector<int>> by_group;
    for (int i = 0; i < n; ++i) by_group[groups[i]].push_back(i);
    std::vector<std::string> group_names;
    group_names.reserve(by_group.size());
    for (const auto& [name, members] : by_group) group_names.push_back(name);
    rng.shuffle(group_names);
    for (const std::string& name : group_names) {
      int smallest = 0;
      for (int f = 1; f < fold_count; ++f) {
        if (folds[f].size() < folds[smallest].size()) smallest = f;
      }
      const auto& members = by_group[name];
      folds[smallest].insert(folds[smallest].end(), members.begin(), members.end());
    }
  }

  for (auto& fold : folds) {
    std::sort(fold.begin(), fold.end());
    if (fold.empty()) throw std::invalid_argument("infeasible fold sizes: empty fold");
  }
  for (int f = 0; f < fold_count; ++f) {
    bool has_pos = false;
    bool has_neg = false;
    for (int g = 0; g < fold_count; ++g) {
      if (g == f) continue;
      for (const int idx : folds[g]) {
        has_pos |= labels[idx] == 1;
        has_neg |= labels[idx] == 0;
      }
    }
    if (!has_pos || !has_neg) {
      throw std::invalid_argument("infeasible folds: single-class training side");
    }
  }
  return folds;
}

// --- Nested CV ---------------------------------------------------------------

MatrixFeatureProvider::MatrixFeatureProvider(DatasetMatrix data) : data_(std::move(data)) {
  data_.validate();
}

DatasetMatrix MatrixFeatureProvider::build(const std::vector<int>& fit_rows,
                                           const std::vector<int>& emit_rows) {
  (void)fit_rows;  // features are row-intrinsic
  DatasetMatrix out;
  out.rows = static_cast<int>(emit_rows.size());
  out.cols = data_.cols;
  out.feature_names = data_.feature_names;
  out.values.reserve(static_cast<std::size_t>(out.rows) * out.cols);
  for (const int idx : emit_rows) {
    const auto row = data_.row(idx);
    out.values.insert(out.values.end(), row.begin(), row.end());
    out.labels.push_back(data_.labels[idx]);
    if (!data_.group_ids.empty()) out.group_ids.push_back(data_.group_ids[idx]);
  }
  return out;
}

std::vector<int> CVReport::predicted_labels() const {
  std::vector<int> out(predictions.size(), 0);
  for (const auto& p : predictions) out[p.index] = p.predicted;
  return out;
}

std::vector<int> CVReport::baseline_labels() const {
  std::vector<int> out(predictions.size(), 0);
  for (const auto& p : predictions) out[p.index] = p.baseline_predicted;
  return out;
}

std::vector<int> CVReport::true_labels() const {
  std::vector<int> out(predictions.size(), 0);
  for (const auto& p : predictions) out[p.index] = p.label;
  return out;
}

namespace {

struct GridChoice {
  Penalty penalty = Penalty::L2;
  double c = 1.0;
  double mean_accuracy = -1.0;
};

bool grid_better(const GridChoice& candidate, const GridChoice& best) {
  if (candidate.mean_accuracy != best.mean_accuracy) {
    return candidate.mean_accuracy > best.mean_accuracy;
  }
  if (candidate.c != best.c) return candidate.c > best.c;
  return candidate.penalty == Penalty::L2 && best.penalty == Penalty::L1;
}

}  // namespace

CVReport nested_cv(FeatureProvider& provider, const CvConfig& config,
                   const std::vector<std::vector<int>>* fixed_outer_folds) {
  const std::vector<int>& labels = provider.labels();
  const int n = provider.instance_count();
  if (n < config.outer_folds) throw std::invalid_argument("fewer instances than outer folds");
  if (config.grid.c_grid.empty() || config.grid.penalties.empty()) {
    throw std::invalid_argument("empty hyperparameter grid");
  }
  for (const double c : config.grid.c_grid) {
    if (c <= 0.0) throw std::invalid_argument("C grid values must be positive");
  }

  RandomSource rng(config.seed);
  std::vector<std::vector<int>> outer =
      fixed_outer_folds != nullptr
          ? *fixed_outer_folds
          : make_folds(labels, provider.groups(), config.outer_folds, config.folding,
                       rng.fork(0));

  CVReport report;
  report.folding = config.folding;
  report.seed = config.seed;
  report.predictions.resize(n);
  const OptimOptions optim = config.grid.optim_options();

  long long baseline_hits = 0;
  for (std::size_t f = 0; f < outer.size(); ++f) {
    const std::vector<int>& test_rows = outer[f];
    std::vector<int> train_rows;
    train_rows.reserve(n - test_rows.size());
    for (std::size_t g = 0; g < outer.size(); ++g) {
      if (g == f) continue;
      train_rows.insert(train_rows.end(), outer[g].begin(), outer[g].end());
    }
    std::sort(train_rows.begin(), train_rows.end());

    // Inner split over outer-train positions.
    std::vector<int> train_labels(train_rows.size());
    std::vector<std::string> train_groups;
    for (std::size_t i = 0; i < train_rows.size(); ++i) train_labels[i] = labels[train_rows[i]];
    if (!provider.groups().empty()) {
      train_groups.resize(train_rows.size());
      for (std::size_t i = 0; i < train_rows.size(); ++i) {
        train_groups[i] = provider.groups()[train_rows[i]];
      }
    }
    const std::vector<std::vector<int>> inner = make_folds(
        train_labels, train_groups, config.inner_folds, config.folding, rng.fork(1000 + f));

    const std::size_t cells =
        config.grid.penalties.size() * config.grid.c_grid.size();
    std::vector<double> cell_accuracy(cells, 0.0);
    for (const std::vector<int>& val_positions : inner) {
      std::vector<char> in_val(train_rows.size(), 0);
      for (const int pos : val_positions) in_val[pos] = 1;
      std::vector<int> fit_rows;
      std::vector<int> val_rows;
      for (std::size_t i = 0; i < train_rows.size(); ++i) {
        (in_val[i] != 0 ? val_rows : fit_rows).push_back(train_rows[i]);
      }
      const DatasetMatrix x_fit = provider.build(fit_rows, fit_rows);
      const DatasetMatrix x_val = provider.build(fit_rows, val_rows);
      std::size_t cell = 0;
      for (const Penalty penalty : config.grid.penalties) {
        for (const double c : config.grid.c_grid) {
          const TrainedModel model = train_logreg(x_fit, penalty, c, optim);
          cell_accuracy[cell] += accuracy(predict(model, x_val).labels, x_val.labels);
          ++cell;
        }
      }
    }

    GridChoice best;
    std::size_t cell = 0;
    for (const Penalty penalty : config.grid.penalties) {
      for (const double c : config.grid.c_grid) {
        const GridChoice candidate{penalty, c,
                                   cell_accuracy[cell] / static_cast<double>(inner.size())};
        if (best.mean_accuracy < 0.0 || grid_better(candidate, best)) best = candidate;
        ++cell;
      }
    }

    const DatasetMatrix x_train = provider.build(train_rows, train_rows);
    const DatasetMatrix x_test = provider.build(train_rows, test_rows);
    const TrainedModel model = train_logreg(x_train, best.penalty, best.c, optim);
    const Prediction predictions = predict(model, x_test);
    const int baseline = majority_label(x_train.labels);

    FoldOutcome outcome;
    outcome.penalty = best.penalty;
    outcome.c = best.c;
    outcome.inner_mean_accuracy = best.mean_accuracy;
    outcome.test_size = static_cast<int>(test_rows.size());
    outcome.accuracy = accuracy(predictions.labels, x_test.labels);
    report.folds.push_back(outcome);

    for (std::size_t i = 0; i < test_rows.size(); ++i) {
      InstancePrediction& p = report.predictions[test_rows[i]];
      p.index = test_rows[i];
      p.fold = static_cast<int>(f);
      p.label = labels[test_rows[i]];
      p.predicted = predictions.labels[i];
      p.probability = predictions.probabilities[i];
      p.baseline_predicted = baseline;
      baseline_hits += baseline == p.label ? 1 : 0;
    }
  }

  double sum = 0.0;
  for (const FoldOutcome& fold : report.folds) sum += fold.accuracy;
  report.mean_accuracy = sum / static_cast<double>(report.folds.size());
  report.baseline_accuracy = static_cast<double>(baseline_hits) / static_cast<double>(n);
  return report;
}

CVReport nested_cv(const DatasetMatrix& data, const CvConfig& config) {
  MatrixFeatureProvider provider(data);
  return nested_cv(provider, config);
}

// --- McNemar -----------------------------------------------------------------

double chi_square1_sf(double x) {
  if (x <= 0.0) return 1.0;
  return std::erfc(std::sqrt(x / 2.0));
}

McNemarResult mcnemar(const std::vector<int>& preds_a, const std::vector<int>& preds_b,
                      const std::vector<int>& labels) {
  if (preds_a.size() != preds_b.size() || preds_a.size() != labels.size() || labels.empty()) {
    throw std::invalid_argument("mcnemar needs three equal-length non-empty vectors");
  }
  McNemarResult result;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const bool a_right = preds_a[i] == labels[i];
    const bool b_right = preds_b[i] == labels[i];
    if (a_right && !b_right) ++result.b;
    if (!a_right && b_right) ++result.c;
  }
  const long long n = result.b + result.c;
  if (n < 25) {
    result.method = McNemarMethod::ExactBinomial;
    const long long k = std::min(result.b, result.c);
    result.statistic = static_cast<double>(k);
    // Two-sided exact binomial at p = 1/2: 2 * P(X <= min(b,c)), capped at 1.
    double tail = 0.0;
    double binom = std::pow(0.5, static_cast<double>(n));  // C(n,0) * 0.5^n
    for (long long i = 0; i <= k; ++i) {
      tail += binom;
      binom *= static_cast<double>(n - i) / static_cast<double>(i + 1);
    }
    result.p_value = std::min(1.0, 2.0 * tail);
  } else {
    result.method = McNemarMethod::ChiSquareCorrected;
    const double diff = std::abs(static_cast<double>(result.b - result.c)) - 1.0;
    result.statistic = diff * diff / static_cast<double>(n);
    result.p_value = chi_square1_sf(result.statistic);
  }
  return result;
}

void export_weights_tsv(const TrainedModel& model, const std::vector<std::string>& feature_names,
                        const std::string& path) {
  if (feature_names.size() != model.weights.size()) {
    throw std::invalid_argument("feature name count must match weight count");
  }
  std::vector<std::size_t> order(model.weights.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::abs(model.weights[a]) > std::abs(model.weights[b]);
  });
  std::ostringstream os;
  os << "feature\tweight\n";
  for (const std::size_t j : order) {
    os << feature_names[j] << "\t" << model.weights[j] << "\n";
  }
  os << "(intercept)\t" << model.intercept << "\n";
  atomic_write_file(path, os.str());
}

}  // namespace persuade
