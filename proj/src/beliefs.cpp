#include "persuade/beliefs.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

#include "persuade/linalg.hpp"

namespace persuade {

const char* to_string(IdeologyKind k) {
  return k == IdeologyKind::Political ? "political" : "religious";
}

IdeologyKind parse_ideology_kind(std::string_view text) {
  if (text == "political") return IdeologyKind::Political;
  if (text == "religious") return IdeologyKind::Religious;
  throw std::invalid_argument("unknown ideology kind: '" + std::string(text) + "'");
}

std::string fold_label(std::string_view label) {
  std::size_t first = 0;
  std::size_t last = label.size();
  while (first < last && std::isspace(static_cast<unsigned char>(label[first]))) ++first;
  while (last > first && std::isspace(static_cast<unsigned char>(label[last - 1]))) --last;
  std::string out;
  out.reserve(last - first);
  for (std::size_t i = first; i < last; ++i) {
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(label[i]))));
  }
  return out;
}

namespace {

int slot_of(Opinion o) {
  switch (o) {
    case Opinion::Pro: return 0;
    case Opinion::Con: return 1;
    case Opinion::NoOpinion: return 2;
    case Opinion::Undecided: return 3;
    case Opinion::NotSaying: return -1;
  }
  return -1;
}

}  // namespace

BigIssuesVector encode_big_issues(const UserProfile& profile,
                                  const std::vector<std::string>& catalog,
                                  MissingIssuePolicy policy,
                                  std::vector<std::string>* missing_issues) {
  std::vector<std::string> ns_issues;
  for (const std::string& issue : catalog) {
    auto it = profile.big_issue_opinions.find(issue);
    if (it != profile.big_issue_opinions.end() && it->second == Opinion::NotSaying) {
      ns_issues.push_back(issue);
    }
  }
  if (!ns_issues.empty()) {
    std::ostringstream os;
    os << "user '" << profile.user_id << "' holds N/S on: ";
    for (std::size_t i = 0; i < ns_issues.size(); ++i) {
      if (i > 0) os << ", ";
      os << ns_issues[i];
    }
    throw BeliefError(BeliefErrorCode::NsPresent, os.str());
  }

  BigIssuesVector vec(catalog.size() * kOpinionSlotCount, 0.0);
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    auto it = profile.big_issue_opinions.find(catalog[i]);
    Opinion opinion = Opinion::NoOpinion;
    if (it == profile.big_issue_opinions.end()) {
      if (policy == MissingIssuePolicy::Error) {
        throw BeliefError(BeliefErrorCode::MissingIssue,
                          "user '" + profile.user_id + "' has no opinion entry for issue '" +
                              catalog[i] + "'");
      }
      if (missing_issues != nullptr) missing_issues->push_back(catalog[i]);
    } else {
      opinion = it->second;
    }
    vec[i * kOpinionSlotCount + slot_of(opinion)] = 1.0;
  }
  return vec;
}

double opinion_similarity(const BigIssuesVector& a, const BigIssuesVector& b) {
  if (a.size() != b.size()) {
    throw BeliefError(BeliefErrorCode::LengthMismatch,
                      "BigIssues vectors have different lengths (" + std::to_string(a.size()) +
                          " vs " + std::to_string(b.size()) + ")");
  }
  double dot = 0.0;
  double na = 0.0;
  double nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 || nb == 0.0) return 0.0;
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

int matching_ideology(const UserProfile& voter, const UserProfile& debater, IdeologyKind kind) {
  const auto& a = kind == IdeologyKind::Political ? voter.political_ideology
                                                  : voter.religious_ideology;
  const auto& b = kind == IdeologyKind::Political ? debater.political_ideology
                                                  : debater.religious_ideology;
  if (!a.has_value() || !b.has_value()) {
    throw BeliefError(BeliefErrorCode::UndeclaredIdeology,
                      std::string("undeclared ") + to_string(kind) + " ideology for user '" +
                          (!a.has_value() ? voter.user_id : debater.user_id) + "'");
  }
  return fold_label(*a) == fold_label(*b) ? 1 : 0;
}

PcaProjection pca_project(const std::vector<BigIssuesVector>& vectors) {
  if (vectors.size() < 3) {
    throw BeliefError(BeliefErrorCode::InsufficientData,
                      "pca_project requires at least 3 vectors");
  }
  const std::size_t n = vectors.size();
  const std::size_t d = vectors.front().size();
  if (d == 0) throw BeliefError(BeliefErrorCode::InsufficientData, "empty vectors");
  for (const auto& v : vectors) {
    if (v.size() != d) {
      throw BeliefError(BeliefErrorCode::LengthMismatch, "inconsistent vector lengths");
    }
  }

  PcaProjection out;
  out.mean.assign(d, 0.0);
  for (const auto& v : vectors) {
    for (std::size_t j = 0; j < d; ++j) out.mean[j] += v[j];
  }
  for (std::size_t j = 0; j < d; ++j) out.mean[j] /= static_cast<double>(n);

  // Sample covariance (divide by N-1).
  std::vector<std::vector<double>> cov(d, std::vector<double>(d, 0.0));
  for (const auto& v : vectors) {
    for (std::size_t i = 0; i < d; ++i) {
      const double di = v[i] - out.mean[i];
      for (std::size_t j = i; j < d; ++j) cov[i][j] += di * (v[j] - out.mean[j]);
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      cov[i][j] /= static_cast<double>(n - 1);
      cov[j][i] = cov[i][j];
    }
  }

  SymmetricEigenResult eig = symmetric_eigendecomposition(cov);

  for (int comp = 0; comp < 2; ++comp) {
    std::vector<double> axis =
        static_cast<std::size_t>(comp) < eig.eigenvectors.size() ? eig.eigenvectors[comp]
                                                                 : std::vector<double>(d, 0.0);
    // Sign convention: largest-magnitude entry positive (first index on ties).
    std::size_t arg = 0;
    for (std::size_t j = 1; j < d; ++j) {
      if (std::abs(axis[j]) > std::abs(axis[arg])) arg = j;
    }
    if (axis[arg] < 0.0) {
      for (double& x : axis) x = -x;
    }
    out.components[comp] = std::move(axis);
    out.explained_variance[comp] =
        static_cast<std::size_t>(comp) < eig.eigenvalues.size()
            ? std::max(0.0, eig.eigenvalues[comp])
            : 0.0;
  }

  const double top = out.explained_variance[0];
  if (out.explained_variance[1] <= (top > 0.0 ? 1e-12 * top : 0.0)) {
    out.second_axis_degenerate = true;
  }

  out.projected.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (int comp = 0; comp < 2; ++comp) {
      double s = 0.0;
      for (std::size_t j = 0; j < d; ++j) {
        s += (vectors[i][j] - out.mean[j]) * out.components[comp][j];
      }
      out.projected[i][comp] = s;
    }
  }
  return out;
}

IdeologyExperimentReport ideology_classification_experiment(
    const Corpus& corpus, IdeologyKind kind,
    const std::pair<std::string, std::string>& label_pair, const CvConfig& cv) {
  const std::string fold_a = fold_label(label_pair.first);
  const std::string fold_b = fold_label(label_pair.second);
  if (fold_a == fold_b) {
    throw BeliefError(BeliefErrorCode::InsufficientData, "label pair must be distinct");
  }

  IdeologyExperimentReport report;
  report.kind = kind;
  report.label_a = label_pair.first;
  report.label_b = label_pair.second;

  std::vector<BigIssuesVector> features;
  std::vector<int> labels;
  for (const auto& [id, user] : corpus.users) {
    const auto& declared =
        kind == IdeologyKind::Political ? user.political_ideology : user.religious_ideology;
    if (!declared.has_value()) continue;
    const std::string folded = fold_label(*declared);
    int label;
    if (folded == fold_a) {
      label = 1;
    } else if (folded == fold_b) {
      label = 0;
    } else {
      continue;
    }
    try {
      features.push_back(encode_big_issues(user, corpus.issue_catalog));
    } catch (const BeliefError& e) {
      if (e.code() == BeliefErrorCode::NsPresent) {
        ++report.excluded_ns;
        continue;
      }
      throw;
    }
    labels.push_back(label);
    label == 1 ? ++report.count_a : ++report.count_b;
  }

  if (report.count_a < 2 || report.count_b < 2) {
    throw BeliefError(BeliefErrorCode::InsufficientData,
                      "need at least 2 users per ideology label after N/S elimination (got " +
                          std::to_string(report.count_a) + " / " +
                          std::to_string(report.count_b) + ")");
  }
  report.user_count = static_cast<int>(labels.size());

  DatasetMatrix data;
  data.rows = static_cast<int>(features.size());
  data.cols = static_cast<int>(features.front().size());
  data.values.reserve(static_cast<std::size_t>(data.rows) * data.cols);
  for (const auto& f : features) data.values.insert(data.values.end(), f.begin(), f.end());
  data.labels = labels;
  for (std::size_t i = 0; i < corpus.issue_catalog.size(); ++i) {
    for (const char* slot : {"PRO", "CON", "N_O", "UND"}) {
      data.feature_names.push_back(corpus.issue_catalog[i] + ":" + slot);
    }
  }

  report.cv = nested_cv(data, cv);
  report.majority_accuracy = report.cv.baseline_accuracy;
  report.significance =
      mcnemar(report.cv.predicted_labels(), report.cv.baseline_labels(), report.cv.true_labels());
  return report;
}

}  // namespace persuade
