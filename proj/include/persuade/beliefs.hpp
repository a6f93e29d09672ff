#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "persuade/corpus.hpp"
#include "persuade/learn.hpp"

namespace persuade {

/// Dense 4K encoding of a user's big-issue opinions: per catalog issue, four
/// consecutive one-hot slots ordered (PRO, CON, N_O, UND). N/S has no slot;
/// users holding it must be excluded.
using BigIssuesVector = std::vector<double>;
inline constexpr int kOpinionSlotCount = 4;

enum class IdeologyKind { Political, Religious };
const char* to_string(IdeologyKind k);
IdeologyKind parse_ideology_kind(std::string_view text);

enum class BeliefErrorCode {
  NsPresent,
  MissingIssue,
  UndeclaredIdeology,
  LengthMismatch,
  InsufficientData,
};

class BeliefError : public std::runtime_error {
 public:
  BeliefError(BeliefErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  BeliefErrorCode code() const { return code_; }

 private:
  BeliefErrorCode code_;
};

enum class MissingIssuePolicy { TreatAsNoOpinion, Error };

/// One-hot block encoding in catalog order. Throws BeliefError(NsPresent)
/// when the profile holds N/S on any catalog issue (message names them all).
/// Issues absent from the profile follow `policy`: N_O with a warning pushed
/// to `missing_issues` (default) or BeliefError(MissingIssue).
BigIssuesVector encode_big_issues(const UserProfile& profile,
                                  const std::vector<std::string>& catalog,
                                  MissingIssuePolicy policy = MissingIssuePolicy::TreatAsNoOpinion,
                                  std::vector<std::string>* missing_issues = nullptr);

/// Cosine similarity; for one-hot block vectors this equals the fraction of
/// issues with identical choices. Zero-norm inputs yield 0. Throws
/// BeliefError(LengthMismatch) on unequal lengths.
double opinion_similarity(const BigIssuesVector& a, const BigIssuesVector& b);

/// Case-insensitive (trimmed) equality of the declared ideology labels.
/// Throws BeliefError(UndeclaredIdeology) when either side lacks one.
int matching_ideology(const UserProfile& voter, const UserProfile& debater, IdeologyKind kind);

/// Trim + ASCII case-fold, the normalization used for every ideology-label
/// comparison in the project.
std::string fold_label(std::string_view label);

struct PcaProjection {
  std::array<std::vector<double>, 2> components;  // orthonormal, length D
  std::vector<double> mean;                       // length D
  std::vector<std::array<double, 2>> projected;   // per input vector
  std::array<double, 2> explained_variance{0.0, 0.0};  // descending
  bool second_axis_degenerate = false;
};

/// Top-2 PCA of the mean-centered data via eigendecomposition of the sample
/// covariance (divide by N-1). Deterministic sign convention: each
/// component's largest-magnitude entry is positive (first such index on
/// ties). Requires >= 3 vectors of equal nonzero length; a rank-1 input sets
/// `second_axis_degenerate` and takes the second axis from the eigensolver's
/// orthonormal basis.
PcaProjection pca_project(const std::vector<BigIssuesVector>& vectors);

struct IdeologyExperimentReport {
  IdeologyKind kind = IdeologyKind::Political;
  std::string label_a;  // positive class (label 1)
  std::string label_b;
  int user_count = 0;
  int count_a = 0;
  int count_b = 0;
  int excluded_ns = 0;  // users dropped for holding N/S on a catalog issue
  CVReport cv;
  double majority_accuracy = 0.0;
  McNemarResult significance;  // model vs majority baseline
};

/// Table-1 style experiment: predict declared ideology from the BigIssues
/// vector, nested CV versus the majority baseline. Users with N/S on any
/// catalog issue are eliminated first. Throws BeliefError(InsufficientData)
/// when either label has fewer than 2 users afterwards.
IdeologyExperimentReport ideology_classification_experiment(
    const Corpus& corpus, IdeologyKind kind,
    const std::pair<std::string, std::string>& label_pair, const CvConfig& cv);

}  // namespace persuade
