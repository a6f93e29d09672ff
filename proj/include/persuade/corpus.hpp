#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace persuade {

/// Three-way outcome used for voter stances, per-dimension allocations and
/// debate winners alike.
enum class Stance { Pro, Con, Tie };
using Allocation = Stance;

const char* to_string(Stance s);
Stance parse_stance(std::string_view text);  // throws std::invalid_argument

/// The four dimensions a voter scores (conduct, spelling/grammar,
/// convincingness of arguments, reliability of sources).
enum class VoteDimension : int {
  Conduct = 0,
  SpellingGrammar = 1,
  ConvincingArguments = 2,
  ReliableSources = 3,
};
inline constexpr int kVoteDimensionCount = 4;
const char* to_string(VoteDimension d);
VoteDimension parse_vote_dimension(std::string_view text);

/// One exchange: each debater speaks exactly once. Empty text means a
/// forfeited turn and counts as zero tokens downstream.
struct Round {
  int index = 1;
  std::string pro_text;
  std::string con_text;
};

struct Debate {
  std::string debate_id;
  std::string category;
  std::string claim;
  std::string pro_debater;
  std::string con_debater;
  std::vector<Round> rounds;  // length 1..5, indices strictly increasing
};

struct Vote {
  std::string voter_id;
  std::string debate_id;
  Stance pre_stance = Stance::Tie;
  Stance post_stance = Stance::Tie;
  // Indexed by VoteDimension; every vote carries all four.
  std::array<Allocation, kVoteDimensionCount> allocations{Stance::Tie, Stance::Tie,
                                                          Stance::Tie, Stance::Tie};

  Allocation allocation(VoteDimension d) const { return allocations[static_cast<int>(d)]; }
};

/// Points granted per dimension under Criterion 1. The convincing-arguments
/// weight must be strictly greatest.
struct PointWeights {
  std::array<int, kVoteDimensionCount> weight{1, 1, 3, 2};

  int of(VoteDimension d) const { return weight[static_cast<int>(d)]; }
  void validate() const;  // throws std::invalid_argument on violation
};

/// A user's stance on one big issue.
enum class Opinion { Pro, Con, NoOpinion, NotSaying, Undecided };
const char* to_string(Opinion o);  // PRO / CON / N_O / N_S / UND
Opinion parse_opinion(std::string_view text);

struct UserProfile {
  std::string user_id;
  std::optional<std::string> political_ideology;
  std::optional<std::string> religious_ideology;
  std::map<std::string, Opinion> big_issue_opinions;
  std::map<std::string, std::string> extra;  // demographics pass-through
};

struct Corpus {
  std::map<std::string, Debate> debates;
  std::map<std::string, UserProfile> users;
  std::vector<Vote> votes;
  std::vector<std::string> issue_catalog;  // order-significant, no duplicates
};

struct PointTotals {
  int pro = 0;
  int con = 0;
};

/// Criterion 1 arithmetic for one vote: each side collects the weight of the
/// dimensions allocated to it; TIE allocations credit neither side.
PointTotals total_points(const Vote& vote, const PointWeights& weights);

/// Criterion 1 winner over all votes of the debate. TIE on equality or when
/// no vote references the debate.
Stance winner_by_points(const std::string& debate_id, const std::vector<Vote>& votes,
                        const PointWeights& weights);

bool stance_changed(const Vote& vote);

/// Criterion 2 winner: side more voters switched their stance toward.
/// A change to TIE credits neither side.
Stance convinced_winner(const std::string& debate_id, const std::vector<Vote>& votes);

// --- Vote-dimension correlation analysis -----------------------------------
//
// Ten variables, Pearson correlation over per-vote binary indicators:
//   rows 0..7  CBC CCA CRS CBSG PBC PCA PRS PBSG  (dimension allocated to side)
//   row  8     MTP  "that side gets more total points"
//   row  9     CMV  "this vote's stance changed toward that side"
// MTP/CMV are side-paired: a cell pairing a CON indicator with MTP uses the
// CON variant (cmtp), a PRO indicator uses pmtp, and likewise for CMV. The
// MTP-CMV cell is the mean of the two same-side pairings. Zero-variance
// variables correlate 0 by convention (flagged), diagonal is always 1.

inline constexpr int kCorrelationVariableCount = 10;

struct CorrelationMatrix {
  std::array<std::string, kCorrelationVariableCount> labels;
  std::array<std::array<double, kCorrelationVariableCount>, kCorrelationVariableCount> r{};
  std::vector<std::string> zero_variance;  // side-specific tags, e.g. "cmtp"

  double at(std::string_view row_label, std::string_view col_label) const;
};

/// Requires at least two votes; throws std::invalid_argument otherwise.
CorrelationMatrix vote_dimension_correlations(const std::vector<Vote>& votes,
                                              const PointWeights& weights);

}  // namespace persuade
