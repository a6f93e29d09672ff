#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "persuade/beliefs.hpp"
#include "persuade/corpus.hpp"

namespace persuade {

struct MarkerRates {
  double pro = 0.0;
  double con = 0.0;
};

/// Parameters of the planted-effect corpus generator. With probability
/// p_match the debater sharing the voter's `planted_kind` ideology wins that
/// voter (Criterion 2 stance change and, through the allocations, Criterion
/// 1 points); otherwise the opposing debater does. Everything unconstrained
/// is drawn uniformly. Output always passes strict ingestion.
struct SyntheticParams {
  int n_debates = 100;
  int voters_per_debate = 5;
  double p_match = 0.8;
  IdeologyKind planted_kind = IdeologyKind::Political;
  std::pair<std::string, std::string> political_pair{"Conservative", "Liberal"};
  std::pair<std::string, std::string> religious_pair{"Atheist", "Christian"};
  std::vector<std::string> categories{"Politics", "Religion", "Science", "Music", "Health"};

  // Per-side injection rates for marker phrases in the round texts.
  MarkerRates politeness_rate{0.08, 0.02};
  MarkerRates evidence_rate{0.06, 0.06};
  MarkerRates swear_rate{0.005, 0.03};

  int issue_count = 10;          // K
  double p_issue_align = 0.9;    // issue choice follows the political ideology

  // Probability each dimension's allocation follows the planted winner
  // (otherwise uniform over PRO/CON/TIE). Arguments follow deterministically
  // by default; raising p_follow_sources to 1 makes the points winner equal
  // the arguments winner exactly.
  double p_follow_arguments = 1.0;
  double p_follow_sources = 0.75;
  double p_follow_conduct = 0.6;
  double p_follow_spelling = 0.6;

  int rounds_per_debate = 3;
  int sentences_per_side_per_round = 3;
  std::uint64_t seed = 1;

  void validate() const;  // throws std::invalid_argument
};

Corpus generate_synthetic_corpus(const SyntheticParams& params);

}  // namespace persuade
