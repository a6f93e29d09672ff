#include "persuade/corpus.hpp"

#include <cmath>
#include <stdexcept>

namespace persuade {

const char* to_string(Stance s) {
  switch (s) {
    case Stance::Pro: return "PRO";
    case Stance::Con: return "CON";
    case Stance::Tie: return "TIE";
  }
  return "?";
}

Stance parse_stance(std::string_view text) {
  if (text == "PRO") return Stance::Pro;
  if (text == "CON") return Stance::Con;
  if (text == "TIE") return Stance::Tie;
  throw std::invalid_argument("unknown stance literal: '" + std::string(text) + "'");
}

const char* to_string(VoteDimension d) {
  switch (d) {
    case VoteDimension::Conduct: return "CONDUCT";
    case VoteDimension::SpellingGrammar: return "SPELLING_GRAMMAR";
    case VoteDimension::ConvincingArguments: return "CONVINCING_ARGUMENTS";
    case VoteDimension::ReliableSources: return "RELIABLE_SOURCES";
  }
  return "?";
}

VoteDimension parse_vote_dimension(std::string_view text) {
  if (text == "CONDUCT") return VoteDimension::Conduct;
  if (text == "SPELLING_GRAMMAR") return VoteDimension::SpellingGrammar;
  if (text == "CONVINCING_ARGUMENTS") return VoteDimension::ConvincingArguments;
  if (text == "RELIABLE_SOURCES") return VoteDimension::ReliableSources;
  throw std::invalid_argument("unknown vote dimension: '" + std::string(text) + "'");
}

const char* to_string(Opinion o) {
  switch (o) {
    case Opinion::Pro: return "PRO";
    case Opinion::Con: return "CON";
    case Opinion::NoOpinion: return "N_O";
    case Opinion::NotSaying: return "N_S";
    case Opinion::Undecided: return "UND";
  }
  return "?";
}

Opinion parse_opinion(std::string_view text) {
  if (text == "PRO") return Opinion::Pro;
  if (text == "CON") return Opinion::Con;
  if (text == "N_O") return Opinion::NoOpinion;
  if (text == "N_S") return Opinion::NotSaying;
  if (text == "UND") return Opinion::Undecided;
  throw std::invalid_argument("unknown opinion literal: '" + std::string(text) + "'");
}

void PointWeights::validate() const {
  const int arguments = of(VoteDimension::ConvincingArguments);
  for (int i = 0; i < kVoteDimensionCount; ++i) {
    if (weight[i] < 0) throw std::invalid_argument("point weights must be non-negative");
    if (i != static_cast<int>(VoteDimension::ConvincingArguments) && weight[i] >= arguments) {
      throw std::invalid_argument(
          "the convincing-arguments weight must be strictly greatest");
    }
  }
}

PointTotals total_points(const Vote& vote, const PointWeights& weights) {
  PointTotals totals;
  for (int i = 0; i < kVoteDimensionCount; ++i) {
    switch (vote.allocations[i]) {
      case Stance::Pro: totals.pro += weights.weight[i]; break;
      case Stance::Con: totals.con += weights.weight[i]; break;
      case Stance::Tie: break;
    }
  }
  return totals;
}

Stance winner_by_points(const std::string& debate_id, const std::vector<Vote>& votes,
                        const PointWeights& weights) {
  long long pro = 0;
  long long con = 0;
  for (const Vote& vote : votes) {
    if (vote.debate_id != debate_id) continue;
    const PointTotals t = total_points(vote, weights);
    pro += t.pro;
    con += t.con;
  }
  if (pro > con) return Stance::Pro;
  if (con > pro) return Stance::Con;
  return Stance::Tie;
}

bool stance_changed(const Vote& vote) { return vote.pre_stance != vote.post_stance; }

Stance convinced_winner(const std::string& debate_id, const std::vector<Vote>& votes) {
  int to_pro = 0;
  int to_con = 0;
  for (const Vote& vote : votes) {
    if (vote.debate_id != debate_id || !stance_changed(vote)) continue;
    if (vote.post_stance == Stance::Pro) ++to_pro;
    if (vote.post_stance == Stance::Con) ++to_con;
  }
  if (to_pro > to_con) return Stance::Pro;
  if (to_con > to_pro) return Stance::Con;
  return Stance::Tie;
}

namespace {

// Per-vote binary indicators behind the correlation analysis, one per side.
struct VoteIndicators {
  // [side][dimension], side 0 = CON, 1 = PRO
  double dim[2][kVoteDimensionCount];
  double mtp[2];
  double cmv[2];
};

VoteIndicators indicators_for(const Vote& vote, const PointWeights& weights) {
  VoteIndicators ind{};
  for (int d = 0; d < kVoteDimensionCount; ++d) {
    ind.dim[0][d] = vote.allocations[d] == Stance::Con ? 1.0 : 0.0;
    ind.dim[1][d] = vote.allocations[d] == Stance::Pro ? 1.0 : 0.0;
  }
  const PointTotals t = total_points(vote, weights);
  ind.mtp[0] = t.con > t.pro ? 1.0 : 0.0;
  ind.mtp[1] = t.pro > t.con ? 1.0 : 0.0;
  const bool changed = stance_changed(vote);
  ind.cmv[0] = changed && vote.post_stance == Stance::Con ? 1.0 : 0.0;
  ind.cmv[1] = changed && vote.post_stance == Stance::Pro ? 1.0 : 0.0;
  return ind;
}

double pearson(const std::vector<double>& x, const std::vector<double>& y, bool* degenerate) {
  const std::size_t n = x.size();
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0;
  double syy = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx <= 0.0 || syy <= 0.0) {
    if (degenerate != nullptr) *degenerate = true;
    return 0.0;
  }
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace

double CorrelationMatrix::at(std::string_view row_label, std::string_view col_label) const {
  int ri = -1;
  int ci = -1;
  for (int i = 0; i < kCorrelationVariableCount; ++i) {
    if (labels[i] == row_label) ri = i;
    if (labels[i] == col_label) ci = i;
  }
  if (ri < 0 || ci < 0) throw std::invalid_argument("unknown correlation label");
  return r[ri][ci];
}

CorrelationMatrix vote_dimension_correlations(const std::vector<Vote>& votes,
                                              const PointWeights& weights) {
  if (votes.size() < 2) {
    throw std::invalid_argument("vote_dimension_correlations requires at least 2 votes");
  }

  const std::size_t n = votes.size();
  // 12 underlying series: 8 dimension-side indicators + cmtp/pmtp + ccmv/pcmv.
  // Layout: 0..3 CON dims, 4..7 PRO dims, 8 cmtp, 9 pmtp, 10 ccmv, 11 pcmv.
  std::vector<std::vector<double>> series(12, std::vector<double>(n, 0.0));
  for (std::size_t v = 0; v < n; ++v) {
    const VoteIndicators ind = indicators_for(votes[v], weights);
    for (int d = 0; d < kVoteDimensionCount; ++d) {
      series[d][v] = ind.dim[0][d];
      series[4 + d][v] = ind.dim[1][d];
    }
    series[8][v] = ind.mtp[0];
    series[9][v] = ind.mtp[1];
    series[10][v] = ind.cmv[0];
    series[11][v] = ind.cmv[1];
  }

  static const char* kSeriesTags[12] = {"cbc",  "cbsg", "cca",  "crs",  "pbc",  "pbsg",
                                        "pca",  "prs",  "cmtp", "pmtp", "ccmv", "pcmv"};
  // Series use VoteDimension order (conduct, spelling, arguments, sources);
  // display order is conduct, arguments, sources, spelling per side.
  static const int kDimSeries[8] = {0, 2, 3, 1, 4, 6, 7, 5};
  // series index by display row for rows 0..7; rows 8/9 resolve per side.
  auto side_of_row = [](int row) { return row < 4 ? 0 : 1; };  // 0 = CON, 1 = PRO

  CorrelationMatrix out;
  out.labels = {"CBC", "CCA", "CRS", "CBSG", "PBC", "PCA", "PRS", "PBSG", "MTP", "CMV"};

  std::vector<bool> series_degenerate(12, false);
  for (int s = 0; s < 12; ++s) {
    bool deg = false;
    (void)pearson(series[s], series[s], &deg);
    series_degenerate[s] = deg;
    if (deg) out.zero_variance.push_back(kSeriesTags[s]);
  }

  auto corr = [&](int a, int b) {
    bool deg = false;
    const double r = pearson(series[a], series[b], &deg);
    return deg ? 0.0 : r;
  };

  for (int i = 0; i < kCorrelationVariableCount; ++i) out.r[i][i] = 1.0;

  // Dimension-vs-dimension cells.
  for (int i = 0; i < 8; ++i) {
    for (int j = i + 1; j < 8; ++j) {
      const double r = corr(kDimSeries[i], kDimSeries[j]);
      out.r[i][j] = r;
      out.r[j][i] = r;
    }
  }
  // Dimension vs MTP / CMV: side-paired.
  for (int i = 0; i < 8; ++i) {
    const int side = side_of_row(i);
    const double r_mtp = corr(kDimSeries[i], 8 + side);
    const double r_cmv = corr(kDimSeries[i], 10 + side);
    out.r[i][8] = out.r[8][i] = r_mtp;
    out.r[i][9] = out.r[9][i] = r_cmv;
  }
  // MTP vs CMV: mean of the two same-side pairings.
  const double r_mc = 0.5 * (corr(8, 10) + corr(9, 11));
  out.r[8][9] = out.r[9][8] = r_mc;

  return out;
}

}  // namespace persuade
