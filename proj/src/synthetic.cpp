#include "persuade/synthetic.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "persuade/random.hpp"

namespace persuade {

namespace {

const char* kIssueNames[] = {
    "Abortion",        "AffirmativeAction", "Welfare",        "GunControl",
    "DeathPenalty",    "GayMarriage",       "DrugLegalization", "BorderFence",
    "ClimateChange",   "MinimumWage",       "Euthanasia",     "SchoolVouchers",
    "TermLimits",      "Torture",           "UnionRights",    "FlagBurning",
    "NationalHealthCare", "ProgressiveTax", "SocialSecurity", "EstateTax",
    "ElectoralCollege",   "CivilUnions",    "GlobalWarmingExists", "MedicalMarijuana",
};

const char* kFillerWords[] = {
    "the",  "people", "believe", "this",  "claim",  "because", "policy",  "shows",
    "point", "clear",  "reason",  "facts", "support", "debate",  "argument", "state",
    "world", "matter", "value",   "case",  "think",   "right",   "question", "time",
};

const char* kPolitenessMarkers[] = {"thank you", "please", "welcome"};
const char* kEvidenceMarkers[] = {"according to", "studies show", "for example"};
const char* kSwearMarkers[] = {"damn", "hell", "crap"};

std::string issue_name(int index) {
  constexpr int known = static_cast<int>(std::size(kIssueNames));
  if (index < known) return kIssueNames[index];
  return "Issue" + std::to_string(index + 1);
}

Stance opposite(Stance s) { return s == Stance::Pro ? Stance::Con : Stance::Pro; }

std::string make_sentence(RandomSource& rng, const MarkerRates& politeness,
                          const MarkerRates& evidence, const MarkerRates& swear, bool pro_side) {
  std::ostringstream os;
  const int words = 5 + static_cast<int>(rng.next_below(7));
  for (int w = 0; w < words; ++w) {
    if (w > 0) os << ' ';
    os << kFillerWords[rng.next_below(std::size(kFillerWords))];
    const double politeness_rate = pro_side ? politeness.pro : politeness.con;
    const double evidence_rate = pro_side ? evidence.pro : evidence.con;
    const double swear_rate = pro_side ? swear.pro : swear.con;
    if (rng.bernoulli(politeness_rate)) {
      os << ' ' << kPolitenessMarkers[rng.next_below(std::size(kPolitenessMarkers))];
    }
    if (rng.bernoulli(evidence_rate)) {
      os << ' ' << kEvidenceMarkers[rng.next_below(std::size(kEvidenceMarkers))];
    }
    if (rng.bernoulli(swear_rate)) {
      os << ' ' << kSwearMarkers[rng.next_below(std::size(kSwearMarkers))];
    }
    if (rng.bernoulli(0.02)) os << ' ' << (1 + rng.next_below(2000));
  }
  const double punct = rng.next_unit();
  os << (punct < 0.05 ? '!' : punct < 0.10 ? '?' : '.');
  return os.str();
}

Allocation follow_or_uniform(RandomSource& rng, Stance winner, double follow_probability) {
  if (rng.bernoulli(follow_probability)) return winner;
  const std::uint64_t pick = rng.next_below(3);
  return pick == 0 ? Stance::Pro : pick == 1 ? Stance::Con : Stance::Tie;
}

}  // namespace

void SyntheticParams::validate() const {
  if (n_debates < 1 || voters_per_debate < 1) {
    throw std::invalid_argument("debate and voter counts must be >= 1");
  }
  if (issue_count < 1) throw std::invalid_argument("issue_count must be >= 1");
  if (rounds_per_debate < 1 || rounds_per_debate > 5) {
    throw std::invalid_argument("rounds_per_debate must be in 1..5");
  }
  if (sentences_per_side_per_round < 1) {
    throw std::invalid_argument("sentences_per_side_per_round must be >= 1");
  }
  for (const double p :
       {p_match, p_issue_align, p_follow_arguments, p_follow_sources, p_follow_conduct,
        p_follow_spelling, politeness_rate.pro, politeness_rate.con, evidence_rate.pro,
        evidence_rate.con, swear_rate.pro, swear_rate.con}) {
    if (p < 0.0 || p > 1.0 || !std::isfinite(p)) {
      throw std::invalid_argument("probabilities must lie in [0, 1]");
    }
  }
  if (political_pair.first == political_pair.second ||
      religious_pair.first == religious_pair.second) {
    throw std::invalid_argument("ideology pairs must be distinct");
  }
  if (categories.empty()) throw std::invalid_argument("need at least one category");
}

Corpus generate_synthetic_corpus(const SyntheticParams& params) {
  params.validate();
  RandomSource rng(params.seed);

  Corpus corpus;
  for (int k = 0; k < params.issue_count; ++k) corpus.issue_catalog.push_back(issue_name(k));

  // Issue choices align with the political ideology: pair.first prefers PRO
  // on even issues and CON on odd ones; pair.second the reverse.
  auto make_user = [&](const std::string& user_id, int political_index, int religious_index) {
    UserProfile user;
    user.user_id = user_id;
    user.political_ideology =
        political_index == 0 ? params.political_pair.first : params.political_pair.second;
    user.religious_ideology =
        religious_index == 0 ? params.religious_pair.first : params.religious_pair.second;
    for (int k = 0; k < params.issue_count; ++k) {
      Opinion choice;
      const bool even = k % 2 == 0;
      const Opinion aligned = (even == (political_index == 0)) ? Opinion::Pro : Opinion::Con;
      if (rng.bernoulli(params.p_issue_align)) {
        choice = aligned;
      } else {
        const std::uint64_t pick = rng.next_below(4);
        choice = pick == 0   ? Opinion::Pro
                 : pick == 1 ? Opinion::Con
                 : pick == 2 ? Opinion::NoOpinion
                             : Opinion::Undecided;
      }
      user.big_issue_opinions[corpus.issue_catalog[k]] = choice;
    }
    corpus.users.emplace(user.user_id, std::move(user));
  };

  const IdeologyKind planted = params.planted_kind;
  char debate_id[32];
  for (int d = 0; d < params.n_debates; ++d) {
    std::snprintf(debate_id, sizeof(debate_id), "debate_%05d", d);

    // Debaters take opposite labels of both ideology kinds so the same
    // corpus serves both tasks.
    const int pro_political = static_cast<int>(rng.next_below(2));
    const int pro_religious = static_cast<int>(rng.next_below(2));
    const std::string pro_id = std::string(debate_id) + "_pro";
    const std::string con_id = std::string(debate_id) + "_con";
    make_user(pro_id, pro_political, pro_religious);
    make_user(con_id, 1 - pro_political, 1 - pro_religious);

    Debate debate;
    debate.debate_id = debate_id;
    debate.category = params.categories[rng.next_below(params.categories.size())];
    debate.claim = "The " + corpus.issue_catalog[rng.next_below(corpus.issue_catalog.size())] +
                   " policy should change";
    debate.pro_debater = pro_id;
    debate.con_debater = con_id;
    for (int r = 1; r <= params.rounds_per_debate; ++r) {
      Round round;
      round.index = r;
      for (int s = 0; s < params.sentences_per_side_per_round; ++s) {
        if (s > 0) round.pro_text += ' ';
        round.pro_text += make_sentence(rng, params.politeness_rate, params.evidence_rate,
                                        params.swear_rate, true);
      }
      for (int s = 0; s < params.sentences_per_side_per_round; ++s) {
        if (s > 0) round.con_text += ' ';
        round.con_text += make_sentence(rng, params.politeness_rate, params.evidence_rate,
                                        params.swear_rate, false);
      }
      debate.rounds.push_back(std::move(round));
    }

    const int pro_planted = planted == IdeologyKind::Political ? pro_political : pro_religious;
    for (int v = 0; v < params.voters_per_debate; ++v) {
      const int voter_political = static_cast<int>(rng.next_below(2));
      const int voter_religious = static_cast<int>(rng.next_below(2));
      std::string voter_id = std::string(debate_id) + "_voter_" + std::to_string(v);
      make_user(voter_id, voter_political, voter_religious);

      const int voter_planted =
          planted == IdeologyKind::Political ? voter_political : voter_religious;
      const Stance matched_side = voter_planted == pro_planted ? Stance::Pro : Stance::Con;
      const Stance winner = rng.bernoulli(params.p_match) ? matched_side : opposite(matched_side);

      Vote vote;
      vote.voter_id = std::move(voter_id);
      vote.debate_id = debate_id;
      vote.post_stance = winner;
      vote.pre_stance = rng.bernoulli(0.5) ? opposite(winner) : Stance::Tie;
      vote.allocations[static_cast<int>(VoteDimension::ConvincingArguments)] =
          follow_or_uniform(rng, winner, params.p_follow_arguments);
      vote.allocations[static_cast<int>(VoteDimension::ReliableSources)] =
          follow_or_uniform(rng, winner, params.p_follow_sources);
      vote.allocations[static_cast<int>(VoteDimension::Conduct)] =
          follow_or_uniform(rng, winner, params.p_follow_conduct);
      vote.allocations[static_cast<int>(VoteDimension::SpellingGrammar)] =
          follow_or_uniform(rng, winner, params.p_follow_spelling);
      corpus.votes.push_back(std::move(vote));
    }
    corpus.debates.emplace(debate.debate_id, std::move(debate));
  }
  return corpus;
}

}  // namespace persuade
