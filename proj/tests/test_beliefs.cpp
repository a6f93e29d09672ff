#include "persuade/beliefs.hpp"

#include <cmath>
#include <doctest.h>

#include "helpers.hpp"
#include "persuade/random.hpp"
#include "persuade/synthetic.hpp"

using namespace persuade;
using namespace persuade::testing;

namespace {

UserProfile profile_with(const std::vector<std::pair<std::string, Opinion>>& opinions,
                         const std::string& id = "u") {
  UserProfile user;
  user.user_id = id;
  for (const auto& [issue, opinion] : opinions) user.big_issue_opinions[issue] = opinion;
  return user;
}

const std::vector<std::string> kCatalog3 = {"Abortion", "AffirmativeAction", "Welfare"};

// Test-side oracle: dominant eigenpair by power iteration with deflation,
// independent of the library's Jacobi path.
std::pair<double, std::vector<double>> power_iteration(std::vector<std::vector<double>> m,
                                                       int iterations = 5000) {
  const std::size_t n = m.size();
  std::vector<double> v(n, 1.0);
  double eigenvalue = 0.0;
  for (int it = 0; it < iterations; ++it) {
    std::vector<double> next(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) next[i] += m[i][j] * v[j];
    }
    double norm = 0.0;
    for (const double x : next) norm += x * x;
    norm = std::sqrt(norm);
    if (norm == 0.0) return {0.0, v};
    for (auto& x : next) x /= norm;
    eigenvalue = norm;
    v = next;
  }
  return {eigenvalue, v};
}

std::vector<std::vector<double>> sample_covariance(const std::vector<BigIssuesVector>& data) {
  const std::size_t n = data.size();
  const std::size_t d = data.front().size();
  std::vector<double> mean(d, 0.0);
  for (const auto& row : data) {
    for (std::size_t j = 0; j < d; ++j) mean[j] += row[j];
  }
  for (auto& m : mean) m /= static_cast<double>(n);
  std::vector<std::vector<double>> cov(d, std::vector<double>(d, 0.0));
  for (const auto& row : data) {
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        cov[i][j] += (row[i] - mean[i]) * (row[j] - mean[j]);
      }
    }
  }
  for (auto& r : cov) {
    for (auto& x : r) x /= static_cast<double>(n - 1);
  }
  return cov;
}

}  // namespace

TEST_CASE("encode_big_issues") {
  SUBCASE("CON, CON, PRO lays out the documented one-hot blocks") {
    const UserProfile user = profile_with({{"Abortion", Opinion::Con},
                                           {"AffirmativeAction", Opinion::Con},
                                           {"Welfare", Opinion::Pro}});
    const BigIssuesVector vec = encode_big_issues(user, kCatalog3);
    CHECK(vec == BigIssuesVector{0, 1, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0});
  }
  SUBCASE("all N_O profiles produce [0,0,1,0] blocks") {
    const UserProfile user = profile_with({{"Abortion", Opinion::NoOpinion},
                                           {"AffirmativeAction", Opinion::NoOpinion},
                                           {"Welfare", Opinion::NoOpinion}});
    const BigIssuesVector vec = encode_big_issues(user, kCatalog3);
    CHECK(vec == BigIssuesVector{0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0});
  }
  SUBCASE("N_S anywhere is an error naming the issue") {
    const UserProfile user = profile_with({{"Abortion", Opinion::Pro},
                                           {"AffirmativeAction", Opinion::NotSaying},
                                           {"Welfare", Opinion::Pro}});
    try {
      encode_big_issues(user, kCatalog3);
      FAIL("expected BeliefError");
    } catch (const BeliefError& e) {
      CHECK(e.code() == BeliefErrorCode::NsPresent);
      CHECK(std::string(e.what()).find("AffirmativeAction") != std::string::npos);
    }
  }
  SUBCASE("missing issue defaults to N_O with a warning, errors in strict policy") {
    const UserProfile user = profile_with({{"Abortion", Opinion::Pro}});
    std::vector<std::string> missing;
    const BigIssuesVector vec =
        encode_big_issues(user, kCatalog3, MissingIssuePolicy::TreatAsNoOpinion, &missing);
    CHECK(vec == BigIssuesVector{1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0});
    CHECK(missing == std::vector<std::string>{"AffirmativeAction", "Welfare"});
    CHECK_THROWS_AS(encode_big_issues(user, kCatalog3, MissingIssuePolicy::Error), BeliefError);
  }
  SUBCASE("every block one-hot over random profiles") {
    RandomSource rng(71);
    for (int trial = 0; trial < 100; ++trial) {
      UserProfile user;
      user.user_id = "r";
      for (const auto& issue : kCatalog3) {
        const Opinion choice[] = {Opinion::Pro, Opinion::Con, Opinion::NoOpinion,
                                  Opinion::Undecided};
        user.big_issue_opinions[issue] = choice[rng.next_below(4)];
      }
      const BigIssuesVector vec = encode_big_issues(user, kCatalog3);
      double total = 0.0;
      for (std::size_t block = 0; block < kCatalog3.size(); ++block) {
        double sum = 0.0;
        for (int s = 0; s < kOpinionSlotCount; ++s) {
          const double x = vec[block * kOpinionSlotCount + s];
          CHECK((x == 0.0 || x == 1.0));
          sum += x;
        }
        CHECK(sum == 1.0);
        total += sum;
      }
      CHECK(total == static_cast<double>(kCatalog3.size()));
    }
  }
}

TEST_CASE("opinion_similarity") {
  const UserProfile all_pro = profile_with(
      {{"Abortion", Opinion::Pro}, {"AffirmativeAction", Opinion::Pro}, {"Welfare", Opinion::Pro}});
  const BigIssuesVector a = encode_big_issues(all_pro, kCatalog3);
  SUBCASE("identical vectors give 1") { CHECK(opinion_similarity(a, a) == doctest::Approx(1.0)); }
  SUBCASE("agreement on exactly one of three issues gives 1/3") {
    // dot = 1, norms sqrt(3) * sqrt(3)
    const UserProfile other = profile_with({{"Abortion", Opinion::Pro},
                                            {"AffirmativeAction", Opinion::Con},
                                            {"Welfare", Opinion::Undecided}});
    const BigIssuesVector b = encode_big_issues(other, kCatalog3);
    CHECK(opinion_similarity(a, b) == doctest::Approx(1.0 / 3.0));
  }
  SUBCASE("total disagreement gives 0") {
    const UserProfile other = profile_with({{"Abortion", Opinion::Con},
                                            {"AffirmativeAction", Opinion::NoOpinion},
                                            {"Welfare", Opinion::Undecided}});
    const BigIssuesVector b = encode_big_issues(other, kCatalog3);
    CHECK(opinion_similarity(a, b) == 0.0);
  }
  SUBCASE("length mismatch throws") {
    CHECK_THROWS_AS(opinion_similarity(a, BigIssuesVector{1.0}), BeliefError);
  }
  SUBCASE("symmetric and equal to brute-force agreement fraction") {
    RandomSource rng(19);
    const std::vector<std::string> catalog = {"A", "B", "C", "D", "E"};
    for (int trial = 0; trial < 60; ++trial) {
      UserProfile u1;
      UserProfile u2;
      u1.user_id = "x";
      u2.user_id = "y";
      int agree = 0;
      for (const auto& issue : catalog) {
        const Opinion choice[] = {Opinion::Pro, Opinion::Con, Opinion::NoOpinion,
                                  Opinion::Undecided};
        const Opinion c1 = choice[rng.next_below(4)];
        const Opinion c2 = choice[rng.next_below(4)];
        u1.big_issue_opinions[issue] = c1;
        u2.big_issue_opinions[issue] = c2;
        agree += c1 == c2 ? 1 : 0;
      }
      const BigIssuesVector v1 = encode_big_issues(u1, catalog);
      const BigIssuesVector v2 = encode_big_issues(u2, catalog);
      const double expected = static_cast<double>(agree) / static_cast<double>(catalog.size());
      CHECK(opinion_similarity(v1, v2) == doctest::Approx(expected).epsilon(1e-12));
      CHECK(opinion_similarity(v2, v1) == doctest::Approx(opinion_similarity(v1, v2)));
    }
  }
}

TEST_CASE("matching_ideology") {
  UserProfile voter;
  voter.user_id = "voter";
  UserProfile debater;
  debater.user_id = "debater";
  voter.religious_ideology = "Atheist";
  debater.religious_ideology = "Atheist";
  CHECK(matching_ideology(voter, debater, IdeologyKind::Religious) == 1);
  debater.religious_ideology = "Christian";
  CHECK(matching_ideology(voter, debater, IdeologyKind::Religious) == 0);
  voter.political_ideology = "Conservative";
  debater.political_ideology = "Liberal";
  CHECK(matching_ideology(voter, debater, IdeologyKind::Political) == 0);
  SUBCASE("case and whitespace folded, no synonym mapping") {
    debater.religious_ideology = "  ATHEIST ";
    CHECK(matching_ideology(voter, debater, IdeologyKind::Religious) == 1);
    debater.religious_ideology = "Agnostic";
    CHECK(matching_ideology(voter, debater, IdeologyKind::Religious) == 0);
  }
  SUBCASE("undeclared ideology throws") {
    debater.political_ideology.reset();
    CHECK_THROWS_AS(matching_ideology(voter, debater, IdeologyKind::Political), BeliefError);
  }
  SUBCASE("symmetric") {
    voter.religious_ideology = "Christian";
    debater.religious_ideology = "christian";
    CHECK(matching_ideology(voter, debater, IdeologyKind::Religious) ==
          matching_ideology(debater, voter, IdeologyKind::Religious));
  }
}

TEST_CASE("pca_project") {
  SUBCASE("requires at least 3 vectors") {
    CHECK_THROWS_AS(pca_project({BigIssuesVector{1, 0}, BigIssuesVector{0, 1}}), BeliefError);
  }
  SUBCASE("collinear data has zero second eigenvalue") {
    std::vector<BigIssuesVector> data;
    for (int i = 0; i < 8; ++i) {
      BigIssuesVector v(12, 0.0);
      for (int j = 0; j < 12; ++j) v[j] = static_cast<double>(i) * (j % 3 == 0 ? 1.0 : 0.5);
      data.push_back(v);
    }
    const PcaProjection p = pca_project(data);
    CHECK(p.explained_variance[1] == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(p.second_axis_degenerate);
  }
  SUBCASE("two separated clusters align the first component with the separation axis") {
    RandomSource rng(2024);
    std::vector<BigIssuesVector> data;
    const int d = 16;
    std::vector<double> axis(d, 0.0);
    axis[3] = 1.0;  // separation along coordinate 3
    for (int i = 0; i < 120; ++i) {
      BigIssuesVector v(d, 0.0);
      const double center = i % 2 == 0 ? 4.0 : -4.0;
      for (int j = 0; j < d; ++j) v[j] = 0.3 * rng.next_gaussian();
      v[3] += center;
      data.push_back(v);
    }
    const PcaProjection p = pca_project(data);
    double cosine = 0.0;
    for (int j = 0; j < d; ++j) cosine += p.components[0][j] * axis[j];
    CHECK(std::abs(cosine) > 0.99);
  }
  SUBCASE("top eigenvalue and component match a power-iteration oracle") {
    RandomSource rng(88);
    std::vector<BigIssuesVector> data;
    for (int i = 0; i < 40; ++i) {
      BigIssuesVector v(10);
      for (auto& x : v) x = rng.next_gaussian();
      data.push_back(v);
    }
    const PcaProjection p = pca_project(data);
    const auto cov = sample_covariance(data);
    const auto [top_value, top_vector] = power_iteration(cov);
    CHECK(p.explained_variance[0] == doctest::Approx(top_value).epsilon(1e-8));
    double cosine = 0.0;
    for (std::size_t j = 0; j < top_vector.size(); ++j) cosine += p.components[0][j] * top_vector[j];
    CHECK(std::abs(cosine) == doctest::Approx(1.0).epsilon(1e-6));
  }
  SUBCASE("components are orthonormal and projections reproduce explained variance") {
    RandomSource rng(99);
    std::vector<BigIssuesVector> data;
    for (int i = 0; i < 50; ++i) {
      BigIssuesVector v(8);
      for (auto& x : v) x = rng.next_gaussian() * (1.0 + (&x - v.data()));
      data.push_back(v);
    }
    const PcaProjection p = pca_project(data);
    double norm0 = 0.0;
    double norm1 = 0.0;
    double dot = 0.0;
    for (std::size_t j = 0; j < p.components[0].size(); ++j) {
      norm0 += p.components[0][j] * p.components[0][j];
      norm1 += p.components[1][j] * p.components[1][j];
      dot += p.components[0][j] * p.components[1][j];
    }
    CHECK(norm0 == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(norm1 == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(std::abs(dot) < 1e-8);
    // Variance of the projected coordinates equals the eigenvalues.
    for (int comp = 0; comp < 2; ++comp) {
      double mean = 0.0;
      for (const auto& row : p.projected) mean += row[comp];
      mean /= static_cast<double>(p.projected.size());
      double var = 0.0;
      for (const auto& row : p.projected) var += (row[comp] - mean) * (row[comp] - mean);
      var /= static_cast<double>(p.projected.size() - 1);
      CHECK(var == doctest::Approx(p.explained_variance[comp]).epsilon(1e-8));
    }
    // Residual variance: trace of covariance minus the explained pair.
    const auto cov = sample_covariance(data);
    double trace = 0.0;
    for (std::size_t j = 0; j < cov.size(); ++j) trace += cov[j][j];
    double reconstruction_error = 0.0;
    std::vector<double> mean(cov.size(), 0.0);
    for (const auto& row : data) {
      for (std::size_t j = 0; j < mean.size(); ++j) mean[j] += row[j];
    }
    for (auto& m : mean) m /= static_cast<double>(data.size());
    for (std::size_t i = 0; i < data.size(); ++i) {
      for (std::size_t j = 0; j < mean.size(); ++j) {
        const double centered = data[i][j] - mean[j];
        const double reconstructed = p.projected[i][0] * p.components[0][j] +
                                     p.projected[i][1] * p.components[1][j];
        const double diff = centered - reconstructed;
        reconstruction_error += diff * diff;
      }
    }
    reconstruction_error /= static_cast<double>(data.size() - 1);
    CHECK(reconstruction_error ==
          doctest::Approx(trace - p.explained_variance[0] - p.explained_variance[1])
              .epsilon(1e-8));
  }
  SUBCASE("projection is invariant under input permutation") {
    RandomSource rng(123);
    std::vector<BigIssuesVector> data;
    for (int i = 0; i < 30; ++i) {
      BigIssuesVector v(6);
      for (auto& x : v) x = rng.next_gaussian();
      data.push_back(v);
    }
    const PcaProjection a = pca_project(data);
    std::vector<BigIssuesVector> reversed(data.rbegin(), data.rend());
    const PcaProjection b = pca_project(reversed);
    const std::size_t n = data.size();
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(a.projected[i][0] == doctest::Approx(b.projected[n - 1 - i][0]).epsilon(1e-9));
      CHECK(a.projected[i][1] == doctest::Approx(b.projected[n - 1 - i][1]).epsilon(1e-9));
    }
  }
}

TEST_CASE("ideology_classification_experiment separates planted users perfectly") {
  SyntheticParams params;
  params.n_debates = 30;
  params.voters_per_debate = 4;
  params.p_issue_align = 1.0;  // ideology deterministically fixes every issue choice
  params.issue_count = 8;
  params.seed = 99;
  const Corpus corpus = generate_synthetic_corpus(params);

  CvConfig cv;
  cv.seed = 5;
  cv.grid.c_grid = {0.01, 1.0, 100.0};
  const IdeologyExperimentReport report = ideology_classification_experiment(
      corpus, IdeologyKind::Political, {"Conservative", "Liberal"}, cv);
  CHECK(report.cv.mean_accuracy == doctest::Approx(1.0));
  CHECK(report.majority_accuracy < 1.0);
  CHECK(report.user_count == static_cast<int>(corpus.users.size()));

  SUBCASE("insufficient class counts throw") {
    CHECK_THROWS_AS(ideology_classification_experiment(corpus, IdeologyKind::Political,
                                                       {"Conservative", "Green"}, cv),
                    BeliefError);
  }
}
