#include "persuade/commands.hpp"
#include "persuade/config.hpp"

#include <doctest.h>
#include <sstream>

#include "helpers.hpp"
#include "persuade/report.hpp"

#include <nlohmann/json.hpp>

using namespace persuade;
using namespace persuade::testing;

namespace {

// Generates a small corpus on disk and returns a config pointing at it.
RunConfig generated_config(TempDir& dir, int debates = 30, std::uint64_t seed = 11) {
  RunConfig gen;
  gen.out_dir = dir.path().string();
  gen.synth.n_debates = debates;
  gen.synth.voters_per_debate = 4;
  gen.synth.seed = seed;
  std::ostringstream sink;
  REQUIRE(cmd_gen_synthetic(gen, sink, sink) == kExitOk);

  RunConfig config;
  config.debates_path = dir.file("debates.jsonl");
  config.users_path = dir.file("users.jsonl");
  config.votes_path = dir.file("votes.jsonl");
  config.issue_catalog_path = dir.file("issues.txt");
  config.out_dir = dir.path().string();
  return config;
}

}  // namespace

TEST_CASE("config file parsing with overrides") {
  TempDir dir("config");
  write_file(dir.file("run.conf"),
             "# sample\n"
             "debates = /tmp/d.jsonl\n"
             "cv.seed = 99\n"
             "cv.folding = grouped\n"
             "grid.c_values = 0.1, 10\n"
             "grid.penalties = l2\n"
             "task.kind = task2_political\n"
             "task.category = ALL\n"
             "ablation.combos = style:length+pronouns;user:opinion_similarity\n"
             "weights.sources = 2\n");
  RunConfig config;
  apply_config_file(config, dir.file("run.conf"));
  CHECK(config.debates_path == "/tmp/d.jsonl");
  CHECK(config.cv.seed == 99);
  CHECK(config.cv.folding == Folding::GroupedByDebate);
  CHECK(config.cv.grid.c_grid == std::vector<double>{0.1, 10.0});
  CHECK(config.cv.grid.penalties == std::vector<Penalty>{Penalty::L2});
  CHECK(config.task_spec.task == TaskKind::Task2Political);
  CHECK(config.task_spec.category_filter.empty());
  CHECK(config.task_spec.ideology_pair.first == "Conservative");
  REQUIRE(config.ablation_combos.size() == 2);
  CHECK(config.ablation_combos[0].first == "style");
  CHECK(config.ablation_combos[0].second == std::vector<std::string>{"length", "pronouns"});

  apply_config_override(config, "cv.seed=123");
  CHECK(config.cv.seed == 123);

  SUBCASE("unknown keys are rejected by name") {
    try {
      apply_config_override(config, "nope.key=1");
      FAIL("expected invalid_argument");
    } catch (const std::invalid_argument& e) {
      CHECK(std::string(e.what()).find("nope.key") != std::string::npos);
    }
  }
  SUBCASE("invalid weights rejected") {
    CHECK_THROWS_AS(apply_config_override(config, "weights.conduct=9"), std::invalid_argument);
  }
  SUBCASE("malformed override rejected") {
    CHECK_THROWS_AS(apply_config_override(config, "justkey"), std::invalid_argument);
  }
}

TEST_CASE("gen-synthetic then ingest round trips with exit 0") {
  TempDir dir("cli_roundtrip");
  RunConfig config = generated_config(dir);
  std::ostringstream out;
  std::ostringstream err;
  CHECK(cmd_ingest(config, out, err) == kExitOk);
  CHECK(out.str().find("debates: 30") != std::string::npos);
  const std::string report = read_file(dir.file("ingest_report.json"));
  const auto parsed = nlohmann::json::parse(report);
  CHECK(parsed["status"] == "ok");
  CHECK(parsed["counts"]["debates"] == 30);
  CHECK(parsed["validation"]["errors"] == 0);
}

TEST_CASE("ingest exits 2 on strict validation failure") {
  TempDir dir("cli_invalid");
  write_file(dir.file("debates.jsonl"), "{broken\n");
  write_file(dir.file("users.jsonl"), "");
  write_file(dir.file("votes.jsonl"), "");
  RunConfig config;
  config.debates_path = dir.file("debates.jsonl");
  config.users_path = dir.file("users.jsonl");
  config.votes_path = dir.file("votes.jsonl");
  config.out_dir = dir.path().string();
  std::ostringstream out;
  std::ostringstream err;
  CHECK(cmd_ingest(config, out, err) == kExitValidation);
  CHECK(err.str().find("malformed") != std::string::npos);
  SUBCASE("lenient mode drops the record and succeeds") {
    config.mode = IngestMode::Lenient;
    CHECK(cmd_ingest(config, out, err) == kExitOk);
  }
}

TEST_CASE("gen-synthetic is reproducible byte for byte") {
  TempDir dir_a("gen_a");
  TempDir dir_b("gen_b");
  (void)generated_config(dir_a, 15, 77);
  (void)generated_config(dir_b, 15, 77);
  for (const char* name : {"debates.jsonl", "users.jsonl", "votes.jsonl", "issues.txt"}) {
    CHECK(read_file(dir_a.file(name)) == read_file(dir_b.file(name)));
  }
}

TEST_CASE("gen-synthetic rejects invalid parameters with exit 1") {
  TempDir dir("gen_bad");
  RunConfig config;
  config.out_dir = dir.path().string();
  config.synth.p_match = 2.0;
  std::ostringstream out;
  std::ostringstream err;
  CHECK(cmd_gen_synthetic(config, out, err) == kExitUsage);
}

TEST_CASE("analyze-votes writes the labeled matrix") {
  TempDir dir("cli_votes");
  RunConfig config = generated_config(dir);
  std::ostringstream out;
  std::ostringstream err;
  CHECK(cmd_analyze_votes(config, out, err) == kExitOk);
  const std::string csv = read_file(dir.file("vote_correlations.csv"));
  CHECK(csv.find("label,CBC,CCA,CRS,CBSG,PBC,PCA,PRS,PBSG,MTP,CMV") != std::string::npos);
  CHECK(out.str().find("most correlated with total points: CCA") != std::string::npos);
}

TEST_CASE("encode-beliefs and pca emit CSVs") {
  TempDir dir("cli_beliefs");
  RunConfig config = generated_config(dir);
  std::ostringstream out;
  std::ostringstream err;
  CHECK(cmd_encode_beliefs(config, out, err) == kExitOk);
  const std::string encoded = read_file(dir.file("big_issues.csv"));
  CHECK(encoded.find("user_id,political_ideology,religious_ideology") == 0);

  CHECK(cmd_pca(config, out, err) == kExitOk);
  const std::string pca = read_file(dir.file("pca_projection.csv"));
  CHECK(pca.find("# explained_variance,") == 0);
  CHECK(pca.find("user_id,x,y,label") != std::string::npos);
}

TEST_CASE("classify-ideology reports both accuracies") {
  TempDir dir("cli_classify");
  RunConfig config = generated_config(dir, 40);
  config.cv.grid.c_grid = {0.1, 10.0};
  std::ostringstream out;
  std::ostringstream err;
  CHECK(cmd_classify_ideology(config, out, err) == kExitOk);
  const auto parsed = nlohmann::json::parse(read_file(dir.file("ideology_classification.json")));
  CHECK(parsed["majority_accuracy"].get<double>() < parsed["model_accuracy"].get<double>());
}

TEST_CASE("run-task produces JSON and Markdown reports") {
  TempDir dir("cli_task");
  RunConfig config = generated_config(dir, 40);
  config.cv.grid.c_grid = {0.1, 10.0};
  config.cv.seed = 3;
  config.ablation_singletons = false;
  apply_config_override(config, "task.kind=task2_political");
  apply_config_override(config, "task.category=ALL");
  apply_config_override(config,
                        "task.feature_groups=matching_political,opinion_similarity,length");
  std::ostringstream out;
  std::ostringstream err;
  CHECK(cmd_run_task(config, out, err) == kExitOk);
  const auto parsed = nlohmann::json::parse(read_file(dir.file("task_report.json")));
  CHECK(parsed["instance_count"].get<int>() > 0);
  CHECK(parsed["rows"].size() == 3);  // user-only, linguistic-only, combined
  const std::string markdown = read_file(dir.file("task_report.md"));
  CHECK(markdown.find("| Majority |") != std::string::npos);
  CHECK(markdown.find("maximum accuracy achievable with language features only") !=
        std::string::npos);
  const std::string weights = read_file(dir.file("task_weights.tsv"));
  CHECK(weights.find("feature\tweight") == 0);
  CHECK(weights.find("(intercept)\t") != std::string::npos);

  SUBCASE("empty instance set exits 3") {
    apply_config_override(config, "task.ideology_a=Martian");
    CHECK(cmd_run_task(config, out, err) == kExitEmptyExperiment);
  }
}

TEST_CASE("ceiling command") {
  TempDir dir("cli_ceiling");
  RunConfig config = generated_config(dir, 25);
  apply_config_override(config, "task.kind=task1_religious");
  apply_config_override(config, "task.category=ALL");
  std::ostringstream out;
  std::ostringstream err;
  CHECK(cmd_ceiling(config, out, err) == kExitOk);
  const auto parsed = nlohmann::json::parse(read_file(dir.file("ceiling.json")));
  CHECK(parsed["language_only_ceiling"].get<double>() > 0.0);
  CHECK(parsed["language_only_ceiling"].get<double>() <= 1.0);
}

TEST_CASE("reports are byte-identical modulo the meta block") {
  TempDir dir_a("det_a");
  TempDir dir_b("det_b");
  for (TempDir* dir : {&dir_a, &dir_b}) {
    RunConfig config = generated_config(*dir, 20, 5);
    config.cv.grid.c_grid = {1.0};
    config.cv.seed = 17;
    apply_config_override(config, "task.kind=task2_political");
    apply_config_override(config, "task.category=ALL");
    apply_config_override(config, "task.feature_groups=matching_political,length");
    config.ablation_singletons = false;
    std::ostringstream sink;
    REQUIRE(cmd_run_task(config, sink, sink) == kExitOk);
  }
  auto stripped = [](const std::string& path) {
    auto parsed = nlohmann::json::parse(read_file(path));
    parsed.erase("meta");
    return parsed.dump();
  };
  CHECK(stripped(dir_a.file("task_report.json")) == stripped(dir_b.file("task_report.json")));
  CHECK(read_file(dir_a.file("task_report.md")) == read_file(dir_b.file("task_report.md")));
}
