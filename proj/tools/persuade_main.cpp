#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "persuade/commands.hpp"

namespace {

using persuade::RunConfig;

struct GlobalArgs {
  std::string config_path;
  std::vector<std::string> overrides;
  bool strict = false;
  bool lenient = false;
  std::string out_dir;
  std::uint64_t seed = 0;
  bool seed_set = false;
};

RunConfig resolve(const GlobalArgs& args) {
  RunConfig config;
  if (!args.config_path.empty()) persuade::apply_config_file(config, args.config_path);
  for (const auto& assignment : args.overrides) {
    persuade::apply_config_override(config, assignment);
  }
  if (args.strict) config.mode = persuade::IngestMode::Strict;
  if (args.lenient) config.mode = persuade::IngestMode::Lenient;
  if (!args.out_dir.empty()) config.out_dir = args.out_dir;
  if (args.seed_set) {
    config.cv.seed = args.seed;
    config.synth.seed = args.seed;
  }
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"persuasion-prediction toolkit: debate corpora, prior-belief features,\n"
               "linguistic features, and ideology-controlled prediction tasks"};
  app.require_subcommand(1);

  GlobalArgs args;
  app.add_option("--config", args.config_path, "key = value configuration file");
  app.add_option("--set", args.overrides, "override a config key (key=value), repeatable");
  app.add_option("--out", args.out_dir, "output directory");
  auto* seed_opt = app.add_option("--seed", args.seed, "seed for cv and synthetic generation");
  auto* strict_flag = app.add_flag("--strict", args.strict, "strict ingestion (default)");
  app.add_flag("--lenient", args.lenient, "drop invalid records instead of failing")
      ->excludes(strict_flag);

  using Command = int (*)(const RunConfig&, std::ostream&, std::ostream&);
  const std::pair<const char*, Command> commands[] = {
      {"ingest", persuade::cmd_ingest},
      {"analyze-votes", persuade::cmd_analyze_votes},
      {"encode-beliefs", persuade::cmd_encode_beliefs},
      {"pca", persuade::cmd_pca},
      {"classify-ideology", persuade::cmd_classify_ideology},
      {"run-task", persuade::cmd_run_task},
      {"ceiling", persuade::cmd_ceiling},
      {"gen-synthetic", persuade::cmd_gen_synthetic},
  };
  const char* descriptions[] = {
      "load and validate a corpus, write a summary report",
      "vote-dimension correlation matrix and ranking",
      "export BigIssues one-hot vectors as CSV",
      "2-d PCA projection of BigIssues vectors per ideology pair",
      "predict ideology from BigIssues vectors (nested CV vs majority)",
      "build task instances and run the feature ablation",
      "language-only accuracy ceiling for the configured task",
      "generate a planted-effect synthetic corpus",
  };

  Command selected = nullptr;
  int i = 0;
  for (const auto& [name, fn] : commands) {
    CLI::App* sub = app.add_subcommand(name, descriptions[i++]);
    sub->fallthrough();  // global flags may follow the subcommand
    sub->callback([&selected, fn = fn]() { selected = fn; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? persuade::kExitOk : persuade::kExitUsage;
  }
  args.seed_set = seed_opt->count() > 0;

  try {
    const RunConfig config = resolve(args);
    return selected(config, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return persuade::kExitUsage;
  }
}
