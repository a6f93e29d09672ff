#pragma once

#include <map>
#include <string>
#include <vector>

#include "persuade/corpus.hpp"
#include "persuade/jsonl.hpp"
#include "persuade/learn.hpp"
#include "persuade/synthetic.hpp"
#include "persuade/tasks.hpp"
#include "persuade/textfeat.hpp"

namespace persuade {

/// Resolved run configuration: a flat `key = value` file plus command-line
/// overrides. Every key is documented in docs/config.md.
struct RunConfig {
  // Paths
  std::string debates_path;
  std::string users_path;
  std::string votes_path;
  std::string issue_catalog_path;
  std::string lexicon_dir;  // empty = builtin demonstration lexicons
  std::string out_dir = ".";

  IngestMode mode = IngestMode::Strict;
  PointWeights weights;

  TaskSpec task_spec = TaskSpec::task1_defaults();
  bool task_spec_explicit = false;  // true once any task.* key is set

  CvConfig cv;
  TfidfOptions tfidf;
  bool ablation_singletons = true;
  std::vector<std::pair<std::string, std::vector<std::string>>> ablation_combos;

  // classify-ideology / pca
  IdeologyKind ideology_kind = IdeologyKind::Political;
  std::pair<std::string, std::string> ideology_pair{"Conservative", "Liberal"};

  SyntheticParams synth;

  LexiconSet load_lexicons() const;
};

/// Parses `key = value` lines ('#' comments, blank lines ignored) and applies
/// them onto `config`. Unknown keys throw std::invalid_argument naming the
/// key; values are validated as they are applied.
void apply_config_file(RunConfig& config, const std::string& path);

/// Applies one "key=value" override (the --set flag).
void apply_config_override(RunConfig& config, const std::string& assignment);

// Exit codes shared by the CLI and the command implementations.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitEmptyExperiment = 3;

}  // namespace persuade
