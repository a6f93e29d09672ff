#pragma once

#include <iosfwd>

#include "persuade/config.hpp"

namespace persuade {

// Command implementations behind the CLI subcommands. Each returns one of
// the exit codes in config.hpp and writes its artifacts under
// config.out_dir. `out` receives the human-readable summary.

int cmd_ingest(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_analyze_votes(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_encode_beliefs(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_pca(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_classify_ideology(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_run_task(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_ceiling(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_gen_synthetic(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace persuade
