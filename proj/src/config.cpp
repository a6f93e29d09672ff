#include "persuade/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace persuade {

LexiconSet RunConfig::load_lexicons() const {
  return lexicon_dir.empty() ? LexiconSet::builtin() : LexiconSet::load_directory(lexicon_dir);
}

namespace {

std::string trim(std::string_view s) {
  std::size_t first = 0;
  std::size_t last = s.size();
  while (first < last && std::isspace(static_cast<unsigned char>(s[first])) != 0) ++first;
  while (last > first && std::isspace(static_cast<unsigned char>(s[last - 1])) != 0) --last;
  return std::string(s.substr(first, last - first));
}

std::vector<std::string> split(const std::string& value, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = value.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(trim(value.substr(start)));
      break;
    }
    out.push_back(trim(value.substr(start, pos - start)));
    start = pos + 1;
  }
  return out;
}

int to_int(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const int parsed = std::stoi(value, &used);
    if (used != value.size()) throw std::invalid_argument("");
    return parsed;
  } catch (...) {
    throw std::invalid_argument("config key '" + key + "' needs an integer, got '" + value + "'");
  }
}

double to_double(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double parsed = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument("");
    return parsed;
  } catch (...) {
    throw std::invalid_argument("config key '" + key + "' needs a number, got '" + value + "'");
  }
}

std::uint64_t to_u64(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const unsigned long long parsed = std::stoull(value, &used);
    if (used != value.size()) throw std::invalid_argument("");
    return parsed;
  } catch (...) {
    throw std::invalid_argument("config key '" + key + "' needs an unsigned integer, got '" +
                                value + "'");
  }
}

bool to_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw std::invalid_argument("config key '" + key + "' needs true/false, got '" + value + "'");
}

void apply_key(RunConfig& c, const std::string& key, const std::string& value) {
  if (key == "debates") { c.debates_path = value; return; }
  if (key == "users") { c.users_path = value; return; }
  if (key == "votes") { c.votes_path = value; return; }
  if (key == "issue_catalog") { c.issue_catalog_path = value; return; }
  if (key == "lexicon_dir") { c.lexicon_dir = value; return; }
  if (key == "out_dir") { c.out_dir = value; return; }
  if (key == "mode") {
    if (value == "strict") { c.mode = IngestMode::Strict; return; }
    if (value == "lenient") { c.mode = IngestMode::Lenient; return; }
    throw std::invalid_argument("mode must be strict or lenient");
  }

  if (key == "weights.conduct" || key == "weights.spelling" || key == "weights.arguments" ||
      key == "weights.sources") {
    const int w = to_int(key, value);
    if (key == "weights.conduct") c.weights.weight[0] = w;
    if (key == "weights.spelling") c.weights.weight[1] = w;
    if (key == "weights.arguments") c.weights.weight[2] = w;
    if (key == "weights.sources") c.weights.weight[3] = w;
    c.weights.validate();
    return;
  }

  if (key == "task.kind") {
    // Resets category/pair/groups to that task's defaults; set this key
    // before any other task.* override.
    c.task_spec = parse_task_kind(value) == TaskKind::Task1Religious
                      ? TaskSpec::task1_defaults()
                      : TaskSpec::task2_defaults();
    c.task_spec_explicit = true;
    return;
  }
  if (key == "task.category") {
    c.task_spec.category_filter = value == "ALL" ? "" : value;
    c.task_spec_explicit = true;
    return;
  }
  if (key == "task.ideology_a") {
    c.task_spec.ideology_pair.first = value;
    c.task_spec_explicit = true;
    return;
  }
  if (key == "task.ideology_b") {
    c.task_spec.ideology_pair.second = value;
    c.task_spec_explicit = true;
    return;
  }
  if (key == "task.feature_groups") {
    c.task_spec.feature_groups = split(value, ',');
    c.task_spec_explicit = true;
    return;
  }

  if (key == "cv.outer_folds") { c.cv.outer_folds = to_int(key, value); return; }
  if (key == "cv.inner_folds") { c.cv.inner_folds = to_int(key, value); return; }
  if (key == "cv.seed") { c.cv.seed = to_u64(key, value); return; }
  if (key == "cv.folding") { c.cv.folding = parse_folding(value); return; }

  if (key == "grid.penalties") {
    c.cv.grid.penalties.clear();
    for (const auto& p : split(value, ',')) c.cv.grid.penalties.push_back(parse_penalty(p));
    return;
  }
  if (key == "grid.c_values") {
    c.cv.grid.c_grid.clear();
    for (const auto& v : split(value, ',')) {
      const double parsed = to_double(key, v);
      if (parsed <= 0.0) throw std::invalid_argument("grid.c_values must be positive");
      c.cv.grid.c_grid.push_back(parsed);
    }
    return;
  }
  if (key == "grid.tolerance") { c.cv.grid.tolerance = to_double(key, value); return; }
  if (key == "grid.max_iterations") { c.cv.grid.max_iterations = to_int(key, value); return; }

  if (key == "tfidf.min_df") { c.tfidf.min_document_frequency = to_int(key, value); return; }
  if (key == "tfidf.max_features") { c.tfidf.max_features = to_int(key, value); return; }

  if (key == "ablation.singletons") { c.ablation_singletons = to_bool(key, value); return; }
  if (key == "ablation.combos") {
    // name:group+group;name2:group
    c.ablation_combos.clear();
    if (trim(value).empty()) return;
    for (const auto& part : split(value, ';')) {
      const std::size_t colon = part.find(':');
      if (colon == std::string::npos) {
        throw std::invalid_argument("ablation.combos entries look like name:group+group");
      }
      std::vector<std::string> groups;
      for (const auto& g : split(part.substr(colon + 1), '+')) groups.push_back(g);
      c.ablation_combos.emplace_back(trim(part.substr(0, colon)), std::move(groups));
    }
    return;
  }

  if (key == "ideology.kind") { c.ideology_kind = parse_ideology_kind(value); return; }
  if (key == "ideology.a") { c.ideology_pair.first = value; return; }
  if (key == "ideology.b") { c.ideology_pair.second = value; return; }

  if (key == "synth.n_debates") { c.synth.n_debates = to_int(key, value); return; }
  if (key == "synth.voters_per_debate") { c.synth.voters_per_debate = to_int(key, value); return; }
  if (key == "synth.p_match") { c.synth.p_match = to_double(key, value); return; }
  if (key == "synth.p_issue_align") { c.synth.p_issue_align = to_double(key, value); return; }
  if (key == "synth.planted_kind") { c.synth.planted_kind = parse_ideology_kind(value); return; }
  if (key == "synth.political_a") { c.synth.political_pair.first = value; return; }
  if (key == "synth.political_b") { c.synth.political_pair.second = value; return; }
  if (key == "synth.religious_a") { c.synth.religious_pair.first = value; return; }
  if (key == "synth.religious_b") { c.synth.religious_pair.second = value; return; }
  if (key == "synth.categories") { c.synth.categories = split(value, ','); return; }
  if (key == "synth.issue_count") { c.synth.issue_count = to_int(key, value); return; }
  if (key == "synth.rounds") { c.synth.rounds_per_debate = to_int(key, value); return; }
  if (key == "synth.sentences") { c.synth.sentences_per_side_per_round = to_int(key, value); return; }
  if (key == "synth.seed") { c.synth.seed = to_u64(key, value); return; }
  if (key == "synth.politeness_pro") { c.synth.politeness_rate.pro = to_double(key, value); return; }
  if (key == "synth.politeness_con") { c.synth.politeness_rate.con = to_double(key, value); return; }
  if (key == "synth.evidence_pro") { c.synth.evidence_rate.pro = to_double(key, value); return; }
  if (key == "synth.evidence_con") { c.synth.evidence_rate.con = to_double(key, value); return; }
  if (key == "synth.swear_pro") { c.synth.swear_rate.pro = to_double(key, value); return; }
  if (key == "synth.swear_con") { c.synth.swear_rate.con = to_double(key, value); return; }
  if (key == "synth.p_follow_arguments") { c.synth.p_follow_arguments = to_double(key, value); return; }
  if (key == "synth.p_follow_sources") { c.synth.p_follow_sources = to_double(key, value); return; }
  if (key == "synth.p_follow_conduct") { c.synth.p_follow_conduct = to_double(key, value); return; }
  if (key == "synth.p_follow_spelling") { c.synth.p_follow_spelling = to_double(key, value); return; }

  throw std::invalid_argument("unknown config key '" + key + "'");
}

}  // namespace

void apply_config_override(RunConfig& config, const std::string& assignment) {
  const std::size_t eq = assignment.find('=');
  if (eq == std::string::npos) {
    throw std::invalid_argument("override must look like key=value: '" + assignment + "'");
  }
  apply_key(config, trim(assignment.substr(0, eq)), trim(assignment.substr(eq + 1)));
}

void apply_config_file(RunConfig& config, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    try {
      apply_config_override(config, text);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
}

}  // namespace persuade
