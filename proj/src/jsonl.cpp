#include "persuade/jsonl.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace persuade {

using nlohmann::json;
namespace fs = std::filesystem;

std::string ValidationIssue::format() const {
  std::ostringstream os;
  os << (severity == Severity::Error ? "error" : "warning") << ": " << file;
  if (line > 0) os << ":" << line;
  os << ": " << message;
  return os.str();
}

int ValidationReport::error_count() const {
  return static_cast<int>(std::count_if(issues.begin(), issues.end(), [](const auto& i) {
    return i.severity == ValidationIssue::Severity::Error;
  }));
}

int ValidationReport::warning_count() const {
  return static_cast<int>(issues.size()) - error_count();
}

ValidationError::ValidationError(const std::string& message, ValidationReport report)
    : std::runtime_error(message), report_(std::move(report)) {}

namespace {

struct LineRecord {
  int line = 0;
  json value;
};

// Reads a .jsonl file; malformed lines become errors (with line numbers) and
// are skipped.
std::vector<LineRecord> read_jsonl(const std::string& path, ValidationReport& report) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::vector<LineRecord> records;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json value = json::parse(line, nullptr, false);
    if (value.is_discarded()) {
      report.issues.push_back({ValidationIssue::Severity::Error, path, line_no,
                               "malformed JSON line"});
      continue;
    }
    records.push_back({line_no, std::move(value)});
  }
  return records;
}

const json* get_field(const json& obj, const char* key, const char* kind,
                      const std::string& path, int line, ValidationReport& report,
                      bool required = true) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    if (required) {
      report.issues.push_back({ValidationIssue::Severity::Error, path, line,
                               std::string(kind) + " record missing field '" + key + "'"});
    }
    return nullptr;
  }
  return &*it;
}

bool require_string(const json* field, const char* key, const char* kind,
                    const std::string& path, int line, ValidationReport& report,
                    std::string& out) {
  if (field == nullptr) return false;
  if (!field->is_string()) {
    report.issues.push_back({ValidationIssue::Severity::Error, path, line,
                             std::string(kind) + " field '" + key + "' must be a string"});
    return false;
  }
  out = field->get<std::string>();
  return true;
}

}  // namespace

std::vector<std::string> load_issue_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open issue catalog: " + path);
  std::vector<std::string> catalog;
  std::set<std::string> seen;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t");
    std::string name = line.substr(first, last - first + 1);
    if (name.front() == '#') continue;
    if (!seen.insert(name).second) {
      throw std::runtime_error("duplicate issue in catalog: '" + name + "'");
    }
    catalog.push_back(std::move(name));
  }
  return catalog;
}

void save_issue_catalog(const std::vector<std::string>& catalog, const std::string& path) {
  std::ostringstream os;
  for (const auto& issue : catalog) os << issue << "\n";
  atomic_write_file(path, os.str());
}

void atomic_write_file(const std::string& path, const std::string& content) {
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write file: " + tmp.string());
    out << content;
  }
  fs::rename(tmp, target);
}

LoadResult load_corpus(const std::string& debates_path, const std::string& users_path,
                       const std::string& votes_path, IngestMode mode,
                       const std::string& issue_catalog_path) {
  LoadResult result;
  ValidationReport& report = result.report;
  Corpus& corpus = result.corpus;

  // Users first: debates reference them.
  std::set<std::string> issues_seen;
  for (const LineRecord& rec : read_jsonl(users_path, report)) {
    const json& o = rec.value;
    UserProfile user;
    bool ok = require_string(get_field(o, "user_id", "user", users_path, rec.line, report),
                             "user_id", "user", users_path, rec.line, report, user.user_id);
    if (!ok) {
      ++report.dropped_users;
      continue;
    }
    for (const char* key : {"political_ideology", "religious_ideology"}) {
      const json* field = get_field(o, key, "user", users_path, rec.line, report, false);
      if (field == nullptr || field->is_null()) continue;
      if (!field->is_string()) {
        report.issues.push_back({ValidationIssue::Severity::Error, users_path, rec.line,
                                 std::string("user field '") + key + "' must be string or null"});
        ok = false;
        continue;
      }
      if (std::string_view(key) == "political_ideology") {
        user.political_ideology = field->get<std::string>();
      } else {
        user.religious_ideology = field->get<std::string>();
      }
    }
    if (const json* field = get_field(o, "big_issues", "user", users_path, rec.line, report,
                                      false)) {
      if (!field->is_object()) {
        report.issues.push_back({ValidationIssue::Severity::Error, users_path, rec.line,
                                 "user field 'big_issues' must be an object"});
        ok = false;
      } else {
        for (const auto& [issue, opinion] : field->items()) {
          if (!opinion.is_string()) {
            report.issues.push_back({ValidationIssue::Severity::Error, users_path, rec.line,
                                     "opinion for issue '" + issue + "' must be a string"});
            ok = false;
            continue;
          }
          try {
            user.big_issue_opinions[issue] = parse_opinion(opinion.get<std::string>());
            issues_seen.insert(issue);
          } catch (const std::invalid_argument& e) {
            report.issues.push_back(
                {ValidationIssue::Severity::Error, users_path, rec.line, e.what()});
            ok = false;
          }
        }
      }
    }
    if (const json* field = get_field(o, "extra", "user", users_path, rec.line, report, false)) {
      if (field->is_object()) {
        for (const auto& [key, value] : field->items()) {
          user.extra[key] = value.is_string() ? value.get<std::string>() : value.dump();
        }
      }
    }
    if (!ok) {
      ++report.dropped_users;
      continue;
    }
    if (corpus.users.count(user.user_id) != 0) {
      report.issues.push_back({ValidationIssue::Severity::Error, users_path, rec.line,
                               "duplicate user_id '" + user.user_id + "'"});
      ++report.dropped_users;
      continue;
    }
    corpus.users.emplace(user.user_id, std::move(user));
  }

  for (const LineRecord& rec : read_jsonl(debates_path, report)) {
    const json& o = rec.value;
    Debate debate;
    bool ok = true;
    ok &= require_string(get_field(o, "debate_id", "debate", debates_path, rec.line, report),
                         "debate_id", "debate", debates_path, rec.line, report, debate.debate_id);
    ok &= require_string(get_field(o, "category", "debate", debates_path, rec.line, report),
                         "category", "debate", debates_path, rec.line, report, debate.category);
    ok &= require_string(get_field(o, "claim", "debate", debates_path, rec.line, report), "claim",
                         "debate", debates_path, rec.line, report, debate.claim);
    ok &= require_string(get_field(o, "pro_debater", "debate", debates_path, rec.line, report),
                         "pro_debater", "debate", debates_path, rec.line, report,
                         debate.pro_debater);
    ok &= require_string(get_field(o, "con_debater", "debate", debates_path, rec.line, report),
                         "con_debater", "debate", debates_path, rec.line, report,
                         debate.con_debater);
    const json* rounds = get_field(o, "rounds", "debate", debates_path, rec.line, report);
    if (rounds != nullptr && rounds->is_array()) {
      int previous_index = 0;
      for (const json& r : *rounds) {
        Round round;
        const json* idx = get_field(r, "index", "round", debates_path, rec.line, report);
        if (idx == nullptr || !idx->is_number_integer()) {
          report.issues.push_back({ValidationIssue::Severity::Error, debates_path, rec.line,
                                   "round index must be an integer"});
          ok = false;
          break;
        }
        round.index = idx->get<int>();
        if (round.index <= previous_index) {
          report.issues.push_back({ValidationIssue::Severity::Error, debates_path, rec.line,
                                   "round indices must be strictly increasing and >= 1"});
          ok = false;
          break;
        }
        previous_index = round.index;
        require_string(get_field(r, "pro_text", "round", debates_path, rec.line, report),
                       "pro_text", "round", debates_path, rec.line, report, round.pro_text);
        require_string(get_field(r, "con_text", "round", debates_path, rec.line, report),
                       "con_text", "round", debates_path, rec.line, report, round.con_text);
        debate.rounds.push_back(std::move(round));
      }
    } else if (rounds != nullptr) {
      report.issues.push_back({ValidationIssue::Severity::Error, debates_path, rec.line,
                               "debate field 'rounds' must be an array"});
      ok = false;
    } else {
      ok = false;
    }
    if (ok && (debate.rounds.empty() || debate.rounds.size() > 5)) {
      report.issues.push_back({ValidationIssue::Severity::Error, debates_path, rec.line,
                               "debate '" + debate.debate_id + "' must have 1..5 rounds"});
      ok = false;
    }
    if (ok && debate.pro_debater == debate.con_debater) {
      report.issues.push_back({ValidationIssue::Severity::Error, debates_path, rec.line,
                               "debate '" + debate.debate_id + "' has identical debaters"});
      ok = false;
    }
    if (!ok) {
      ++report.dropped_debates;
      continue;
    }
    if (corpus.debates.count(debate.debate_id) != 0) {
      report.issues.push_back({ValidationIssue::Severity::Error, debates_path, rec.line,
                               "duplicate debate_id '" + debate.debate_id + "'"});
      ++report.dropped_debates;
      continue;
    }
    corpus.debates.emplace(debate.debate_id, std::move(debate));
  }

  std::set<std::pair<std::string, std::string>> vote_keys;
  for (const LineRecord& rec : read_jsonl(votes_path, report)) {
    const json& o = rec.value;
    Vote vote;
    bool ok = true;
    ok &= require_string(get_field(o, "voter_id", "vote", votes_path, rec.line, report),
                         "voter_id", "vote", votes_path, rec.line, report, vote.voter_id);
    ok &= require_string(get_field(o, "debate_id", "vote", votes_path, rec.line, report),
                         "debate_id", "vote", votes_path, rec.line, report, vote.debate_id);
    for (const char* key : {"pre_stance", "post_stance"}) {
      std::string text;
      if (require_string(get_field(o, key, "vote", votes_path, rec.line, report), key, "vote",
                         votes_path, rec.line, report, text)) {
        try {
          (std::string_view(key) == "pre_stance" ? vote.pre_stance : vote.post_stance) =
              parse_stance(text);
        } catch (const std::invalid_argument& e) {
          report.issues.push_back(
              {ValidationIssue::Severity::Error, votes_path, rec.line, e.what()});
          ok = false;
        }
      } else {
        ok = false;
      }
    }
    const json* allocations = get_field(o, "allocations", "vote", votes_path, rec.line, report);
    if (allocations != nullptr && allocations->is_object()) {
      std::array<bool, kVoteDimensionCount> present{};
      for (const auto& [dim_text, alloc] : allocations->items()) {
        try {
          const VoteDimension dim = parse_vote_dimension(dim_text);
          if (!alloc.is_string()) throw std::invalid_argument("allocation must be a string");
          vote.allocations[static_cast<int>(dim)] = parse_stance(alloc.get<std::string>());
          present[static_cast<int>(dim)] = true;
        } catch (const std::invalid_argument& e) {
          report.issues.push_back(
              {ValidationIssue::Severity::Error, votes_path, rec.line, e.what()});
          ok = false;
        }
      }
      for (int d = 0; d < kVoteDimensionCount; ++d) {
        if (!present[d]) {
          report.issues.push_back({ValidationIssue::Severity::Error, votes_path, rec.line,
                                   std::string("vote missing allocation for dimension ") +
                                       to_string(static_cast<VoteDimension>(d))});
          ok = false;
        }
      }
    } else {
      ok = false;
    }
    if (!ok) {
      ++report.dropped_votes;
      continue;
    }
    if (corpus.debates.count(vote.debate_id) == 0) {
      report.issues.push_back({ValidationIssue::Severity::Error, votes_path, rec.line,
                               "vote by '" + vote.voter_id + "' references unknown debate '" +
                                   vote.debate_id + "'"});
      ++report.dropped_votes;
      continue;
    }
    if (!vote_keys.insert({vote.voter_id, vote.debate_id}).second) {
      report.issues.push_back({ValidationIssue::Severity::Error, votes_path, rec.line,
                               "duplicate vote by '" + vote.voter_id + "' on debate '" +
                                   vote.debate_id + "'"});
      ++report.dropped_votes;
      continue;
    }
    corpus.votes.push_back(std::move(vote));
  }

  // Debater profiles: flagged, never fatal.
  std::set<std::string> missing;
  for (const auto& [id, debate] : corpus.debates) {
    for (const std::string& debater : {debate.pro_debater, debate.con_debater}) {
      if (corpus.users.count(debater) == 0 && missing.insert(debater).second) {
        report.issues.push_back({ValidationIssue::Severity::Warning, debates_path, 0,
                                 "debater '" + debater + "' has no user profile"});
        report.debaters_missing_profile.push_back(debater);
      }
    }
  }

  if (!issue_catalog_path.empty()) {
    corpus.issue_catalog = load_issue_catalog(issue_catalog_path);
  } else {
    corpus.issue_catalog.assign(issues_seen.begin(), issues_seen.end());
    if (!corpus.issue_catalog.empty()) {
      report.issues.push_back({ValidationIssue::Severity::Warning, users_path, 0,
                               "no issue catalog supplied; derived sorted union of " +
                                   std::to_string(corpus.issue_catalog.size()) +
                                   " issue names from user profiles"});
    }
  }

  if (mode == IngestMode::Strict && report.has_errors()) {
    std::string message = "corpus validation failed with " +
                          std::to_string(report.error_count()) + " error(s); first: ";
    for (const auto& issue : report.issues) {
      if (issue.severity == ValidationIssue::Severity::Error) {
        message += issue.format();
        break;
      }
    }
    throw ValidationError(message, std::move(report));
  }
  return result;
}

namespace {

json debate_to_json(const Debate& d) {
  json rounds = json::array();
  for (const Round& r : d.rounds) {
    rounds.push_back({{"index", r.index}, {"pro_text", r.pro_text}, {"con_text", r.con_text}});
  }
  return json{{"debate_id", d.debate_id},     {"category", d.category},
              {"claim", d.claim},             {"pro_debater", d.pro_debater},
              {"con_debater", d.con_debater}, {"rounds", std::move(rounds)}};
}

json user_to_json(const UserProfile& u) {
  json big_issues = json::object();
  for (const auto& [issue, opinion] : u.big_issue_opinions) big_issues[issue] = to_string(opinion);
  json extra = json::object();
  for (const auto& [key, value] : u.extra) extra[key] = value;
  json o{{"user_id", u.user_id},
         {"political_ideology", nullptr},
         {"religious_ideology", nullptr},
         {"big_issues", std::move(big_issues)},
         {"extra", std::move(extra)}};
  if (u.political_ideology) o["political_ideology"] = *u.political_ideology;
  if (u.religious_ideology) o["religious_ideology"] = *u.religious_ideology;
  return o;
}

json vote_to_json(const Vote& v) {
  json allocations = json::object();
  for (int d = 0; d < kVoteDimensionCount; ++d) {
    allocations[to_string(static_cast<VoteDimension>(d))] = to_string(v.allocations[d]);
  }
  return json{{"voter_id", v.voter_id},
              {"debate_id", v.debate_id},
              {"pre_stance", to_string(v.pre_stance)},
              {"post_stance", to_string(v.post_stance)},
              {"allocations", std::move(allocations)}};
}

}  // namespace

void save_corpus(const Corpus& corpus, const std::string& debates_path,
                 const std::string& users_path, const std::string& votes_path) {
  std::ostringstream debates;
  for (const auto& [id, debate] : corpus.debates) debates << debate_to_json(debate).dump() << "\n";
  atomic_write_file(debates_path, debates.str());

  std::ostringstream users;
  for (const auto& [id, user] : corpus.users) users << user_to_json(user).dump() << "\n";
  atomic_write_file(users_path, users.str());

  std::ostringstream votes;
  for (const Vote& vote : corpus.votes) votes << vote_to_json(vote).dump() << "\n";
  atomic_write_file(votes_path, votes.str());
}

}  // namespace persuade
