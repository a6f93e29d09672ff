#pragma once

#include <filesystem>
#include <fstream>
#include <string>

#include "persuade/corpus.hpp"

namespace persuade::testing {

inline Vote make_vote(const std::string& voter, const std::string& debate, Stance pre, Stance post,
                      Allocation conduct, Allocation spelling, Allocation arguments,
                      Allocation sources) {
  Vote vote;
  vote.voter_id = voter;
  vote.debate_id = debate;
  vote.pre_stance = pre;
  vote.post_stance = post;
  vote.allocations[static_cast<int>(VoteDimension::Conduct)] = conduct;
  vote.allocations[static_cast<int>(VoteDimension::SpellingGrammar)] = spelling;
  vote.allocations[static_cast<int>(VoteDimension::ConvincingArguments)] = arguments;
  vote.allocations[static_cast<int>(VoteDimension::ReliableSources)] = sources;
  return vote;
}

inline Vote uniform_vote(const std::string& voter, const std::string& debate, Allocation all) {
  return make_vote(voter, debate, Stance::Tie, Stance::Tie, all, all, all, all);
}

inline Debate make_debate(const std::string& id, const std::string& pro, const std::string& con,
                          const std::string& category = "Politics") {
  Debate debate;
  debate.debate_id = id;
  debate.category = category;
  debate.claim = "claim for " + id;
  debate.pro_debater = pro;
  debate.con_debater = con;
  debate.rounds.push_back({1, "pro round one text", "con round one text"});
  return debate;
}

// Unique scratch directory removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    path_ = std::filesystem::temp_directory_path() /
            ("persuade_test_" + tag + "_" + std::to_string(counter_++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  std::string file(const std::string& name) const { return (path_ / name).string(); }
  const std::filesystem::path& path() const { return path_; }

 private:
  static inline int counter_ = 0;
  std::filesystem::path path_;
};

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace persuade::testing
