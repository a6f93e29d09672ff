#include "persuade/textfeat.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace persuade {

namespace fs = std::filesystem;

SideText side_text(const Debate& debate, Stance side) {
  std::string text;
  bool first = true;
  for (const Round& round : debate.rounds) {
    if (!first) text += '\n';
    text += side == Stance::Pro ? round.pro_text : round.con_text;
    first = false;
  }
  return {side, std::move(text)};
}

namespace {

bool is_word_byte(unsigned char c) { return std::isalnum(c) != 0 || c >= 0x80; }
bool is_space_byte(unsigned char c) { return std::isspace(c) != 0; }

bool ieq_prefix(const std::string& s, std::size_t i, const char* prefix) {
  const std::size_t len = std::strlen(prefix);
  if (i + len > s.size()) return false;
  for (std::size_t k = 0; k < len; ++k) {
    if (std::tolower(static_cast<unsigned char>(s[i + k])) != prefix[k]) return false;
  }
  return true;
}

bool url_starts_at(const std::string& s, std::size_t i) {
  return ieq_prefix(s, i, "http://") || ieq_prefix(s, i, "https://") || ieq_prefix(s, i, "www.");
}

std::string lowered(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

std::vector<std::string> tokenize(const std::string& text) {
  std::vector<std::string> tokens;
  const std::size_t n = text.size();
  std::size_t i = 0;
  while (i < n) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (is_space_byte(c)) {
      ++i;
      continue;
    }
    if (url_starts_at(text, i)) {
      std::size_t j = i;
      while (j < n && !is_space_byte(static_cast<unsigned char>(text[j]))) ++j;
      tokens.push_back(lowered(std::string_view(text).substr(i, j - i)));
      i = j;
      continue;
    }
    if (is_word_byte(c)) {
      std::size_t j = i + 1;
      while (j < n) {
        const unsigned char cj = static_cast<unsigned char>(text[j]);
        if (is_word_byte(cj)) {
          ++j;
          continue;
        }
        const bool has_next = j + 1 < n;
        if (cj == '\'' && has_next && is_word_byte(static_cast<unsigned char>(text[j + 1]))) {
          ++j;
          continue;
        }
        if ((cj == '.' || cj == ',') && has_next &&
            std::isdigit(static_cast<unsigned char>(text[j - 1])) != 0 &&
            std::isdigit(static_cast<unsigned char>(text[j + 1])) != 0) {
          ++j;
          continue;
        }
        break;
      }
      tokens.push_back(lowered(std::string_view(text).substr(i, j - i)));
      i = j;
      continue;
    }
    tokens.push_back(std::string(1, static_cast<char>(std::tolower(c))));
    ++i;
  }
  return tokens;
}

bool is_url_token(std::string_view token) {
  return token.starts_with("http://") || token.starts_with("https://") ||
         token.starts_with("www.");
}

bool is_number_token(std::string_view token) {
  if (token.empty() || std::isdigit(static_cast<unsigned char>(token[0])) == 0) return false;
  for (const char ch : token) {
    if (std::isdigit(static_cast<unsigned char>(ch)) == 0 && ch != '.' && ch != ',') return false;
  }
  return true;
}

bool is_punctuation_token(std::string_view token) {
  for (const char ch : token) {
    const unsigned char c = static_cast<unsigned char>(ch);
    if (c >= 0x80 || std::ispunct(c) == 0) return false;
  }
  return !token.empty();
}

// --- LexiconSet --------------------------------------------------------------

void LexiconSet::validate() const {
  auto check_lower = [](const std::string& word, const char* where) {
    for (const char ch : word) {
      if (std::isupper(static_cast<unsigned char>(ch)) != 0) {
        throw std::invalid_argument(std::string("lexicon word not lowercase in ") + where +
                                    ": '" + word + "'");
      }
    }
  };
  for (const auto& [w, e] : subjectivity) check_lower(w, "subjectivity");
  for (const auto& [w, c] : connotation) check_lower(w, "connotation");
  for (const auto& w : swear) check_lower(w, "swear");
  for (const auto& w : modal_verbs) check_lower(w, "modal_verbs");
  for (const auto* set : {&pronouns_first, &pronouns_second, &pronouns_third}) {
    for (const auto& w : *set) check_lower(w, "pronouns");
  }
  std::set<std::string> categories;
  for (const auto& [category, pattern] : argument_patterns) {
    if (!categories.insert(category).second) {
      throw std::invalid_argument("duplicate argument-pattern category '" + category + "'");
    }
    try {
      std::regex re(pattern, std::regex::ECMAScript);
    } catch (const std::regex_error& e) {
      throw std::invalid_argument("argument pattern '" + category +
                                  "' does not compile: " + e.what());
    }
  }
}

namespace {

std::vector<std::string> read_word_lines(const fs::path& path) {
  std::ifstream in(path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t");
    out.push_back(line.substr(first, last - first + 1));
  }
  return out;
}

std::vector<std::vector<std::string>> read_tsv(const fs::path& path) {
  std::vector<std::vector<std::string>> rows;
  for (std::string& line : read_word_lines(path)) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
      const std::size_t tab = line.find('\t', start);
      if (tab == std::string::npos) {
        fields.push_back(line.substr(start));
        break;
      }
      fields.push_back(line.substr(start, tab - start));
      start = tab + 1;
    }
    rows.push_back(std::move(fields));
  }
  return rows;
}

}  // namespace

LexiconSet LexiconSet::load_directory(const std::string& dir) {
  LexiconSet lex = LexiconSet::builtin();
  const fs::path base(dir);
  if (!fs::is_directory(base)) {
    throw std::invalid_argument("lexicon directory does not exist: " + dir);
  }

  if (fs::exists(base / "subjectivity.tsv")) {
    lex.subjectivity.clear();
    for (const auto& row : read_tsv(base / "subjectivity.tsv")) {
      if (row.size() != 3) throw std::invalid_argument("subjectivity.tsv rows need 3 fields");
      SubjectivityEntry entry;
      if (row[1] == "positive") {
        entry.polarity = WordPolarity::Positive;
      } else if (row[1] == "negative") {
        entry.polarity = WordPolarity::Negative;
      } else {
        throw std::invalid_argument("unknown polarity '" + row[1] + "'");
      }
      if (row[2] == "strong") {
        entry.strength = SubjStrength::Strong;
      } else if (row[2] == "weak") {
        entry.strength = SubjStrength::Weak;
      } else {
        throw std::invalid_argument("unknown strength '" + row[2] + "'");
      }
      lex.subjectivity[row[0]] = entry;
    }
  }
  if (fs::exists(base / "connotation.tsv")) {
    lex.connotation.clear();
    for (const auto& row : read_tsv(base / "connotation.tsv")) {
      if (row.size() != 2) throw std::invalid_argument("connotation.tsv rows need 2 fields");
      Connotation c;
      if (row[1] == "positive") {
        c = Connotation::Positive;
      } else if (row[1] == "negative") {
        c = Connotation::Negative;
      } else if (row[1] == "neutral") {
        c = Connotation::Neutral;
      } else {
        throw std::invalid_argument("unknown connotation class '" + row[1] + "'");
      }
      lex.connotation[row[0]] = c;
    }
  }
  if (fs::exists(base / "argpatterns.tsv")) {
    lex.argument_patterns.clear();
    for (const auto& row : read_tsv(base / "argpatterns.tsv")) {
      if (row.size() != 2) throw std::invalid_argument("argpatterns.tsv rows need 2 fields");
      lex.argument_patterns.emplace_back(row[0], row[1]);
    }
  }

  auto load_set = [&](const char* file, std::set<std::string>& target) {
    if (!fs::exists(base / file)) return;
    target.clear();
    for (auto& word : read_word_lines(base / file)) target.insert(lowered(word));
  };
  auto load_phrases = [&](const char* file, std::vector<std::string>& target) {
    if (!fs::exists(base / file)) return;
    target.clear();
    for (auto& phrase : read_word_lines(base / file)) target.push_back(lowered(phrase));
  };
  load_set("swear.txt", lex.swear);
  load_set("modal_verbs.txt", lex.modal_verbs);
  load_set("pronouns_first.txt", lex.pronouns_first);
  load_set("pronouns_second.txt", lex.pronouns_second);
  load_set("pronouns_third.txt", lex.pronouns_third);
  load_set("dictionary.txt", lex.dictionary);
  load_phrases("politeness.txt", lex.politeness_cues);
  load_phrases("evidence.txt", lex.evidence_markers);
  load_phrases("opponent.txt", lex.opponent_markers);

  lex.validate();
  return lex;
}

// --- TfidfModel --------------------------------------------------------------

namespace {

std::atomic<std::uint64_t> g_tfidf_revision{1};

void for_each_ngram(const std::vector<std::string>& tokens,
                    const std::function<void(const std::string&)>& fn) {
  for (std::size_t n = 1; n <= 3; ++n) {
    if (tokens.size() < n) break;
    for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
      std::string gram = tokens[i];
      for (std::size_t k = 1; k < n; ++k) {
        gram += ' ';
        gram += tokens[i + k];
      }
      fn(gram);
    }
  }
}

}  // namespace

TfidfModel TfidfModel::fit(const std::vector<SideText>& training_docs,
                           const TfidfOptions& options) {
  if (training_docs.empty()) {
    throw std::invalid_argument("fit_tfidf requires at least one document");
  }
  std::map<std::string, int> df;
  for (const SideText& doc : training_docs) {
    const std::vector<std::string> tokens = tokenize(doc.text);
    std::set<std::string> seen;
    for_each_ngram(tokens, [&](const std::string& gram) { seen.insert(gram); });
    for (const auto& gram : seen) ++df[gram];
  }

  std::vector<std::pair<std::string, int>> kept;
  for (const auto& [term, count] : df) {
    if (count >= options.min_document_frequency) kept.emplace_back(term, count);
  }
  if (options.max_features > 0 && static_cast<int>(kept.size()) > options.max_features) {
    std::stable_sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) {
      if (a.second != b.second) return a.second > b.second;
      return a.first < b.first;
    });
    kept.resize(options.max_features);
    std::sort(kept.begin(), kept.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  }

  TfidfModel model;
  model.fit_document_count_ = static_cast<int>(training_docs.size());
  model.revision_ = g_tfidf_revision.fetch_add(1);
  const double n_docs = static_cast<double>(training_docs.size());
  model.terms_.reserve(kept.size());
  model.idf_.reserve(kept.size());
  for (const auto& [term, count] : kept) {
    model.vocabulary_.emplace(term, static_cast<int>(model.terms_.size()));
    model.terms_.push_back(term);
    model.idf_.push_back(std::log((1.0 + n_docs) / (1.0 + static_cast<double>(count))) + 1.0);
  }
  return model;
}

std::vector<double> TfidfModel::transform(const std::vector<std::string>& tokens) const {
  std::vector<double> out(vocabulary_.size(), 0.0);
  for_each_ngram(tokens, [&](const std::string& gram) {
    auto it = vocabulary_.find(gram);
    if (it != vocabulary_.end()) out[it->second] += 1.0;
  });
  double norm = 0.0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] *= idf_[i];
    norm += out[i] * out[i];
  }
  if (norm > 0.0) {
    norm = std::sqrt(norm);
    for (double& x : out) x /= norm;
  }
  return out;
}

// --- Feature extraction ------------------------------------------------------

const std::vector<std::string>& linguistic_groups() {
  static const std::vector<std::string> groups = {
      kGroupLength,     kGroupOpponent,     kGroupPoliteness, kGroupEvidence,
      kGroupSentiment,  kGroupSubjectivity, kGroupSwear,      kGroupConnotation,
      kGroupPronouns,   kGroupModals,       kGroupArgLex,     kGroupSpelling,
      kGroupLinks,      kGroupNumbers,      kGroupExclamation, kGroupQuestions,
      kGroupTfidf,
  };
  return groups;
}

std::vector<ScalarFeatureInfo> scalar_feature_layout(const LexiconSet& lexicons) {
  std::vector<ScalarFeatureInfo> layout = {
      {"length", kGroupLength},
      {"opponent_refs", kGroupOpponent},
      {"politeness_cues", kGroupPoliteness},
      {"evidence", kGroupEvidence},
      {"sentiment_mean", kGroupSentiment},
      {"subj_negative_strong", kGroupSubjectivity},
      {"subj_negative_weak", kGroupSubjectivity},
      {"subj_positive_strong", kGroupSubjectivity},
      {"subj_positive_weak", kGroupSubjectivity},
      {"swear_words", kGroupSwear},
      {"connotation_positive_rate", kGroupConnotation},
      {"connotation_negative_rate", kGroupConnotation},
      {"connotation_neutral_rate", kGroupConnotation},
      {"pronoun_first", kGroupPronouns},
      {"pronoun_second", kGroupPronouns},
      {"pronoun_third", kGroupPronouns},
      {"modal_verbs", kGroupModals},
  };
  for (const auto& [category, pattern] : lexicons.argument_patterns) {
    layout.push_back({"arglex:" + category, kGroupArgLex});
  }
  layout.push_back({"spelling_errors", kGroupSpelling});
  layout.push_back({"links", kGroupLinks});
  layout.push_back({"numbers", kGroupNumbers});
  layout.push_back({"exclamation_marks", kGroupExclamation});
  layout.push_back({"questions", kGroupQuestions});
  return layout;
}

namespace {

int count_phrase_hits(const std::vector<std::string>& tokens,
                      const std::vector<std::vector<std::string>>& phrases) {
  int total = 0;
  for (const auto& phrase : phrases) {
    if (phrase.empty() || tokens.size() < phrase.size()) continue;
    std::size_t i = 0;
    while (i + phrase.size() <= tokens.size()) {
      if (std::equal(phrase.begin(), phrase.end(), tokens.begin() + i)) {
        ++total;
        i += phrase.size();
      } else {
        ++i;
      }
    }
  }
  return total;
}

std::vector<std::vector<std::string>> tokenize_phrases(const std::vector<std::string>& phrases) {
  std::vector<std::vector<std::string>> out;
  out.reserve(phrases.size());
  for (const auto& phrase : phrases) out.push_back(tokenize(phrase));
  return out;
}

// Quotation-delimited spans (straight or curly double quotes) of >= 3 tokens.
int count_quoted_spans(const std::string& text) {
  std::vector<std::pair<std::size_t, std::size_t>> delims;  // (pos, byte length)
  for (std::size_t i = 0; i < text.size();) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (c == '"') {
      delims.emplace_back(i, 1);
      ++i;
    } else if (c == 0xE2 && i + 2 < text.size() &&
               static_cast<unsigned char>(text[i + 1]) == 0x80 &&
               (static_cast<unsigned char>(text[i + 2]) == 0x9C ||
                static_cast<unsigned char>(text[i + 2]) == 0x9D)) {
      delims.emplace_back(i, 3);
      i += 3;
    } else {
      ++i;
    }
  }
  int count = 0;
  for (std::size_t k = 0; k + 1 < delims.size(); k += 2) {
    const std::size_t start = delims[k].first + delims[k].second;
    const std::size_t end = delims[k + 1].first;
    if (tokenize(text.substr(start, end - start)).size() >= 3) ++count;
  }
  return count;
}

}  // namespace

LinguisticFeatureVector extract_features(const SideText& side, const LexiconSet& lexicons,
                                         const TfidfModel& tfidf) {
  const std::vector<std::string> tokens = tokenize(side.text);
  const std::vector<ScalarFeatureInfo> layout = scalar_feature_layout(lexicons);

  LinguisticFeatureVector out;
  out.side = side.side;
  out.model_revision = tfidf.revision();
  out.scalars.assign(layout.size(), 0.0);
  out.tfidf = tfidf.transform(tokens);
  if (tokens.empty()) return out;

  std::size_t slot = 0;
  auto put = [&](double value) { out.scalars[slot++] = value; };

  put(static_cast<double>(tokens.size()));  // length
  put(count_phrase_hits(tokens, tokenize_phrases(lexicons.opponent_markers)));
  put(count_phrase_hits(tokens, tokenize_phrases(lexicons.politeness_cues)));
  put(count_phrase_hits(tokens, tokenize_phrases(lexicons.evidence_markers)) +
      count_quoted_spans(side.text));

  double sentiment_sum = 0.0;
  int sentiment_matches = 0;
  int subj[4] = {0, 0, 0, 0};  // neg strong, neg weak, pos strong, pos weak
  int swear = 0;
  int connotation[3] = {0, 0, 0};  // positive, negative, neutral
  int pronouns[3] = {0, 0, 0};
  int modals = 0;
  int spelling_errors = 0;
  int links = 0;
  int numbers = 0;
  for (const std::string& token : tokens) {
    if (auto it = lexicons.subjectivity.find(token); it != lexicons.subjectivity.end()) {
      const bool positive = it->second.polarity == WordPolarity::Positive;
      const bool strong = it->second.strength == SubjStrength::Strong;
      sentiment_sum += positive ? 1.0 : -1.0;
      ++sentiment_matches;
      ++subj[(positive ? 2 : 0) + (strong ? 0 : 1)];
    }
    if (auto it = lexicons.connotation.find(token); it != lexicons.connotation.end()) {
      switch (it->second) {
        case Connotation::Positive: ++connotation[0]; break;
        case Connotation::Negative: ++connotation[1]; break;
        case Connotation::Neutral: ++connotation[2]; break;
      }
    }
    if (lexicons.swear.count(token) != 0) ++swear;
    if (lexicons.pronouns_first.count(token) != 0) ++pronouns[0];
    if (lexicons.pronouns_second.count(token) != 0) ++pronouns[1];
    if (lexicons.pronouns_third.count(token) != 0) ++pronouns[2];
    if (lexicons.modal_verbs.count(token) != 0) ++modals;
    if (is_url_token(token)) {
      ++links;
    } else if (is_number_token(token)) {
      ++numbers;
    } else if (!is_punctuation_token(token) && lexicons.dictionary.count(token) == 0) {
      ++spelling_errors;
    }
  }

  put(sentiment_matches > 0 ? sentiment_sum / sentiment_matches : 0.0);
  for (int i = 0; i < 4; ++i) put(subj[i]);
  put(swear);
  const double token_count = static_cast<double>(tokens.size());
  for (int i = 0; i < 3; ++i) put(connotation[i] / token_count);
  for (int i = 0; i < 3; ++i) put(pronouns[i]);
  put(modals);

  const std::string lowered_text = lowered(side.text);
  for (const auto& [category, pattern] : lexicons.argument_patterns) {
    const std::regex re(pattern, std::regex::ECMAScript);
    const auto begin = std::sregex_iterator(lowered_text.begin(), lowered_text.end(), re);
    put(static_cast<double>(std::distance(begin, std::sregex_iterator())));
  }

  put(spelling_errors);
  put(links);
  put(numbers);
  put(std::count(side.text.begin(), side.text.end(), '!'));
  put(std::count(side.text.begin(), side.text.end(), '?'));
  return out;
}

std::vector<double> assemble_debate_features(const LinguisticFeatureVector& pro,
                                             const LinguisticFeatureVector& con) {
  if (pro.side != Stance::Pro || con.side != Stance::Con) {
    throw std::invalid_argument("assemble_debate_features needs a PRO and a CON vector");
  }
  if (pro.model_revision != con.model_revision) {
    throw std::invalid_argument("feature vectors come from different tf-idf models");
  }
  std::vector<double> out;
  out.reserve(2 * (pro.scalars.size() + pro.tfidf.size()));
  out.insert(out.end(), pro.scalars.begin(), pro.scalars.end());
  out.insert(out.end(), pro.tfidf.begin(), pro.tfidf.end());
  out.insert(out.end(), con.scalars.begin(), con.scalars.end());
  out.insert(out.end(), con.tfidf.begin(), con.tfidf.end());
  return out;
}

}  // namespace persuade
