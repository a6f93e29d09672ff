#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "persuade/corpus.hpp"

namespace persuade {

/// All utterances of one side across rounds, joined with single newlines.
struct SideText {
  Stance side = Stance::Pro;
  std::string text;
};

SideText side_text(const Debate& debate, Stance side);

// --- Tokenizer ---------------------------------------------------------------
//
// Deterministic rules, applied in order:
//   * http(s)://... and www.... runs of non-space become single URL tokens
//   * word characters are ASCII alphanumerics and any non-ASCII byte;
//     an apostrophe between word characters stays inside the token
//     ("don't"), as do '.'/',' between digits ("3.5")
//   * every other non-space character is its own single-character token
//   * all tokens are lowercased (ASCII)

std::vector<std::string> tokenize(const std::string& text);

bool is_url_token(std::string_view token);
bool is_number_token(std::string_view token);
bool is_punctuation_token(std::string_view token);

// --- Lexicons ----------------------------------------------------------------

enum class WordPolarity { Positive, Negative };
enum class SubjStrength { Weak, Strong };
enum class Connotation { Positive, Negative, Neutral };

struct SubjectivityEntry {
  WordPolarity polarity = WordPolarity::Positive;
  SubjStrength strength = SubjStrength::Weak;
  bool operator==(const SubjectivityEntry&) const = default;
};

/// The lexical resources behind every Table-2 style feature. All words are
/// lowercase; argument patterns are (category, regex) pairs with unique
/// category names. A small built-in demonstration set ships with the
/// library; full third-party resources can be dropped in as files (see
/// docs/config.md for the formats).
struct LexiconSet {
  std::map<std::string, SubjectivityEntry> subjectivity;
  std::map<std::string, Connotation> connotation;
  std::set<std::string> swear;
  std::vector<std::string> politeness_cues;   // phrases
  std::vector<std::string> evidence_markers;  // phrases
  std::vector<std::string> opponent_markers;  // phrases
  std::set<std::string> modal_verbs;
  std::set<std::string> pronouns_first;
  std::set<std::string> pronouns_second;
  std::set<std::string> pronouns_third;
  std::set<std::string> dictionary;  // spell-check word list
  std::vector<std::pair<std::string, std::string>> argument_patterns;  // category -> regex

  static LexiconSet builtin();
  /// Loads subjectivity.tsv, connotation.tsv, argpatterns.tsv and the
  /// one-word-per-line lists from `dir` (missing files keep the builtin
  /// entries for that slot). '#' starts a comment line everywhere.
  static LexiconSet load_directory(const std::string& dir);
  /// Lowercase words, compiling regexes, unique categories. Throws
  /// std::invalid_argument on violation.
  void validate() const;
};

// --- Tf-idf ------------------------------------------------------------------

struct TfidfOptions {
  int min_document_frequency = 2;
  int max_features = 0;  // keep top-df terms when > 0; 0 = unlimited
};

/// Uni/bi/trigram vocabulary with idf(t) = ln((1+N)/(1+df(t))) + 1, fit on
/// training documents only (one document per SideText). Immutable after fit.
class TfidfModel {
 public:
  static TfidfModel fit(const std::vector<SideText>& training_docs,
                        const TfidfOptions& options = {});

  const std::map<std::string, int>& vocabulary() const { return vocabulary_; }
  const std::vector<double>& idf() const { return idf_; }
  const std::vector<std::string>& terms() const { return terms_; }  // index order
  int fit_document_count() const { return fit_document_count_; }
  /// Distinct per fit; used to reject mixing vectors from different models.
  std::uint64_t revision() const { return revision_; }

  /// Term-frequency x idf over the vocabulary, L2-normalized (an all-zero
  /// vector stays zero).
  std::vector<double> transform(const std::vector<std::string>& tokens) const;

 private:
  TfidfModel() = default;
  std::map<std::string, int> vocabulary_;
  std::vector<std::string> terms_;
  std::vector<double> idf_;
  int fit_document_count_ = 0;
  std::uint64_t revision_ = 0;
};

// --- Feature extraction ------------------------------------------------------

// Feature-group names (one per Table-2 row); `arglex` columns may also be
// selected individually as "arglex:<category>".
inline constexpr const char* kGroupLength = "length";
inline constexpr const char* kGroupTfidf = "tfidf";
inline constexpr const char* kGroupOpponent = "opponent";
inline constexpr const char* kGroupPoliteness = "politeness";
inline constexpr const char* kGroupEvidence = "evidence";
inline constexpr const char* kGroupSentiment = "sentiment";
inline constexpr const char* kGroupSubjectivity = "subjectivity";
inline constexpr const char* kGroupSwear = "swear";
inline constexpr const char* kGroupConnotation = "connotation";
inline constexpr const char* kGroupPronouns = "pronouns";
inline constexpr const char* kGroupModals = "modals";
inline constexpr const char* kGroupArgLex = "arglex";
inline constexpr const char* kGroupSpelling = "spelling";
inline constexpr const char* kGroupLinks = "links";
inline constexpr const char* kGroupNumbers = "numbers";
inline constexpr const char* kGroupExclamation = "exclamation";
inline constexpr const char* kGroupQuestions = "questions";

/// Every linguistic group name in layout order (tfidf last).
const std::vector<std::string>& linguistic_groups();

struct ScalarFeatureInfo {
  std::string name;   // e.g. "subj_negative_strong", "arglex:authority"
  std::string group;  // group name above
};

/// Fixed scalar layout for a lexicon set (argument categories contribute one
/// column each, in lexicon order).
std::vector<ScalarFeatureInfo> scalar_feature_layout(const LexiconSet& lexicons);

struct LinguisticFeatureVector {
  Stance side = Stance::Pro;
  std::vector<double> scalars;  // scalar_feature_layout order
  std::vector<double> tfidf;    // vocabulary order, L2-normalized
  std::uint64_t model_revision = 0;
};

/// All Table-2 scalar features over the side's token stream / raw text plus
/// the tf-idf block. Scalars, in layout order:
///   length (token count); opponent / politeness marker hits; evidence
///   (marker hits + quoted spans of >= 3 tokens); mean sentiment polarity of
///   subjectivity-lexicon matches (+1/-1, 0 when none); 4 subjectivity
///   counts (neg strong, neg weak, pos strong, pos weak); swear count; 3
///   connotation counts normalized by token count; 1st/2nd/3rd person
///   pronoun counts; modal count; per-category argument-pattern match
///   counts (non-overlapping); spelling errors (tokens outside the
///   dictionary, skipping URLs, numbers, punctuation); link count; number
///   count; '!' count; '?' count.
/// Empty text yields an all-zero vector.
LinguisticFeatureVector extract_features(const SideText& side, const LexiconSet& lexicons,
                                         const TfidfModel& tfidf);

/// PRO block followed by CON block (scalars then tf-idf within each).
/// Throws std::invalid_argument when sides or model revisions mismatch.
std::vector<double> assemble_debate_features(const LinguisticFeatureVector& pro,
                                             const LinguisticFeatureVector& con);

}  // namespace persuade
