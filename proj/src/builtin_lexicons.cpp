#include "persuade/textfeat.hpp"

namespace persuade {

namespace {

const char* kPositiveStrong[] = {"excellent", "amazing",     "wonderful", "brilliant",
                                 "superb",    "outstanding", "magnificent"};
const char* kPositiveWeak[] = {"good", "nice",     "helpful",    "useful",
                               "fair", "positive", "reasonable", "sound"};
const char* kNegativeStrong[] = {"terrible",  "horrible",  "awful",       "disgusting",
                                 "atrocious", "appalling", "catastrophic"};
const char* kNegativeWeak[] = {"bad",      "poor",     "weak",  "wrong",
                               "negative", "doubtful", "flawed"};

const char* kConnotationPositive[] = {"freedom", "peace", "progress", "victory", "honest",
                                      "friend",  "hope",  "truth",    "justice", "love"};
const char* kConnotationNegative[] = {"war",  "crime", "corruption", "failure", "enemy",
                                      "lies", "fear",  "hate",       "violence", "fraud"};
const char* kConnotationNeutral[] = {"government", "policy",  "people",  "state",  "debate",
                                     "argument",   "topic",   "country", "system", "question"};

const char* kSwear[] = {"damn", "hell", "crap", "bastard", "idiot", "stupid"};

const char* kPoliteness[] = {"thank",        "thanks",  "thank you", "please",
                             "welcome",      "respectfully", "appreciate",
                             "good luck",    "with all due respect"};
const char* kEvidence[] = {"according to", "studies show",   "research shows", "for example",
                           "for instance", "source",         "sources",        "cite",
                           "citation",     "statistics",     "data shows",     "evidence"};
const char* kOpponent[] = {"opponent",  "my opponent", "my opponents", "the opposition",
                           "con side",  "pro side",    "my adversary"};

const char* kModals[] = {"can",  "could",  "may",  "might", "must",
                         "shall", "should", "will", "would", "ought"};

const char* kPronounsFirst[] = {"i",  "me",  "my",  "mine", "myself",
                                "we", "us",  "our", "ours", "ourselves"};
const char* kPronounsSecond[] = {"you", "your", "yours", "yourself", "yourselves"};
const char* kPronounsThird[] = {"he",  "him",   "his",   "she",     "her",      "hers",
                                "it",  "its",   "they",  "them",    "their",    "theirs",
                                "himself", "herself", "itself", "themselves"};

// Filler words of the synthetic generator plus a small common-English core,
// so demonstration corpora spell-check cleanly.
const char* kDictionary[] = {
    "the", "a", "an", "and", "or", "but", "if", "then", "is", "are", "was", "were", "be",
    "been", "being", "to", "of", "in", "on", "at", "by", "for", "with", "about", "against",
    "between", "into", "through", "during", "before", "after", "above", "below", "from",
    "up", "down", "out", "off", "over", "under", "again", "further", "once", "here",
    "there", "when", "where", "why", "how", "all", "any", "both", "each", "few", "more",
    "most", "other", "some", "such", "no", "nor", "not", "only", "same", "so", "than",
    "too", "very", "just", "because", "this", "that", "these", "those", "what", "which",
    "who", "whom", "whose", "as", "has", "have", "had", "do", "does", "did", "done", "can",
    "could", "may", "might", "must", "shall", "should", "will", "would", "ought", "claim",
    "point", "points", "round", "rounds", "believe", "believes", "think", "thinks", "know",
    "knows", "see", "sees", "say", "says", "said", "make", "makes", "made", "many", "much",
    "time", "way", "world", "fact", "facts", "reason", "reasons", "true", "false", "right",
    "rights", "agree", "disagree", "agreed", "show", "shows", "shown", "clear", "clearly",
    "case", "cases", "issue", "issues", "side", "sides", "first", "second", "third",
    "last", "one", "two", "three", "new", "old", "great", "small", "large", "real",
    "better", "best", "worse", "worst", "value", "values", "matter", "matters", "consider",
    "position", "support", "supports", "oppose", "opposes", "view", "views", "logic",
    "logical", "premise", "conclusion", "therefore", "however", "indeed", "obviously",
    "certainly", "perhaps", "possibly", "important", "importantly", "necessary", "need",
    "needs", "example", "examples", "don't", "doesn't", "isn't", "aren't", "can't",
    "won't", "it's", "that's", "i'm", "you're", "we're", "they're", "let's", "everyone",
    "nobody", "always", "never", "general", "understand", "sympathize", "contradict",
    "contradicts", "contradiction", "inconsistent", "essential", "required", "difficult",
    "hard", "challenge", "struggle", "complicated", "complex", "wish", "want", "wants",
    "like", "exactly", "correct", "well", "put", "across", "without", "within", "also",
    "even", "still", "yet", "thus", "hence", "rather", "quite", "really", "simply",
};

const std::pair<const char*, const char*> kArgumentPatterns[] = {
    {"assessment", R"(\b(i (believe|think|feel)|in my (view|opinion)|it seems)\b)"},
    {"authority", R"(\b(according to|experts?|professors?|scientists?|researchers)\b)"},
    {"conditioning", R"(\b(if\b[^.!?]{0,80}\bthen|unless|provided that|as long as)\b)"},
    {"contrasting", R"(\b(however|on the other hand|in contrast|whereas|although)\b)"},
    {"emphasizing", R"(\b(clearly|obviously|indeed|certainly|in fact|undoubtedly|absolutely)\b)"},
    {"generalizing", R"(\b(everyone|nobody|always|never|in general|most people|all people)\b)"},
    {"empathy", R"(\b(i understand|i see your point|we all|i sympathize|i appreciate)\b)"},
    {"inconsistency", R"(\b(contradicts?|contradiction|inconsistent|hypocrisy|you said)\b)"},
    {"necessity", R"(\b(must|necessary|essential|required|need to|have to)\b)"},
    {"possibility", R"(\b(might|may|could|possibly|perhaps|potentially)\b)"},
    {"priority", R"(\b(most important(ly)?|first and foremost|above all|primarily)\b)"},
    {"rhetorical_questions", R"(\b(why would|how can|who would|what if|is it not|isn't it)\b)"},
    {"desire", R"(\b(i (want|wish|hope)|we (want|wish|hope)|would like to)\b)"},
    {"difficulty", R"(\b(difficult|hard to|challenge|struggle|complicated|complex)\b)"},
    {"approval", R"(\b(i agree|well said|good point|exactly right|well put)\b)"},
};

}  // namespace

LexiconSet LexiconSet::builtin() {
  LexiconSet lex;
  for (const char* w : kPositiveStrong) {
    lex.subjectivity[w] = {WordPolarity::Positive, SubjStrength::Strong};
  }
  for (const char* w : kPositiveWeak) {
    lex.subjectivity[w] = {WordPolarity::Positive, SubjStrength::Weak};
  }
  for (const char* w : kNegativeStrong) {
    lex.subjectivity[w] = {WordPolarity::Negative, SubjStrength::Strong};
  }
  for (const char* w : kNegativeWeak) {
    lex.subjectivity[w] = {WordPolarity::Negative, SubjStrength::Weak};
  }
  for (const char* w : kConnotationPositive) lex.connotation[w] = Connotation::Positive;
  for (const char* w : kConnotationNegative) lex.connotation[w] = Connotation::Negative;
  for (const char* w : kConnotationNeutral) lex.connotation[w] = Connotation::Neutral;
  for (const char* w : kSwear) lex.swear.insert(w);
  for (const char* w : kPoliteness) lex.politeness_cues.push_back(w);
  for (const char* w : kEvidence) lex.evidence_markers.push_back(w);
  for (const char* w : kOpponent) lex.opponent_markers.push_back(w);
  for (const char* w : kModals) lex.modal_verbs.insert(w);
  for (const char* w : kPronounsFirst) lex.pronouns_first.insert(w);
  for (const char* w : kPronounsSecond) lex.pronouns_second.insert(w);
  for (const char* w : kPronounsThird) lex.pronouns_third.insert(w);
  for (const auto& [category, pattern] : kArgumentPatterns) {
    lex.argument_patterns.emplace_back(category, pattern);
  }

  // The dictionary covers every word the lexicons and the synthetic
  // generator can emit.
  for (const char* w : kDictionary) lex.dictionary.insert(w);
  for (const auto& [w, e] : lex.subjectivity) lex.dictionary.insert(w);
  for (const auto& [w, c] : lex.connotation) lex.dictionary.insert(w);
  for (const auto& w : lex.swear) lex.dictionary.insert(w);
  for (const auto& w : lex.modal_verbs) lex.dictionary.insert(w);
  for (const auto* set : {&lex.pronouns_first, &lex.pronouns_second, &lex.pronouns_third}) {
    for (const auto& w : *set) lex.dictionary.insert(w);
  }
  for (const auto* phrases :
       {&lex.politeness_cues, &lex.evidence_markers, &lex.opponent_markers}) {
    for (const auto& phrase : *phrases) {
      for (const auto& word : tokenize(phrase)) lex.dictionary.insert(word);
    }
  }
  return lex;
}

}  // namespace persuade
