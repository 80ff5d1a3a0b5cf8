#ifndef SCALAR_FEATURES_HPP
#define SCALAR_FEATURES_HPP

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "scalar/baseline_tagger.hpp"
#include "scalar/embeddings.hpp"
#include "scalar/error.hpp"
#include "scalar/lexicon.hpp"
#include "scalar/tags.hpp"
#include "scalar/tokenizer.hpp"

namespace scalar {

// Slot layout of a FeatureVector.
namespace slot {
inline constexpr std::size_t kBaselineTag = 0;  // 27 one-hot slots
inline constexpr std::size_t kPositionRatio = kBaselineTag + kPtbTagCount;
inline constexpr std::size_t kIsFirstWord = kPositionRatio + 1;
inline constexpr std::size_t kIsLastWord = kIsFirstWord + 1;
inline constexpr std::size_t kWordCount = kIsLastWord + 1;
inline constexpr std::size_t kWordLength = kWordCount + 1;
inline constexpr std::size_t kSimPreposition = kWordLength + 1;
inline constexpr std::size_t kSimNoun = kSimPreposition + 1;
inline constexpr std::size_t kSimVerb = kSimNoun + 1;
inline constexpr std::size_t kInPrepositionList = kSimVerb + 1;
inline constexpr std::size_t kInConjunctionList = kInPrepositionList + 1;
inline constexpr std::size_t kInDeterminerList = kInConjunctionList + 1;
inline constexpr std::size_t kInPronounList = kInDeterminerList + 1;
inline constexpr std::size_t kIsDigitToken = kInPronounList + 1;
inline constexpr std::size_t kContainsDigit = kIsDigitToken + 1;
inline constexpr std::size_t kIsDictionaryWord = kContainsDigit + 1;
inline constexpr std::size_t kContext = kIsDictionaryWord + 1;  // 5 one-hot slots
inline constexpr std::size_t kArity = kContext + kContextCount;
}  // namespace slot

inline constexpr std::size_t kFeatureArity = slot::kArity;
static_assert(kFeatureArity == 47);

/// Fixed-arity numeric encoding of one word within an identifier.
struct FeatureVector {
  std::array<double, kFeatureArity> values{};

  double operator[](std::size_t i) const { return values[i]; }
  std::span<const double> span() const { return values; }

  friend bool operator==(const FeatureVector&, const FeatureVector&) = default;
};

/// Human-readable slot names, in slot order.
inline std::vector<std::string> feature_names() {
  std::vector<std::string> names;
  for (auto code : kPtbTagCodes) names.push_back("baseline_" + std::string(code));
  for (const char* n : {"position_ratio", "is_first_word", "is_last_word", "identifier_word_count",
                        "word_length", "sim_preposition", "sim_noun", "sim_verb",
                        "in_preposition_list", "in_conjunction_list", "in_determiner_list",
                        "in_pronoun_list", "is_digit_token", "contains_digit", "is_dictionary_word"}) {
    names.emplace_back(n);
  }
  for (auto ctx : kContextNames) names.push_back("context_" + std::string(ctx));
  return names;
}

/// Everything feature extraction reads besides the identifier itself.
struct FeatureResources {
  const Lexicon& lexicon;
  const VectorStore& vectors;
  const ConceptSet& concepts;
};

/// Builds the feature vector for the word at 1-based `index`.
inline FeatureVector extract(const TokenSequence& words, std::size_t index, IdentifierContext context,
                             const FeatureResources& res, std::span<const PtbTag> baseline_tags) {
  const double ratio = position_ratio(index, words.count());
  if (baseline_tags.size() != words.count()) {
    throw ContractViolation("extract: " + std::to_string(baseline_tags.size()) +
                            " baseline tags for " + std::to_string(words.count()) + " words");
  }
  const std::string& word = words.words[index - 1];

  FeatureVector fv;
  auto& v = fv.values;
  v[slot::kBaselineTag + index_of(baseline_tags[index - 1])] = 1.0;
  v[slot::kPositionRatio] = ratio;
  v[slot::kIsFirstWord] = index == 1 ? 1.0 : 0.0;
  v[slot::kIsLastWord] = index == words.count() ? 1.0 : 0.0;
  v[slot::kWordCount] = static_cast<double>(words.count());
  v[slot::kWordLength] = static_cast<double>(word.size());
  v[slot::kSimPreposition] = concept_similarity(res.vectors, word, res.concepts.preposition);
  v[slot::kSimNoun] = concept_similarity(res.vectors, word, res.concepts.noun);
  v[slot::kSimVerb] = concept_similarity(res.vectors, word, res.concepts.verb);
  v[slot::kInPrepositionList] = res.lexicon.in_closed_list(word, ClosedCategory::Preposition);
  v[slot::kInConjunctionList] = res.lexicon.in_closed_list(word, ClosedCategory::Conjunction);
  v[slot::kInDeterminerList] = res.lexicon.in_closed_list(word, ClosedCategory::Determiner);
  v[slot::kInPronounList] = res.lexicon.in_closed_list(word, ClosedCategory::Pronoun);
  v[slot::kIsDigitToken] = BaselineTagger::is_number_token(word) ? 1.0 : 0.0;
  bool has_digit = false;
  for (char c : word) has_digit = has_digit || detail::is_digit(c);
  v[slot::kContainsDigit] = has_digit ? 1.0 : 0.0;
  v[slot::kIsDictionaryWord] = res.lexicon.is_dictionary_word(word) ? 1.0 : 0.0;
  v[slot::kContext + index_of(context)] = 1.0;
  return fv;
}

}  // namespace scalar

#endif  // SCALAR_FEATURES_HPP
