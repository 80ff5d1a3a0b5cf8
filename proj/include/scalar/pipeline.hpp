#ifndef SCALAR_PIPELINE_HPP
#define SCALAR_PIPELINE_HPP

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "scalar/baseline_tagger.hpp"
#include "scalar/embeddings.hpp"
#include "scalar/error.hpp"
#include "scalar/features.hpp"
#include "scalar/gbt.hpp"
#include "scalar/lexicon.hpp"
#include "scalar/tags.hpp"
#include "scalar/tokenizer.hpp"

namespace scalar {

struct LabeledExample {
  FeatureVector features;
  ScalarTag label = ScalarTag::N;
};

struct AnnotatedWord {
  std::string word;
  ScalarTag tag = ScalarTag::N;
  bool is_dictionary_word = false;

  friend bool operator==(const AnnotatedWord&, const AnnotatedWord&) = default;
};

using GrammarPattern = std::vector<ScalarTag>;

inline std::string to_string(const GrammarPattern& pattern) {
  std::string out;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    if (i) out += ' ';
    out += to_string(pattern[i]);
  }
  return out;
}

inline GrammarPattern pattern_of(const std::vector<AnnotatedWord>& words) {
  GrammarPattern p;
  for (const auto& w : words) p.push_back(w.tag);
  return p;
}

/// Prefix lists consulted by the preamble advisory.
struct PreambleConfig {
  std::unordered_set<std::string> namespace_prefixes;  // e.g. gimp, glew, gl, g
  std::unordered_set<std::string> hungarian_markers;   // e.g. m, p
  std::unordered_set<std::string> type_initials;       // e.g. f, i, b
};

/// Where to find each resource. Empty paths fall back to the file's
/// conventional name inside `data_dir`.
struct ResourcePaths {
  std::filesystem::path data_dir;
  std::filesystem::path dictionary;
  std::filesystem::path user_words;
  std::filesystem::path abbreviations;
  std::filesystem::path embeddings;

  std::filesystem::path resolve(const std::filesystem::path& given, const char* default_name) const {
    return given.empty() ? data_dir / default_name : given;
  }
};

/// Immutable bundle of everything feature extraction needs.
class Resources {
 public:
  Lexicon lexicon;
  VectorStore vectors;
  ConceptSet concepts;
  BaselineTagger baseline;
  PreambleConfig preamble;

  FeatureResources feature_resources() const { return {lexicon, vectors, concepts}; }

  /// Layout of a data directory:
  ///   dictionary.txt, user_words.txt, abbreviations.txt (optional allowlists)
  ///   closed/{preposition,conjunction,determiner,pronoun}.txt
  ///   concepts/{noun,verb}.txt (prepositions come from the closed list)
  ///   embeddings.txt
  ///   baseline_lexicon.tsv (optional)
  ///   preamble/{namespaces,hungarian,type_initials}.txt (optional)
  static std::shared_ptr<const Resources> load(const ResourcePaths& paths) {
    auto res = std::make_shared<Resources>();
    const auto& dir = paths.data_dir;
    res->lexicon.add_dictionary_words(read_word_list(paths.resolve(paths.dictionary, "dictionary.txt")));
    if (auto p = paths.resolve(paths.user_words, "user_words.txt"); std::filesystem::exists(p) || !paths.user_words.empty()) {
      res->lexicon.add_user_words(read_word_list(p));
    }
    if (auto p = paths.resolve(paths.abbreviations, "abbreviations.txt"); std::filesystem::exists(p) || !paths.abbreviations.empty()) {
      res->lexicon.add_user_abbreviations(read_word_list(p));
    }
    for (std::size_t i = 0; i < kClosedCategoryCount; ++i) {
      const auto category = static_cast<ClosedCategory>(i);
      res->lexicon.add_closed_words(category,
                                    read_word_list(dir / "closed" / (std::string(to_string(category)) + ".txt")));
    }
    res->vectors = load_vectors(paths.resolve(paths.embeddings, "embeddings.txt"));
    const auto& preps = res->lexicon.closed_list(ClosedCategory::Preposition);
    res->concepts.preposition = build_concept_vector(res->vectors, Concept::Preposition,
                                                     std::vector<std::string>(preps.begin(), preps.end()));
    res->concepts.noun = build_concept_vector(res->vectors, Concept::Noun, read_word_list(dir / "concepts" / "noun.txt"));
    res->concepts.verb = build_concept_vector(res->vectors, Concept::Verb, read_word_list(dir / "concepts" / "verb.txt"));
    if (std::filesystem::exists(dir / "baseline_lexicon.tsv")) res->baseline.load_lexicon(dir / "baseline_lexicon.tsv");
    const auto optional_set = [&](const char* name, std::unordered_set<std::string>& into) {
      const auto p = dir / "preamble" / name;
      if (!std::filesystem::exists(p)) return;
      for (auto& w : read_word_list(p)) into.insert(std::move(w));
    };
    optional_set("namespaces.txt", res->preamble.namespace_prefixes);
    optional_set("hungarian.txt", res->preamble.hungarian_markers);
    optional_set("type_initials.txt", res->preamble.type_initials);
    return res;
  }
};

/// Feature vectors for every word of an identifier.
inline std::vector<FeatureVector> identifier_features(const TokenSequence& words, IdentifierContext context,
                                                      const Resources& res) {
  const auto baseline = res.baseline.tag(words, res.lexicon);
  const auto fr = res.feature_resources();
  std::vector<FeatureVector> out;
  out.reserve(words.count());
  for (std::size_t i = 1; i <= words.count(); ++i) out.push_back(extract(words, i, context, fr, baseline));
  return out;
}

/// Heuristic preamble flag for debugging output; the model makes the real call.
/// True when the word leads a multi-word identifier and is a configured
/// namespace prefix, a Hungarian marker, or a configured type initial.
inline bool classify_preamble_candidate(std::string_view word, const TokenSequence& identifier,
                                        IdentifierContext /*context*/, const PreambleConfig& config) {
  const std::string w = detail::lowered(word);
  const auto it = std::find(identifier.words.begin(), identifier.words.end(), w);
  if (it == identifier.words.end()) {
    throw ContractViolation("classify_preamble_candidate: '" + w + "' is not a word of " + identifier.raw);
  }
  if (it != identifier.words.begin() || identifier.count() < 2) return false;
  if (config.namespace_prefixes.contains(w)) return true;
  if (w.size() == 1 && config.hungarian_markers.contains(w)) return true;
  return w.size() == 1 && config.type_initials.contains(w);
}

/// 64-bit FNV-1a of the serialized model, as 16 hex digits.
inline std::string model_version(const std::string& serialized_model) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : serialized_model) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline std::vector<std::string> scalar_class_names() {
  return {kScalarTagCodes.begin(), kScalarTagCodes.end()};
}

/// A trained model bound to its resources. Immutable and thread-safe.
class Tagger {
 public:
  Tagger(std::shared_ptr<const Resources> resources, gbt::Ensemble model)
      : resources_(std::move(resources)), model_(std::move(model)) {
    if (model_.n_features() != kFeatureArity) {
      throw LoadError("model expects " + std::to_string(model_.n_features()) + " features, extractor produces " +
                      std::to_string(kFeatureArity));
    }
    if (model_.class_names() != scalar_class_names()) throw LoadError("model classes do not match the tagset");
    version_ = model_version(model_.serialize());
  }

  const Resources& resources() const { return *resources_; }
  const gbt::Ensemble& model() const { return model_; }
  const std::string& version() const { return version_; }

  ScalarTag predict(const FeatureVector& fv) const {
    return kAllScalarTags[model_.predict(fv.span()).label];
  }

  /// split -> features -> classify, one annotated word per token.
  std::vector<AnnotatedWord> tag_identifier(std::string_view identifier, IdentifierContext context) const {
    const TokenSequence words = split(identifier);
    const auto features = identifier_features(words, context, *resources_);
    std::vector<AnnotatedWord> out;
    out.reserve(words.count());
    for (std::size_t i = 0; i < words.count(); ++i) {
      out.push_back({words.words[i], predict(features[i]), resources_->lexicon.is_dictionary_word(words.words[i])});
    }
    return out;
  }

 private:
  std::shared_ptr<const Resources> resources_;
  gbt::Ensemble model_;
  std::string version_;
};

}  // namespace scalar

#endif  // SCALAR_PIPELINE_HPP
