#ifndef SCALAR_TESTS_FIXTURES_HPP
#define SCALAR_TESTS_FIXTURES_HPP

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "scalar/scalar.hpp"

#ifndef SCALAR_DATA_DIR
#error "SCALAR_DATA_DIR must point at the repository data directory"
#endif

namespace scalar::testing {

inline std::filesystem::path data_dir() { return SCALAR_DATA_DIR; }

/// Shared resources loaded once from the repository data directory.
inline std::shared_ptr<const Resources> shipped_resources() {
  static const auto res = [] {
    ResourcePaths paths;
    paths.data_dir = data_dir();
    return Resources::load(paths);
  }();
  return res;
}

inline std::vector<DatasetRow> seed_rows() {
  auto parsed = parse_dataset(data_dir() / "seed_dataset.tsv");
  if (!parsed.rejected.empty()) throw LoadError("seed dataset has rejected rows");
  return parsed.rows;
}

/// Model trained on every seed identifier with default hyperparameters.
inline std::shared_ptr<const Tagger> seed_tagger() {
  static const auto tagger = [] {
    const auto res = shipped_resources();
    const auto examples = ingest(seed_rows(), *res);
    gbt::Hyperparameters hp;
    hp.seed = 42;
    return std::make_shared<const Tagger>(res, gbt::fit(examples.to_dataset(), scalar_class_names(), hp));
  }();
  return tagger;
}

/// Small in-memory resources for tests that need exact control over vectors.
struct TinyResources {
  Resources res;

  TinyResources() {
    res.lexicon.add_dictionary_words({"bit", "set", "stack", "behind", "server", "port", "quickly"});
    res.lexicon.add_closed_words(ClosedCategory::Preposition, {"behind", "to", "for", "at"});
    res.lexicon.add_closed_words(ClosedCategory::Conjunction, {"and", "for", "or"});
    res.lexicon.add_closed_words(ClosedCategory::Determiner, {"the", "each"});
    res.lexicon.add_closed_words(ClosedCategory::Pronoun, {"it", "them"});
    res.vectors = VectorStore(2);
    res.vectors.insert("behind", {1.0, 0.1});
    res.vectors.insert("to", {0.9, -0.1});
    res.vectors.insert("stack", {0.0, 1.0});
    res.vectors.insert("set", {0.3, 0.6});
    res.vectors.insert("run", {-1.0, 0.2});
    res.concepts.preposition = build_concept_vector(res.vectors, Concept::Preposition, {"behind", "to"});
    res.concepts.noun = build_concept_vector(res.vectors, Concept::Noun, {"stack"});
    res.concepts.verb = build_concept_vector(res.vectors, Concept::Verb, {"run"});
  }
};

}  // namespace scalar::testing

#endif  // SCALAR_TESTS_FIXTURES_HPP
