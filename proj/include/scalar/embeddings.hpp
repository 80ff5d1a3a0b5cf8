#ifndef SCALAR_EMBEDDINGS_HPP
#define SCALAR_EMBEDDINGS_HPP

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "scalar/error.hpp"
#include "scalar/tokenizer.hpp"

namespace scalar {

/// Pre-trained word vectors keyed by lowercase word.
class VectorStore {
 public:
  VectorStore() = default;
  explicit VectorStore(std::size_t dimension) : dimension_(dimension) {}

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return entries_.size(); }

  /// Inserts unless the word is already present. Returns false for duplicates
  /// and zero vectors, which are not stored.
  bool insert(std::string_view word, std::vector<double> vec) {
    if (vec.size() != dimension_) {
      throw LoadError("vector for '" + std::string(word) + "' has dimension " +
                      std::to_string(vec.size()) + ", expected " + std::to_string(dimension_));
    }
    if (std::all_of(vec.begin(), vec.end(), [](double v) { return v == 0.0; })) return false;
    return entries_.try_emplace(detail::lowered(word), std::move(vec)).second;
  }

  const std::vector<double>* find(std::string_view word) const {
    auto it = entries_.find(detail::lowered(word));
    return it == entries_.end() ? nullptr : &it->second;
  }

  bool contains(std::string_view word) const { return find(word) != nullptr; }

 private:
  std::size_t dimension_ = 0;
  std::unordered_map<std::string, std::vector<double>> entries_;
};

namespace detail {

inline std::vector<std::string_view> split_whitespace(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

inline bool parse_double(std::string_view text, double& out) {
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, out);
  return ec == std::errc() && ptr == end;
}

inline bool parse_size(std::string_view text, std::size_t& out) {
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, out);
  return ec == std::errc() && ptr == end;
}

}  // namespace detail

/// Reads the plain-text vector format: an optional "count dimension" header,
/// then "word v1 ... vd" rows. The first occurrence of a word wins.
inline VectorStore load_vectors(std::istream& in) {
  std::string line;
  std::size_t dimension = 0;
  VectorStore store;
  bool first = true;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto fields = detail::split_whitespace(line);
    if (fields.empty()) continue;
    if (first) {
      first = false;
      std::size_t count = 0;
      std::size_t dim = 0;
      if (fields.size() == 2 && detail::parse_size(fields[0], count) && detail::parse_size(fields[1], dim)) {
        if (dim == 0) throw LoadError("vector file header declares dimension 0");
        dimension = dim;
        store = VectorStore(dimension);
        continue;
      }
    }
    if (fields.size() < 2) {
      throw LoadError("vector row " + std::to_string(line_no) + " has no components");
    }
    const std::string_view word = fields[0];
    if (dimension == 0) {
      dimension = fields.size() - 1;
      store = VectorStore(dimension);
    }
    if (fields.size() - 1 != dimension) {
      throw LoadError("dimension mismatch for word '" + std::string(word) + "' on line " +
                      std::to_string(line_no) + ": got " + std::to_string(fields.size() - 1) +
                      ", expected " + std::to_string(dimension));
    }
    std::vector<double> vec(dimension);
    for (std::size_t d = 0; d < dimension; ++d) {
      if (!detail::parse_double(fields[d + 1], vec[d])) {
        throw LoadError("bad component for word '" + std::string(word) + "' on line " +
                        std::to_string(line_no));
      }
    }
    store.insert(word, std::move(vec));
  }
  if (store.size() == 0) throw LoadError("vector file contains no vectors");
  return store;
}

inline VectorStore load_vectors(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open vector file " + path.string());
  return load_vectors(in);
}

enum class Concept : std::size_t { Preposition, Noun, Verb };

inline constexpr std::size_t kConceptCount = 3;

inline constexpr std::array<std::string_view, kConceptCount> kConceptNames = {"preposition", "noun",
                                                                             "verb"};

constexpr std::string_view to_string(Concept c) { return kConceptNames[static_cast<std::size_t>(c)]; }

/// Unit-length average direction of a concept's word vectors.
struct ConceptVector {
  Concept concept_kind = Concept::Noun;
  std::vector<double> vector;
};

inline double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

/// Mean of the in-vocabulary vectors of `words`, scaled to unit norm.
/// Out-of-vocabulary words are skipped.
inline ConceptVector build_concept_vector(const VectorStore& store, Concept concept_kind,
                                          const std::vector<std::string>& words) {
  // Sort the contributing words so the floating-point sum does not depend on list order.
  std::vector<std::string> present;
  for (const auto& w : words) {
    if (store.contains(w)) present.push_back(detail::lowered(w));
  }
  std::sort(present.begin(), present.end());
  present.erase(std::unique(present.begin(), present.end()), present.end());
  if (present.empty()) {
    throw ConceptError("no word of the " + std::string(to_string(concept_kind)) +
                       " list is in the vector vocabulary");
  }
  std::vector<double> mean(store.dimension(), 0.0);
  for (const auto& w : present) {
    const auto& v = *store.find(w);
    for (std::size_t d = 0; d < mean.size(); ++d) mean[d] += v[d];
  }
  for (double& x : mean) x /= static_cast<double>(present.size());
  const double len = norm(mean);
  if (!(len > 0.0)) {
    throw ConceptError("mean vector of the " + std::string(to_string(concept_kind)) +
                       " list has zero norm");
  }
  for (double& x : mean) x /= len;
  return ConceptVector{concept_kind, std::move(mean)};
}

/// Cosine between the word's vector and the concept; 0 for unknown words.
inline double concept_similarity(const VectorStore& store, std::string_view word,
                                 const ConceptVector& concept_vec) {
  const auto* v = store.find(word);
  if (v == nullptr) return 0.0;
  const double denom = norm(*v) * norm(concept_vec.vector);
  if (!(denom > 0.0)) return 0.0;
  return std::clamp(dot(*v, concept_vec.vector) / denom, -1.0, 1.0);
}

/// The three concept directions used as features.
struct ConceptSet {
  ConceptVector preposition;
  ConceptVector noun;
  ConceptVector verb;
};

}  // namespace scalar

#endif  // SCALAR_EMBEDDINGS_HPP
