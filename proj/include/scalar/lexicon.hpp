#ifndef SCALAR_LEXICON_HPP
#define SCALAR_LEXICON_HPP

#include <array>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "scalar/error.hpp"
#include "scalar/tokenizer.hpp"

namespace scalar {

enum class ClosedCategory : std::size_t { Preposition, Conjunction, Determiner, Pronoun };

inline constexpr std::size_t kClosedCategoryCount = 4;

inline constexpr std::array<std::string_view, kClosedCategoryCount> kClosedCategoryNames = {
    "preposition", "conjunction", "determiner", "pronoun"};

constexpr std::string_view to_string(ClosedCategory c) {
  return kClosedCategoryNames[static_cast<std::size_t>(c)];
}

using WordSet = std::unordered_set<std::string>;

/// Parses a newline-delimited word list. '#' lines are comments; entries are
/// trimmed and lowercased; blank lines are skipped.
inline std::vector<std::string> parse_word_list(std::istream& in) {
  std::vector<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    words.push_back(detail::lowered(std::string_view(line).substr(first, last - first + 1)));
  }
  return words;
}

inline std::vector<std::string> read_word_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open word list " + path.string());
  return parse_word_list(in);
}

/// Word lists backing the lexical features and the dictionary flag.
/// Immutable once built.
class Lexicon {
 public:
  Lexicon() = default;

  void add_dictionary_words(const std::vector<std::string>& words) { insert(dictionary_, words); }
  void add_user_words(const std::vector<std::string>& words) { insert(user_words_, words); }
  void add_user_abbreviations(const std::vector<std::string>& words) {
    insert(user_abbreviations_, words);
  }
  void add_closed_words(ClosedCategory category, const std::vector<std::string>& words) {
    insert(closed_[static_cast<std::size_t>(category)], words);
  }

  /// Loads dictionary, allowlists, and closed lists from `dir`:
  /// dictionary.txt, user_words.txt, abbreviations.txt, closed/<category>.txt.
  /// The two allowlists are optional; everything else must exist.
  static Lexicon load_directory(const std::filesystem::path& dir) {
    Lexicon lex;
    lex.add_dictionary_words(read_word_list(dir / "dictionary.txt"));
    if (std::filesystem::exists(dir / "user_words.txt")) {
      lex.add_user_words(read_word_list(dir / "user_words.txt"));
    }
    if (std::filesystem::exists(dir / "abbreviations.txt")) {
      lex.add_user_abbreviations(read_word_list(dir / "abbreviations.txt"));
    }
    for (std::size_t i = 0; i < kClosedCategoryCount; ++i) {
      const auto category = static_cast<ClosedCategory>(i);
      lex.add_closed_words(category,
                           read_word_list(dir / "closed" / (std::string(to_string(category)) + ".txt")));
    }
    return lex;
  }

  bool is_dictionary_word(std::string_view word) const {
    const std::string w = detail::lowered(word);
    return dictionary_.contains(w) || user_words_.contains(w) || user_abbreviations_.contains(w);
  }

  bool in_closed_list(std::string_view word, ClosedCategory category) const {
    return closed_[static_cast<std::size_t>(category)].contains(detail::lowered(word));
  }

  /// First matching list in the order preposition, conjunction, determiner, pronoun.
  std::optional<ClosedCategory> closed_category(std::string_view word) const {
    const std::string w = detail::lowered(word);
    for (std::size_t i = 0; i < kClosedCategoryCount; ++i) {
      if (closed_[i].contains(w)) return static_cast<ClosedCategory>(i);
    }
    return std::nullopt;
  }

  const WordSet& dictionary() const { return dictionary_; }
  const WordSet& user_words() const { return user_words_; }
  const WordSet& user_abbreviations() const { return user_abbreviations_; }
  const WordSet& closed_list(ClosedCategory category) const {
    return closed_[static_cast<std::size_t>(category)];
  }

 private:
  static void insert(WordSet& set, const std::vector<std::string>& words) {
    for (const auto& w : words) {
      if (!w.empty()) set.insert(detail::lowered(w));
    }
  }

  WordSet dictionary_;
  WordSet user_words_;
  WordSet user_abbreviations_;
  std::array<WordSet, kClosedCategoryCount> closed_;
};

}  // namespace scalar

#endif  // SCALAR_LEXICON_HPP
