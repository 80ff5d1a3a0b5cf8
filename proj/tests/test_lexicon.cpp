#include <sstream>

#include <gtest/gtest.h>

#include "scalar/lexicon.hpp"
#include "support/fixtures.hpp"

namespace {

using scalar::ClosedCategory;
using scalar::Lexicon;

Lexicon small_lexicon() {
  Lexicon lex;
  lex.add_dictionary_words({"stack", "function", "language"});
  lex.add_closed_words(ClosedCategory::Preposition, {"behind", "at", "under", "for", "in front of"});
  lex.add_closed_words(ClosedCategory::Conjunction, {"and", "for", "nor", "but", "or", "yet", "so"});
  lex.add_closed_words(ClosedCategory::Determiner, {"the", "this"});
  lex.add_closed_words(ClosedCategory::Pronoun, {"it", "them"});
  return lex;
}

TEST(Lexicon, DictionaryMembership) {
  auto lex = small_lexicon();
  EXPECT_TRUE(lex.is_dictionary_word("stack"));
  EXPECT_FALSE(lex.is_dictionary_word("xyzzqj"));
  EXPECT_FALSE(lex.is_dictionary_word("gimp"));
  lex.add_user_words({"gimp"});
  EXPECT_TRUE(lex.is_dictionary_word("gimp"));
  lex.add_user_abbreviations({"ptr"});
  EXPECT_TRUE(lex.is_dictionary_word("ptr"));
}

TEST(Lexicon, ClosedCategories) {
  const auto lex = small_lexicon();
  EXPECT_EQ(lex.closed_category("behind"), ClosedCategory::Preposition);
  EXPECT_EQ(lex.closed_category("and"), ClosedCategory::Conjunction);
  EXPECT_EQ(lex.closed_category("widget"), std::nullopt);
  // Listed as both; preposition wins.
  EXPECT_EQ(lex.closed_category("for"), ClosedCategory::Preposition);
  // Multi-word entries are stored but tokens never match them piecewise.
  EXPECT_EQ(lex.closed_category("front"), std::nullopt);
}

TEST(Lexicon, QueriesAreCaseNormalized) {
  const auto lex = small_lexicon();
  EXPECT_EQ(lex.is_dictionary_word("Stack"), lex.is_dictionary_word("stack"));
  EXPECT_EQ(lex.closed_category("BEHIND"), lex.closed_category("behind"));
  EXPECT_EQ(lex.closed_category("The"), ClosedCategory::Determiner);
}

TEST(Lexicon, ParseWordListSkipsCommentsAndBlanks) {
  std::istringstream in("# header\nStack\n\n  Queue  \r\n#skip\nin front of\n");
  const auto words = scalar::parse_word_list(in);
  EXPECT_EQ(words, (std::vector<std::string>{"stack", "queue", "in front of"}));
}

TEST(Lexicon, LoadIsDeterministic) {
  const auto a = Lexicon::load_directory(scalar::testing::data_dir());
  const auto b = Lexicon::load_directory(scalar::testing::data_dir());
  EXPECT_EQ(a.dictionary(), b.dictionary());
  for (std::size_t i = 0; i < scalar::kClosedCategoryCount; ++i) {
    const auto c = static_cast<ClosedCategory>(i);
    EXPECT_EQ(a.closed_list(c), b.closed_list(c));
    EXPECT_FALSE(a.closed_list(c).empty());
  }
  for (const char* w : {"behind", "and", "the", "it", "stack", "widget", "gimp"}) {
    EXPECT_EQ(a.is_dictionary_word(w), b.is_dictionary_word(w));
    EXPECT_EQ(a.closed_category(w), b.closed_category(w));
  }
}

TEST(Lexicon, MissingFileIsALoadError) {
  EXPECT_THROW(scalar::read_word_list("/nonexistent/words.txt"), scalar::LoadError);
}

}  // namespace
