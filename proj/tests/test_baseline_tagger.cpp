#include <sstream>

#include <gtest/gtest.h>

#include "scalar/baseline_tagger.hpp"
#include "support/fixtures.hpp"

namespace {

using scalar::PtbTag;

class BaselineTaggerTest : public ::testing::Test {
 protected:
  const scalar::Lexicon& lex = scalar::testing::shipped_resources()->lexicon;
  scalar::BaselineTagger tagger;

  std::vector<PtbTag> tag(const std::string& id) { return tagger.tag(scalar::split(id), lex); }
};

TEST_F(BaselineTaggerTest, ReferenceExamples) {
  EXPECT_EQ(tag("waiting"), std::vector<PtbTag>{PtbTag::VBG});
  EXPECT_EQ(tag("42"), std::vector<PtbTag>{PtbTag::CD});
  EXPECT_EQ(tag("quickly"), std::vector<PtbTag>{PtbTag::RB});
}

TEST_F(BaselineTaggerTest, ClosedListsMapToFunctionTags) {
  EXPECT_EQ(tag("behind"), std::vector<PtbTag>{PtbTag::IN});
  EXPECT_EQ(tag("to"), std::vector<PtbTag>{PtbTag::TO});
  EXPECT_EQ(tag("and"), std::vector<PtbTag>{PtbTag::CC});
  EXPECT_EQ(tag("the"), std::vector<PtbTag>{PtbTag::DT});
  EXPECT_EQ(tag("which"), std::vector<PtbTag>{PtbTag::WDT});
  EXPECT_EQ(tag("them"), std::vector<PtbTag>{PtbTag::PRP});
  EXPECT_EQ(tag("its"), std::vector<PtbTag>{PtbTag::PRP_POSS});
}

TEST_F(BaselineTaggerTest, EveryListedPrepositionIsInOrTo) {
  for (const auto& w : lex.closed_list(scalar::ClosedCategory::Preposition)) {
    const auto t = tagger.tag_word(w, lex);
    EXPECT_EQ(t, w == "to" ? PtbTag::TO : PtbTag::IN) << w;
  }
}

TEST_F(BaselineTaggerTest, SuffixAndLexiconRules) {
  EXPECT_EQ(tag("strings"), std::vector<PtbTag>{PtbTag::NNS});
  EXPECT_EQ(tag("classes"), std::vector<PtbTag>{PtbTag::NNS});
  EXPECT_EQ(tag("parsed"), std::vector<PtbTag>{PtbTag::VBD});
  EXPECT_EQ(tag("string"), std::vector<PtbTag>{PtbTag::NN});
  EXPECT_EQ(tag("getValue"), (std::vector<PtbTag>{PtbTag::VB, PtbTag::NN}));
  EXPECT_EQ(tag("isEmpty"), (std::vector<PtbTag>{PtbTag::VBZ, PtbTag::JJ}));
  EXPECT_EQ(tag("mask_0xFF"), (std::vector<PtbTag>{PtbTag::NN, PtbTag::CD}));
  EXPECT_EQ(tag("xyzzqj"), std::vector<PtbTag>{PtbTag::NN});
}

TEST_F(BaselineTaggerTest, InfinitiveAfterTo) {
  EXPECT_EQ(tag("toMap"), (std::vector<PtbTag>{PtbTag::TO, PtbTag::VB}));
  EXPECT_EQ(tag("map"), std::vector<PtbTag>{PtbTag::NN});
}

TEST_F(BaselineTaggerTest, DeterministicAndTotal) {
  for (const char* id : {"actionToIndexMap", "timeForEachLine", "GL_MAX_TEXTURE_SIZE", "x", "a1b2"}) {
    const auto a = tag(id);
    EXPECT_EQ(a, tag(id));
    EXPECT_EQ(a.size(), scalar::split(id).count());
  }
}

TEST_F(BaselineTaggerTest, LexiconFileOverrides) {
  std::istringstream in("# word\ttag\nwidget\tJJ\n");
  tagger.load_lexicon(in);
  EXPECT_EQ(tag("widget"), std::vector<PtbTag>{PtbTag::JJ});
  std::istringstream bad("widget\tXX\n");
  EXPECT_THROW(tagger.load_lexicon(bad), scalar::LoadError);
}

}  // namespace
