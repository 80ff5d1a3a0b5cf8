#include <gtest/gtest.h>

#include "scalar/features.hpp"
#include "support/fixtures.hpp"

namespace {

using scalar::IdentifierContext;
using namespace scalar::slot;

class FeaturesTest : public ::testing::Test {
 protected:
  scalar::testing::TinyResources tiny;

  scalar::FeatureVector at(const std::string& id, std::size_t index, IdentifierContext ctx) {
    const auto words = scalar::split(id);
    const auto tags = tiny.res.baseline.tag(words, tiny.res.lexicon);
    return scalar::extract(words, index, ctx, tiny.res.feature_resources(), tags);
  }
};

double one_hot_sum(const scalar::FeatureVector& fv, std::size_t begin, std::size_t n) {
  double s = 0;
  for (std::size_t i = begin; i < begin + n; ++i) s += fv[i];
  return s;
}

TEST_F(FeaturesTest, LastWordOfTwo) {
  const auto fv = at("bitSet", 2, IdentifierContext::Attribute);
  EXPECT_EQ(fv[kPositionRatio], 1.0);
  EXPECT_EQ(fv[kIsLastWord], 1.0);
  EXPECT_EQ(fv[kIsFirstWord], 0.0);
  EXPECT_EQ(fv[kWordCount], 2.0);
  EXPECT_EQ(fv[kWordLength], 3.0);
  EXPECT_EQ(fv[kContext + scalar::index_of(IdentifierContext::Attribute)], 1.0);
}

TEST_F(FeaturesTest, DigitToken) {
  const auto fv = at("42", 1, IdentifierContext::Declaration);
  EXPECT_EQ(fv[kIsDigitToken], 1.0);
  EXPECT_EQ(fv[kContainsDigit], 1.0);
  EXPECT_EQ(fv[kBaselineTag + scalar::index_of(scalar::PtbTag::CD)], 1.0);
}

TEST_F(FeaturesTest, PrepositionSignals) {
  const auto fv = at("hideBehindWall", 2, IdentifierContext::Function);
  EXPECT_EQ(fv[kInPrepositionList], 1.0);
  EXPECT_EQ(fv[kSimPreposition],
            scalar::concept_similarity(tiny.res.vectors, "behind", tiny.res.concepts.preposition));
  EXPECT_GT(fv[kSimPreposition], 0.9);
  EXPECT_EQ(fv[kIsDictionaryWord], 1.0);
}

TEST_F(FeaturesTest, OutOfVocabularySimilaritiesAreZero) {
  const auto fv = at("zzz", 1, IdentifierContext::Class);
  EXPECT_EQ(fv[kSimPreposition], 0.0);
  EXPECT_EQ(fv[kSimNoun], 0.0);
  EXPECT_EQ(fv[kSimVerb], 0.0);
}

TEST_F(FeaturesTest, SingleWordIdentifier) {
  const auto fv = at("stack", 1, IdentifierContext::Parameter);
  EXPECT_EQ(fv[kIsFirstWord], 1.0);
  EXPECT_EQ(fv[kIsLastWord], 1.0);
  EXPECT_EQ(fv[kPositionRatio], 1.0);
}

TEST_F(FeaturesTest, ShapeAndOneHotInvariants) {
  EXPECT_EQ(scalar::feature_names().size(), scalar::kFeatureArity);
  for (const char* id : {"actionToIndexMap", "server_and_port", "fPtr", "x", "layer10", "theseItems"}) {
    const auto words = scalar::split(id);
    for (std::size_t c = 0; c < scalar::kContextCount; ++c) {
      const auto ctx = static_cast<IdentifierContext>(c);
      for (std::size_t i = 1; i <= words.count(); ++i) {
        const auto fv = at(id, i, ctx);
        EXPECT_EQ(fv.values.size(), 47u);
        EXPECT_EQ(one_hot_sum(fv, kBaselineTag, scalar::kPtbTagCount), 1.0);
        EXPECT_EQ(one_hot_sum(fv, kContext, scalar::kContextCount), 1.0);
        EXPECT_EQ(fv[kIsFirstWord] == 1.0, i == 1);
        EXPECT_EQ(fv[kIsLastWord] == 1.0, fv[kPositionRatio] == 1.0);
        EXPECT_EQ(fv, at(id, i, ctx));
      }
    }
  }
}

TEST_F(FeaturesTest, ContractViolations) {
  const auto words = scalar::split("bitSet");
  const auto tags = tiny.res.baseline.tag(words, tiny.res.lexicon);
  const auto fr = tiny.res.feature_resources();
  EXPECT_THROW(scalar::extract(words, 3, IdentifierContext::Class, fr, tags), scalar::ContractViolation);
  EXPECT_THROW(scalar::extract(words, 1, IdentifierContext::Class, fr, std::span(tags).first(1)),
               scalar::ContractViolation);
}

}  // namespace
