#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "scalar/dataset.hpp"
#include "support/fixtures.hpp"

namespace {

using scalar::IdentifierContext;

scalar::ParsedDataset parse(const std::string& text) {
  std::istringstream in(text);
  return scalar::parse_dataset(in);
}

TEST(ParseDataset, ExplodesIdentifiersIntoWords) {
  const auto parsed = parse("server_and_port\tdeclaration\tN CJ N\n");
  ASSERT_EQ(parsed.rows.size(), 1u);
  EXPECT_TRUE(parsed.rejected.empty());
  const auto ex = scalar::ingest(parsed.rows, *scalar::testing::shipped_resources());
  ASSERT_EQ(ex.size(), 3u);
  EXPECT_EQ(ex.examples[1].label, scalar::ScalarTag::CJ);
  EXPECT_EQ(ex.source_row, (std::vector<std::size_t>{0, 0, 0}));
}

TEST(ParseDataset, RejectsLengthMismatchWithLineNumber) {
  const auto parsed = parse("# comment\nbitSet\tdeclaration\tNM\n");
  EXPECT_TRUE(parsed.rows.empty());
  ASSERT_EQ(parsed.rejected.size(), 1u);
  EXPECT_EQ(parsed.rejected[0].line, 2u);
  EXPECT_NE(parsed.rejected[0].message.find("2 words"), std::string::npos);
}

TEST(ParseDataset, RejectsUnknownTagsAndContexts) {
  const auto parsed = parse("bitSet\tdeclaration\tNM XX\nbitSet\tvariable\tNM N\nbitSet\tNM N\n___\tclass\tN\n");
  EXPECT_TRUE(parsed.rows.empty());
  ASSERT_EQ(parsed.rejected.size(), 4u);
  EXPECT_NE(parsed.rejected[0].message.find("unknown tag"), std::string::npos);
  EXPECT_NE(parsed.rejected[1].message.find("unknown context"), std::string::npos);
}

TEST(ParseDataset, EmptyFileWarns) {
  const auto parsed = parse("");
  EXPECT_TRUE(parsed.rows.empty());
  EXPECT_EQ(parsed.warnings.size(), 1u);
  EXPECT_EQ(scalar::ingest(parsed.rows, *scalar::testing::shipped_resources()).size(), 0u);
}

TEST(ParseDataset, SeedDatasetIsClean) {
  const auto parsed = scalar::parse_dataset(scalar::testing::data_dir() / "seed_dataset.tsv");
  EXPECT_TRUE(parsed.rejected.empty());
  EXPECT_GE(parsed.rows.size(), 100u);
  std::array<std::size_t, scalar::kScalarTagCount> counts{};
  for (const auto& r : parsed.rows) {
    for (auto t : r.pattern) ++counts[scalar::index_of(t)];
  }
  for (std::size_t t = 0; t < counts.size(); ++t) EXPECT_GE(counts[t], 2u) << scalar::kScalarTagCodes[t];
}

TEST(ParseDataset, SerializeRoundTrips) {
  std::mt19937 rng(6);
  auto rows = scalar::testing::seed_rows();
  for (int trial = 0; trial < 5; ++trial) {
    std::shuffle(rows.begin(), rows.end(), rng);
    const auto parsed = parse(scalar::serialize_dataset(rows));
    EXPECT_EQ(parsed.rows, rows);
  }
}

TEST(TrainAndEvaluate, SplitsAndScores) {
  const auto ex = scalar::ingest(scalar::testing::seed_rows(), *scalar::testing::shipped_resources());
  scalar::TrainingOptions opts;
  opts.hp.n_rounds = 20;
  opts.folds = 3;
  const auto out = scalar::train_and_evaluate(ex, opts);
  EXPECT_EQ(out.train_rows + out.test_rows, ex.size());
  ASSERT_TRUE(out.cv.has_value());
  EXPECT_EQ(out.cv->folds.size(), 3u);
  EXPECT_EQ(out.held_out.total, out.test_rows);
  EXPECT_GT(out.held_out.accuracy, 0.5);
}

TEST(TrainAndEvaluate, SingleTagIsDegenerate) {
  const auto parsed = parse("count\tparameter\tN\nname\tparameter\tN\nvalue\tparameter\tN\n");
  const auto ex = scalar::ingest(parsed.rows, *scalar::testing::shipped_resources());
  EXPECT_THROW(scalar::train_and_evaluate(ex, {}), scalar::DegenerateTraining);
}

}  // namespace
