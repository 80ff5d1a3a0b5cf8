// Drives the built command-line tool end to end.
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#ifndef SCALAR_CLI_PATH
#error "SCALAR_CLI_PATH must point at the built scalar executable"
#endif

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(SCALAR_CLI_PATH) + " " + args + " 2>&1";
  RunResult r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = ::pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class CliTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    dir_ = fs::temp_directory_path() / ("scalar_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
    model_ = dir_ / "model.txt";
    const auto r = run("train --dataset " + dataset().string() + " --train-fraction 1 --folds 0 --seed 3 --output " +
                       model_.string());
    ASSERT_EQ(r.exit_code, 0) << r.out;
  }
  static void TearDownTestSuite() { fs::remove_all(dir_); }

  static fs::path dataset() { return fs::path(SCALAR_DATA_DIR) / "seed_dataset.tsv"; }

  static std::vector<std::string> tag(const std::string& identifier, const std::string& context = "function") {
    const auto r = run("tag " + identifier + " --context " + context + " --model " + model_.string());
    EXPECT_EQ(r.exit_code, 0) << r.out;
    const auto body = nlohmann::json::parse(r.out);
    std::vector<std::string> tags;
    for (const auto& w : body["words"]) tags.push_back(w["tag"]);
    return tags;
  }

  static inline fs::path dir_;
  static inline fs::path model_;
};

TEST_F(CliTest, TagsKnownIdentifiers) {
  EXPECT_EQ(tag("as_binary"), (std::vector<std::string>{"P", "N"}));
  EXPECT_EQ(tag("openIfEmpty"), (std::vector<std::string>{"V", "CJ", "NM"}));
  EXPECT_EQ(tag("server_and_port", "declaration"), (std::vector<std::string>{"N", "CJ", "N"}));
}

TEST_F(CliTest, MalformedIdentifierFails) {
  const auto r = run("tag ___ --model " + model_.string());
  EXPECT_NE(r.exit_code, 0);
  EXPECT_NE(r.out.find("error"), std::string::npos);
}

TEST_F(CliTest, UnknownContextFails) {
  EXPECT_NE(run("tag getName --context variable --model " + model_.string()).exit_code, 0);
}

TEST_F(CliTest, TrainingIsReproducible) {
  const auto a = dir_ / "a.txt";
  const auto b = dir_ / "b.txt";
  const std::string common = "train --dataset " + dataset().string() + " --rounds 15 --folds 2 --seed 11 --output ";
  ASSERT_EQ(run(common + a.string()).exit_code, 0);
  ASSERT_EQ(run(common + b.string()).exit_code, 0);
  EXPECT_EQ(slurp(a), slurp(b));
}

TEST_F(CliTest, TrainReportsHeldOutMetrics) {
  const auto r = run("train --dataset " + dataset().string() + " --rounds 15 --folds 0 --json --output " +
                     (dir_ / "j.txt").string());
  ASSERT_EQ(r.exit_code, 0) << r.out;
  EXPECT_NE(r.out.find("\"balanced_accuracy\""), std::string::npos);
}

TEST_F(CliTest, SingleTagDatasetIsDegenerate) {
  const auto data = dir_ / "single.tsv";
  std::ofstream(data) << "count\tparameter\tN\nname\tparameter\tN\nsize\tattribute\tN\n";
  const auto r = run("train --dataset " + data.string() + " --output " + (dir_ / "x.txt").string());
  EXPECT_NE(r.exit_code, 0);
  EXPECT_NE(r.out.find("degenerate"), std::string::npos) << r.out;
}

TEST_F(CliTest, IngestCheckReportsRejectedRows) {
  EXPECT_EQ(run("ingest-check --dataset " + dataset().string()).exit_code, 0);
  const auto data = dir_ / "bad.tsv";
  std::ofstream(data) << "bitSet\tdeclaration\tNM N\nbitSet\tdeclaration\tNM\n";
  const auto r = run("ingest-check --dataset " + data.string());
  EXPECT_NE(r.exit_code, 0);
  EXPECT_NE(r.out.find(":2: rejected"), std::string::npos) << r.out;
}

TEST_F(CliTest, EvaluateSavedModel) {
  const auto r = run("evaluate --dataset " + dataset().string() + " --model " + model_.string());
  ASSERT_EQ(r.exit_code, 0) << r.out;
  EXPECT_NE(r.out.find("Accuracy"), std::string::npos);
}

}  // namespace
