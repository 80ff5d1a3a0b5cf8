#ifndef SCALAR_DATASET_HPP
#define SCALAR_DATASET_HPP

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <filesystem>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "scalar/error.hpp"
#include "scalar/gbt.hpp"
#include "scalar/metrics.hpp"
#include "scalar/pipeline.hpp"
#include "scalar/tags.hpp"
#include "scalar/tokenizer.hpp"

namespace scalar {

/// One identifier with its gold grammar pattern.
struct DatasetRow {
  std::string identifier;
  IdentifierContext context = IdentifierContext::Declaration;
  GrammarPattern pattern;

  friend bool operator==(const DatasetRow&, const DatasetRow&) = default;
};

struct Diagnostic {
  std::size_t line = 0;  // 0 for file-level messages
  std::string message;
};

struct ParsedDataset {
  std::vector<DatasetRow> rows;
  std::vector<Diagnostic> rejected;
  std::vector<Diagnostic> warnings;
};

/// Reads "identifier TAB context TAB pattern" rows. Blank and '#' lines are
/// skipped; invalid rows are reported with their line number and dropped.
inline ParsedDataset parse_dataset(std::istream& in) {
  ParsedDataset out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos || line[0] == '#') continue;
    const auto reject = [&](std::string msg) { out.rejected.push_back({line_no, std::move(msg)}); };

    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, '\t')) fields.push_back(field);
    if (fields.size() != 3) {
      reject("expected 3 tab-separated fields, found " + std::to_string(fields.size()));
      continue;
    }
    DatasetRow row;
    row.identifier = fields[0];
    const auto context = parse_context(fields[1]);
    if (!context) {
      reject("unknown context '" + fields[1] + "'");
      continue;
    }
    row.context = *context;
    bool ok = true;
    std::istringstream codes(fields[2]);
    std::string code;
    while (codes >> code) {
      const auto tag = parse_scalar_tag(code);
      if (!tag) {
        reject("unknown tag '" + code + "'");
        ok = false;
        break;
      }
      row.pattern.push_back(*tag);
    }
    if (!ok) continue;
    try {
      const auto words = split(row.identifier);
      if (words.count() != row.pattern.size()) {
        reject("'" + row.identifier + "' splits into " + std::to_string(words.count()) + " words but the pattern has " +
               std::to_string(row.pattern.size()) + " tags");
        continue;
      }
    } catch (const MalformedIdentifier& e) {
      reject(e.what());
      continue;
    }
    out.rows.push_back(std::move(row));
  }
  if (out.rows.empty() && out.rejected.empty()) out.warnings.push_back({0, "dataset is empty"});
  return out;
}

inline ParsedDataset parse_dataset(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open dataset " + path.string());
  return parse_dataset(in);
}

inline std::string serialize_dataset(const std::vector<DatasetRow>& rows) {
  std::string out;
  for (const auto& r : rows) {
    out += r.identifier;
    out += '\t';
    out += to_string(r.context);
    out += '\t';
    out += to_string(r.pattern);
    out += '\n';
  }
  return out;
}

/// Per-word training rows, with the source identifier of each.
struct Examples {
  std::vector<LabeledExample> examples;
  std::vector<std::size_t> source_row;

  std::size_t size() const { return examples.size(); }

  gbt::Dataset to_dataset() const {
    gbt::Dataset d;
    d.n_features = kFeatureArity;
    for (const auto& e : examples) d.add(e.features.span(), index_of(e.label));
    return d;
  }

  std::vector<std::size_t> labels() const {
    std::vector<std::size_t> out;
    for (const auto& e : examples) out.push_back(index_of(e.label));
    return out;
  }
};

/// Explodes identifiers into one labeled example per word.
inline Examples ingest(const std::vector<DatasetRow>& rows, const Resources& res) {
  Examples out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto words = split(rows[r].identifier);
    const auto features = identifier_features(words, rows[r].context, res);
    for (std::size_t i = 0; i < words.count(); ++i) {
      out.examples.push_back({features[i], rows[r].pattern[i]});
      out.source_row.push_back(r);
    }
  }
  return out;
}

struct TrainingOptions {
  gbt::Hyperparameters hp;
  double train_fraction = 0.7;
  std::size_t folds = 10;
};

struct TrainingOutcome {
  gbt::Ensemble model;
  std::size_t train_rows = 0;
  std::size_t test_rows = 0;
  std::optional<gbt::CvReport> cv;
  MetricReport held_out;
};

/// Predicts every example and scores the predictions word by word.
inline MetricReport evaluate_examples(const gbt::Ensemble& model, const std::vector<LabeledExample>& examples) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::pair<ScalarTag, ScalarTag>> pairs;
  pairs.reserve(examples.size());
  for (const auto& e : examples) pairs.emplace_back(e.label, kAllScalarTags[model.predict(e.features.span()).label]);
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return evaluate(pairs, elapsed);
}

/// Stratified train/test split, k-fold CV inside the training portion, a
/// final fit on the whole training portion, and held-out metrics.
/// folds == 0 skips cross-validation; train_fraction == 1 trains on every
/// row and leaves the held-out report empty.
inline TrainingOutcome train_and_evaluate(const Examples& data, const TrainingOptions& opts) {
  const auto labels = data.labels();
  if (labels.empty()) throw DegenerateTraining("no training examples");
  if (std::adjacent_find(labels.begin(), labels.end(), std::not_equal_to<>()) == labels.end()) {
    throw DegenerateTraining("training data contains a single tag (" +
                             std::string(to_string(kAllScalarTags[labels.front()])) + ")");
  }
  if (!(opts.train_fraction > 0.0 && opts.train_fraction <= 1.0)) {
    throw ContractViolation("train fraction must lie in (0, 1]");
  }
  gbt::Split split_rows;
  if (opts.train_fraction >= 1.0) {
    split_rows.train.resize(labels.size());
    std::iota(split_rows.train.begin(), split_rows.train.end(), std::size_t{0});
  } else {
    split_rows = gbt::stratified_split(labels, opts.train_fraction, opts.hp.seed);
  }
  const gbt::Dataset all = data.to_dataset();
  const gbt::Dataset train = all.subset(split_rows.train);

  TrainingOutcome out;
  out.train_rows = split_rows.train.size();
  out.test_rows = split_rows.test.size();
  if (opts.folds > 0) out.cv = gbt::cross_validate(train, scalar_class_names(), opts.hp, opts.folds);
  out.model = gbt::fit(train, scalar_class_names(), opts.hp);

  std::vector<LabeledExample> test;
  for (auto i : split_rows.test) test.push_back(data.examples[i]);
  if (!test.empty()) out.held_out = evaluate_examples(out.model, test);
  return out;
}

}  // namespace scalar

#endif  // SCALAR_DATASET_HPP
