#ifndef SCALAR_METRICS_HPP
#define SCALAR_METRICS_HPP

#include <cstddef>
#include <cstdio>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "scalar/error.hpp"
#include "scalar/tags.hpp"

namespace scalar {

/// counts[gold][predicted] over `n` classes.
class ConfusionMatrix {
 public:
  explicit ConfusionMatrix(std::size_t n_classes) : n_(n_classes), counts_(n_classes * n_classes, 0) {}

  void add(std::size_t gold, std::size_t predicted) {
    if (gold >= n_ || predicted >= n_) throw ContractViolation("confusion matrix: class index out of range");
    ++counts_[gold * n_ + predicted];
    ++total_;
  }

  std::size_t classes() const { return n_; }
  std::size_t total() const { return total_; }
  std::size_t at(std::size_t gold, std::size_t predicted) const { return counts_[gold * n_ + predicted]; }

  std::size_t support(std::size_t gold) const {
    std::size_t s = 0;
    for (std::size_t p = 0; p < n_; ++p) s += at(gold, p);
    return s;
  }

  std::size_t predicted_count(std::size_t predicted) const {
    std::size_t s = 0;
    for (std::size_t g = 0; g < n_; ++g) s += at(g, predicted);
    return s;
  }

 private:
  std::size_t n_;
  std::vector<std::size_t> counts_;
  std::size_t total_ = 0;
};

struct ClassScores {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t support = 0;
};

struct MetricReport {
  double accuracy = 0.0;
  double balanced_accuracy = 0.0;
  double weighted_precision = 0.0;
  double weighted_recall = 0.0;
  double weighted_f1 = 0.0;
  std::vector<ClassScores> per_class;
  std::vector<std::string> class_names;
  std::size_t total = 0;
  double wall_clock_seconds = 0.0;
};

/// Word-level metrics from a confusion matrix. Zero denominators give 0;
/// balanced accuracy averages recall over classes with non-zero support.
inline MetricReport evaluate(const ConfusionMatrix& cm, double elapsed_seconds,
                             std::vector<std::string> class_names = {}) {
  if (cm.total() == 0) throw ContractViolation("evaluate: no pairs to evaluate");
  if (elapsed_seconds < 0.0) throw ContractViolation("evaluate: negative elapsed time");
  const std::size_t n = cm.classes();
  if (class_names.empty()) {
    for (std::size_t i = 0; i < n; ++i) class_names.push_back(std::to_string(i));
  }
  MetricReport r;
  r.class_names = std::move(class_names);
  r.total = cm.total();
  r.wall_clock_seconds = elapsed_seconds;
  r.per_class.resize(n);

  const double total = static_cast<double>(cm.total());
  std::size_t correct = 0;
  double recall_sum = 0.0;
  std::size_t present = 0;
  for (std::size_t t = 0; t < n; ++t) {
    auto& s = r.per_class[t];
    const std::size_t tp = cm.at(t, t);
    correct += tp;
    s.support = cm.support(t);
    const std::size_t column = cm.predicted_count(t);
    s.recall = s.support ? static_cast<double>(tp) / static_cast<double>(s.support) : 0.0;
    s.precision = column ? static_cast<double>(tp) / static_cast<double>(column) : 0.0;
    s.f1 = (s.precision + s.recall) > 0.0 ? 2.0 * s.precision * s.recall / (s.precision + s.recall) : 0.0;
    if (s.support) {
      recall_sum += s.recall;
      ++present;
    }
    const double weight = static_cast<double>(s.support) / total;
    r.weighted_precision += weight * s.precision;
    r.weighted_recall += weight * s.recall;
    r.weighted_f1 += weight * s.f1;
  }
  r.accuracy = static_cast<double>(correct) / total;
  r.balanced_accuracy = recall_sum / static_cast<double>(present);
  return r;
}

/// Evaluates (gold, predicted) tag pairs over the full 11-tag set.
inline MetricReport evaluate(std::span<const std::pair<ScalarTag, ScalarTag>> pairs, double elapsed_seconds) {
  if (pairs.empty()) throw ContractViolation("evaluate: no pairs to evaluate");
  ConfusionMatrix cm(kScalarTagCount);
  for (const auto& [gold, predicted] : pairs) cm.add(index_of(gold), index_of(predicted));
  std::vector<std::string> names(kScalarTagCodes.begin(), kScalarTagCodes.end());
  return evaluate(cm, elapsed_seconds, std::move(names));
}

inline nlohmann::json to_json(const MetricReport& r) {
  nlohmann::json per_tag = nlohmann::json::object();
  for (std::size_t i = 0; i < r.per_class.size(); ++i) {
    const auto& s = r.per_class[i];
    per_tag[r.class_names[i]] = {
        {"precision", s.precision}, {"recall", s.recall}, {"f1", s.f1}, {"support", s.support}};
  }
  return {{"accuracy", r.accuracy},
          {"balanced_accuracy", r.balanced_accuracy},
          {"weighted_recall", r.weighted_recall},
          {"weighted_precision", r.weighted_precision},
          {"weighted_f1", r.weighted_f1},
          {"words", r.total},
          {"wall_clock_seconds", r.wall_clock_seconds},
          {"per_tag", per_tag}};
}

/// Aligned plain-text rendering: a summary row, then precision/recall/F1 rows per tag.
inline std::string to_table(const MetricReport& r) {
  std::string out;
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-10s %-10s %-10s %-10s %-10s %-10s %s\n", "Accuracy", "Balanced",
                "W.Recall", "W.Prec", "W.F1", "Words", "Seconds");
  out += buf;
  std::snprintf(buf, sizeof buf, "%-10.4f %-10.4f %-10.4f %-10.4f %-10.4f %-10zu %.2f\n\n", r.accuracy,
                r.balanced_accuracy, r.weighted_recall, r.weighted_precision, r.weighted_f1, r.total,
                r.wall_clock_seconds);
  out += buf;
  std::snprintf(buf, sizeof buf, "%-11s", "");
  out += buf;
  for (const auto& name : r.class_names) {
    std::snprintf(buf, sizeof buf, "%8s", name.c_str());
    out += buf;
  }
  out += '\n';
  const auto row = [&](const char* label, auto field) {
    std::snprintf(buf, sizeof buf, "%-11s", label);
    out += buf;
    for (const auto& s : r.per_class) {
      std::snprintf(buf, sizeof buf, "%8.4f", field(s));
      out += buf;
    }
    out += '\n';
  };
  row("Precision:", [](const ClassScores& s) { return s.precision; });
  row("Recall:", [](const ClassScores& s) { return s.recall; });
  row("F1 Score:", [](const ClassScores& s) { return s.f1; });
  std::snprintf(buf, sizeof buf, "%-11s", "Support:");
  out += buf;
  for (const auto& s : r.per_class) {
    std::snprintf(buf, sizeof buf, "%8zu", s.support);
    out += buf;
  }
  out += '\n';
  return out;
}

}  // namespace scalar

#endif  // SCALAR_METRICS_HPP
