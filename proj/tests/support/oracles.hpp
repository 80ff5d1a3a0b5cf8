#ifndef SCALAR_TESTS_ORACLES_HPP
#define SCALAR_TESTS_ORACLES_HPP

// Independent reference computations. Nothing here calls into the code under test.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <utility>
#include <vector>

namespace scalar::testing {

struct OracleMetrics {
  double accuracy = 0.0;
  double balanced_accuracy = 0.0;
  double weighted_precision = 0.0;
  double weighted_recall = 0.0;
  double weighted_f1 = 0.0;
  std::map<int, double> precision, recall, f1;
};

/// Counts true/false positives class by class by scanning the pair list.
inline OracleMetrics enumerate_metrics(const std::vector<std::pair<int, int>>& pairs, int n_classes) {
  OracleMetrics m;
  const double n = static_cast<double>(pairs.size());
  int correct = 0;
  for (const auto& [g, p] : pairs) correct += g == p;
  m.accuracy = correct / n;
  double recall_sum = 0.0;
  int present = 0;
  for (int c = 0; c < n_classes; ++c) {
    int tp = 0, fp = 0, fn = 0;
    for (const auto& [g, p] : pairs) {
      if (g == c && p == c) ++tp;
      else if (g != c && p == c) ++fp;
      else if (g == c && p != c) ++fn;
    }
    const double prec = (tp + fp) ? static_cast<double>(tp) / (tp + fp) : 0.0;
    const double rec = (tp + fn) ? static_cast<double>(tp) / (tp + fn) : 0.0;
    const double f = (prec + rec) > 0 ? 2 * prec * rec / (prec + rec) : 0.0;
    m.precision[c] = prec;
    m.recall[c] = rec;
    m.f1[c] = f;
    const double w = (tp + fn) / n;
    m.weighted_precision += w * prec;
    m.weighted_recall += w * rec;
    m.weighted_f1 += w * f;
    if (tp + fn > 0) {
      recall_sum += rec;
      ++present;
    }
  }
  m.balanced_accuracy = recall_sum / present;
  return m;
}

struct Stump {
  double threshold = 0.0;
  double sse = std::numeric_limits<double>::infinity();
};

/// Exhaustive search over every midpoint threshold of a single feature,
/// minimizing the summed squared error of target around each side's mean.
/// Ties keep the lowest threshold.
inline Stump best_stump(const std::vector<double>& x, const std::vector<double>& target) {
  std::vector<double> values = x;
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  Stump best;
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    const double t = (values[i] + values[i + 1]) / 2.0;
    double sl = 0, sr = 0;
    int nl = 0, nr = 0;
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (x[j] <= t) sl += target[j], ++nl;
      else sr += target[j], ++nr;
    }
    const double ml = sl / nl, mr = sr / nr;
    double sse = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
      const double d = target[j] - (x[j] <= t ? ml : mr);
      sse += d * d;
    }
    if (sse < best.sse - 1e-12) best = {t, sse};
  }
  return best;
}

}  // namespace scalar::testing

#endif  // SCALAR_TESTS_ORACLES_HPP
