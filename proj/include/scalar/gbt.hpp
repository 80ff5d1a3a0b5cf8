#ifndef SCALAR_GBT_HPP
#define SCALAR_GBT_HPP

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "scalar/error.hpp"
#include "scalar/metrics.hpp"

namespace scalar::gbt {

struct Hyperparameters {
  std::size_t n_rounds = 100;
  double learning_rate = 0.1;
  std::size_t max_depth = 3;
  std::size_t min_samples_leaf = 1;
  std::uint64_t seed = 0;

  void validate() const {
    if (max_depth == 0 || min_samples_leaf == 0) {
      throw ContractViolation("hyperparameters: max_depth and min_samples_leaf must be positive");
    }
    if (!(learning_rate > 0.0) || learning_rate > 1.0) {
      throw ContractViolation("hyperparameters: learning_rate must lie in (0, 1]");
    }
  }

  friend bool operator==(const Hyperparameters&, const Hyperparameters&) = default;
};

/// Row-major design matrix with integer class labels.
struct Dataset {
  std::size_t n_features = 0;
  std::vector<double> x;
  std::vector<std::size_t> y;

  std::size_t size() const { return y.size(); }
  std::span<const double> row(std::size_t i) const { return {x.data() + i * n_features, n_features}; }

  void add(std::span<const double> features, std::size_t label) {
    if (n_features == 0 && y.empty()) n_features = features.size();
    if (features.size() != n_features) throw ContractViolation("dataset: row arity mismatch");
    x.insert(x.end(), features.begin(), features.end());
    y.push_back(label);
  }

  Dataset subset(std::span<const std::size_t> rows) const {
    Dataset out;
    out.n_features = n_features;
    out.x.reserve(rows.size() * n_features);
    out.y.reserve(rows.size());
    for (std::size_t r : rows) out.add(row(r), y[r]);
    return out;
  }
};

struct TreeNode {
  std::int32_t feature = -1;  // -1 marks a leaf
  double threshold = 0.0;     // rows with x[feature] <= threshold go left
  std::int32_t left = -1;
  std::int32_t right = -1;
  double value = 0.0;

  bool is_leaf() const { return feature < 0; }
  friend bool operator==(const TreeNode&, const TreeNode&) = default;
};

/// Binary regression tree stored as a flat node list; node 0 is the root.
class RegressionTree {
 public:
  RegressionTree() = default;
  explicit RegressionTree(std::vector<TreeNode> nodes) : nodes_(std::move(nodes)) {}

  double predict(std::span<const double> x) const {
    std::size_t i = 0;
    while (!nodes_[i].is_leaf()) {
      const auto& n = nodes_[i];
      i = static_cast<std::size_t>(x[static_cast<std::size_t>(n.feature)] <= n.threshold ? n.left : n.right);
    }
    return nodes_[i].value;
  }

  std::size_t depth() const { return nodes_.empty() ? 0 : depth_from(0); }

  const std::vector<TreeNode>& nodes() const { return nodes_; }
  std::vector<TreeNode>& nodes() { return nodes_; }

  friend bool operator==(const RegressionTree&, const RegressionTree&) = default;

 private:
  std::size_t depth_from(std::size_t i) const {
    const auto& n = nodes_[i];
    if (n.is_leaf()) return 0;
    return 1 + std::max(depth_from(static_cast<std::size_t>(n.left)), depth_from(static_cast<std::size_t>(n.right)));
  }

  std::vector<TreeNode> nodes_;
};

/// Numerically stable softmax.
inline std::vector<double> softmax(std::span<const double> scores) {
  std::vector<double> p(scores.size());
  const double top = *std::max_element(scores.begin(), scores.end());
  double sum = 0.0;
  for (std::size_t k = 0; k < scores.size(); ++k) {
    p[k] = std::exp(scores[k] - top);
    sum += p[k];
  }
  for (double& v : p) v /= sum;
  return p;
}

struct Prediction {
  std::size_t label = 0;
  std::vector<double> probabilities;
};

/// Multi-class gradient-boosted ensemble: base log-odds plus one tree per
/// class per round. Immutable after training.
class Ensemble {
 public:
  Ensemble() = default;

  std::size_t n_classes() const { return class_names_.size(); }
  std::size_t n_features() const { return n_features_; }
  std::size_t n_rounds() const { return n_classes() ? trees_.size() / n_classes() : 0; }
  const std::vector<std::string>& class_names() const { return class_names_; }
  const std::vector<double>& base_scores() const { return base_scores_; }
  const std::vector<RegressionTree>& trees() const { return trees_; }
  const RegressionTree& tree(std::size_t round, std::size_t k) const { return trees_[round * n_classes() + k]; }
  const Hyperparameters& hyperparameters() const { return hp_; }

  /// Raw per-class scores: base score plus every tree's output, summed in round order.
  std::vector<double> decision(std::span<const double> x) const {
    if (x.size() != n_features_) {
      throw ContractViolation("predict: feature arity " + std::to_string(x.size()) + ", model expects " +
                              std::to_string(n_features_));
    }
    std::vector<double> scores = base_scores_;
    const std::size_t k_count = n_classes();
    for (std::size_t t = 0; t < trees_.size(); ++t) scores[t % k_count] += trees_[t].predict(x);
    return scores;
  }

  /// Softmax probabilities and the argmax class (lowest index wins ties).
  Prediction predict(std::span<const double> x) const {
    Prediction out;
    out.probabilities = softmax(decision(x));
    out.label = static_cast<std::size_t>(
        std::max_element(out.probabilities.begin(), out.probabilities.end()) - out.probabilities.begin());
    return out;
  }

  void serialize(std::ostream& out) const;
  std::string serialize() const {
    std::ostringstream os;
    serialize(os);
    return os.str();
  }
  static Ensemble deserialize(std::istream& in);
  static Ensemble deserialize(const std::string& text) {
    std::istringstream is(text);
    return deserialize(is);
  }

  friend bool operator==(const Ensemble&, const Ensemble&) = default;

 private:
  friend struct FitAccess;

  std::vector<std::string> class_names_;
  std::size_t n_features_ = 0;
  std::vector<double> base_scores_;
  std::vector<RegressionTree> trees_;
  Hyperparameters hp_;
};

namespace detail {

inline std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) throw ContractViolation("cannot format double");
  return std::string(buf, ptr);
}

inline double parse_double_token(const std::string& token) {
  if (token == "inf") return std::numeric_limits<double>::infinity();
  if (token == "-inf") return -std::numeric_limits<double>::infinity();
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw LoadError("model file: bad number '" + token + "'");
  }
  return v;
}

inline void expect(std::istream& in, const std::string& keyword) {
  std::string got;
  if (!(in >> got) || got != keyword) {
    throw LoadError("model file: expected '" + keyword + "', got '" + got + "'");
  }
}

template <typename T>
T read_value(std::istream& in, const char* what) {
  T v{};
  if (!(in >> v)) throw LoadError(std::string("model file: cannot read ") + what);
  return v;
}

inline double read_double(std::istream& in, const char* what) {
  return parse_double_token(read_value<std::string>(in, what));
}

}  // namespace detail

inline constexpr const char* kModelMagic = "scalar-gbt";
inline constexpr int kModelFormatVersion = 1;

// Text layout, one record per line:
//   scalar-gbt 1
//   classes K name...
//   features F
//   hyperparameters n_rounds R learning_rate L max_depth D min_samples_leaf M seed S
//   base_scores b_1 ... b_K
//   trees T
//   tree <round> <class> <node count>
//   node <feature> <threshold> <left> <right> <value>
//   end
// Doubles use the shortest representation that parses back to the same bits.
inline void Ensemble::serialize(std::ostream& out) const {
  using detail::format_double;
  out << kModelMagic << ' ' << kModelFormatVersion << '\n';
  out << "classes " << class_names_.size();
  for (const auto& c : class_names_) out << ' ' << c;
  out << '\n';
  out << "features " << n_features_ << '\n';
  out << "hyperparameters n_rounds " << hp_.n_rounds << " learning_rate " << format_double(hp_.learning_rate)
      << " max_depth " << hp_.max_depth << " min_samples_leaf " << hp_.min_samples_leaf << " seed " << hp_.seed
      << '\n';
  out << "base_scores";
  for (double b : base_scores_) out << ' ' << format_double(b);
  out << '\n';
  out << "trees " << trees_.size() << '\n';
  const std::size_t k_count = n_classes();
  for (std::size_t t = 0; t < trees_.size(); ++t) {
    const auto& nodes = trees_[t].nodes();
    out << "tree " << t / k_count << ' ' << t % k_count << ' ' << nodes.size() << '\n';
    for (const auto& n : nodes) {
      out << "node " << n.feature << ' ' << format_double(n.threshold) << ' ' << n.left << ' ' << n.right << ' '
          << format_double(n.value) << '\n';
    }
  }
  out << "end\n";
}

inline Ensemble Ensemble::deserialize(std::istream& in) {
  using namespace detail;
  Ensemble m;
  expect(in, kModelMagic);
  if (const int version = read_value<int>(in, "format version"); version != kModelFormatVersion) {
    throw LoadError("model file: unsupported format version " + std::to_string(version));
  }
  expect(in, "classes");
  const auto k_count = read_value<std::size_t>(in, "class count");
  if (k_count < 2 || k_count > 4096) throw LoadError("model file: implausible class count");
  for (std::size_t k = 0; k < k_count; ++k) m.class_names_.push_back(read_value<std::string>(in, "class name"));
  expect(in, "features");
  m.n_features_ = read_value<std::size_t>(in, "feature count");
  expect(in, "hyperparameters");
  expect(in, "n_rounds");
  m.hp_.n_rounds = read_value<std::size_t>(in, "n_rounds");
  expect(in, "learning_rate");
  m.hp_.learning_rate = read_double(in, "learning_rate");
  expect(in, "max_depth");
  m.hp_.max_depth = read_value<std::size_t>(in, "max_depth");
  expect(in, "min_samples_leaf");
  m.hp_.min_samples_leaf = read_value<std::size_t>(in, "min_samples_leaf");
  expect(in, "seed");
  m.hp_.seed = read_value<std::uint64_t>(in, "seed");
  expect(in, "base_scores");
  for (std::size_t k = 0; k < k_count; ++k) m.base_scores_.push_back(read_double(in, "base score"));
  expect(in, "trees");
  const auto tree_count = read_value<std::size_t>(in, "tree count");
  if (tree_count != m.hp_.n_rounds * k_count) throw LoadError("model file: tree count does not match rounds x classes");
  m.trees_.reserve(tree_count);
  for (std::size_t t = 0; t < tree_count; ++t) {
    expect(in, "tree");
    const auto round = read_value<std::size_t>(in, "tree round");
    const auto k = read_value<std::size_t>(in, "tree class");
    if (round != t / k_count || k != t % k_count) throw LoadError("model file: trees out of order");
    const auto node_count = read_value<std::size_t>(in, "node count");
    if (node_count == 0) throw LoadError("model file: empty tree");
    std::vector<TreeNode> nodes(node_count);
    for (auto& n : nodes) {
      expect(in, "node");
      n.feature = read_value<std::int32_t>(in, "node feature");
      n.threshold = read_double(in, "node threshold");
      n.left = read_value<std::int32_t>(in, "node left");
      n.right = read_value<std::int32_t>(in, "node right");
      n.value = read_double(in, "node value");
    }
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const auto& n = nodes[i];
      if (n.is_leaf()) continue;
      const auto valid_child = [&](std::int32_t c) {
        return c > static_cast<std::int32_t>(i) && static_cast<std::size_t>(c) < nodes.size();
      };
      if (static_cast<std::size_t>(n.feature) >= m.n_features_ || !valid_child(n.left) || !valid_child(n.right)) {
        throw LoadError("model file: malformed node in tree " + std::to_string(t));
      }
    }
    m.trees_.emplace_back(std::move(nodes));
  }
  expect(in, "end");
  return m;
}

/// Training multinomial log-loss (mean negative log-likelihood) of raw scores.
inline double log_loss(std::span<const double> scores, std::span<const std::size_t> labels, std::size_t k_count) {
  double total = 0.0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const double* s = scores.data() + i * k_count;
    const double top = *std::max_element(s, s + k_count);
    double sum = 0.0;
    for (std::size_t k = 0; k < k_count; ++k) sum += std::exp(s[k] - top);
    total += (top + std::log(sum)) - s[labels[i]];
  }
  return total / static_cast<double>(labels.size());
}

namespace detail {

// Fits one regression tree to residuals by squared-error splitting, with
// Newton-step leaf values scale * sum(r) / sum(h).
class TreeBuilder {
 public:
  TreeBuilder(const Dataset& data, const std::vector<std::vector<std::uint32_t>>& sorted,
              const Hyperparameters& hp)
      : data_(data), sorted_(sorted), hp_(hp) {}

  RegressionTree build(std::span<const double> residual, std::span<const double> hessian, double leaf_scale) {
    residual_ = residual;
    hessian_ = hessian;
    leaf_scale_ = leaf_scale;
    nodes_.clear();
    build_node(sorted_, 0);
    return RegressionTree(std::move(nodes_));
  }

 private:
  struct Split {
    bool found = false;
    std::size_t feature = 0;
    double threshold = 0.0;
    double gain = 0.0;
  };

  std::int32_t build_node(const std::vector<std::vector<std::uint32_t>>& rows, std::size_t depth) {
    const auto& members = rows[0];
    const auto id = static_cast<std::int32_t>(nodes_.size());
    nodes_.emplace_back();

    double r_sum = 0.0;
    double h_sum = 0.0;
    for (auto i : members) {
      r_sum += residual_[i];
      h_sum += hessian_[i];
    }

    Split best;
    if (depth < hp_.max_depth && members.size() >= 2 * hp_.min_samples_leaf) {
      best = find_split(rows, r_sum);
    }
    if (!best.found) {
      nodes_[id].value = h_sum > 1e-150 ? leaf_scale_ * r_sum / h_sum : 0.0;
      return id;
    }

    std::vector<std::vector<std::uint32_t>> left_rows(rows.size());
    std::vector<std::vector<std::uint32_t>> right_rows(rows.size());
    for (std::size_t f = 0; f < rows.size(); ++f) {
      for (auto i : rows[f]) {
        (data_.x[i * data_.n_features + best.feature] <= best.threshold ? left_rows[f] : right_rows[f]).push_back(i);
      }
    }
    nodes_[id].feature = static_cast<std::int32_t>(best.feature);
    nodes_[id].threshold = best.threshold;
    const auto l = build_node(left_rows, depth + 1);
    left_rows.clear();
    left_rows.shrink_to_fit();
    const auto r = build_node(right_rows, depth + 1);
    nodes_[id].left = l;
    nodes_[id].right = r;
    return id;
  }

  // Maximizes sum_l^2/n_l + sum_r^2/n_r, which minimizes the children's SSE.
  // Ties keep the lowest feature index, then the lowest threshold.
  Split find_split(const std::vector<std::vector<std::uint32_t>>& rows, double r_sum) const {
    const std::size_t n = rows[0].size();
    const double parent = r_sum * r_sum / static_cast<double>(n);
    Split best;
    for (std::size_t f = 0; f < data_.n_features; ++f) {
      const auto& order = rows[f + 1];
      double left_sum = 0.0;
      for (std::size_t pos = 0; pos + 1 < n; ++pos) {
        const auto i = order[pos];
        left_sum += residual_[i];
        const double a = data_.x[i * data_.n_features + f];
        const double b = data_.x[order[pos + 1] * data_.n_features + f];
        if (!(a < b)) continue;
        const std::size_t n_left = pos + 1;
        const std::size_t n_right = n - n_left;
        if (n_left < hp_.min_samples_leaf || n_right < hp_.min_samples_leaf) continue;
        const double right_sum = r_sum - left_sum;
        const double gain = left_sum * left_sum / static_cast<double>(n_left) +
                            right_sum * right_sum / static_cast<double>(n_right) - parent;
        if (gain > 1e-12 && (!best.found || gain > best.gain)) {
          double threshold = a + (b - a) / 2.0;
          if (!(threshold < b)) threshold = a;
          best = Split{true, f, threshold, gain};
        }
      }
    }
    return best;
  }

  const Dataset& data_;
  const std::vector<std::vector<std::uint32_t>>& sorted_;
  const Hyperparameters& hp_;
  std::span<const double> residual_;
  std::span<const double> hessian_;
  double leaf_scale_ = 1.0;
  std::vector<TreeNode> nodes_;
};

}  // namespace detail

struct FitResult {
  Ensemble model;
  /// loss[0] is the base-score loss; loss[r] the loss after round r.
  std::vector<double> loss;
};

struct FitAccess {
  static FitResult fit(const Dataset& data, std::vector<std::string> class_names, const Hyperparameters& hp);
};

/// Softmax gradient boosting. Each round fits one tree per class to
/// one-hot(label) - p, with Newton leaf values scaled by the learning rate.
/// If a round would raise the training loss, its step is halved until it
/// does not (falling back to a zero step), so the recorded loss never increases.
inline FitResult FitAccess::fit(const Dataset& data, std::vector<std::string> class_names, const Hyperparameters& hp) {
  hp.validate();
  const std::size_t k_count = class_names.size();
  const std::size_t n = data.size();
  if (n == 0) throw DegenerateTraining("fit: empty training set");
  if (k_count < 2) throw DegenerateTraining("fit: need at least two classes");
  std::vector<std::size_t> class_counts(k_count, 0);
  for (auto label : data.y) {
    if (label >= k_count) throw ContractViolation("fit: label outside class list");
    ++class_counts[label];
  }
  if (std::count_if(class_counts.begin(), class_counts.end(), [](std::size_t c) { return c > 0; }) < 2) {
    throw DegenerateTraining("fit: training data contains a single class");
  }

  FitResult result;
  Ensemble& m = result.model;
  m.class_names_ = std::move(class_names);
  m.n_features_ = data.n_features;
  m.hp_ = hp;
  // Log class priors; classes absent from training get a small floor prior.
  constexpr double kAbsentPrior = 1e-6;
  for (std::size_t k = 0; k < k_count; ++k) {
    const double prior = class_counts[k] ? static_cast<double>(class_counts[k]) / static_cast<double>(n) : kAbsentPrior;
    m.base_scores_.push_back(std::log(prior));
  }

  // Per-feature row orders, stable on ties. Slot 0 holds the plain row list.
  std::vector<std::vector<std::uint32_t>> sorted(data.n_features + 1);
  sorted[0].resize(n);
  std::iota(sorted[0].begin(), sorted[0].end(), 0u);
  for (std::size_t f = 0; f < data.n_features; ++f) {
    auto& order = sorted[f + 1];
    order = sorted[0];
    std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
      return data.x[a * data.n_features + f] < data.x[b * data.n_features + f];
    });
  }

  std::vector<double> scores(n * k_count);
  for (std::size_t i = 0; i < n; ++i) {
    std::copy(m.base_scores_.begin(), m.base_scores_.end(), scores.begin() + static_cast<std::ptrdiff_t>(i * k_count));
  }
  double current_loss = log_loss(scores, data.y, k_count);
  result.loss.push_back(current_loss);

  detail::TreeBuilder builder(data, sorted, hp);
  const double newton_scale = static_cast<double>(k_count - 1) / static_cast<double>(k_count);
  std::vector<double> residual(n);
  std::vector<double> hessian(n);
  std::vector<double> outputs(n * k_count);
  std::vector<double> candidate(n * k_count);
  m.trees_.reserve(hp.n_rounds * k_count);

  for (std::size_t round = 0; round < hp.n_rounds; ++round) {
    std::vector<std::vector<double>> probs(n);
    for (std::size_t i = 0; i < n; ++i) {
      probs[i] = softmax(std::span<const double>(scores.data() + i * k_count, k_count));
    }
    std::vector<RegressionTree> round_trees;
    for (std::size_t k = 0; k < k_count; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        const double p = probs[i][k];
        residual[i] = (data.y[i] == k ? 1.0 : 0.0) - p;
        const double a = std::abs(residual[i]);
        hessian[i] = a * (1.0 - a);
      }
      round_trees.push_back(builder.build(residual, hessian, newton_scale * hp.learning_rate));
      for (std::size_t i = 0; i < n; ++i) outputs[i * k_count + k] = round_trees.back().predict(data.row(i));
    }

    double step = 1.0;
    double next_loss = current_loss;
    for (int attempt = 0; attempt <= 30; ++attempt) {
      for (std::size_t j = 0; j < candidate.size(); ++j) candidate[j] = scores[j] + step * outputs[j];
      next_loss = log_loss(candidate, data.y, k_count);
      if (next_loss <= current_loss) break;
      step *= 0.5;
    }
    if (!(next_loss <= current_loss)) step = 0.0;
    if (step != 1.0) {
      for (auto& tree : round_trees) {
        for (auto& node : tree.nodes()) node.value *= step;
      }
    }
    // Recompute from the stored trees so training scores match predict() bit for bit.
    for (std::size_t k = 0; k < k_count; ++k) {
      for (std::size_t i = 0; i < n; ++i) scores[i * k_count + k] += round_trees[k].predict(data.row(i));
    }
    current_loss = log_loss(scores, data.y, k_count);
    result.loss.push_back(current_loss);
    for (auto& tree : round_trees) m.trees_.push_back(std::move(tree));
  }
  return result;
}

inline FitResult fit_with_trace(const Dataset& data, std::vector<std::string> class_names, const Hyperparameters& hp) {
  return FitAccess::fit(data, std::move(class_names), hp);
}

inline Ensemble fit(const Dataset& data, std::vector<std::string> class_names, const Hyperparameters& hp) {
  return FitAccess::fit(data, std::move(class_names), hp).model;
}

namespace detail {

// Fisher-Yates with an explicit index draw so results do not depend on the
// standard library's shuffle implementation.
inline void seeded_shuffle(std::vector<std::size_t>& v, std::uint64_t seed, std::size_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream)};
  std::mt19937_64 rng(seq);
  for (std::size_t i = v.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(v[i - 1], v[j]);
  }
}

// Row indices of each class in order of appearance, permuted by a per-class stream.
inline std::vector<std::vector<std::size_t>> shuffled_class_members(std::span<const std::size_t> labels,
                                                                    std::uint64_t seed) {
  std::size_t k_count = 0;
  for (auto l : labels) k_count = std::max(k_count, l + 1);
  std::vector<std::vector<std::size_t>> members(k_count);
  for (std::size_t i = 0; i < labels.size(); ++i) members[labels[i]].push_back(i);
  for (std::size_t k = 0; k < k_count; ++k) seeded_shuffle(members[k], seed, k);
  return members;
}

}  // namespace detail

struct Split {
  std::vector<std::size_t> train;
  std::vector<std::size_t> test;
};

/// Per class, a seeded permutation of its rows; the first
/// round(fraction * class size) go to train. Index lists come back sorted.
inline Split stratified_split(std::span<const std::size_t> labels, double train_fraction, std::uint64_t seed) {
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
    throw ContractViolation("stratified_split: train fraction must lie in (0, 1)");
  }
  const auto members = detail::shuffled_class_members(labels, seed);
  Split out;
  for (std::size_t k = 0; k < members.size(); ++k) {
    const auto& rows = members[k];
    if (rows.empty()) continue;
    if (rows.size() < 2) {
      throw StratificationError("stratified_split: class " + std::to_string(k) + " has fewer than 2 examples");
    }
    const auto n_train = static_cast<std::size_t>(std::llround(train_fraction * static_cast<double>(rows.size())));
    out.train.insert(out.train.end(), rows.begin(), rows.begin() + static_cast<std::ptrdiff_t>(n_train));
    out.test.insert(out.test.end(), rows.begin() + static_cast<std::ptrdiff_t>(n_train), rows.end());
  }
  std::sort(out.train.begin(), out.train.end());
  std::sort(out.test.begin(), out.test.end());
  return out;
}

struct Folds {
  std::vector<std::vector<std::size_t>> folds;
  /// Classes with fewer rows than folds; some folds will lack them.
  std::vector<std::size_t> sparse_classes;
};

/// Stratified k-fold partition: each class is permuted with its own seeded
/// stream, then dealt round-robin, continuing the deal across classes.
inline Folds stratified_folds(std::span<const std::size_t> labels, std::size_t k, std::uint64_t seed) {
  if (k < 2) throw ContractViolation("stratified_folds: need at least 2 folds");
  if (k > labels.size()) throw ContractViolation("stratified_folds: more folds than rows");
  const auto members = detail::shuffled_class_members(labels, seed);
  Folds out;
  out.folds.resize(k);
  std::size_t next = 0;
  for (std::size_t c = 0; c < members.size(); ++c) {
    if (!members[c].empty() && members[c].size() < k) out.sparse_classes.push_back(c);
    for (auto row : members[c]) {
      out.folds[next].push_back(row);
      next = (next + 1) % k;
    }
  }
  for (auto& f : out.folds) std::sort(f.begin(), f.end());
  return out;
}

struct FoldScore {
  std::size_t rows = 0;
  double accuracy = 0.0;
  double balanced_accuracy = 0.0;
};

struct CvReport {
  std::vector<FoldScore> folds;
  double mean_accuracy = 0.0;
  double mean_balanced_accuracy = 0.0;
  std::vector<std::size_t> sparse_classes;
};

/// Fits on k-1 folds and scores the held-out fold, for every fold.
inline CvReport cross_validate(const Dataset& data, const std::vector<std::string>& class_names,
                               const Hyperparameters& hp, std::size_t k) {
  const auto partition = stratified_folds(data.y, k, hp.seed);
  CvReport report;
  report.sparse_classes = partition.sparse_classes;
  for (std::size_t f = 0; f < k; ++f) {
    std::vector<std::size_t> train_rows;
    for (std::size_t g = 0; g < k; ++g) {
      if (g != f) train_rows.insert(train_rows.end(), partition.folds[g].begin(), partition.folds[g].end());
    }
    std::sort(train_rows.begin(), train_rows.end());
    const Ensemble model = fit(data.subset(train_rows), class_names, hp);
    ConfusionMatrix cm(class_names.size());
    for (auto row : partition.folds[f]) cm.add(data.y[row], model.predict(data.row(row)).label);
    const auto metrics = evaluate(cm, 0.0);
    report.folds.push_back({partition.folds[f].size(), metrics.accuracy, metrics.balanced_accuracy});
    report.mean_accuracy += metrics.accuracy / static_cast<double>(k);
    report.mean_balanced_accuracy += metrics.balanced_accuracy / static_cast<double>(k);
  }
  return report;
}

}  // namespace scalar::gbt

#endif  // SCALAR_GBT_HPP
