#include "stuntkit/tree.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace stuntkit {

namespace {

struct Builder {
  const Dataset& ds;
  const TreeParams& params;
  Rng& rng;
  std::span<const double> weights;
  std::vector<TreeNode> nodes;

  double weight_of(std::size_t i) const { return weights.empty() ? 1.0 : weights[i]; }

  ClassLabel weighted_majority(const std::array<double, kNumClasses>& counts) const {
    ClassLabel best = ClassLabel::Normal;
    for (ClassLabel c : kClassesByCode)
      if (counts[static_cast<int>(c)] > counts[static_cast<int>(best)]) best = c;
    return best;
  }

  static double gini(const std::array<double, kNumClasses>& counts, double total) {
    if (total <= 0.0) return 0.0;
    double acc = 1.0;
    for (double c : counts) {
      const double p = c / total;
      acc -= p * p;
    }
    return acc;
  }

  std::vector<std::size_t> candidate_features() {
    std::vector<std::size_t> feats(ds.n_cols);
    std::iota(feats.begin(), feats.end(), 0);
    if (params.feature_subsample == FeatureSubsample::Sqrt) {
      const std::size_t take = std::max<std::size_t>(
          1, static_cast<std::size_t>(std::floor(std::sqrt(static_cast<double>(ds.n_cols)))));
      // Partial Fisher-Yates, then restore index order for a deterministic scan.
      for (std::size_t i = 0; i < take; ++i)
        std::swap(feats[i], feats[i + rng.below(feats.size() - i)]);
      feats.resize(take);
      std::sort(feats.begin(), feats.end());
    }
    return feats;
  }

  int build(std::vector<std::size_t>& idx, std::size_t depth) {
    std::array<double, kNumClasses> counts{};
    double total = 0.0;
    for (std::size_t i : idx) {
      counts[static_cast<int>(ds.labels[i])] += weight_of(i);
      total += weight_of(i);
    }

    const int node_id = static_cast<int>(nodes.size());
    nodes.emplace_back();
    nodes[node_id].leaf = weighted_majority(counts);

    const bool pure = gini(counts, total) <= 0.0;
    const bool depth_capped = params.max_depth > 0 && depth >= params.max_depth;
    if (pure || depth_capped || idx.size() < params.min_samples_split) return node_id;

    // Best split over the candidate features.
    double best_impurity = gini(counts, total) * total;
    int best_feature = -1;
    double best_threshold = 0.0;
    for (std::size_t f : candidate_features()) {
      std::vector<std::size_t> order = idx;
      std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return ds.row(a)[f] < ds.row(b)[f];
      });
      std::array<double, kNumClasses> left{};
      double left_total = 0.0;
      for (std::size_t pos = 0; pos + 1 < order.size(); ++pos) {
        const std::size_t i = order[pos];
        left[static_cast<int>(ds.labels[i])] += weight_of(i);
        left_total += weight_of(i);
        const double v = ds.row(i)[f];
        const double next = ds.row(order[pos + 1])[f];
        if (v == next) continue;
        std::array<double, kNumClasses> right{};
        for (std::size_t c = 0; c < kNumClasses; ++c) right[c] = counts[c] - left[c];
        const double impurity = left_total * gini(left, left_total) +
                                (total - left_total) * gini(right, total - left_total);
        if (impurity < best_impurity - 1e-12) {
          best_impurity = impurity;
          best_feature = static_cast<int>(f);
          best_threshold = v + (next - v) / 2.0;
        }
      }
    }
    if (best_feature < 0) return node_id;

    std::vector<std::size_t> left_idx;
    std::vector<std::size_t> right_idx;
    for (std::size_t i : idx) {
      (ds.row(i)[static_cast<std::size_t>(best_feature)] <= best_threshold ? left_idx
                                                                           : right_idx)
          .push_back(i);
    }
    if (left_idx.empty() || right_idx.empty()) return node_id;  // degenerate midpoint

    nodes[node_id].is_leaf = false;
    nodes[node_id].feature = best_feature;
    nodes[node_id].threshold = best_threshold;
    const int l = build(left_idx, depth + 1);
    nodes[node_id].left = l;
    const int r = build(right_idx, depth + 1);
    nodes[node_id].right = r;
    return node_id;
  }
};

}  // namespace

ClassLabel DecisionTree::predict_row(std::span<const double> x) const {
  if (x.size() != n_features)
    throw std::invalid_argument("DecisionTree::predict_row: dimension mismatch");
  int cur = 0;
  while (!nodes[static_cast<std::size_t>(cur)].is_leaf) {
    const TreeNode& n = nodes[static_cast<std::size_t>(cur)];
    cur = x[static_cast<std::size_t>(n.feature)] <= n.threshold ? n.left : n.right;
  }
  return nodes[static_cast<std::size_t>(cur)].leaf;
}

DecisionTree fit_tree(const Dataset& train, const TreeParams& params, Rng& rng,
                      std::span<const double> sample_weights) {
  if (train.empty()) throw std::invalid_argument("fit_tree: empty training set");
  if (params.min_samples_split < 2)
    throw std::invalid_argument("fit_tree: min_samples_split must be >= 2");
  if (!sample_weights.empty() && sample_weights.size() != train.rows())
    throw std::invalid_argument("fit_tree: weight vector length mismatch");

  Builder b{train, params, rng, sample_weights, {}};
  std::vector<std::size_t> idx(train.rows());
  std::iota(idx.begin(), idx.end(), 0);
  b.build(idx, 0);

  DecisionTree tree;
  tree.n_features = train.n_cols;
  tree.nodes = std::move(b.nodes);
  return tree;
}

}  // namespace stuntkit
