#pragma once

#include <span>
#include <vector>

#include "stuntkit/dataset.hpp"
#include "stuntkit/rng.hpp"

namespace stuntkit {

enum class FeatureSubsample { All, Sqrt };

struct TreeParams {
  std::size_t max_depth = 0;  // 0 = unlimited
  std::size_t min_samples_split = 2;
  FeatureSubsample feature_subsample = FeatureSubsample::All;
};

struct TreeNode {
  bool is_leaf = true;
  ClassLabel leaf = ClassLabel::Normal;
  int feature = -1;
  double threshold = 0.0;
  int left = -1;
  int right = -1;
};

// CART classification tree, Gini impurity, numeric splits at midpoints,
// weighted samples. Split search is deterministic: features in index order,
// thresholds ascending, first strictly better split wins.
struct DecisionTree {
  std::size_t n_features = 0;
  std::vector<TreeNode> nodes;

  ClassLabel predict_row(std::span<const double> x) const;
};

DecisionTree fit_tree(const Dataset& train, const TreeParams& params, Rng& rng,
                      std::span<const double> sample_weights = {});

}  // namespace stuntkit
