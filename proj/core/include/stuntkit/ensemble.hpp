#pragma once

#include <string>
#include <vector>

#include "stuntkit/tree.hpp"

namespace stuntkit {

enum class ModelKind { Tree, Forest, Bagging, AdaBoost, Voting };

std::string model_kind_name(ModelKind kind);
ModelKind model_kind_from_name(const std::string& name);

// Uniform train/predict contract for the tree and all committees. Vote ties
// always break toward the lowest class code.
struct Model {
  ModelKind kind = ModelKind::Tree;
  std::size_t n_features = 0;
  std::vector<ClassLabel> classes;  // classes seen in training, code order
  DecisionTree tree;                // kind == Tree
  std::vector<Model> members;
  std::vector<double> weights;      // per member; AdaBoost alphas, else 1.0

  ClassLabel predict_row(std::span<const double> x) const;
  std::vector<ClassLabel> predict(const Dataset& rows) const;
};

struct FitReport {
  std::size_t member_count = 0;
  std::uint64_t seed = 0;
  bool out_of_bag_available = false;
  // Boosting only, one entry per retained round.
  std::vector<double> round_error;       // ensemble training error so far
  std::vector<double> round_epsilon;     // weighted error of the round's stump
  std::vector<double> round_alpha;
  std::vector<double> round_weight_sum;  // sample-weight sum after update
};

struct BootstrapOptions {
  bool enabled = true;  // debug flag: disable to fit members on the full set
};

Model fit_tree_model(const Dataset& train, const TreeParams& params, Rng& rng);

// Bootstrap-resampled trees with sqrt feature subsampling per split.
Model fit_forest(const Dataset& train, std::size_t n_trees, TreeParams params,
                 Rng& rng, const BootstrapOptions& boot = {},
                 FitReport* report = nullptr);

// Like the forest but members see all features (row resampling only).
Model fit_bagging(const Dataset& train, std::size_t n_members, TreeParams params,
                  Rng& rng, const BootstrapOptions& boot = {},
                  FitReport* report = nullptr);

// Multiclass SAMME boosting over weighted trees. Rounds whose weighted error
// reaches 1 - 1/K are discarded and reset the sample weights; a perfect round
// stops training with a capped alpha.
Model fit_adaboost(const Dataset& train, std::size_t n_rounds,
                   const TreeParams& stump_params, Rng& rng,
                   FitReport* report = nullptr);

// Hard majority vote over already-trained members.
Model fit_voting(std::vector<Model> members);

std::vector<ClassLabel> predict(const Model& model, const Dataset& rows);

// Versioned text serialization; round-trip exact.
std::string serialize_model(const Model& model);
Model parse_model(const std::string& text);
void save_model(const Model& model, const std::string& path);
Model load_model(const std::string& path);

}  // namespace stuntkit
