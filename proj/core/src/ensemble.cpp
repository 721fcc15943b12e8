#include "stuntkit/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace stuntkit {

namespace {

constexpr double kEpsilonFloor = 1e-10;

std::vector<ClassLabel> classes_of(const Dataset& ds) {
  std::set<ClassLabel> seen(ds.labels.begin(), ds.labels.end());
  std::vector<ClassLabel> out;
  for (ClassLabel c : kClassesByCode)
    if (seen.count(c)) out.push_back(c);
  return out;
}

// Code order plus strict improvement means ties land on the lowest code.
ClassLabel argmax_votes(const std::array<double, kNumClasses>& votes) {
  ClassLabel best = kClassesByCode[0];
  for (ClassLabel c : kClassesByCode)
    if (votes[static_cast<int>(c)] > votes[static_cast<int>(best)]) best = c;
  return best;
}

Dataset bootstrap_sample(const Dataset& ds, Rng& rng) {
  std::vector<std::size_t> idx(ds.rows());
  for (std::size_t i = 0; i < ds.rows(); ++i) idx[i] = rng.below(ds.rows());
  return ds.subset(idx);
}

Model fit_committee(ModelKind kind, const Dataset& train, std::size_t n_members,
                    TreeParams params, Rng& rng, const BootstrapOptions& boot,
                    FitReport* report) {
  if (train.empty()) throw std::invalid_argument("fit: empty training set");
  if (n_members == 0) throw std::invalid_argument("fit: need at least one member");

  Model model;
  model.kind = kind;
  model.n_features = train.n_cols;
  model.classes = classes_of(train);
  model.members.reserve(n_members);
  for (std::size_t i = 0; i < n_members; ++i) {
    Rng child = rng.child(i);
    const Dataset sample = boot.enabled ? bootstrap_sample(train, child) : train;
    Model member;
    member.kind = ModelKind::Tree;
    member.n_features = train.n_cols;
    member.classes = model.classes;
    member.tree = fit_tree(sample, params, child);
    model.members.push_back(std::move(member));
    model.weights.push_back(1.0);
  }
  if (report) {
    report->member_count = n_members;
    report->seed = rng.seed();
    report->out_of_bag_available = boot.enabled;
  }
  return model;
}

}  // namespace

std::string model_kind_name(ModelKind kind) {
  switch (kind) {
    case ModelKind::Tree: return "tree";
    case ModelKind::Forest: return "forest";
    case ModelKind::Bagging: return "bagging";
    case ModelKind::AdaBoost: return "adaboost";
    case ModelKind::Voting: return "voting";
  }
  throw std::logic_error("model_kind_name: invalid kind");
}

ModelKind model_kind_from_name(const std::string& name) {
  if (name == "tree") return ModelKind::Tree;
  if (name == "forest") return ModelKind::Forest;
  if (name == "bagging") return ModelKind::Bagging;
  if (name == "adaboost") return ModelKind::AdaBoost;
  if (name == "voting") return ModelKind::Voting;
  throw std::invalid_argument("unknown model kind: '" + name + "'");
}

ClassLabel Model::predict_row(std::span<const double> x) const {
  if (x.size() != n_features)
    throw std::invalid_argument("Model::predict_row: dimension mismatch");
  if (kind == ModelKind::Tree) return tree.predict_row(x);
  std::array<double, kNumClasses> votes{};
  for (std::size_t m = 0; m < members.size(); ++m) {
    const ClassLabel v = members[m].predict_row(x);
    votes[static_cast<int>(v)] += weights.empty() ? 1.0 : weights[m];
  }
  return argmax_votes(votes);
}

std::vector<ClassLabel> Model::predict(const Dataset& rows) const {
  std::vector<ClassLabel> out;
  out.reserve(rows.rows());
  for (std::size_t i = 0; i < rows.rows(); ++i) out.push_back(predict_row(rows.row(i)));
  return out;
}

Model fit_tree_model(const Dataset& train, const TreeParams& params, Rng& rng) {
  Model model;
  model.kind = ModelKind::Tree;
  model.n_features = train.n_cols;
  model.classes = classes_of(train);
  model.tree = fit_tree(train, params, rng);
  return model;
}

Model fit_forest(const Dataset& train, std::size_t n_trees, TreeParams params,
                 Rng& rng, const BootstrapOptions& boot, FitReport* report) {
  params.feature_subsample = FeatureSubsample::Sqrt;
  return fit_committee(ModelKind::Forest, train, n_trees, params, rng, boot, report);
}

Model fit_bagging(const Dataset& train, std::size_t n_members, TreeParams params,
                  Rng& rng, const BootstrapOptions& boot, FitReport* report) {
  params.feature_subsample = FeatureSubsample::All;
  return fit_committee(ModelKind::Bagging, train, n_members, params, rng, boot, report);
}

Model fit_adaboost(const Dataset& train, std::size_t n_rounds,
                   const TreeParams& stump_params, Rng& rng, FitReport* report) {
  if (train.empty()) throw std::invalid_argument("fit_adaboost: empty training set");
  const std::vector<ClassLabel> classes = classes_of(train);
  const std::size_t K = classes.size();
  if (K < 2) throw std::invalid_argument("fit_adaboost: training data has a single class");
  if (n_rounds == 0) throw std::invalid_argument("fit_adaboost: need >= 1 round");

  const std::size_t n = train.rows();
  std::vector<double> w(n, 1.0 / static_cast<double>(n));

  Model model;
  model.kind = ModelKind::AdaBoost;
  model.n_features = train.n_cols;
  model.classes = classes;
  if (report) {
    report->seed = rng.seed();
    report->out_of_bag_available = false;
  }

  const double error_bound = 1.0 - 1.0 / static_cast<double>(K);
  std::size_t discarded = 0;
  for (std::size_t round = 0; round < n_rounds; ++round) {
    Rng child = rng.child(round);
    Model member;
    member.kind = ModelKind::Tree;
    member.n_features = train.n_cols;
    member.classes = classes;
    member.tree = fit_tree(train, stump_params, child, w);

    std::vector<bool> miss(n);
    double eps = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      miss[i] = member.tree.predict_row(train.row(i)) != train.labels[i];
      if (miss[i]) eps += w[i];
    }

    if (eps >= error_bound) {
      // Useless round: drop it and restart from uniform weights.
      std::fill(w.begin(), w.end(), 1.0 / static_cast<double>(n));
      if (++discarded >= n_rounds && model.members.empty())
        throw std::runtime_error("fit_adaboost: all rounds discarded");
      continue;
    }

    const bool perfect = eps <= kEpsilonFloor;
    const double eps_f = std::max(eps, kEpsilonFloor);
    const double alpha =
        std::log((1.0 - eps_f) / eps_f) + std::log(static_cast<double>(K) - 1.0);
    model.members.push_back(std::move(member));
    model.weights.push_back(alpha);

    if (!perfect) {
      double sum = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        if (miss[i]) w[i] *= std::exp(alpha);
        sum += w[i];
      }
      for (double& wi : w) wi /= sum;
    }

    if (report) {
      report->round_epsilon.push_back(eps);
      report->round_alpha.push_back(alpha);
      report->round_weight_sum.push_back(std::accumulate(w.begin(), w.end(), 0.0));
      std::size_t wrong = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (model.predict_row(train.row(i)) != train.labels[i]) ++wrong;
      report->round_error.push_back(static_cast<double>(wrong) / static_cast<double>(n));
    }
    if (perfect) break;
  }
  if (model.members.empty())
    throw std::runtime_error("fit_adaboost: all rounds discarded");
  if (report) report->member_count = model.members.size();
  return model;
}

Model fit_voting(std::vector<Model> members) {
  if (members.size() < 2)
    throw std::invalid_argument("fit_voting: need at least 2 members");
  for (std::size_t m = 1; m < members.size(); ++m) {
    if (members[m].classes != members[0].classes)
      throw std::invalid_argument("fit_voting: members trained on different class sets");
    if (members[m].n_features != members[0].n_features)
      throw std::invalid_argument("fit_voting: members trained on different schemas");
  }
  Model model;
  model.kind = ModelKind::Voting;
  model.n_features = members[0].n_features;
  model.classes = members[0].classes;
  model.weights.assign(members.size(), 1.0);
  model.members = std::move(members);
  return model;
}

std::vector<ClassLabel> predict(const Model& model, const Dataset& rows) {
  if (rows.n_cols != model.n_features)
    throw std::invalid_argument("predict: column count does not match training schema");
  return model.predict(rows);
}

}  // namespace stuntkit
