#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <set>

#include "helpers.hpp"
#include "stuntkit/ensemble.hpp"
#include "stuntkit/evaluation.hpp"

using namespace stuntkit;
using stuntkit::testing::make_dataset;
using stuntkit::testing::random_dataset;

namespace {

// Hand-built single-leaf model that always answers `label`.
Model leaf_model(ClassLabel label) {
  Model m;
  m.kind = ModelKind::Tree;
  m.n_features = 1;
  m.classes = {ClassLabel::Normal, ClassLabel::Stunting, ClassLabel::Stunted};
  TreeNode node;
  node.is_leaf = true;
  node.leaf = label;
  m.tree.n_features = 1;
  m.tree.nodes = {node};
  return m;
}

Dataset separable_two_class(std::size_t n, Rng& rng) {
  Dataset ds(2);
  std::vector<double> row(2);
  for (std::size_t i = 0; i < n; ++i) {
    bool hi = rng.below(2) == 1;
    row[0] = rng.uniform_in(0, 1) + (hi ? 2.0 : 0.0);
    row[1] = rng.uniform_in(0, 1);
    ds.push_row(std::span<const double>(row),
                hi ? ClassLabel::Stunted : ClassLabel::Normal);
  }
  return ds;
}

double training_error(const Model& m, const Dataset& ds) {
  auto pred = m.predict(ds);
  std::size_t wrong = 0;
  for (std::size_t i = 0; i < ds.rows(); ++i)
    if (pred[i] != ds.labels[i]) ++wrong;
  return double(wrong) / double(ds.rows());
}

}  // namespace

TEST_CASE("vote ties break toward the lowest class code") {
  Dataset q = make_dataset(1, {{0.0}}, {ClassLabel::Normal});
  Model three = fit_voting({leaf_model(ClassLabel::Stunted),
                            leaf_model(ClassLabel::Stunting),
                            leaf_model(ClassLabel::Normal)});
  CHECK(three.predict(q)[0] == ClassLabel::Normal);
  Model two = fit_voting({leaf_model(ClassLabel::Stunted),
                          leaf_model(ClassLabel::Stunting)});
  CHECK(two.predict(q)[0] == ClassLabel::Stunting);  // code 0.5 beats 1
}

TEST_CASE("voting validates its members") {
  CHECK_THROWS(fit_voting({leaf_model(ClassLabel::Normal)}));
  Model narrow = leaf_model(ClassLabel::Normal);
  narrow.classes = {ClassLabel::Normal, ClassLabel::Stunted};
  CHECK_THROWS(fit_voting({leaf_model(ClassLabel::Normal), narrow}));
  Model wide = leaf_model(ClassLabel::Normal);
  wide.n_features = 2;
  CHECK_THROWS(fit_voting({leaf_model(ClassLabel::Normal), wide}));
}

TEST_CASE("bootstrap committees are deterministic and distinct per member") {
  Rng data_rng(70);
  Dataset ds = random_dataset(120, 3, data_rng);
  Rng r1(8), r2(8);
  Model a = fit_forest(ds, 10, {}, r1);
  Model b = fit_forest(ds, 10, {}, r2);
  Rng data_rng2(71);
  Dataset probe = random_dataset(50, 3, data_rng2);
  CHECK(a.predict(probe) == b.predict(probe));
  CHECK(a.members.size() == 10);
  // Different members should disagree somewhere on training data (bootstrap
  // variance), otherwise the committee adds nothing.
  bool disagree = false;
  for (std::size_t i = 0; i < ds.rows() && !disagree; ++i)
    if (a.members[0].predict_row(ds.row(i)) != a.members[1].predict_row(ds.row(i)))
      disagree = true;
  CHECK(disagree);
}

TEST_CASE("bootstrap draws leave out roughly 1/e of the rows") {
  // Indirect check through the library Rng: n draws with replacement should
  // touch about 1 - 1/e = 63.2% of distinct rows.
  Rng rng(72);
  const std::size_t n = 5000;
  std::set<std::size_t> seen;
  for (std::size_t i = 0; i < n; ++i) seen.insert(rng.below(n));
  double frac = double(seen.size()) / double(n);
  CHECK(frac > 0.61);
  CHECK(frac < 0.66);
}

TEST_CASE("forest and bagging both fit the training set well") {
  Rng data_rng(73);
  Dataset ds = random_dataset(100, 4, data_rng);
  Rng r1(9), r2(10);
  Model forest = fit_forest(ds, 50, {}, r1);
  Model bagging = fit_bagging(ds, 50, {}, r2);
  CHECK(training_error(forest, ds) < 0.05);
  CHECK(training_error(bagging, ds) < 0.05);
}

TEST_CASE("adaboost weight sums stay normalized and alphas are positive") {
  Rng data_rng(74);
  Dataset ds = random_dataset(150, 3, data_rng);
  TreeParams stump;
  stump.max_depth = 1;
  Rng rng(11);
  FitReport report;
  Model m = fit_adaboost(ds, 30, stump, rng, &report);
  REQUIRE_FALSE(report.round_weight_sum.empty());
  for (double s : report.round_weight_sum) CHECK(std::abs(s - 1.0) < 1e-9);
  const double k = double(kNumClasses);
  for (std::size_t r = 0; r < report.round_epsilon.size(); ++r) {
    CHECK(report.round_epsilon[r] < 1.0 - 1.0 / k);
    CHECK(report.round_alpha[r] > 0.0);
  }
  CHECK(m.members.size() == m.weights.size());
}

TEST_CASE("adaboost reduces training error with more rounds") {
  Rng data_rng(75);
  Dataset ds = separable_two_class(200, data_rng);
  TreeParams stump;
  stump.max_depth = 1;
  Rng r1(12), r2(12);
  Model one = fit_adaboost(ds, 1, stump, r1);
  Model twenty = fit_adaboost(ds, 20, stump, r2);
  CHECK(training_error(twenty, ds) <= training_error(one, ds));
}

TEST_CASE("adaboost rejects single-class training data") {
  Dataset ds = make_dataset(1, {{1}, {2}}, {ClassLabel::Normal, ClassLabel::Normal});
  TreeParams stump;
  stump.max_depth = 1;
  Rng rng(13);
  CHECK_THROWS(fit_adaboost(ds, 5, stump, rng));
}

TEST_CASE("predict validates the feature count") {
  Rng data_rng(76);
  Dataset ds = random_dataset(30, 3, data_rng);
  Rng rng(14);
  Model m = fit_forest(ds, 5, {}, rng);
  Rng data_rng2(77);
  Dataset wrong = random_dataset(5, 2, data_rng2);
  CHECK_THROWS(predict(m, wrong));
}

TEST_CASE("model serialization round-trips every kind") {
  Rng data_rng(78);
  Dataset ds = random_dataset(60, 3, data_rng);
  TreeParams stump;
  stump.max_depth = 1;
  Rng r1(15), r2(16), r3(17), r4(18);
  std::vector<Model> models;
  models.push_back(fit_tree_model(ds, {}, r1));
  models.push_back(fit_forest(ds, 7, {}, r2));
  models.push_back(fit_bagging(ds, 5, {}, r3));
  models.push_back(fit_adaboost(ds, 6, stump, r4));
  models.push_back(fit_voting({models[1], models[2], models[3]}));
  Rng probe_rng(79);
  Dataset probe = random_dataset(40, 3, probe_rng);
  for (const Model& m : models) {
    const std::string text = serialize_model(m);
    Model back = parse_model(text);
    CHECK(back.kind == m.kind);
    CHECK(serialize_model(back) == text);
    CHECK(back.predict(probe) == m.predict(probe));
  }
  // File round-trip.
  save_model(models[1], "model_io_test.txt");
  Model loaded = load_model("model_io_test.txt");
  CHECK(loaded.predict(probe) == models[1].predict(probe));
  std::remove("model_io_test.txt");
}

TEST_CASE("model kind names round-trip") {
  for (ModelKind k : {ModelKind::Tree, ModelKind::Forest, ModelKind::Bagging,
                      ModelKind::AdaBoost, ModelKind::Voting}) {
    CHECK(model_kind_from_name(model_kind_name(k)) == k);
  }
  CHECK_THROWS(model_kind_from_name("perceptron"));
}
