#pragma once

#include <string>
#include <vector>

#include "stuntkit/ensemble.hpp"
#include "stuntkit/evaluation.hpp"
#include "stuntkit/resampling.hpp"

namespace stuntkit {

enum class MethodKind { Smote, SmoteTomek, RadiusSmote, EditedRadiusSmote, Enn };
enum class ClassifierKind { Forest, AdaBoost, Bagging };

std::string method_name(MethodKind m);
MethodKind method_from_name(const std::string& name);
std::vector<std::string> method_names();
std::string classifier_name(ClassifierKind c);
ClassifierKind classifier_from_name(const std::string& name);

struct GridConfig {
  std::vector<MethodKind> methods = {MethodKind::Smote, MethodKind::RadiusSmote,
                                     MethodKind::EditedRadiusSmote};
  std::vector<ClassifierKind> classifiers = {
      ClassifierKind::Forest, ClassifierKind::AdaBoost, ClassifierKind::Bagging};
  ResamplerConfig resampler;
  std::size_t forest_trees = 100;
  std::size_t bagging_members = 100;
  std::size_t adaboost_rounds = 50;
  std::size_t adaboost_depth = 1;
  bool include_voting = true;  // takes effect when >= 2 classifiers run
};

struct CellResult {
  std::string classifier;
  std::string method;
  ConfusionMatrix cm;
  std::array<ClassMetrics, kNumClasses> per_class;  // reporting order
  double accuracy = 0.0;
  double macro_f1 = 0.0;
};

struct ExperimentReport {
  std::vector<CellResult> cells;

  // Aligned plain-text table: Classifier, Condition, Method, Precision,
  // Recall, F-1 Score, metrics rounded to 2 decimals.
  std::string render_text() const;
  // Machine-readable CSV at full precision.
  std::string render_csv() const;
};

// Resamples the training partition per method (the test partition is never
// touched), fits each classifier, evaluates on the test partition. Adds a
// voting committee of the fitted classifiers per method when >= 2 ran.
ExperimentReport run_experiment_grid(const Dataset& train, const Dataset& test,
                                     const GridConfig& cfg, Rng& rng);

// One resampling method applied to a dataset; shared by the grid and the CLI.
Dataset apply_method(const Dataset& ds, MethodKind method, const ResamplerConfig& cfg,
                     Rng& rng, GenerationReport* report = nullptr);

}  // namespace stuntkit
