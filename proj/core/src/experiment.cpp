#include "stuntkit/experiment.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "stuntkit/csv.hpp"

namespace stuntkit {

std::string method_name(MethodKind m) {
  switch (m) {
    case MethodKind::Smote: return "smote";
    case MethodKind::SmoteTomek: return "smote-tomek";
    case MethodKind::RadiusSmote: return "radius-smote";
    case MethodKind::EditedRadiusSmote: return "edited-radius-smote";
    case MethodKind::Enn: return "enn";
  }
  throw std::logic_error("method_name: invalid method");
}

std::vector<std::string> method_names() {
  return {"smote", "smote-tomek", "radius-smote", "edited-radius-smote", "enn"};
}

MethodKind method_from_name(const std::string& name) {
  if (name == "smote") return MethodKind::Smote;
  if (name == "smote-tomek") return MethodKind::SmoteTomek;
  if (name == "radius-smote") return MethodKind::RadiusSmote;
  if (name == "edited-radius-smote") return MethodKind::EditedRadiusSmote;
  if (name == "enn") return MethodKind::Enn;
  std::string valid;
  for (const std::string& m : method_names()) valid += (valid.empty() ? "" : ", ") + m;
  throw std::invalid_argument("unknown method '" + name + "' (valid: " + valid + ")");
}

std::string classifier_name(ClassifierKind c) {
  switch (c) {
    case ClassifierKind::Forest: return "forest";
    case ClassifierKind::AdaBoost: return "adaboost";
    case ClassifierKind::Bagging: return "bagging";
  }
  throw std::logic_error("classifier_name: invalid classifier");
}

ClassifierKind classifier_from_name(const std::string& name) {
  if (name == "forest") return ClassifierKind::Forest;
  if (name == "adaboost") return ClassifierKind::AdaBoost;
  if (name == "bagging") return ClassifierKind::Bagging;
  throw std::invalid_argument("unknown classifier '" + name +
                              "' (valid: forest, adaboost, bagging)");
}

Dataset apply_method(const Dataset& ds, MethodKind method, const ResamplerConfig& cfg,
                     Rng& rng, GenerationReport* report) {
  switch (method) {
    case MethodKind::Smote: {
      auto [out, batch] = smote_all(ds, cfg, rng);
      if (report) *report = generation_report("smote", rng.seed(), cfg, ds, out);
      return out;
    }
    case MethodKind::SmoteTomek:
      return smote_tomek(ds, cfg, rng, report);
    case MethodKind::RadiusSmote:
      return radius_smote_paper(ds, cfg, rng, report);
    case MethodKind::EditedRadiusSmote:
      return edited_radius_smote(ds, cfg, rng, report);
    case MethodKind::Enn: {
      auto [out, removed] = enn_edit(ds, cfg.k_edit, cfg.enn_scope);
      if (report)
        *report = generation_report("enn", rng.seed(), cfg, ds, out, 0, removed.size());
      return out;
    }
  }
  throw std::logic_error("apply_method: invalid method");
}

namespace {

CellResult evaluate_cell(const std::string& classifier, const std::string& method,
                         const Model& model, const Dataset& test) {
  CellResult cell;
  cell.classifier = classifier;
  cell.method = method;
  cell.cm = confusion_matrix(test.labels, predict(model, test));
  for (std::size_t i = 0; i < kNumClasses; ++i)
    cell.per_class[i] = class_metrics(cell.cm, kReportOrder[i]);
  cell.accuracy = accuracy(cell.cm);
  cell.macro_f1 = macro_f1(cell.cm);
  return cell;
}

std::string two_decimals(double v) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

}  // namespace

ExperimentReport run_experiment_grid(const Dataset& train, const Dataset& test,
                                     const GridConfig& cfg, Rng& rng) {
  if (cfg.methods.empty() || cfg.classifiers.empty())
    throw std::invalid_argument("run_experiment_grid: need >= 1 method and classifier");
  if (train.n_cols != test.n_cols)
    throw std::invalid_argument("run_experiment_grid: train/test schema mismatch");

  ExperimentReport report;
  for (std::size_t mi = 0; mi < cfg.methods.size(); ++mi) {
    const MethodKind method = cfg.methods[mi];
    Rng method_rng = rng.child(1000 + mi);
    const Dataset resampled = apply_method(train, method, cfg.resampler, method_rng);

    std::vector<Model> fitted;
    for (std::size_t ci = 0; ci < cfg.classifiers.size(); ++ci) {
      const ClassifierKind clf = cfg.classifiers[ci];
      Rng fit_rng = rng.child(2000 + mi * 100 + ci);
      Model model;
      switch (clf) {
        case ClassifierKind::Forest:
          model = fit_forest(resampled, cfg.forest_trees, TreeParams{}, fit_rng);
          break;
        case ClassifierKind::Bagging:
          model = fit_bagging(resampled, cfg.bagging_members, TreeParams{}, fit_rng);
          break;
        case ClassifierKind::AdaBoost: {
          TreeParams stump;
          stump.max_depth = cfg.adaboost_depth;
          model = fit_adaboost(resampled, cfg.adaboost_rounds, stump, fit_rng);
          break;
        }
      }
      report.cells.push_back(
          evaluate_cell(classifier_name(clf), method_name(method), model, test));
      fitted.push_back(std::move(model));
    }
    if (cfg.include_voting && fitted.size() >= 2) {
      const Model committee = fit_voting(std::move(fitted));
      report.cells.push_back(
          evaluate_cell("voting", method_name(method), committee, test));
    }
  }
  return report;
}

std::string ExperimentReport::render_text() const {
  // Classifier-major, then condition (reporting order), then method, to
  // mirror the published table layout.
  std::vector<std::string> classifiers;
  std::vector<std::string> methods;
  for (const CellResult& c : cells) {
    if (std::find(classifiers.begin(), classifiers.end(), c.classifier) ==
        classifiers.end())
      classifiers.push_back(c.classifier);
    if (std::find(methods.begin(), methods.end(), c.method) == methods.end())
      methods.push_back(c.method);
  }

  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof(line), "%-12s %-10s %-20s %-9s %-7s %-9s\n", "Classifier",
                "Condition", "Method", "Precision", "Recall", "F-1 Score");
  out << line;
  out << std::string(72, '-') << '\n';
  for (const std::string& clf : classifiers) {
    for (std::size_t ci = 0; ci < kNumClasses; ++ci) {
      for (const std::string& method : methods) {
        for (const CellResult& cell : cells) {
          if (cell.classifier != clf || cell.method != method) continue;
          const ClassMetrics& m = cell.per_class[ci];
          std::snprintf(line, sizeof(line), "%-12s %-10s %-20s %-9s %-7s %-9s\n",
                        clf.c_str(),
                        std::string(label_name(kReportOrder[ci])).c_str(),
                        method.c_str(), two_decimals(m.precision).c_str(),
                        two_decimals(m.recall).c_str(), two_decimals(m.f1).c_str());
          out << line;
        }
      }
    }
  }
  out << '\n';
  for (const CellResult& cell : cells) {
    std::snprintf(line, sizeof(line),
                  "%s x %s: accuracy %s, macro-F1 %s\n", cell.classifier.c_str(),
                  cell.method.c_str(), two_decimals(cell.accuracy).c_str(),
                  two_decimals(cell.macro_f1).c_str());
    out << line;
  }
  return out.str();
}

std::string ExperimentReport::render_csv() const {
  std::ostringstream out;
  out << "classifier,method,condition,precision,recall,f1,support,accuracy,macro_f1\n";
  for (const CellResult& cell : cells) {
    for (std::size_t ci = 0; ci < kNumClasses; ++ci) {
      const ClassMetrics& m = cell.per_class[ci];
      out << cell.classifier << ',' << cell.method << ','
          << label_name(kReportOrder[ci]) << ',' << format_double(m.precision) << ','
          << format_double(m.recall) << ',' << format_double(m.f1) << ',' << m.support
          << ',' << format_double(cell.accuracy) << ',' << format_double(cell.macro_f1)
          << '\n';
    }
  }
  return out.str();
}

}  // namespace stuntkit
