#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "stuntkit/anthropometry.hpp"
#include "stuntkit/csv.hpp"
#include "stuntkit/experiment.hpp"

namespace fs = std::filesystem;
using namespace stuntkit;

namespace {

struct Common {
  std::uint64_t seed = 42;
  std::string out_dir = ".";
  bool quiet = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--seed", c.seed, "Seed for all randomness in this command");
  cmd->add_option("--out", c.out_dir, "Output directory");
  cmd->add_flag("--quiet", c.quiet, "Suppress stdout summaries");
  cmd->set_config("--config", "", "Plain key=value config file; flags override it");
}

std::string out_path(const Common& c, const std::string& name) {
  fs::create_directories(c.out_dir);
  return (fs::path(c.out_dir) / name).string();
}

GrowthReference load_reference(const std::string& path) {
  return path.empty() ? GrowthReference::builtin() : GrowthReference::load_csv(path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stuntkit: imbalanced-classification toolkit for child growth data"};
  app.require_subcommand(1);

  // --- synth ---------------------------------------------------------------
  Common synth_c;
  std::size_t synth_n = 752;
  std::vector<double> synth_props = {0.86, 0.12, 0.02};
  std::string synth_ref;
  CLI::App* synth = app.add_subcommand("synth", "Generate a seeded synthetic cohort");
  add_common(synth, synth_c);
  synth->add_option("--n", synth_n, "Number of rows")->check(CLI::PositiveNumber);
  synth->add_option("--proportions", synth_props,
                    "Class proportions normal,stunted,stunting (sum to 1)")
      ->delimiter(',')
      ->expected(3);
  synth->add_option("--reference", synth_ref, "Growth reference CSV (default: built-in)");

  // --- resample ------------------------------------------------------------
  Common res_c;
  std::string res_input;
  std::string res_method = "smote";
  std::string res_scope = "all-classes";
  std::string res_policy = "preserve";
  ResamplerConfig res_cfg;
  std::size_t res_target = 0;
  CLI::App* res = app.add_subcommand("resample", "Resample a dataset CSV");
  add_common(res, res_c);
  res->add_option("--input", res_input, "Input dataset CSV")->required();
  res->add_option("--method", res_method,
                  "One of: smote, smote-tomek, radius-smote, edited-radius-smote, enn");
  res->add_option("--k", res_cfg.k_neighbors, "Neighbors for synthetic generation");
  res->add_option("--k-edit", res_cfg.k_edit, "Neighbors for the editing rules");
  res->add_option("--target", res_target,
                  "Per-class target count (default: match majority)");
  res->add_option("--scope", res_scope, "ENN scope: all-classes or minority-only");
  res->add_option("--policy", res_policy,
                  "Small-disjunct policy: preserve or discard");
  res->add_flag("--literal-abs", res_cfg.literal_abs,
                "Use the absolute-difference interpolation form");

  // --- pipeline --------------------------------------------------------------
  Common pipe_c;
  std::string pipe_input;
  std::vector<std::string> pipe_methods = {"smote", "radius-smote", "edited-radius-smote"};
  std::vector<std::string> pipe_classifiers = {"forest", "adaboost", "bagging"};
  double pipe_split = 0.2;
  GridConfig grid;
  bool pipe_no_voting = false;
  CLI::App* pipe = app.add_subcommand(
      "pipeline", "Split, resample, train and evaluate the full grid");
  add_common(pipe, pipe_c);
  pipe->add_option("--input", pipe_input, "Input dataset CSV")->required();
  pipe->add_option("--methods", pipe_methods, "Resampling methods")->delimiter(',');
  pipe->add_option("--classifiers", pipe_classifiers, "Classifiers")->delimiter(',');
  pipe->add_option("--split", pipe_split, "Test fraction")
      ->check(CLI::Range(1e-9, 1.0 - 1e-9));
  pipe->add_option("--k", grid.resampler.k_neighbors, "Neighbors for generation");
  pipe->add_option("--forest-trees", grid.forest_trees, "Random forest size");
  pipe->add_option("--bagging-members", grid.bagging_members, "Bagging committee size");
  pipe->add_option("--adaboost-rounds", grid.adaboost_rounds, "Boosting rounds");
  pipe->add_option("--adaboost-depth", grid.adaboost_depth, "Boosting tree depth");
  pipe->add_flag("--no-voting", pipe_no_voting, "Skip the voting committee row");

  // --- label -----------------------------------------------------------------
  Common label_c;
  std::string label_input;
  std::string label_ref;
  CLI::App* label = app.add_subcommand(
      "label", "Append z-score stunting status to an unlabeled CSV");
  add_common(label, label_c);
  label->add_option("--input", label_input, "Input CSV without a status column")
      ->required();
  label->add_option("--reference", label_ref, "Growth reference CSV (default: built-in)");

  // --- calibrate ---------------------------------------------------------------
  Common cal_c;
  std::string cal_input;
  CLI::App* cal = app.add_subcommand(
      "calibrate", "Fit a sensor transfer function from (reference,measured) pairs");
  add_common(cal, cal_c);
  cal->add_option("--input", cal_input, "Pairs CSV with columns reference,measured")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (synth->parsed()) {
      Rng rng(synth_c.seed);
      const GrowthReference ref = load_reference(synth_ref);
      std::array<double, kNumClasses> props = {synth_props[0], synth_props[1],
                                               synth_props[2]};
      const Dataset ds = synth_cohort(synth_n, props, ref, rng);
      write_dataset(ds, out_path(synth_c, "cohort.csv"));
      std::ostringstream prov;
      prov << "command=synth\nseed=" << synth_c.seed << "\nn=" << synth_n
           << "\nproportions=" << format_double(props[0]) << ','
           << format_double(props[1]) << ',' << format_double(props[2])
           << "\nreference=" << (synth_ref.empty() ? "builtin" : synth_ref) << '\n';
      const ClassDistribution dist = class_distribution(ds);
      for (ClassLabel c : kClassesByCode)
        prov << "count_" << trim_lower(label_name(c)) << '=' << dist.count(c) << '\n';
      write_file_atomic(out_path(synth_c, "cohort.provenance.txt"), prov.str());
      if (!synth_c.quiet)
        std::cout << "wrote " << out_path(synth_c, "cohort.csv") << " (" << ds.rows()
                  << " rows)\n";
    } else if (res->parsed()) {
      Rng rng(res_c.seed);
      if (res_target > 0) res_cfg.target_count = res_target;
      res_cfg.enn_scope = [&] {
        if (res_scope == "all-classes") return EnnScope::AllClasses;
        if (res_scope == "minority-only") return EnnScope::MinorityOnly;
        throw CLI::ValidationError("--scope must be all-classes or minority-only");
      }();
      res_cfg.small_disjunct_policy = [&] {
        if (res_policy == "preserve") return SmallDisjunctPolicy::Preserve;
        if (res_policy == "discard") return SmallDisjunctPolicy::Discard;
        throw CLI::ValidationError("--policy must be preserve or discard");
      }();
      const MethodKind method = method_from_name(res_method);
      const Dataset ds = load_dataset(res_input);
      GenerationReport report;
      const Dataset out = apply_method(ds, method, res_cfg, rng, &report);
      write_dataset(out, out_path(res_c, "resampled.csv"));
      write_file_atomic(out_path(res_c, "resampled.provenance.txt"), report.serialize());
      if (!res_c.quiet) std::cout << report.serialize();
    } else if (pipe->parsed()) {
      Rng rng(pipe_c.seed);
      grid.methods.clear();
      for (const std::string& m : pipe_methods) grid.methods.push_back(method_from_name(m));
      grid.classifiers.clear();
      for (const std::string& c : pipe_classifiers)
        grid.classifiers.push_back(classifier_from_name(c));
      grid.include_voting = !pipe_no_voting;
      const Dataset ds = load_dataset(pipe_input);
      Rng split_rng = rng.child(0);
      const SplitResult split = stratified_split(ds, pipe_split, split_rng);
      const ExperimentReport report = run_experiment_grid(split.train, split.test, grid, rng);
      write_file_atomic(out_path(pipe_c, "report.txt"), report.render_text());
      write_file_atomic(out_path(pipe_c, "report.csv"), report.render_csv());
      if (!pipe_c.quiet) std::cout << report.render_text();
    } else if (label->parsed()) {
      const GrowthReference ref = load_reference(label_ref);
      LoadOptions opts;
      opts.require_status = false;
      Dataset ds = load_dataset(label_input, opts);
      for (std::size_t i = 0; i < ds.rows(); ++i) {
        const auto r = ds.row(i);
        ds.labels[i] = haz_status(r[0], static_cast<int>(r[1]), r[2], ref);
      }
      write_dataset(ds, out_path(label_c, "labeled.csv"));
      if (!label_c.quiet)
        std::cout << "wrote " << out_path(label_c, "labeled.csv") << " (" << ds.rows()
                  << " rows)\n";
    } else if (cal->parsed()) {
      const CalibrationFit fit = fit_linear(load_pairs_csv(cal_input));
      std::cout << "slope=" << format_double(fit.slope) << '\n'
                << "intercept=" << format_double(fit.intercept) << '\n'
                << "r_squared=" << format_double(fit.r_squared) << '\n';
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
