#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stuntkit/dataset.hpp"
#include "stuntkit/rng.hpp"

namespace stuntkit {

enum class EnnScope { AllClasses, MinorityOnly };
enum class SmallDisjunctPolicy { Preserve, Discard };

struct ResamplerConfig {
  std::size_t k_neighbors = 5;  // neighbor pool for synthetic generation
  std::size_t k_edit = 3;      // k for the editing / cleaning rules
  // Per-minority-class target count; empty means "match the majority count".
  std::optional<std::size_t> target_count;
  EnnScope enn_scope = EnnScope::AllClasses;
  SmallDisjunctPolicy small_disjunct_policy = SmallDisjunctPolicy::Preserve;
  // Reproduces the printed |x_i' - x_i| form instead of the signed
  // difference. Off by default: the signed form keeps every generated point
  // on the segment between parent and neighbor.
  bool literal_abs = false;
};

// Provenance of generated rows: parent, chosen neighbor and the interpolation
// scalar for each synthetic sample.
struct SyntheticBatch {
  std::vector<std::vector<double>> rows;
  std::vector<ClassLabel> labels;
  std::vector<std::size_t> parent_index;
  // Neighbor row in the source dataset; nullopt for ball-sampled rows that
  // have no interpolation partner.
  std::vector<std::optional<std::size_t>> neighbor_index;
  std::vector<double> delta;

  std::size_t size() const { return rows.size(); }
};

// Per-run bookkeeping written next to resampled CSVs.
struct GenerationReport {
  std::string method;
  std::uint64_t seed = 0;
  std::size_t k_neighbors = 0;
  std::size_t k_edit = 0;
  std::array<std::size_t, kNumClasses> before{};
  std::array<std::size_t, kNumClasses> after{};
  std::array<std::size_t, kNumClasses> added{};
  std::size_t removed_tomek = 0;
  std::size_t removed_edit = 0;

  std::string serialize() const;  // plain key=value lines
  static GenerationReport parse(const std::string& text);
};

// Oversamples one class to the configured target by interpolating each
// synthetic row between a minority parent and one of its k nearest same-class
// neighbors with a fresh scalar delta in [0,1]. Parents cycle round-robin
// through a per-epoch shuffle so the target is hit exactly.
std::pair<Dataset, SyntheticBatch> smote(const Dataset& ds, ClassLabel minority,
                                         const ResamplerConfig& cfg, Rng& rng);

// smote applied to every class below the target (k clamped to class size - 1
// for small classes).
std::pair<Dataset, SyntheticBatch> smote_all(const Dataset& ds,
                                             const ResamplerConfig& cfg, Rng& rng);

// Wilson editing: removes rows whose label disagrees with the plurality label
// of their k nearest neighbors. Decisions are computed against the original
// dataset and applied at once. Under MinorityOnly scope only non-majority
// rows are candidates and removal requires a strict majority of
// majority-class neighbors.
std::pair<Dataset, std::vector<std::size_t>> enn_edit(
    const Dataset& ds, std::size_t k = 3, EnnScope scope = EnnScope::AllClasses);

// All unordered cross-class pairs that are mutual single nearest neighbors.
std::vector<std::pair<std::size_t, std::size_t>> tomek_links(const Dataset& ds);

// Tomek cleaning of the majority class followed by smote_all.
Dataset smote_tomek(const Dataset& ds, const ResamplerConfig& cfg, Rng& rng,
                    GenerationReport* report = nullptr);

// The three-step hybrid described with the ensemble pipeline: oversample with
// smote, then drop every row of the augmented set misclassified by its 3
// nearest neighbors (decisions against the full augmented set, applied at
// once).
Dataset radius_smote_paper(const Dataset& ds, const ResamplerConfig& cfg, Rng& rng,
                           GenerationReport* report = nullptr);

// Safe-radius oversampling with small-disjunct handling:
//  1. each minority sample's safe radius r = nearest enemy distance;
//  2. samples with at least one same-class neighbor among their k nearest
//     are SAFE, samples whose k nearest are all enemies are SMALL-DISJUNCT;
//  3. SAFE samples generate along the segment toward a same-class neighbor
//     with the step clamped to r;
//  4. SMALL-DISJUNCT samples generate inside the ball of radius r/2 around
//     themselves (policy Preserve) or generate nothing (policy Discard);
//  5. ENN(k=3, all classes) cleans the combined set, with ball-generated rows
//     and their parents exempt from removal.
Dataset edited_radius_smote(const Dataset& ds, const ResamplerConfig& cfg, Rng& rng,
                            GenerationReport* report = nullptr);

GenerationReport generation_report(const std::string& method, std::uint64_t seed,
                                   const ResamplerConfig& cfg, const Dataset& before,
                                   const Dataset& after, std::size_t removed_tomek = 0,
                                   std::size_t removed_edit = 0);

}  // namespace stuntkit
