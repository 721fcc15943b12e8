#include "stuntkit/resampling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "stuntkit/neighbors.hpp"

namespace stuntkit {

namespace {

// Plurality label of the k nearest neighbors of row i (self excluded); ties
// break toward the lowest class code.
ClassLabel knn_plurality(const Dataset& ds, std::size_t i, std::size_t k) {
  const NeighborList nl = knn_of_row(ds, i, k, /*exclude_self=*/true);
  std::array<std::size_t, kNumClasses> counts{};
  for (std::size_t j : nl.indices) ++counts[static_cast<int>(ds.labels[j])];
  ClassLabel best = ClassLabel::Normal;
  for (ClassLabel c : kClassesByCode) {
    if (counts[static_cast<int>(c)] > counts[static_cast<int>(best)]) best = c;
  }
  return best;
}

// Row indices the Wilson rule would remove, judged against `ds` as-is.
std::vector<std::size_t> enn_removals(const Dataset& ds, std::size_t k,
                                      EnnScope scope) {
  if (k == 0 || k >= ds.rows())
    throw std::invalid_argument("enn_edit: need k in [1, rows)");
  const ClassLabel majority = class_distribution(ds).majority();
  std::vector<std::size_t> removed;
  for (std::size_t i = 0; i < ds.rows(); ++i) {
    if (scope == EnnScope::MinorityOnly) {
      if (ds.labels[i] == majority) continue;
      const NeighborList nl = knn_of_row(ds, i, k, true);
      std::size_t majority_neighbors = 0;
      for (std::size_t j : nl.indices)
        if (ds.labels[j] == majority) ++majority_neighbors;
      if (2 * majority_neighbors > k) removed.push_back(i);
    } else {
      if (knn_plurality(ds, i, k) != ds.labels[i]) removed.push_back(i);
    }
  }
  return removed;
}

Dataset drop_rows(const Dataset& ds, const std::vector<std::size_t>& removed) {
  std::set<std::size_t> gone(removed.begin(), removed.end());
  std::vector<std::size_t> keep;
  keep.reserve(ds.rows() - gone.size());
  for (std::size_t i = 0; i < ds.rows(); ++i)
    if (!gone.count(i)) keep.push_back(i);
  return ds.subset(keep);
}

std::size_t resolve_target(const Dataset& ds, const ResamplerConfig& cfg) {
  if (cfg.target_count) return *cfg.target_count;
  const ClassDistribution dist = class_distribution(ds);
  return dist.count(dist.majority());
}

void append_batch(Dataset& ds, const SyntheticBatch& batch, std::size_t from) {
  for (std::size_t i = from; i < batch.size(); ++i)
    ds.push_row(std::span<const double>(batch.rows[i]), batch.labels[i]);
}

}  // namespace

std::pair<Dataset, SyntheticBatch> smote(const Dataset& ds, ClassLabel minority,
                                         const ResamplerConfig& cfg, Rng& rng) {
  const std::vector<std::size_t> members = ds.rows_of(minority);
  const std::size_t m = members.size();
  if (m < 2)
    throw std::invalid_argument(std::string("smote: class ") +
                                std::string(label_name(minority)) +
                                " has fewer than 2 members");
  const std::size_t k = cfg.k_neighbors;
  if (k == 0 || k > m - 1)
    throw std::invalid_argument("smote: k_neighbors must be in [1, class_count-1]");
  const std::size_t target = resolve_target(ds, cfg);
  if (target < m)
    throw std::invalid_argument("smote: target count " + std::to_string(target) +
                                " is below current class count " + std::to_string(m));

  // Same-class neighbor pools, computed once on the class subset.
  const Dataset cls = ds.subset(members);
  std::vector<NeighborList> pools(m);
  for (std::size_t li = 0; li < m; ++li) pools[li] = knn_of_row(cls, li, k, true);

  SyntheticBatch batch;
  Dataset out = ds;
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);

  const std::size_t n_new = target - m;
  for (std::size_t s = 0; s < n_new; ++s) {
    if (s % m == 0) rng.shuffle(order);  // fresh epoch
    const std::size_t parent_local = order[s % m];
    const std::size_t neighbor_local =
        pools[parent_local].indices[rng.below(pools[parent_local].indices.size())];
    const double delta = rng.uniform_closed();

    const auto p = cls.row(parent_local);
    const auto q = cls.row(neighbor_local);
    std::vector<double> row(ds.n_cols);
    for (std::size_t c = 0; c < ds.n_cols; ++c) {
      const double step = cfg.literal_abs ? std::abs(q[c] - p[c]) : q[c] - p[c];
      row[c] = p[c] + step * delta;
    }

    batch.rows.push_back(row);
    batch.labels.push_back(minority);
    batch.parent_index.push_back(members[parent_local]);
    batch.neighbor_index.push_back(members[neighbor_local]);
    batch.delta.push_back(delta);
    out.push_row(std::span<const double>(row), minority);
  }
  return {std::move(out), std::move(batch)};
}

std::pair<Dataset, SyntheticBatch> smote_all(const Dataset& ds,
                                             const ResamplerConfig& cfg, Rng& rng) {
  const std::size_t target = resolve_target(ds, cfg);
  Dataset out = ds;
  SyntheticBatch merged;
  const ClassDistribution dist = class_distribution(ds);
  for (ClassLabel c : kClassesByCode) {
    const std::size_t n = dist.count(c);
    if (n == 0 || n >= target) continue;
    ResamplerConfig per = cfg;
    per.target_count = target;
    per.k_neighbors = std::min(cfg.k_neighbors, n - 1);
    auto [next, batch] = smote(out, c, per, rng);
    out = std::move(next);
    merged.rows.insert(merged.rows.end(), batch.rows.begin(), batch.rows.end());
    merged.labels.insert(merged.labels.end(), batch.labels.begin(), batch.labels.end());
    merged.parent_index.insert(merged.parent_index.end(), batch.parent_index.begin(),
                               batch.parent_index.end());
    merged.neighbor_index.insert(merged.neighbor_index.end(),
                                 batch.neighbor_index.begin(),
                                 batch.neighbor_index.end());
    merged.delta.insert(merged.delta.end(), batch.delta.begin(), batch.delta.end());
  }
  return {std::move(out), std::move(merged)};
}

std::pair<Dataset, std::vector<std::size_t>> enn_edit(const Dataset& ds, std::size_t k,
                                                      EnnScope scope) {
  const std::vector<std::size_t> removed = enn_removals(ds, k, scope);
  return {drop_rows(ds, removed), removed};
}

std::vector<std::pair<std::size_t, std::size_t>> tomek_links(const Dataset& ds) {
  std::vector<std::pair<std::size_t, std::size_t>> links;
  if (ds.rows() < 2) return links;
  const std::vector<std::size_t> nn = nearest_neighbor_all(ds);
  for (std::size_t i = 0; i < ds.rows(); ++i) {
    const std::size_t j = nn[i];
    if (j > i && nn[j] == i && ds.labels[i] != ds.labels[j]) links.emplace_back(i, j);
  }
  return links;
}

Dataset smote_tomek(const Dataset& ds, const ResamplerConfig& cfg, Rng& rng,
                    GenerationReport* report) {
  const ClassLabel majority = class_distribution(ds).majority();
  std::vector<std::size_t> removed;
  for (auto [a, b] : tomek_links(ds)) {
    if (ds.labels[a] == majority) removed.push_back(a);
    if (ds.labels[b] == majority) removed.push_back(b);
  }
  const Dataset cleaned = drop_rows(ds, removed);
  auto [out, batch] = smote_all(cleaned, cfg, rng);
  if (report) {
    *report = generation_report("smote-tomek", rng.seed(), cfg, ds, out,
                                removed.size(), 0);
  }
  return out;
}

Dataset radius_smote_paper(const Dataset& ds, const ResamplerConfig& cfg, Rng& rng,
                           GenerationReport* report) {
  auto [augmented, batch] = smote_all(ds, cfg, rng);
  const std::vector<std::size_t> removed =
      enn_removals(augmented, cfg.k_edit, EnnScope::AllClasses);
  Dataset out = drop_rows(augmented, removed);
  if (report) {
    *report = generation_report("radius-smote", rng.seed(), cfg, ds, out, 0,
                                removed.size());
  }
  return out;
}

Dataset edited_radius_smote(const Dataset& ds, const ResamplerConfig& cfg, Rng& rng,
                            GenerationReport* report) {
  const std::size_t target = resolve_target(ds, cfg);
  const ClassDistribution dist = class_distribution(ds);

  Dataset out = ds;
  // Combined-set indices exempt from the final cleaning pass: ball-generated
  // rows and the small-disjunct parents they protect.
  std::set<std::size_t> exempt;

  for (ClassLabel cls_label : kClassesByCode) {
    const std::vector<std::size_t> members = ds.rows_of(cls_label);
    const std::size_t m = members.size();
    if (m == 0 || m >= target) continue;
    if (m < 2)
      throw std::invalid_argument(std::string("edited_radius_smote: class ") +
                                  std::string(label_name(cls_label)) +
                                  " has fewer than 2 members");
    const std::size_t k = std::min(cfg.k_neighbors, ds.rows() - 1);

    // Safe radius and safe/small-disjunct classification per minority sample.
    std::vector<double> radius(m);
    std::vector<bool> small_disjunct(m);
    for (std::size_t li = 0; li < m; ++li) {
      const std::size_t gi = members[li];
      radius[li] = nearest_enemy_distance(gi, ds);
      const NeighborList nl = knn_of_row(ds, gi, k, true);
      bool has_friend = false;
      for (std::size_t j : nl.indices)
        if (ds.labels[j] == cls_label) has_friend = true;
      small_disjunct[li] = !has_friend;
    }

    // Same-class interpolation pools for the safe samples.
    const Dataset cls = ds.subset(members);
    const std::size_t k_pool = std::min(cfg.k_neighbors, m - 1);
    std::vector<NeighborList> pools(m);
    for (std::size_t li = 0; li < m; ++li)
      pools[li] = knn_of_row(cls, li, k_pool, true);

    std::vector<std::size_t> parents;  // local indices eligible as parents
    for (std::size_t li = 0; li < m; ++li) {
      if (small_disjunct[li] &&
          cfg.small_disjunct_policy == SmallDisjunctPolicy::Discard)
        continue;
      parents.push_back(li);
      if (small_disjunct[li]) exempt.insert(members[li]);
    }
    if (parents.empty()) continue;

    std::vector<std::size_t> order = parents;
    const std::size_t n_new = target - m;
    for (std::size_t s = 0; s < n_new; ++s) {
      if (s % order.size() == 0) rng.shuffle(order);
      const std::size_t li = order[s % order.size()];
      const auto p = cls.row(li);
      std::vector<double> row(ds.n_cols);
      const double delta = rng.uniform_closed();

      if (small_disjunct[li]) {
        // Ball sample around the isolated point, radius r/2, no partner.
        std::vector<double> dir(ds.n_cols);
        double norm = 0.0;
        do {
          norm = 0.0;
          for (double& d : dir) {
            d = rng.normal();
            norm += d * d;
          }
          norm = std::sqrt(norm);
        } while (norm == 0.0);
        const double mag = delta * radius[li] / 2.0;
        for (std::size_t c = 0; c < ds.n_cols; ++c)
          row[c] = p[c] + dir[c] / norm * mag;
        exempt.insert(out.rows());
      } else {
        const std::size_t q_li = pools[li].indices[rng.below(pools[li].indices.size())];
        const auto q = cls.row(q_li);
        double step_norm = 0.0;
        for (std::size_t c = 0; c < ds.n_cols; ++c) {
          const double d = (q[c] - p[c]) * delta;
          step_norm += d * d;
        }
        step_norm = std::sqrt(step_norm);
        // Clamp the step so the new point stays inside the safe radius.
        const double scale =
            step_norm > radius[li] && step_norm > 0.0 ? radius[li] / step_norm : 1.0;
        for (std::size_t c = 0; c < ds.n_cols; ++c)
          row[c] = p[c] + (q[c] - p[c]) * delta * scale;
      }
      out.push_row(std::span<const double>(row), cls_label);
    }
  }

  // Final cleanup, exemption-aware.
  std::vector<std::size_t> removed =
      enn_removals(out, cfg.k_edit, EnnScope::AllClasses);
  std::erase_if(removed, [&](std::size_t i) { return exempt.count(i) > 0; });
  Dataset cleaned = drop_rows(out, removed);
  if (report) {
    *report = generation_report("edited-radius-smote", rng.seed(), cfg, ds, cleaned,
                                0, removed.size());
  }
  return cleaned;
}

GenerationReport generation_report(const std::string& method, std::uint64_t seed,
                                   const ResamplerConfig& cfg, const Dataset& before,
                                   const Dataset& after, std::size_t removed_tomek,
                                   std::size_t removed_edit) {
  GenerationReport r;
  r.method = method;
  r.seed = seed;
  r.k_neighbors = cfg.k_neighbors;
  r.k_edit = cfg.k_edit;
  const ClassDistribution db = class_distribution(before);
  const ClassDistribution da = class_distribution(after);
  for (ClassLabel c : kClassesByCode) {
    const int i = static_cast<int>(c);
    r.before[i] = db.count(c);
    r.after[i] = da.count(c);
    r.added[i] = r.after[i] > r.before[i] ? r.after[i] - r.before[i] : 0;
  }
  r.removed_tomek = removed_tomek;
  r.removed_edit = removed_edit;
  return r;
}

std::string GenerationReport::serialize() const {
  std::ostringstream out;
  out << "method=" << method << '\n';
  out << "seed=" << seed << '\n';
  out << "k_neighbors=" << k_neighbors << '\n';
  out << "k_edit=" << k_edit << '\n';
  for (ClassLabel c : kClassesByCode) {
    const int i = static_cast<int>(c);
    const std::string name = trim_lower(label_name(c));
    out << "before_" << name << '=' << before[i] << '\n';
    out << "after_" << name << '=' << after[i] << '\n';
    out << "added_" << name << '=' << added[i] << '\n';
  }
  out << "removed_tomek=" << removed_tomek << '\n';
  out << "removed_edit=" << removed_edit << '\n';
  return out.str();
}

GenerationReport GenerationReport::parse(const std::string& text) {
  GenerationReport r;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("generation report: malformed line '" + line + "'");
    const std::string key = line.substr(0, eq);
    const std::string val = line.substr(eq + 1);
    auto idx_of = [&](const std::string& prefix) -> int {
      for (ClassLabel c : kClassesByCode)
        if (key == prefix + trim_lower(label_name(c))) return static_cast<int>(c);
      return -1;
    };
    if (key == "method") r.method = val;
    else if (key == "seed") r.seed = std::stoull(val);
    else if (key == "k_neighbors") r.k_neighbors = std::stoul(val);
    else if (key == "k_edit") r.k_edit = std::stoul(val);
    else if (key == "removed_tomek") r.removed_tomek = std::stoul(val);
    else if (key == "removed_edit") r.removed_edit = std::stoul(val);
    else if (int i = idx_of("before_"); i >= 0) r.before[i] = std::stoul(val);
    else if (int i = idx_of("after_"); i >= 0) r.after[i] = std::stoul(val);
    else if (int i = idx_of("added_"); i >= 0) r.added[i] = std::stoul(val);
    else throw std::invalid_argument("generation report: unknown key '" + key + "'");
  }
  return r;
}

}  // namespace stuntkit
