#include "stuntkit/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace stuntkit {

Dataset Dataset::subset(const std::vector<std::size_t>& indices) const {
  Dataset out(n_cols, schema);
  out.values.reserve(indices.size() * n_cols);
  out.labels.reserve(indices.size());
  for (std::size_t i : indices) {
    if (i >= rows()) throw std::out_of_range("Dataset::subset: index out of range");
    out.push_row(row(i), labels[i]);
  }
  return out;
}

std::vector<std::size_t> Dataset::rows_of(ClassLabel label) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < rows(); ++i) {
    if (labels[i] == label) out.push_back(i);
  }
  return out;
}

void Dataset::validate_domain() const {
  if (n_cols != kDefaultSchema.size())
    throw std::invalid_argument("validate_domain: expected the 4-column growth schema");
  for (std::size_t i = 0; i < rows(); ++i) {
    auto r = row(i);
    for (std::size_t c = 0; c < n_cols; ++c) {
      if (std::isnan(r[c]))
        throw std::invalid_argument("row " + std::to_string(i + 1) + ", column " +
                                    schema[c] + ": NaN value");
    }
    if (r[0] < 0.0)
      throw std::invalid_argument("row " + std::to_string(i + 1) + ": age must be >= 0");
    if (r[1] != 0.0 && r[1] != 1.0)
      throw std::invalid_argument("row " + std::to_string(i + 1) + ": gender must be 0 or 1");
    if (r[2] <= 0.0)
      throw std::invalid_argument("row " + std::to_string(i + 1) + ": height must be > 0");
    if (r[3] <= 0.0)
      throw std::invalid_argument("row " + std::to_string(i + 1) + ": weight must be > 0");
  }
}

int ClassDistribution::percent_rounded(ClassLabel c) const {
  return static_cast<int>(std::floor(percent(c) + 0.5));
}

ClassLabel ClassDistribution::majority() const {
  ClassLabel best = ClassLabel::Normal;
  for (ClassLabel c : kClassesByCode) {
    if (count(c) > count(best)) best = c;
  }
  return best;
}

ClassDistribution class_distribution(const Dataset& ds) {
  ClassDistribution d;
  for (ClassLabel l : ds.labels) ++d.counts[static_cast<int>(l)];
  d.total = ds.rows();
  return d;
}

namespace {

std::size_t round_half_up(double x) {
  return static_cast<std::size_t>(std::floor(x + 0.5));
}

}  // namespace

SplitResult stratified_split(const Dataset& ds, double test_fraction, Rng& rng) {
  if (!(test_fraction > 0.0 && test_fraction < 1.0))
    throw std::invalid_argument("stratified_split: test_fraction must be in (0,1)");

  const ClassDistribution dist = class_distribution(ds);
  for (ClassLabel c : kClassesByCode) {
    if (dist.count(c) == 1)
      throw std::invalid_argument(
          std::string("stratified_split: class ") + std::string(label_name(c)) +
          " has a single member; cannot place it on both sides");
  }

  // Per-class test sizes, round-half-up, both sides kept non-empty.
  std::array<std::size_t, kNumClasses> test_counts{};
  std::size_t total_assigned = 0;
  for (ClassLabel c : kClassesByCode) {
    const std::size_t n = dist.count(c);
    if (n == 0) continue;
    std::size_t t = round_half_up(static_cast<double>(n) * test_fraction);
    t = std::min(std::max<std::size_t>(t, 1), n - 1);
    test_counts[static_cast<int>(c)] = t;
    total_assigned += t;
  }

  // Repair the grand total by moving the difference onto the largest class.
  const std::size_t total_target =
      round_half_up(static_cast<double>(ds.rows()) * test_fraction);
  if (total_assigned != total_target) {
    const ClassLabel big = dist.majority();
    const std::size_t n = dist.count(big);
    std::size_t& t = test_counts[static_cast<int>(big)];
    const long long want = static_cast<long long>(t) +
                           (static_cast<long long>(total_target) -
                            static_cast<long long>(total_assigned));
    t = static_cast<std::size_t>(
        std::clamp<long long>(want, 1, static_cast<long long>(n) - 1));
  }

  std::vector<std::size_t> train_idx;
  std::vector<std::size_t> test_idx;
  for (ClassLabel c : kClassesByCode) {
    std::vector<std::size_t> members = ds.rows_of(c);
    if (members.empty()) continue;
    rng.shuffle(members);
    const std::size_t t = test_counts[static_cast<int>(c)];
    test_idx.insert(test_idx.end(), members.begin(), members.begin() + t);
    train_idx.insert(train_idx.end(), members.begin() + t, members.end());
  }
  std::sort(train_idx.begin(), train_idx.end());
  std::sort(test_idx.begin(), test_idx.end());

  return {ds.subset(train_idx), ds.subset(test_idx)};
}

}  // namespace stuntkit
