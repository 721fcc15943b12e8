#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "stuntkit/labels.hpp"
#include "stuntkit/rng.hpp"

namespace stuntkit {

// Canonical feature column order for the child-growth CSV schema.
inline const std::vector<std::string> kDefaultSchema = {
    "age_months", "gender", "height_cm", "weight_kg"};

// Row-major numeric feature matrix with one class label per row. Immutable by
// convention after construction; every operation in the library returns new
// datasets rather than mutating shared ones.
struct Dataset {
  std::size_t n_cols = 0;
  std::vector<double> values;  // size() == rows() * n_cols
  std::vector<ClassLabel> labels;
  std::vector<std::string> schema;  // feature column names, size n_cols

  Dataset() = default;
  explicit Dataset(std::size_t cols,
                   std::vector<std::string> column_names = {})
      : n_cols(cols), schema(std::move(column_names)) {
    if (schema.empty()) {
      for (std::size_t c = 0; c < cols; ++c) schema.push_back("f" + std::to_string(c));
    }
  }

  std::size_t rows() const { return labels.size(); }
  bool empty() const { return labels.empty(); }

  std::span<const double> row(std::size_t i) const {
    return {values.data() + i * n_cols, n_cols};
  }

  void push_row(std::span<const double> features, ClassLabel label) {
    if (features.size() != n_cols)
      throw std::invalid_argument("push_row: feature width mismatch");
    values.insert(values.end(), features.begin(), features.end());
    labels.push_back(label);
  }

  Dataset subset(const std::vector<std::size_t>& indices) const;

  // Row indices carrying the given label.
  std::vector<std::size_t> rows_of(ClassLabel label) const;

  // Checks the domain invariants for the canonical schema (no NaN, age >= 0,
  // height > 0, weight > 0, gender in {0,1}). Throws with the offending
  // row/column on violation.
  void validate_domain() const;
};

struct ClassDistribution {
  std::array<std::size_t, kNumClasses> counts{};  // indexed by ClassLabel
  std::size_t total = 0;

  std::size_t count(ClassLabel c) const { return counts[static_cast<int>(c)]; }
  double percent(ClassLabel c) const {
    return total == 0 ? 0.0 : 100.0 * static_cast<double>(count(c)) / static_cast<double>(total);
  }
  // Display rounding, nearest integer.
  int percent_rounded(ClassLabel c) const;
  ClassLabel majority() const;
};

ClassDistribution class_distribution(const Dataset& ds);

// Stratified train/test partition. Per-class test sizes use round-half-up of
// count * test_fraction, clamped so both sides keep at least one sample when
// the class has >= 2, then the grand total is repaired to round-half-up of
// rows * test_fraction by adjusting the largest class.
struct SplitResult {
  Dataset train;
  Dataset test;
};

SplitResult stratified_split(const Dataset& ds, double test_fraction, Rng& rng);

}  // namespace stuntkit
