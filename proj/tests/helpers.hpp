#pragma once

#include <cstddef>
#include <vector>

#include "stuntkit/dataset.hpp"
#include "stuntkit/rng.hpp"

namespace stuntkit::testing {

// Small labeled dataset from literal rows.
inline Dataset make_dataset(std::size_t cols,
                            const std::vector<std::vector<double>>& rows,
                            const std::vector<ClassLabel>& labels) {
  Dataset ds(cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    ds.push_row(std::span<const double>(rows[i]), labels[i]);
  return ds;
}

// Random dataset with rows drawn uniformly in [0, 10)^cols and labels drawn
// uniformly over the classes present in `classes`.
inline Dataset random_dataset(std::size_t n, std::size_t cols, Rng& rng,
                              const std::vector<ClassLabel>& classes = {
                                  ClassLabel::Normal, ClassLabel::Stunting,
                                  ClassLabel::Stunted}) {
  Dataset ds(cols);
  std::vector<double> row(cols);
  for (std::size_t i = 0; i < n; ++i) {
    for (double& v : row) v = rng.uniform_in(0.0, 10.0);
    ds.push_row(std::span<const double>(row), classes[rng.below(classes.size())]);
  }
  return ds;
}

}  // namespace stuntkit::testing
