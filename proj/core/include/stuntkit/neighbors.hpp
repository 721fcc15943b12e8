#pragma once

#include <optional>
#include <span>
#include <vector>

#include "stuntkit/dataset.hpp"

namespace stuntkit {

struct NeighborList {
  std::vector<std::size_t> indices;  // ascending distance, ties by lower index
  std::vector<double> distances;
};

double euclidean(std::span<const double> a, std::span<const double> b);

// Exact brute-force k nearest neighbors under unweighted Euclidean distance
// over the raw feature units. Ties break toward the lower row index.
// `exclude` removes one row (typically the query itself) from the pool.
NeighborList knn(std::span<const double> query, const Dataset& ds, std::size_t k,
                 std::optional<std::size_t> exclude = std::nullopt);

// k nearest neighbors of an existing row, optionally excluding itself.
NeighborList knn_of_row(const Dataset& ds, std::size_t row, std::size_t k,
                        bool exclude_self = true);

// Minimum distance from row `index` to any differently-labeled row.
double nearest_enemy_distance(std::size_t index, const Dataset& ds);

// Index of each row's single nearest neighbor (self excluded), ties by lower
// index. Batched path used by the Tomek-link cleaner.
std::vector<std::size_t> nearest_neighbor_all(const Dataset& ds);

}  // namespace stuntkit
