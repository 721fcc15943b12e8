#include "stuntkit/neighbors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace stuntkit {

double euclidean(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size())
    throw std::invalid_argument("euclidean: dimension mismatch");
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    acc += d * d;
  }
  return std::sqrt(acc);
}

NeighborList knn(std::span<const double> query, const Dataset& ds, std::size_t k,
                 std::optional<std::size_t> exclude) {
  if (query.size() != ds.n_cols)
    throw std::invalid_argument("knn: query dimension mismatch");
  const std::size_t eligible = ds.rows() - (exclude && *exclude < ds.rows() ? 1 : 0);
  if (k == 0 || k > eligible)
    throw std::invalid_argument("knn: k=" + std::to_string(k) + " exceeds " +
                                std::to_string(eligible) + " eligible rows");

  std::vector<std::pair<double, std::size_t>> cand;
  cand.reserve(eligible);
  for (std::size_t i = 0; i < ds.rows(); ++i) {
    if (exclude && i == *exclude) continue;
    cand.emplace_back(euclidean(query, ds.row(i)), i);
  }
  std::partial_sort(cand.begin(), cand.begin() + static_cast<std::ptrdiff_t>(k),
                    cand.end());

  NeighborList out;
  out.indices.reserve(k);
  out.distances.reserve(k);
  for (std::size_t j = 0; j < k; ++j) {
    out.distances.push_back(cand[j].first);
    out.indices.push_back(cand[j].second);
  }
  return out;
}

NeighborList knn_of_row(const Dataset& ds, std::size_t row, std::size_t k,
                        bool exclude_self) {
  return knn(ds.row(row), ds, k,
             exclude_self ? std::optional<std::size_t>(row) : std::nullopt);
}

double nearest_enemy_distance(std::size_t index, const Dataset& ds) {
  if (index >= ds.rows())
    throw std::out_of_range("nearest_enemy_distance: index out of range");
  double best = std::numeric_limits<double>::infinity();
  const auto q = ds.row(index);
  for (std::size_t i = 0; i < ds.rows(); ++i) {
    if (ds.labels[i] == ds.labels[index]) continue;
    best = std::min(best, euclidean(q, ds.row(i)));
  }
  if (!std::isfinite(best))
    throw std::invalid_argument("nearest_enemy_distance: dataset has only one class");
  return best;
}

std::vector<std::size_t> nearest_neighbor_all(const Dataset& ds) {
  const std::size_t n = ds.rows();
  if (n < 2) throw std::invalid_argument("nearest_neighbor_all: need >= 2 rows");
  std::vector<std::size_t> nn(n);
  for (std::size_t i = 0; i < n; ++i) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_j = i;
    const auto q = ds.row(i);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const double d = euclidean(q, ds.row(j));
      if (d < best || (d == best && j < best_j)) {
        best = d;
        best_j = j;
      }
    }
    nn[i] = best_j;
  }
  return nn;
}

}  // namespace stuntkit
