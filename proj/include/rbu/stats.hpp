#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>

#include "rbu/dataset.hpp"

namespace rbu {

// Summary of a binary dataset: imbalance ratio, size and minority-type shares.
struct DatasetStats {
  std::string name;
  double ir = 1.0;
  std::size_t samples = 0;
  std::size_t features = 0;
  std::size_t n_majority = 0;
  std::size_t n_minority = 0;
  std::array<double, 4> type_proportions{};
};

// Encodes categoricals, standardizes on the whole dataset, splits off the
// minority class and types its points with k = 5, p = 2.
DatasetStats dataset_stats(const Dataset& d, const std::optional<std::string>& minority_label = std::nullopt);

}  // namespace rbu
