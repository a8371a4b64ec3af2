#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rbu {

// Ranks of `values`, best (largest) = 1, tied values sharing the average of
// their positions.
std::vector<double> rank_descending(std::span<const double> values);

struct RankTable {
  std::vector<std::string> methods;
  // Datasets that entered the ranking, parallel to `ranks`.
  std::vector<std::string> datasets;
  std::vector<std::vector<double>> ranks;  // datasets x methods
  std::vector<double> mean_ranks;          // per method
  std::vector<std::string> warnings;
};

// `scores[d][j]` is method j's score on dataset d, or empty when the cell is
// missing; datasets with a missing cell are left out with a warning.
RankTable average_ranks(const std::vector<std::string>& datasets, const std::vector<std::string>& methods,
                        const std::vector<std::vector<std::optional<double>>>& scores);

struct FriedmanResult {
  double chi_square = 0.0;
  std::size_t df = 0;
  std::size_t datasets = 0;
  std::size_t methods = 0;
};

// Friedman statistic over a datasets x methods rank matrix, without tie
// correction: 12N / (K(K+1)) * (sum_j Rbar_j^2 - K(K+1)^2 / 4), df = K - 1.
FriedmanResult friedman_statistic(const std::vector<std::vector<double>>& ranks);

}  // namespace rbu
