#include "rbu/ranking.hpp"

#include <algorithm>
#include <numeric>

#include "rbu/error.hpp"

namespace rbu {

std::vector<double> rank_descending(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
  std::vector<double> ranks(n);
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && values[order[j]] == values[order[i]]) {
      ++j;
    }
    const double rank = 0.5 * static_cast<double>(i + 1 + j);
    for (std::size_t t = i; t < j; ++t) {
      ranks[order[t]] = rank;
    }
    i = j;
  }
  return ranks;
}

RankTable average_ranks(const std::vector<std::string>& datasets, const std::vector<std::string>& methods,
                        const std::vector<std::vector<std::optional<double>>>& scores) {
  if (methods.size() < 2) {
    throw ParameterError("ranking needs at least two methods");
  }
  if (datasets.empty() || scores.size() != datasets.size()) {
    throw ParameterError("ranking needs one score row per dataset and at least one dataset");
  }
  RankTable table;
  table.methods = methods;
  table.mean_ranks.assign(methods.size(), 0.0);
  for (std::size_t d = 0; d < datasets.size(); ++d) {
    if (scores[d].size() != methods.size()) {
      throw ParameterError("score row for " + datasets[d] + " has the wrong length");
    }
    std::vector<double> row;
    std::vector<std::string> missing;
    for (std::size_t j = 0; j < methods.size(); ++j) {
      if (scores[d][j]) {
        row.push_back(*scores[d][j]);
      } else {
        missing.push_back(methods[j]);
      }
    }
    if (!missing.empty()) {
      std::string msg = "dataset " + datasets[d] + " excluded from ranking: missing";
      for (const auto& m : missing) {
        msg += " " + m;
      }
      table.warnings.push_back(msg);
      continue;
    }
    table.datasets.push_back(datasets[d]);
    table.ranks.push_back(rank_descending(row));
  }
  if (!table.ranks.empty()) {
    for (const auto& row : table.ranks) {
      for (std::size_t j = 0; j < row.size(); ++j) {
        table.mean_ranks[j] += row[j];
      }
    }
    for (double& r : table.mean_ranks) {
      r /= static_cast<double>(table.ranks.size());
    }
  }
  return table;
}

FriedmanResult friedman_statistic(const std::vector<std::vector<double>>& ranks) {
  const std::size_t n = ranks.size();
  if (n < 2) {
    throw ParameterError("the Friedman statistic needs at least two datasets");
  }
  const std::size_t k = ranks.front().size();
  if (k < 2) {
    throw ParameterError("the Friedman statistic needs at least two methods");
  }
  std::vector<double> mean(k, 0.0);
  for (const auto& row : ranks) {
    if (row.size() != k) {
      throw ParameterError("rank matrix is ragged");
    }
    for (std::size_t j = 0; j < k; ++j) {
      mean[j] += row[j];
    }
  }
  double sum_sq = 0.0;
  for (double& r : mean) {
    r /= static_cast<double>(n);
    sum_sq += r * r;
  }
  const double nn = static_cast<double>(n);
  const double kk = static_cast<double>(k);
  FriedmanResult out;
  out.chi_square = 12.0 * nn / (kk * (kk + 1.0)) * (sum_sq - kk * (kk + 1.0) * (kk + 1.0) / 4.0);
  out.df = k - 1;
  out.datasets = n;
  out.methods = k;
  return out;
}

}  // namespace rbu
