#include "rbu/resamplers.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "rbu/error.hpp"
#include "rbu/neighbors.hpp"

namespace rbu {
namespace {

void check_ratio(double ratio) {
  if (!(ratio >= 0.0 && ratio <= 1.0)) {
    throw ParameterError("ratio must lie in [0, 1]");
  }
}

void check_k(std::size_t k) {
  if (k < 1) {
    throw ParameterError("neighbourhood size k must be at least 1");
  }
}

std::vector<std::size_t> iota(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), std::size_t{0});
  return v;
}

// Majority rows not listed in `removed` (stacked indices; minority ones ignored).
std::vector<std::size_t> survivors(std::size_t n_majority, const std::vector<std::size_t>& removed) {
  std::vector<bool> drop(n_majority, false);
  for (std::size_t i : removed) {
    if (i < n_majority) {
      drop[i] = true;
    }
  }
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < n_majority; ++i) {
    if (!drop[i]) {
      kept.push_back(i);
    }
  }
  return kept;
}

}  // namespace

BinaryTask rus(const BinaryTask& task, double ratio, std::uint64_t seed) {
  check_ratio(ratio);
  const auto count = balancing_count(ratio, task.n_majority(), task.n_minority());
  auto order = iota(task.n_majority());
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::size_t> kept(order.begin() + static_cast<std::ptrdiff_t>(count), order.end());
  std::sort(kept.begin(), kept.end());
  return keep_majority(task, kept);
}

BinaryTask ros(const BinaryTask& task, double ratio, std::uint64_t seed) {
  check_ratio(ratio);
  if (task.n_minority() == 0) {
    throw DataError("random oversampling needs at least one minority point");
  }
  const auto count = balancing_count(ratio, task.n_majority(), task.n_minority());
  BinaryTask out = task;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, task.n_minority() - 1);
  for (std::size_t s = 0; s < count; ++s) {
    const auto j = pick(rng);
    out.minority.append_row(task.minority.row(j));
    out.minority_source.push_back(task.minority_source[j]);
  }
  return out;
}

BinaryTask smote(const BinaryTask& task, std::size_t k, double ratio, std::uint64_t seed) {
  check_k(k);
  check_ratio(ratio);
  if (task.n_minority() < 2) {
    throw DataError("SMOTE needs at least two minority points");
  }
  const std::size_t k_eff = std::min(k, task.n_minority() - 1);
  const auto count = balancing_count(ratio, task.n_majority(), task.n_minority());
  BinaryTask out = task;
  if (count == 0) {
    return out;
  }
  std::vector<std::vector<std::size_t>> neighbors(task.n_minority());
  for (std::size_t j = 0; j < task.n_minority(); ++j) {
    neighbors[j] = nearest_neighbors(task.minority, task.minority.row(j), k_eff, j);
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_seed(0, task.n_minority() - 1);
  std::uniform_int_distribution<std::size_t> pick_nn(0, k_eff - 1);
  std::uniform_real_distribution<double> gap(0.0, 1.0);
  std::vector<double> synthetic(task.dim());
  out.minority.reserve_rows(task.n_minority() + count);
  for (std::size_t s = 0; s < count; ++s) {
    const auto j = pick_seed(rng);
    const auto nn = neighbors[j][pick_nn(rng)];
    const double u = gap(rng);
    const auto x = task.minority.row(j);
    const auto y = task.minority.row(nn);
    for (std::size_t c = 0; c < synthetic.size(); ++c) {
      synthetic[c] = x[c] + u * (y[c] - x[c]);
    }
    out.minority.append_row(synthetic);
    out.minority_source.push_back(kSynthetic);
  }
  return out;
}

std::vector<std::size_t> enn_removals(const BinaryTask& task, std::size_t k) {
  check_k(k);
  if (task.size() < k + 1) {
    throw DataError("ENN with k = " + std::to_string(k) + " needs at least " + std::to_string(k + 1) +
                    " points, got " + std::to_string(task.size()));
  }
  const Matrix all = task.stacked();
  const auto y = task.stacked_labels();
  std::vector<std::size_t> removed;
  for (std::size_t i = 0; i < task.n_majority(); ++i) {
    const auto nn = nearest_neighbors(all, all.row(i), k, i);
    std::size_t minority_votes = 0;
    for (std::size_t j : nn) {
      minority_votes += static_cast<std::size_t>(y[j]);
    }
    if (2 * minority_votes > k) {
      removed.push_back(i);
    }
  }
  return removed;
}

BinaryTask enn(const BinaryTask& task, std::size_t k) {
  return keep_majority(task, survivors(task.n_majority(), enn_removals(task, k)));
}

BinaryTask renn(const BinaryTask& task, std::size_t k, std::size_t max_passes) {
  BinaryTask current = enn(task, k);
  bool changed = current.n_majority() != task.n_majority();
  for (std::size_t pass = 1; changed && pass < max_passes && current.size() >= k + 1; ++pass) {
    auto next = enn(current, k);
    changed = next.n_majority() != current.n_majority();
    current = std::move(next);
  }
  return current;
}

std::vector<std::pair<std::size_t, std::size_t>> tomek_links(const BinaryTask& task) {
  std::vector<std::pair<std::size_t, std::size_t>> links;
  if (task.size() < 2) {
    return links;
  }
  const Matrix all = task.stacked();
  std::vector<std::size_t> nearest(all.rows());
  for (std::size_t i = 0; i < all.rows(); ++i) {
    nearest[i] = nearest_neighbors(all, all.row(i), 1, i).front();
  }
  for (std::size_t i = 0; i < task.n_majority(); ++i) {
    const auto j = nearest[i];
    if (j >= task.n_majority() && nearest[j] == i) {
      links.emplace_back(i, j - task.n_majority());
    }
  }
  return links;
}

BinaryTask tomek(const BinaryTask& task) {
  std::vector<std::size_t> removed;
  for (const auto& link : tomek_links(task)) {
    removed.push_back(link.first);
  }
  return keep_majority(task, survivors(task.n_majority(), removed));
}

std::vector<double> near_miss_scores(const BinaryTask& task, std::size_t k) {
  check_k(k);
  if (task.n_minority() == 0) {
    throw DataError("NearMiss needs at least one minority point");
  }
  const std::size_t k_eff = std::min(k, task.n_minority());
  std::vector<double> scores(task.n_majority());
  for (std::size_t i = 0; i < task.n_majority(); ++i) {
    const auto d = nearest_distances(task.minority, task.majority.row(i), k_eff);
    scores[i] = std::accumulate(d.begin(), d.end(), 0.0) / static_cast<double>(d.size());
  }
  return scores;
}

BinaryTask near_miss(const BinaryTask& task, std::size_t k, double ratio) {
  if (!(ratio > 0.0 && ratio <= 1.0)) {
    throw ParameterError("NearMiss ratio must lie in (0, 1]");
  }
  const auto scores = near_miss_scores(task, k);
  const auto count = balancing_count(ratio, task.n_majority(), task.n_minority());
  auto order = iota(task.n_majority());
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });
  std::vector<std::size_t> kept(order.begin(), order.end() - static_cast<std::ptrdiff_t>(count));
  std::sort(kept.begin(), kept.end());
  return keep_majority(task, kept);
}

}  // namespace rbu
