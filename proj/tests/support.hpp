#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "rbu/dataset.hpp"
#include "rbu/matrix.hpp"
#include "rbu/potential.hpp"
#include "rbu/task.hpp"

namespace rbu::testing {

inline std::string data_path(const std::string& name) { return std::string(RBU_DATA_DIR) + "/" + name; }

inline std::filesystem::path temp_dir() {
  auto dir = std::filesystem::temp_directory_path() / "rbu-tests";
  std::filesystem::create_directories(dir);
  return dir;
}

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, double center = 0.0,
                            double spread = 1.0) {
  std::normal_distribution<double> dist(center, spread);
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      m(i, j) = dist(rng);
    }
  }
  return m;
}

inline BinaryTask task_from(Matrix majority, Matrix minority) {
  BinaryTask t;
  t.majority_label = "0";
  t.minority_label = "1";
  for (std::size_t i = 0; i < majority.rows(); ++i) {
    t.majority_source.push_back(i);
  }
  for (std::size_t i = 0; i < minority.rows(); ++i) {
    t.minority_source.push_back(majority.rows() + i);
  }
  t.majority = std::move(majority);
  t.minority = std::move(minority);
  return t;
}

// Overlapping Gaussian classes, minority shifted by one unit along every axis.
inline BinaryTask random_task(std::mt19937_64& rng, std::size_t n_majority, std::size_t n_minority,
                              std::size_t dim) {
  return task_from(random_matrix(rng, n_majority, dim), random_matrix(rng, n_minority, dim, 1.0));
}

// Random sizes with 1 <= |kappa| <= |K|.
inline BinaryTask random_sized_task(std::mt19937_64& rng, std::size_t max_majority, std::size_t max_minority,
                                    std::size_t max_dim) {
  std::uniform_int_distribution<std::size_t> d(1, max_dim);
  std::uniform_int_distribution<std::size_t> nmin(1, max_minority);
  const std::size_t n_minority = nmin(rng);
  std::uniform_int_distribution<std::size_t> nmaj(n_minority, std::max(n_minority, max_majority));
  return random_task(rng, nmaj(rng), n_minority, d(rng));
}

struct NaiveStep {
  std::size_t index;
  double potential;
};

// Radial-based undersampling by brute force: every step re-evaluates the
// mutual potential of each surviving majority point over the surviving
// majority set and the minority set, then removes the maximum (lowest index
// among values within the tie tolerance).
inline std::vector<NaiveStep> naive_rbu(const BinaryTask& task, double gamma, double ratio) {
  const std::size_t target = balancing_count(ratio, task.n_majority(), task.n_minority());
  std::vector<std::size_t> alive(task.n_majority());
  for (std::size_t i = 0; i < alive.size(); ++i) {
    alive[i] = i;
  }
  std::vector<NaiveStep> steps;
  while (steps.size() < target) {
    Matrix current(0, task.dim());
    for (std::size_t i : alive) {
      current.append_row(task.majority.row(i));
    }
    std::vector<double> phi;
    for (std::size_t i : alive) {
      phi.push_back(mutual_potential(task.majority.row(i), current, task.minority, gamma));
    }
    const double top = *std::max_element(phi.begin(), phi.end());
    const double tol = kTieTolerance * std::max(1.0, std::abs(top));
    std::size_t pick = 0;
    while (phi[pick] < top - tol) {
      ++pick;
    }
    steps.push_back({alive[pick], phi[pick]});
    alive.erase(alive.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return steps;
}

// Numeric two-class dataset with labels "neg" (majority rows first) and "pos".
inline Dataset synthetic_dataset(std::mt19937_64& rng, std::string name, std::size_t n_majority,
                                 std::size_t n_minority, std::size_t dim, double shift = 1.5) {
  Dataset d;
  d.name = std::move(name);
  for (std::size_t j = 0; j < dim; ++j) {
    d.feature_meta.push_back(FeatureMeta{"f" + std::to_string(j), FeatureKind::numeric, {}, {}});
  }
  d.features = vstack(random_matrix(rng, n_majority, dim), random_matrix(rng, n_minority, dim, shift));
  d.labels.assign(n_majority, "neg");
  d.labels.insert(d.labels.end(), n_minority, "pos");
  return d;
}

}  // namespace rbu::testing
