#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "rbu/matrix.hpp"

namespace rbu {

// Source-row marker for points that were synthesized by an oversampler.
inline constexpr std::size_t kSynthetic = std::numeric_limits<std::size_t>::max();

// Binary imbalanced task: majority set K and minority set kappa. The minority
// class is the positive class throughout the library.
//
// `majority_source[i]` / `minority_source[j]` name the row of the originating
// dataset (or kSynthetic), which lets callers audit which rows reached a model.
struct BinaryTask {
  Matrix majority;
  Matrix minority;
  std::string majority_label;
  std::string minority_label;
  std::vector<std::size_t> majority_source;
  std::vector<std::size_t> minority_source;

  std::size_t n_majority() const { return majority.rows(); }
  std::size_t n_minority() const { return minority.rows(); }
  std::size_t size() const { return n_majority() + n_minority(); }
  std::size_t dim() const { return majority.empty() ? minority.cols() : majority.cols(); }
  double imbalance_ratio() const;

  // Majority rows followed by minority rows; the combined index used by every
  // neighbourhood method for lowest-index tie breaking.
  Matrix stacked() const;
  // 1 for minority rows of stacked(), 0 for majority rows.
  std::vector<int> stacked_labels() const;
};

// Enforces |K| >= |kappa| >= 1 and matching dimensions and source lists.
void validate(const BinaryTask& task);

// Builds a task from the given rows of a labelled matrix (`y` 1 = minority).
// Source indices are the row indices themselves.
BinaryTask make_task(const Matrix& x, std::span<const int> y, std::span<const std::size_t> rows,
                     std::string majority_label = "0", std::string minority_label = "1");

// Copy of `task` keeping only the listed majority rows, in the given order.
BinaryTask keep_majority(const BinaryTask& task, std::span<const std::size_t> kept);

// Number of points a ratio-driven resampler moves: ceil(ratio * (|K| - |kappa|)),
// zero when the task is already balanced the other way. A relative slack of
// 1e-9 absorbs binary representation error (0.7 * 10 must give 7, not 8).
std::size_t balancing_count(double ratio, std::size_t n_majority, std::size_t n_minority);

}  // namespace rbu
