#include "rbu/task.hpp"

#include <cmath>

#include "rbu/error.hpp"

namespace rbu {

double BinaryTask::imbalance_ratio() const {
  if (n_minority() == 0) {
    throw DataError("imbalance ratio undefined for an empty minority class");
  }
  return static_cast<double>(n_majority()) / static_cast<double>(n_minority());
}

Matrix BinaryTask::stacked() const { return vstack(majority, minority); }

std::vector<int> BinaryTask::stacked_labels() const {
  std::vector<int> y(size(), 0);
  std::fill(y.begin() + static_cast<std::ptrdiff_t>(n_majority()), y.end(), 1);
  return y;
}

void validate(const BinaryTask& task) {
  if (task.n_minority() == 0) {
    throw DataError("minority class is empty");
  }
  if (task.n_majority() < task.n_minority()) {
    throw DataError("majority set is smaller than the minority set");
  }
  if (!task.majority.empty() && task.majority.cols() != task.minority.cols()) {
    throw ParameterError("majority and minority points have different dimensionality");
  }
  if (task.majority_source.size() != task.n_majority() ||
      task.minority_source.size() != task.n_minority()) {
    throw DataError("source index lists do not match the point sets");
  }
}

BinaryTask make_task(const Matrix& x, std::span<const int> y, std::span<const std::size_t> rows,
                     std::string majority_label, std::string minority_label) {
  if (y.size() != x.rows()) {
    throw ParameterError("label count does not match matrix rows");
  }
  BinaryTask task;
  task.majority = Matrix(0, x.cols());
  task.minority = Matrix(0, x.cols());
  task.majority_label = std::move(majority_label);
  task.minority_label = std::move(minority_label);
  for (std::size_t r : rows) {
    if (y[r] == 1) {
      task.minority.append_row(x.row(r));
      task.minority_source.push_back(r);
    } else {
      task.majority.append_row(x.row(r));
      task.majority_source.push_back(r);
    }
  }
  return task;
}

BinaryTask keep_majority(const BinaryTask& task, std::span<const std::size_t> kept) {
  BinaryTask out;
  out.majority = task.majority.select_rows(kept);
  out.minority = task.minority;
  out.majority_label = task.majority_label;
  out.minority_label = task.minority_label;
  out.majority_source.reserve(kept.size());
  for (std::size_t i : kept) {
    out.majority_source.push_back(task.majority_source[i]);
  }
  out.minority_source = task.minority_source;
  return out;
}

std::size_t balancing_count(double ratio, std::size_t n_majority, std::size_t n_minority) {
  if (!(ratio >= 0.0 && ratio <= 1.0)) {
    throw ParameterError("ratio must lie in [0, 1]");
  }
  if (n_majority <= n_minority) {
    return 0;
  }
  const double target = ratio * static_cast<double>(n_majority - n_minority);
  return static_cast<std::size_t>(std::ceil(target - 1e-9 * std::max(1.0, target)));
}

}  // namespace rbu
