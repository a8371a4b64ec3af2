#include "rbu/matrix.hpp"

#include <cmath>

#include "rbu/error.hpp"

namespace rbu {

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
  for (const auto& r : rows) {
    append_row(std::span<const double>(r.begin(), r.size()));
  }
}

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
  Matrix m;
  for (const auto& r : rows) {
    m.append_row(r);
  }
  return m;
}

void Matrix::append_row(std::span<const double> values) {
  if (rows_ == 0 && cols_ == 0) {
    cols_ = values.size();
  } else if (values.size() != cols_) {
    throw ParameterError("row has " + std::to_string(values.size()) + " values, matrix has " +
                         std::to_string(cols_) + " columns");
  }
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

Matrix Matrix::select_rows(std::span<const std::size_t> indices) const {
  Matrix out(indices.size(), cols_);
  for (std::size_t i = 0; i < indices.size(); ++i) {
    const auto src = row(indices[i]);
    std::copy(src.begin(), src.end(), out.row(i).begin());
  }
  return out;
}

std::vector<double> Matrix::column(std::size_t c) const {
  std::vector<double> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    out[r] = (*this)(r, c);
  }
  return out;
}

Matrix vstack(const Matrix& top, const Matrix& bottom) {
  if (top.empty()) {
    return bottom;
  }
  if (bottom.empty()) {
    return top;
  }
  if (top.cols() != bottom.cols()) {
    throw ParameterError("cannot stack matrices with " + std::to_string(top.cols()) + " and " +
                         std::to_string(bottom.cols()) + " columns");
  }
  Matrix out = top;
  out.reserve_rows(top.rows() + bottom.rows());
  for (std::size_t r = 0; r < bottom.rows(); ++r) {
    out.append_row(bottom.row(r));
  }
  return out;
}

double squared_euclidean(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return sum;
}

double euclidean(std::span<const double> a, std::span<const double> b) {
  return std::sqrt(squared_euclidean(a, b));
}

}  // namespace rbu
