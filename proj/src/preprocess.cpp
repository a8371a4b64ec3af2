#include "rbu/preprocess.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "rbu/error.hpp"

namespace rbu {

Dataset encode_categoricals(const Dataset& d) {
  Dataset out = d;
  for (std::size_t f = 0; f < out.feature_meta.size(); ++f) {
    auto& meta = out.feature_meta[f];
    if (meta.encoded()) {
      continue;
    }
    std::unordered_map<std::string, std::size_t> codes;
    meta.categories.clear();
    for (std::size_t r = 0; r < meta.raw.size(); ++r) {
      auto [it, inserted] = codes.try_emplace(meta.raw[r], meta.categories.size());
      if (inserted) {
        meta.categories.push_back(meta.raw[r]);
      }
      out.features(r, f) = static_cast<double>(it->second);
    }
    meta.raw.clear();
  }
  validate(out);
  return out;
}

Standardizer::Standardizer(std::vector<double> mean, std::vector<double> scale)
    : mean_(std::move(mean)), scale_(std::move(scale)) {
  if (mean_.size() != scale_.size()) {
    throw ParameterError("standardizer mean and scale differ in length");
  }
}

Standardizer Standardizer::fit(const Matrix& x) {
  if (x.rows() == 0) {
    throw DataError("cannot fit a standardizer on zero rows");
  }
  const auto n = static_cast<double>(x.rows());
  std::vector<double> mean(x.cols(), 0.0);
  std::vector<double> scale(x.cols(), 0.0);
  for (std::size_t r = 0; r < x.rows(); ++r) {
    for (std::size_t c = 0; c < x.cols(); ++c) {
      mean[c] += x(r, c);
    }
  }
  for (auto& m : mean) {
    m /= n;
  }
  for (std::size_t r = 0; r < x.rows(); ++r) {
    for (std::size_t c = 0; c < x.cols(); ++c) {
      const double dev = x(r, c) - mean[c];
      scale[c] += dev * dev;
    }
  }
  for (auto& s : scale) {
    s = std::sqrt(s / n);
    if (s == 0.0) {
      s = 1.0;
    }
  }
  return Standardizer(std::move(mean), std::move(scale));
}

Standardizer Standardizer::fit(const Dataset& d) {
  if (!d.encoded()) {
    throw DataError("standardization requires an encoded dataset");
  }
  return fit(d.features);
}

Matrix Standardizer::transform(const Matrix& x) const {
  if (x.cols() != mean_.size()) {
    throw ParameterError("standardizer fitted on " + std::to_string(mean_.size()) +
                         " features applied to " + std::to_string(x.cols()));
  }
  Matrix out = x;
  for (std::size_t r = 0; r < out.rows(); ++r) {
    auto row = out.row(r);
    for (std::size_t c = 0; c < row.size(); ++c) {
      row[c] = (row[c] - mean_[c]) / scale_[c];
    }
  }
  return out;
}

Dataset Standardizer::transform(const Dataset& d) const {
  if (!d.encoded()) {
    throw DataError("standardization requires an encoded dataset");
  }
  Dataset out = d;
  out.features = transform(d.features);
  return out;
}

std::string minority_class(const Dataset& d, const std::optional<std::string>& minority_label) {
  const auto classes = d.classes();
  if (classes.size() != 2) {
    throw DataError("expected exactly 2 classes, found " + std::to_string(classes.size()));
  }
  if (minority_label) {
    if (*minority_label != classes[0] && *minority_label != classes[1]) {
      throw ParameterError("label '" + *minority_label + "' does not occur in the dataset");
    }
    return *minority_label;
  }
  const auto c0 = d.count(classes[0]);
  const auto c1 = d.count(classes[1]);
  if (c0 == c1) {
    throw DataError("classes are equally frequent; specify the minority label explicitly");
  }
  return c0 < c1 ? classes[0] : classes[1];
}

std::vector<int> binary_labels(const Dataset& d, const std::string& minority_label) {
  std::vector<int> y(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    y[i] = d.labels[i] == minority_label ? 1 : 0;
  }
  return y;
}

BinaryTask split_binary(const Dataset& d, const std::optional<std::string>& minority_label) {
  if (!d.encoded()) {
    throw DataError("split_binary requires an encoded dataset");
  }
  validate(d);
  const auto minority = minority_class(d, minority_label);
  const auto classes = d.classes();
  const auto& majority = classes[0] == minority ? classes[1] : classes[0];
  const auto y = binary_labels(d, minority);
  std::vector<std::size_t> rows(d.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    rows[i] = i;
  }
  auto task = make_task(d.features, y, rows, majority, minority);
  validate(task);
  return task;
}

}  // namespace rbu
