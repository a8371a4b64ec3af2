#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rbu/dataset.hpp"
#include "rbu/task.hpp"

namespace rbu {

// Replaces each categorical feature by integer codes assigned in order of first
// occurrence. Numeric features are untouched; the category dictionary is kept
// in FeatureMeta::categories.
Dataset encode_categoricals(const Dataset& d);

// Per-feature (x - mean) / std with the population standard deviation.
// Constant features are shifted by their mean and left unscaled.
class Standardizer {
 public:
  Standardizer() = default;
  Standardizer(std::vector<double> mean, std::vector<double> scale);

  static Standardizer fit(const Matrix& x);
  static Standardizer fit(const Dataset& d);

  Matrix transform(const Matrix& x) const;
  Dataset transform(const Dataset& d) const;

  const std::vector<double>& mean() const { return mean_; }
  // Divisor per feature: the standard deviation, or 1 for constant features.
  const std::vector<double>& scale() const { return scale_; }

 private:
  std::vector<double> mean_;
  std::vector<double> scale_;
};

inline Standardizer fit_standardizer(const Dataset& d) { return Standardizer::fit(d); }
inline Dataset apply_standardizer(const Standardizer& s, const Dataset& d) { return s.transform(d); }

// Binary task view of an encoded two-class dataset. Without a label the less
// frequent class becomes the minority; equal class counts are rejected.
BinaryTask split_binary(const Dataset& d, const std::optional<std::string>& minority_label = std::nullopt);

// 1 for rows carrying `minority_label`, 0 otherwise.
std::vector<int> binary_labels(const Dataset& d, const std::string& minority_label);

// The label split_binary(d) would choose as the minority.
std::string minority_class(const Dataset& d, const std::optional<std::string>& minority_label = std::nullopt);

}  // namespace rbu
