#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rbu/matrix.hpp"

namespace rbu {

enum class FeatureKind { numeric, categorical };

struct FeatureMeta {
  std::string name;
  FeatureKind kind = FeatureKind::numeric;
  // Category dictionary, code -> category string, filled by encode_categoricals.
  std::vector<std::string> categories;
  // Cell strings of a categorical feature that has not been encoded yet.
  std::vector<std::string> raw;

  bool encoded() const { return kind == FeatureKind::numeric || raw.empty(); }
};

// A labelled table. Numeric cells live in `features`; cells of categorical
// features stay NaN until encode_categoricals replaces them by integer codes.
struct Dataset {
  std::string name;
  std::vector<FeatureMeta> feature_meta;
  Matrix features;
  std::vector<std::string> labels;
  std::string label_name = "class";

  std::size_t size() const { return labels.size(); }
  std::size_t num_features() const { return feature_meta.size(); }
  bool encoded() const;

  // Distinct labels in first-occurrence order.
  std::vector<std::string> classes() const;
  std::size_t count(const std::string& label) const;
};

// Checks row/label counts and, for encoded datasets, that every cell is finite.
void validate(const Dataset& d);

}  // namespace rbu
