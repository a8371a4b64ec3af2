#include "rbu/dataset.hpp"

#include <algorithm>
#include <cmath>

#include "rbu/error.hpp"

namespace rbu {

bool Dataset::encoded() const {
  return std::all_of(feature_meta.begin(), feature_meta.end(),
                     [](const FeatureMeta& f) { return f.encoded(); });
}

std::vector<std::string> Dataset::classes() const {
  std::vector<std::string> out;
  for (const auto& label : labels) {
    if (std::find(out.begin(), out.end(), label) == out.end()) {
      out.push_back(label);
    }
  }
  return out;
}

std::size_t Dataset::count(const std::string& label) const {
  return static_cast<std::size_t>(std::count(labels.begin(), labels.end(), label));
}

void validate(const Dataset& d) {
  if (d.features.rows() != d.labels.size()) {
    throw DataError("feature matrix has " + std::to_string(d.features.rows()) + " rows but there are " +
                    std::to_string(d.labels.size()) + " labels");
  }
  if (d.features.cols() != d.feature_meta.size() && d.features.rows() > 0) {
    throw DataError("feature matrix width does not match feature metadata");
  }
  if (!d.encoded()) {
    return;
  }
  for (double v : d.features.data()) {
    if (!std::isfinite(v)) {
      throw DataError("dataset '" + d.name + "' contains a non-finite value");
    }
  }
}

}  // namespace rbu
