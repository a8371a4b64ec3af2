#include "rbu/typing.hpp"

#include <string>

#include "rbu/error.hpp"
#include "rbu/neighbors.hpp"

namespace rbu {

std::string_view to_string(MinorityType t) {
  switch (t) {
    case MinorityType::safe:
      return "safe";
    case MinorityType::borderline:
      return "borderline";
    case MinorityType::rare:
      return "rare";
    case MinorityType::outlier:
      return "outlier";
  }
  return "unknown";
}

MinorityType classify_count(std::size_t same_class, std::size_t k) {
  if (5 * same_class >= 4 * k) {
    return MinorityType::safe;
  }
  if (5 * same_class >= 2 * k) {
    return MinorityType::borderline;
  }
  if (same_class >= 1) {
    return MinorityType::rare;
  }
  return MinorityType::outlier;
}

MinorityTypeReport categorize_minority(const BinaryTask& task, std::size_t k, double p) {
  if (k < 1) {
    throw ParameterError("neighbourhood size k must be at least 1");
  }
  if (task.size() < k + 1) {
    throw DataError("typing with k = " + std::to_string(k) + " needs at least " + std::to_string(k + 1) +
                    " points");
  }
  const Matrix all = task.stacked();
  const std::size_t offset = task.n_majority();

  MinorityTypeReport report;
  report.k = k;
  report.p = p;
  std::array<std::size_t, 4> counts{};
  for (std::size_t j = 0; j < task.n_minority(); ++j) {
    const std::size_t self = offset + j;
    std::size_t same = 0;
    for (std::size_t idx : nearest_neighbors(all, all.row(self), k, self, p)) {
      same += idx >= offset ? 1 : 0;
    }
    const MinorityType t = classify_count(same, k);
    report.types.push_back(t);
    report.same_class.push_back(same);
    ++counts[static_cast<std::size_t>(t)];
  }
  const double n = static_cast<double>(task.n_minority());
  for (std::size_t c = 0; c < 4; ++c) {
    report.proportions[c] = n > 0 ? 100.0 * static_cast<double>(counts[c]) / n : 0.0;
  }
  return report;
}

}  // namespace rbu
