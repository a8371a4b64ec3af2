#pragma once

#include <array>
#include <cstddef>
#include <string_view>
#include <vector>

#include "rbu/task.hpp"

namespace rbu {

enum class MinorityType { safe, borderline, rare, outlier };

std::string_view to_string(MinorityType t);

// Category for `same_class` minority points among k neighbours. For k = 5:
// 4-5 safe, 2-3 borderline, 1 rare, 0 outlier; other k scale the thresholds
// by the same fractions (4/5 and 2/5 of k).
MinorityType classify_count(std::size_t same_class, std::size_t k);

struct MinorityTypeReport {
  std::vector<MinorityType> types;   // one per minority point, in task order
  std::vector<std::size_t> same_class;
  std::array<double, 4> proportions{};  // percentages: safe, borderline, rare, outlier
  std::size_t k = 5;
  double p = 2.0;
};

// Types every minority point by its k nearest neighbours among all other
// points of the task (Minkowski-p, equal distances by stacked index).
MinorityTypeReport categorize_minority(const BinaryTask& task, std::size_t k = 5, double p = 2.0);

}  // namespace rbu
