#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rbu/potential.hpp"
#include "rbu/task.hpp"

namespace rbu {

struct RbuParams {
  double gamma = 0.1;
  // Fraction of the majority excess |K| - |kappa| to remove; 1 balances the classes.
  double ratio = 1.0;
  TieRule tie_rule = TieRule::lowest_index;
  std::uint64_t seed = 0;
};

struct RbuResult {
  // Surviving majority rows, in their original relative order.
  std::vector<std::size_t> kept;
  // Removed majority rows, in removal order.
  std::vector<std::size_t> removed;
  // Potential of each removed point at the moment it was selected.
  std::vector<double> removed_potential;
};

// Radial-Based Undersampling. Ranks majority points by mutual class potential,
// repeatedly discards the current maximum and subtracts its RBF from the
// remaining potentials until balancing_count(ratio, |K|, |kappa|) points are
// gone. The minority set is never modified, so its contribution is computed
// once, in the initial field.
RbuResult rbu_undersample(const BinaryTask& task, const RbuParams& params);

// Task with the RBU-selected majority rows removed.
BinaryTask rbu(const BinaryTask& task, const RbuParams& params);

}  // namespace rbu
