#include "rbu/undersampling.hpp"

#include <algorithm>

#include "rbu/error.hpp"

namespace rbu {

RbuResult rbu_undersample(const BinaryTask& task, const RbuParams& params) {
  check_gamma(params.gamma);
  if (!(params.ratio >= 0.0 && params.ratio <= 1.0)) {
    throw ParameterError("RBU ratio must lie in [0, 1]");
  }
  validate(task);

  const std::size_t target = balancing_count(params.ratio, task.n_majority(), task.n_minority());
  RbuResult result;
  if (target == 0) {
    result.kept.resize(task.n_majority());
    for (std::size_t i = 0; i < result.kept.size(); ++i) {
      result.kept[i] = i;
    }
    return result;
  }

  PotentialField field(task, params.gamma);
  TieBreaker ties(params.tie_rule, params.seed);
  result.removed.reserve(target);
  result.removed_potential.reserve(target);
  while (result.removed.size() < target) {
    const auto removal = field.pop_max(ties);
    result.removed.push_back(removal.index);
    result.removed_potential.push_back(removal.potential);
    field.subtract_contribution(task.majority.row(removal.index));
  }
  result.kept.assign(field.indices().begin(), field.indices().end());
  return result;
}

BinaryTask rbu(const BinaryTask& task, const RbuParams& params) {
  const auto result = rbu_undersample(task, params);
  return keep_majority(task, result.kept);
}

}  // namespace rbu
