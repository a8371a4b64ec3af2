#include "rbu/stats.hpp"

#include "rbu/preprocess.hpp"
#include "rbu/typing.hpp"

namespace rbu {

DatasetStats dataset_stats(const Dataset& d, const std::optional<std::string>& minority_label) {
  const Dataset encoded = encode_categoricals(d);
  const Dataset scaled = Standardizer::fit(encoded).transform(encoded);
  const BinaryTask task = split_binary(scaled, minority_label);

  DatasetStats s;
  s.name = d.name;
  s.samples = d.size();
  s.features = d.num_features();
  s.n_majority = task.n_majority();
  s.n_minority = task.n_minority();
  s.ir = task.imbalance_ratio();
  s.type_proportions = categorize_minority(task).proportions;
  return s;
}

}  // namespace rbu
