#include "rbu/folds.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <string>

#include "rbu/error.hpp"
#include "rbu/seeding.hpp"

namespace rbu {

FoldPlan make_folds(std::span<const int> labels, std::size_t repeats, std::uint64_t seed) {
  if (repeats < 1) {
    throw ParameterError("cross-validation needs at least one repeat");
  }
  std::map<int, std::vector<std::size_t>> by_class;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    by_class[labels[i]].push_back(i);
  }
  if (by_class.size() < 2) {
    throw DataError("cross-validation needs at least two classes");
  }
  for (const auto& [label, rows] : by_class) {
    if (rows.size() < 2 * repeats) {
      throw DataError("class " + std::to_string(label) + " has " + std::to_string(rows.size()) +
                      " members; " + std::to_string(repeats) + "x2 cross-validation needs " +
                      std::to_string(2 * repeats));
    }
  }

  FoldPlan plan;
  plan.repeats = repeats;
  plan.seed = seed;
  for (std::size_t r = 0; r < repeats; ++r) {
    std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(r)));
    std::vector<std::size_t> a;
    std::vector<std::size_t> b;
    // Dealing alternately over the concatenated shuffled classes keeps every
    // class within one of an even split and the halves within one in size.
    std::size_t turn = 0;
    for (const auto& [label, rows] : by_class) {
      std::vector<std::size_t> shuffled = rows;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      for (std::size_t idx : shuffled) {
        (turn++ % 2 == 0 ? a : b).push_back(idx);
      }
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    plan.folds.push_back(Fold{a, b});
    plan.folds.push_back(Fold{b, a});
  }
  return plan;
}

}  // namespace rbu
