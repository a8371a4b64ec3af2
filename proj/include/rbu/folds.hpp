#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace rbu {

struct Fold {
  std::vector<std::size_t> train;  // ascending row indices
  std::vector<std::size_t> test;
};

// repeats x 2 cross-validation: each repeat is a seeded stratified 50/50
// split whose halves serve once as training and once as test data. Folds
// 2r and 2r + 1 belong to repeat r.
struct FoldPlan {
  std::size_t repeats = 0;
  std::uint64_t seed = 0;
  std::vector<Fold> folds;
};

// Requires every class to have at least 2 * repeats members.
FoldPlan make_folds(std::span<const int> labels, std::size_t repeats, std::uint64_t seed);

}  // namespace rbu
