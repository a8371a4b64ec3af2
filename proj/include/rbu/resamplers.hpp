#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "rbu/task.hpp"

namespace rbu {

// Undersamplers return the task with a subset of the majority rows (relative
// order preserved) and the minority untouched. Oversamplers append rows to the
// minority and leave the majority untouched. Neighbourhoods are brute-force
// Euclidean over BinaryTask::stacked(), equal distances ordered by index.

// Removes balancing_count(ratio) majority rows drawn uniformly without replacement.
BinaryTask rus(const BinaryTask& task, double ratio, std::uint64_t seed);

// Appends balancing_count(ratio) copies of minority rows drawn with replacement.
// Copies keep the source row of the point they duplicate.
BinaryTask ros(const BinaryTask& task, double ratio, std::uint64_t seed);

// SMOTE: each synthetic point is x + u * (nn - x), x a uniformly drawn minority
// point, nn one of its k nearest minority neighbours (k capped at |kappa| - 1),
// u ~ U[0, 1). Requires at least two minority points.
BinaryTask smote(const BinaryTask& task, std::size_t k, double ratio, std::uint64_t seed);

// Majority rows (stacked indices) whose k nearest other points hold a strict
// minority-class majority. Decisions are taken on the frozen input.
std::vector<std::size_t> enn_removals(const BinaryTask& task, std::size_t k);

// Edited Nearest Neighbours, one-sided: drops the majority rows from enn_removals.
BinaryTask enn(const BinaryTask& task, std::size_t k);

// ENN repeated until a pass removes nothing, at most `max_passes` passes. Stops
// early once fewer than k + 1 points remain.
BinaryTask renn(const BinaryTask& task, std::size_t k, std::size_t max_passes = 100);

// Cross-class mutual nearest-neighbour pairs as (majority row, minority row).
std::vector<std::pair<std::size_t, std::size_t>> tomek_links(const BinaryTask& task);

// Removes the majority member of every Tomek link, links found on the input.
BinaryTask tomek(const BinaryTask& task);

// NearMiss-1: keeps the |K| - balancing_count(ratio) majority rows with the
// smallest mean distance to their k nearest minority points (k capped at
// |kappa|); equal means keep the lower index. Requires ratio in (0, 1].
BinaryTask near_miss(const BinaryTask& task, std::size_t k, double ratio);

// Mean distance from each majority row to its k nearest minority rows.
std::vector<double> near_miss_scores(const BinaryTask& task, std::size_t k);

}  // namespace rbu
