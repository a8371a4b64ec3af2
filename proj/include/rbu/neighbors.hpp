#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "rbu/matrix.hpp"

namespace rbu {

inline constexpr std::size_t kNoExclusion = std::numeric_limits<std::size_t>::max();

// Minkowski distance raised to the p-th power (order preserving, cheaper than
// the distance itself). p = infinity gives the Chebyshev distance.
double minkowski_pow(std::span<const double> a, std::span<const double> b, double p);

// Brute-force k nearest rows of `points` to `query`, nearest first. Equal
// distances are ordered by row index. Row `exclude` is skipped. Returns fewer
// than k indices only when fewer rows are available.
std::vector<std::size_t> nearest_neighbors(const Matrix& points, std::span<const double> query,
                                           std::size_t k, std::size_t exclude = kNoExclusion,
                                           double p = 2.0);

// Distances (Minkowski-p, not raised) from `query` to its k nearest rows, in the
// same order as nearest_neighbors.
std::vector<double> nearest_distances(const Matrix& points, std::span<const double> query,
                                      std::size_t k, std::size_t exclude = kNoExclusion,
                                      double p = 2.0);

}  // namespace rbu
