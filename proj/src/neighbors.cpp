#include "rbu/neighbors.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "rbu/error.hpp"

namespace rbu {
namespace {

std::vector<std::pair<double, std::size_t>> ranked(const Matrix& points, std::span<const double> query,
                                                   std::size_t k, std::size_t exclude, double p) {
  if (!points.empty() && query.size() != points.cols()) {
    throw ParameterError("query has dimension " + std::to_string(query.size()) + ", points have " +
                         std::to_string(points.cols()));
  }
  std::vector<std::pair<double, std::size_t>> cand;
  cand.reserve(points.rows());
  for (std::size_t i = 0; i < points.rows(); ++i) {
    if (i != exclude) {
      cand.emplace_back(minkowski_pow(points.row(i), query, p), i);
    }
  }
  const auto take = std::min(k, cand.size());
  std::partial_sort(cand.begin(), cand.begin() + static_cast<std::ptrdiff_t>(take), cand.end());
  cand.resize(take);
  return cand;
}

}  // namespace

double minkowski_pow(std::span<const double> a, std::span<const double> b, double p) {
  if (!(p >= 1.0)) {
    throw ParameterError("Minkowski exponent must be >= 1");
  }
  double acc = 0.0;
  if (std::isinf(p)) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      acc = std::max(acc, std::abs(a[i] - b[i]));
    }
    return acc;
  }
  if (p == 2.0) {
    return squared_euclidean(a, b);
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    acc += p == 1.0 ? std::abs(a[i] - b[i]) : std::pow(std::abs(a[i] - b[i]), p);
  }
  return acc;
}

std::vector<std::size_t> nearest_neighbors(const Matrix& points, std::span<const double> query,
                                           std::size_t k, std::size_t exclude, double p) {
  const auto cand = ranked(points, query, k, exclude, p);
  std::vector<std::size_t> out(cand.size());
  for (std::size_t i = 0; i < cand.size(); ++i) {
    out[i] = cand[i].second;
  }
  return out;
}

std::vector<double> nearest_distances(const Matrix& points, std::span<const double> query,
                                      std::size_t k, std::size_t exclude, double p) {
  const auto cand = ranked(points, query, k, exclude, p);
  std::vector<double> out(cand.size());
  for (std::size_t i = 0; i < cand.size(); ++i) {
    const double v = cand[i].first;
    out[i] = std::isinf(p) || p == 1.0 ? v : std::pow(v, 1.0 / p);
  }
  return out;
}

}  // namespace rbu
