#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "rbu/error.hpp"
#include "rbu/neighbors.hpp"

namespace rbu {
namespace {

TEST(Minkowski, PowersAndChebyshev) {
  const std::vector<double> a{0, 0};
  const std::vector<double> b{3, 4};
  EXPECT_DOUBLE_EQ(minkowski_pow(a, b, 2.0), 25.0);
  EXPECT_DOUBLE_EQ(minkowski_pow(a, b, 1.0), 7.0);
  EXPECT_DOUBLE_EQ(minkowski_pow(a, b, std::numeric_limits<double>::infinity()), 4.0);
  EXPECT_THROW(minkowski_pow(a, b, 0.5), ParameterError);
}

TEST(NearestNeighbors, OrderedByDistanceThenIndex) {
  const Matrix pts{{0}, {2}, {-2}, {1}, {5}};
  const std::vector<double> q{0};
  EXPECT_EQ(nearest_neighbors(pts, q, 3), (std::vector<std::size_t>{0, 3, 1}));
  EXPECT_EQ(nearest_neighbors(pts, q, 3, 0), (std::vector<std::size_t>{3, 1, 2}));
}

TEST(NearestNeighbors, FewerRowsThanK) {
  const Matrix pts{{0}, {1}};
  const std::vector<double> q{0};
  EXPECT_EQ(nearest_neighbors(pts, q, 5, 0).size(), 1u);
}

TEST(NearestDistances, MatchNeighbourOrder) {
  const Matrix pts{{0, 0}, {3, 4}, {1, 0}};
  const std::vector<double> q{0, 0};
  const auto d = nearest_distances(pts, q, 2, 0);
  EXPECT_DOUBLE_EQ(d[0], 1.0);
  EXPECT_DOUBLE_EQ(d[1], 5.0);
}

}  // namespace
}  // namespace rbu
