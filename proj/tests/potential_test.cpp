#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "rbu/error.hpp"
#include "rbu/potential.hpp"
#include "support.hpp"

namespace rbu {
namespace {

using testing::task_from;

TEST(RbfValue, DirectEvaluation) {
  EXPECT_DOUBLE_EQ(rbf_value(0.0, 0.3), 1.0);
  EXPECT_NEAR(rbf_value(1.0, 1.0), 0.36787944117144233, 1e-15);
  EXPECT_NEAR(rbf_value(2.0, 1.0), 0.018315638888734179, 1e-15);
  EXPECT_THROW(rbf_value(1.0, 0.0), ParameterError);
  EXPECT_THROW(rbf_value(1.0, -1.0), ParameterError);
}

TEST(MutualPotential, SingleSelfContribution) {
  const Matrix k{{0.5, -1.0}};
  const Matrix none(0, 2);
  EXPECT_DOUBLE_EQ(mutual_potential(k.row(0), k, none, 0.7), 1.0);
}

TEST(MutualPotential, CoincidentClassesCancel) {
  const Matrix p{{1.0, 2.0}};
  const std::vector<double> x{-3.0, 0.25};
  EXPECT_DOUBLE_EQ(mutual_potential(x, p, p, 0.5), 0.0);
}

TEST(MutualPotential, EquidistantTermsCancel) {
  const BinaryTask t = task_from(Matrix{{0, 0}, {1, 0}}, Matrix{{0, 1}});
  const std::vector<double> x{0, 0};
  EXPECT_NEAR(mutual_potential(x, t, 1.0), 1.0, 1e-15);
}

TEST(MutualPotential, HighPrecisionOracle) {
  // 40-digit evaluation of 2 e^{-1/16} - e^{-5/16}.
  const BinaryTask t = task_from(Matrix{{0, 0}, {1, 0}}, Matrix{{0, 1}});
  const std::vector<double> x{0.5, 0};
  EXPECT_NEAR(mutual_potential(x, t, 2.0), 1.1472104966803098, 1e-14);
}

TEST(MutualPotential, DimensionMismatch) {
  const BinaryTask t = task_from(Matrix{{0, 0}}, Matrix{{0, 1}});
  const std::vector<double> x{0.5};
  EXPECT_THROW(mutual_potential(x, t, 1.0), ParameterError);
}

TEST(InitField, SinglePointWithoutMinority) {
  BinaryTask t = task_from(Matrix{{3.0}}, Matrix(0, 1));
  const PotentialField f(t, 1.0);
  ASSERT_EQ(f.size(), 1u);
  EXPECT_DOUBLE_EQ(f.potentials()[0], 1.0);
}

TEST(InitField, BruteForceOracle) {
  const BinaryTask t = task_from(Matrix{{0, 0}, {0.1, 0}, {2, 0}}, Matrix{{2.1, 0}});
  const PotentialField f = init_field(t, 1.0);
  ASSERT_EQ(f.size(), 3u);
  EXPECT_NEAR(f.potentials()[0], 1.9962102943079873, 1e-14);
  EXPECT_NEAR(f.potentials()[1], 1.9987860417267843, 1e-14);
  EXPECT_NEAR(f.potentials()[2], 0.055317652005916556, 1e-14);
}

TEST(InitFieldProperty, Bounds) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const BinaryTask t = testing::random_sized_task(rng, 40, 15, 4);
    const double gamma = std::pow(10.0, static_cast<double>(rng() % 5) - 2.0);
    const PotentialField f(t, gamma);
    for (double phi : f.potentials()) {
      EXPECT_GE(phi, 1.0 - static_cast<double>(t.n_minority()) - 1e-12);
      EXPECT_LE(phi, static_cast<double>(t.n_majority()) + 1e-12);
    }
  }
}

TEST(PopMax, PicksTheMaximum) {
  PotentialField f(Matrix{{0}, {1}, {2}}, {0.2, 0.9, 0.5}, 1.0);
  const auto r = f.pop_max();
  EXPECT_EQ(r.index, 1u);
  EXPECT_DOUBLE_EQ(r.potential, 0.9);
  EXPECT_EQ(f.size(), 2u);
  EXPECT_EQ(f.removed_count(), 1u);
  EXPECT_EQ(std::vector<std::size_t>(f.indices().begin(), f.indices().end()), (std::vector<std::size_t>{0, 2}));
}

TEST(PopMax, TiesGoToTheLowestIndex) {
  PotentialField f(Matrix{{0}, {1}}, {0.7, 0.7}, 1.0);
  EXPECT_EQ(f.pop_max().index, 0u);
}

TEST(PopMax, SeededRandomTiesAreReproducible) {
  auto run = [](std::uint64_t seed) {
    PotentialField f(Matrix{{0}, {1}, {2}, {3}}, {0.7, 0.7, 0.7, 0.7}, 1.0);
    TieBreaker ties(TieRule::seeded_random, seed);
    std::vector<std::size_t> order;
    while (!f.empty()) {
      order.push_back(f.pop_max(ties).index);
    }
    return order;
  };
  EXPECT_EQ(run(3), run(3));
  bool differs = false;
  for (std::uint64_t s = 0; s < 20 && !differs; ++s) {
    differs = run(s) != std::vector<std::size_t>{0, 1, 2, 3};
  }
  EXPECT_TRUE(differs);
}

TEST(PopMax, SingleElementThenEmpty) {
  PotentialField f(Matrix{{4}}, {-2.0}, 1.0);
  EXPECT_EQ(f.pop_max().index, 0u);
  EXPECT_TRUE(f.empty());
  EXPECT_THROW(f.pop_max(), DataError);
}

TEST(SubtractContribution, CoincidentPointLosesOne) {
  PotentialField f(Matrix{{1, 1}}, {3.0}, 0.5);
  const std::vector<double> removed{1, 1};
  f.subtract_contribution(removed);
  EXPECT_DOUBLE_EQ(f.potentials()[0], 2.0);
}

TEST(SubtractContribution, DistantPointBarelyChanges) {
  PotentialField f(Matrix{{0, 0}}, {3.0}, 1.0);
  const std::vector<double> removed{1e6, 0};
  f.subtract_contribution(removed);
  EXPECT_DOUBLE_EQ(f.potentials()[0], 3.0);
}

TEST(SubtractContribution, DimensionMismatch) {
  PotentialField f(Matrix{{0, 0}}, {3.0}, 1.0);
  const std::vector<double> removed{1};
  EXPECT_THROW(f.subtract_contribution(removed), ParameterError);
}

// Invariants of the mutual potential on random instances.
TEST(PotentialProperty, ClassSwapAntisymmetry) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const BinaryTask t = testing::random_sized_task(rng, 30, 30, 5);
    const Matrix x = testing::random_matrix(rng, 1, t.dim());
    const double gamma = std::pow(10.0, static_cast<double>(rng() % 4) - 2.0);
    EXPECT_EQ(mutual_potential(x.row(0), t.majority, t.minority, gamma),
              -mutual_potential(x.row(0), t.minority, t.majority, gamma));
  }
}

TEST(PotentialProperty, TranslationInvariance) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    BinaryTask t = testing::random_sized_task(rng, 30, 30, 5);
    Matrix x = testing::random_matrix(rng, 1, t.dim());
    const double gamma = std::pow(10.0, static_cast<double>(rng() % 3) - 1.0);
    const double before = mutual_potential(x.row(0), t, gamma);
    const Matrix shift = testing::random_matrix(rng, 1, t.dim(), 0.0, 3.0);
    for (Matrix* m : {&t.majority, &t.minority, &x}) {
      for (std::size_t i = 0; i < m->rows(); ++i) {
        for (std::size_t j = 0; j < m->cols(); ++j) {
          (*m)(i, j) += shift(0, j);
        }
      }
    }
    EXPECT_NEAR(mutual_potential(x.row(0), t, gamma), before, 1e-12);
  }
}

TEST(PotentialProperty, RbfIncreasesWithGamma) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.01, 5.0);
  std::uniform_real_distribution<double> spread(0.5, 5.0);
  for (int trial = 0; trial < 500; ++trial) {
    const double d = u(rng);
    const double g1 = spread(rng);
    const double g2 = g1 * (1.0 + u(rng));
    EXPECT_LT(rbf_value(d, g1), rbf_value(d, g2));
  }
}

TEST(PotentialProperty, IncrementalMatchesFreshField) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    const BinaryTask t = testing::random_sized_task(rng, 150, 50, 10);
    const double gamma = std::pow(10.0, static_cast<double>(rng() % 4) - 2.0);
    PotentialField field(t, gamma);
    const std::size_t k = rng() % (t.n_majority() + 1);
    std::vector<std::size_t> removed;
    for (std::size_t s = 0; s < k && !field.empty(); ++s) {
      const auto r = field.pop_max();
      removed.push_back(r.index);
      field.subtract_contribution(field.point(r.index));
    }
    std::vector<std::size_t> kept(field.indices().begin(), field.indices().end());
    const BinaryTask reduced = keep_majority(t, kept);
    const PotentialField fresh(reduced, gamma);
    ASSERT_EQ(fresh.size(), field.size());
    for (std::size_t i = 0; i < fresh.size(); ++i) {
      EXPECT_NEAR(field.potentials()[i], fresh.potentials()[i], 1e-9);
    }
  }
}

TEST(PotentialGrid, PeakAtTheLonePoint) {
  const BinaryTask t = task_from(Matrix{{0.5, 0.5}}, Matrix(0, 2));
  const PotentialGrid g = potential_grid(t, 0.2, GridBounds{0, 1, 0, 1}, 5);
  ASSERT_EQ(g.values.size(), 25u);
  const auto top = std::max_element(g.values.begin(), g.values.end()) - g.values.begin();
  EXPECT_EQ(top, 12);
  EXPECT_DOUBLE_EQ(g.at(2, 2), 1.0);
}

TEST(PotentialGrid, MirrorPairIsAntisymmetric) {
  const BinaryTask t = task_from(Matrix{{-1, 0}}, Matrix{{1, 0}});
  const PotentialGrid g = potential_grid(t, 0.8, GridBounds{-2, 2, -1, 1}, 8);
  for (std::size_t iy = 0; iy < 8; ++iy) {
    for (std::size_t ix = 0; ix < 8; ++ix) {
      EXPECT_NEAR(g.at(ix, iy), -g.at(7 - ix, iy), 1e-12);
    }
  }
}

TEST(PotentialGrid, TwoByTwoMatchesDirectCalls) {
  const BinaryTask t = task_from(Matrix{{0, 0}, {1, 1}}, Matrix{{0, 1}});
  const PotentialGrid g = potential_grid(t, 0.5, GridBounds{0, 2, 0, 4}, 2);
  const double xs[] = {0.5, 1.5};
  const double ys[] = {1.0, 3.0};
  for (std::size_t iy = 0; iy < 2; ++iy) {
    for (std::size_t ix = 0; ix < 2; ++ix) {
      const std::vector<double> x{xs[ix], ys[iy]};
      EXPECT_DOUBLE_EQ(g.at(ix, iy), mutual_potential(x, t, 0.5));
      EXPECT_DOUBLE_EQ(g.x_center(ix), xs[ix]);
      EXPECT_DOUBLE_EQ(g.y_center(iy), ys[iy]);
    }
  }
}

TEST(PotentialGrid, RejectsBadShapes) {
  const BinaryTask t3 = task_from(Matrix{{0, 0, 0}}, Matrix{{1, 1, 1}});
  EXPECT_THROW(potential_grid(t3, 1.0, GridBounds{}, 4), ParameterError);
  const BinaryTask t2 = task_from(Matrix{{0, 0}}, Matrix{{1, 1}});
  EXPECT_THROW(potential_grid(t2, 1.0, GridBounds{}, 1), ParameterError);
}

TEST(PotentialGrid, Serialization) {
  const BinaryTask t = task_from(Matrix{{0, 0}}, Matrix{{1, 1}});
  const PotentialGrid g = potential_grid(t, 1.0, bounding_box(t), 3);
  std::ostringstream csv;
  write_grid_csv(csv, g);
  std::string line;
  std::istringstream in(csv.str());
  std::getline(in, line);
  EXPECT_EQ(line, "x,y,phi");
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++rows;
  }
  EXPECT_EQ(rows, 9u);
  const auto j = grid_to_json(g);
  EXPECT_EQ(j["resolution"], 3);
  EXPECT_EQ(j["values"].size(), 3u);
  EXPECT_EQ(j["values"][0].size(), 3u);
  EXPECT_DOUBLE_EQ(j["bounds"][0][0].get<double>(), -0.1);
}

}  // namespace
}  // namespace rbu
