#include <gtest/gtest.h>

#include <random>

#include "rbu/classifiers.hpp"
#include "rbu/error.hpp"
#include "support.hpp"

namespace rbu {
namespace {

TEST(Classifier, ParseNames) {
  EXPECT_EQ(parse_classifier("knn"), ClassifierKind::knn);
  EXPECT_EQ(parse_classifier("gnb"), ClassifierKind::gnb);
  EXPECT_EQ(parse_classifier("nb"), ClassifierKind::gnb);
  EXPECT_THROW(parse_classifier("svm"), ParameterError);
}

TEST(Knn, ScoreIsPositiveFractionOfNeighbours) {
  const Matrix x{{0}, {1}, {2}, {3}, {4}, {10}, {11}, {12}};
  const std::vector<int> y{1, 1, 0, 0, 0, 1, 1, 1};
  const KnnModel m = knn_fit(x, y, 5);
  EXPECT_DOUBLE_EQ(knn_score(m, std::vector<double>{0.5}), 0.4);
  EXPECT_DOUBLE_EQ(knn_score(m, std::vector<double>{10.5}), 0.6);
  EXPECT_FALSE(predict_positive(0.5));
  EXPECT_TRUE(predict_positive(0.6));
}

TEST(Knn, EqualDistancesPreferLowerIndex) {
  const Matrix x{{-1}, {1}};
  const KnnModel m = knn_fit(x, std::vector<int>{1, 0}, 1);
  EXPECT_DOUBLE_EQ(knn_score(m, std::vector<double>{0}), 1.0);
}

TEST(Knn, RejectsTooFewTrainingPoints) {
  EXPECT_THROW(knn_fit(Matrix{{0}, {1}}, std::vector<int>{0, 1}, 5), DataError);
  EXPECT_THROW(knn_fit(Matrix{}, std::vector<int>{}, 1), DataError);
}

TEST(Gnb, PosteriorOracle) {
  const Matrix x{{-1}, {1}, {0}, {2}};
  const std::vector<int> y{0, 0, 1, 1};
  const GnbModel m = gnb_fit(x, y);
  EXPECT_DOUBLE_EQ(m.epsilon, 1.25e-9);
  EXPECT_NEAR(gnb_score(m, std::vector<double>{0.25}), 0.43782349919111880, 1e-15);
}

TEST(Gnb, MidpointOfSymmetricClassesIsEven) {
  const Matrix x{{-2, 0}, {-1, 1}, {-3, -1}, {2, 0}, {1, 1}, {3, -1}};
  const std::vector<int> y{0, 0, 0, 1, 1, 1};
  const GnbModel m = gnb_fit(x, y);
  EXPECT_NEAR(gnb_score(m, std::vector<double>{0, 0}), 0.5, 1e-12);
  EXPECT_GT(gnb_score(m, std::vector<double>{1, 0}), 0.5);
}

TEST(Gnb, ConstantFeatureStaysFinite) {
  const Matrix x{{1, 0}, {1, 1}, {1, 5}, {1, 6}};
  const GnbModel m = gnb_fit(x, std::vector<int>{0, 0, 1, 1});
  const double s = gnb_score(m, std::vector<double>{1, 5.5});
  EXPECT_TRUE(std::isfinite(s));
  EXPECT_GT(s, 0.99);
}

TEST(Gnb, FarPointsDoNotUnderflowToNaN) {
  const Matrix x{{0}, {0.1}, {5}, {5.1}};
  const GnbModel m = gnb_fit(x, std::vector<int>{0, 0, 1, 1});
  EXPECT_DOUBLE_EQ(gnb_score(m, std::vector<double>{1e6}), 1.0);
  EXPECT_DOUBLE_EQ(gnb_score(m, std::vector<double>{-1e6}), 0.0);
}

TEST(Gnb, NeedsBothClasses) {
  EXPECT_THROW(gnb_fit(Matrix{{0}, {1}}, std::vector<int>{0, 0}), DataError);
}

TEST(TrainedModel, FitUsesMinorityAsPositive) {
  const BinaryTask t = testing::task_from(Matrix{{0}, {0.5}, {1}, {1.5}, {2}, {2.5}}, Matrix{{10}, {11}, {12}});
  for (auto kind : {ClassifierKind::knn, ClassifierKind::gnb}) {
    const TrainedModel m = fit(kind, t);
    const auto scores = score_rows(m, Matrix{{0.2}, {11.5}});
    EXPECT_LT(scores[0], 0.5);
    EXPECT_GT(scores[1], 0.5);
  }
}

TEST(ClassifierProperty, ScoresAreProbabilities) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    const BinaryTask t = testing::random_task(rng, 20, 8, 3);
    const Matrix probe = testing::random_matrix(rng, 10, 3, 0.0, 3.0);
    for (auto kind : {ClassifierKind::knn, ClassifierKind::gnb}) {
      for (double s : score_rows(fit(kind, t), probe)) {
        EXPECT_GE(s, 0.0);
        EXPECT_LE(s, 1.0);
      }
    }
  }
}

}  // namespace
}  // namespace rbu
