#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "rbu/matrix.hpp"
#include "rbu/task.hpp"

namespace rbu {

// Labels are 1 for the minority (positive) class and 0 for the majority.
// Every score is the positive-class score; a point is predicted positive iff
// its score exceeds 0.5.

enum class ClassifierKind { knn, gnb };

std::string_view to_string(ClassifierKind kind);
// "knn", "gnb" or "nb".
ClassifierKind parse_classifier(std::string_view name);

struct KnnModel {
  Matrix x;
  std::vector<int> y;
  std::size_t k = 5;
};

KnnModel knn_fit(const Matrix& x, std::span<const int> y, std::size_t k = 5);
// Fraction of the k nearest training points (Euclidean, lower index first on
// equal distance) that are positive.
double knn_score(const KnnModel& model, std::span<const double> x);

struct GnbModel {
  std::array<double, 2> log_prior{};
  // Row c holds the per-feature mean / variance of class c.
  Matrix mean;
  Matrix variance;
  // Smoothing added to every variance: 1e-9 times the largest feature variance.
  double epsilon = 0.0;
};

GnbModel gnb_fit(const Matrix& x, std::span<const int> y);
// Posterior probability of the positive class.
double gnb_score(const GnbModel& model, std::span<const double> x);

using TrainedModel = std::variant<KnnModel, GnbModel>;

TrainedModel fit(ClassifierKind kind, const BinaryTask& train);
double score(const TrainedModel& model, std::span<const double> x);
std::vector<double> score_rows(const TrainedModel& model, const Matrix& x);

inline bool predict_positive(double score) { return score > 0.5; }

}  // namespace rbu
