#include "rbu/classifiers.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "rbu/error.hpp"
#include "rbu/neighbors.hpp"

namespace rbu {

std::string_view to_string(ClassifierKind kind) {
  return kind == ClassifierKind::knn ? "knn" : "gnb";
}

ClassifierKind parse_classifier(std::string_view name) {
  if (name == "knn") {
    return ClassifierKind::knn;
  }
  if (name == "gnb" || name == "nb") {
    return ClassifierKind::gnb;
  }
  throw ParameterError("unknown classifier '" + std::string(name) + "'");
}

KnnModel knn_fit(const Matrix& x, std::span<const int> y, std::size_t k) {
  if (x.rows() != y.size()) {
    throw ParameterError("label count does not match training rows");
  }
  if (x.empty()) {
    throw DataError("cannot fit KNN on an empty training set");
  }
  if (k < 1) {
    throw ParameterError("KNN needs k >= 1");
  }
  if (k > x.rows()) {
    throw DataError("KNN with k = " + std::to_string(k) + " needs at least " + std::to_string(k) +
                    " training points");
  }
  return KnnModel{x, std::vector<int>(y.begin(), y.end()), k};
}

double knn_score(const KnnModel& model, std::span<const double> x) {
  const auto nn = nearest_neighbors(model.x, x, model.k);
  std::size_t positive = 0;
  for (std::size_t i : nn) {
    positive += model.y[i] == 1 ? 1 : 0;
  }
  return static_cast<double>(positive) / static_cast<double>(nn.size());
}

GnbModel gnb_fit(const Matrix& x, std::span<const int> y) {
  if (x.rows() != y.size()) {
    throw ParameterError("label count does not match training rows");
  }
  const std::size_t m = x.cols();
  std::array<std::size_t, 2> count{};
  for (int label : y) {
    ++count[label == 1 ? 1 : 0];
  }
  if (count[0] == 0 || count[1] == 0) {
    throw DataError("naive Bayes needs both classes in the training data");
  }

  GnbModel model;
  model.mean = Matrix(2, m);
  model.variance = Matrix(2, m);
  for (std::size_t i = 0; i < x.rows(); ++i) {
    const std::size_t c = y[i] == 1 ? 1 : 0;
    for (std::size_t f = 0; f < m; ++f) {
      model.mean(c, f) += x(i, f);
    }
  }
  for (std::size_t c = 0; c < 2; ++c) {
    for (std::size_t f = 0; f < m; ++f) {
      model.mean(c, f) /= static_cast<double>(count[c]);
    }
  }
  for (std::size_t i = 0; i < x.rows(); ++i) {
    const std::size_t c = y[i] == 1 ? 1 : 0;
    for (std::size_t f = 0; f < m; ++f) {
      const double d = x(i, f) - model.mean(c, f);
      model.variance(c, f) += d * d;
    }
  }

  double max_variance = 0.0;
  for (std::size_t f = 0; f < m; ++f) {
    double mean = 0.0;
    for (std::size_t i = 0; i < x.rows(); ++i) {
      mean += x(i, f);
    }
    mean /= static_cast<double>(x.rows());
    double var = 0.0;
    for (std::size_t i = 0; i < x.rows(); ++i) {
      var += (x(i, f) - mean) * (x(i, f) - mean);
    }
    max_variance = std::max(max_variance, var / static_cast<double>(x.rows()));
  }
  model.epsilon = max_variance > 0.0 ? 1e-9 * max_variance : 1e-9;

  for (std::size_t c = 0; c < 2; ++c) {
    for (std::size_t f = 0; f < m; ++f) {
      model.variance(c, f) = model.variance(c, f) / static_cast<double>(count[c]) + model.epsilon;
    }
    model.log_prior[c] = std::log(static_cast<double>(count[c]) / static_cast<double>(x.rows()));
  }
  return model;
}

double gnb_score(const GnbModel& model, std::span<const double> x) {
  if (x.size() != model.mean.cols()) {
    throw ParameterError("query dimension does not match the model");
  }
  std::array<double, 2> joint{};
  for (std::size_t c = 0; c < 2; ++c) {
    double ll = model.log_prior[c];
    for (std::size_t f = 0; f < x.size(); ++f) {
      const double var = model.variance(c, f);
      const double d = x[f] - model.mean(c, f);
      ll -= 0.5 * std::log(2.0 * std::numbers::pi * var) + 0.5 * d * d / var;
    }
    joint[c] = ll;
  }
  const double top = std::max(joint[0], joint[1]);
  const double norm = top + std::log(std::exp(joint[0] - top) + std::exp(joint[1] - top));
  return std::exp(joint[1] - norm);
}

TrainedModel fit(ClassifierKind kind, const BinaryTask& train) {
  const Matrix x = train.stacked();
  const std::vector<int> y = train.stacked_labels();
  if (kind == ClassifierKind::knn) {
    return knn_fit(x, y);
  }
  return gnb_fit(x, y);
}

double score(const TrainedModel& model, std::span<const double> x) {
  if (const auto* knn = std::get_if<KnnModel>(&model)) {
    return knn_score(*knn, x);
  }
  return gnb_score(std::get<GnbModel>(model), x);
}

std::vector<double> score_rows(const TrainedModel& model, const Matrix& x) {
  std::vector<double> out;
  out.reserve(x.rows());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    out.push_back(score(model, x.row(i)));
  }
  return out;
}

}  // namespace rbu
