#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace rbu {

// Counts with the minority class (label 1) as positive.
struct Confusion {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  std::size_t tn = 0;

  friend bool operator==(const Confusion&, const Confusion&) = default;
};

Confusion confusion(std::span<const int> y_true, std::span<const int> y_pred);

// Zero when there are no predicted positives.
double precision(const Confusion& c);
double recall(const Confusion& c);
double specificity(const Confusion& c);
double f_measure(const Confusion& c);
double g_mean(const Confusion& c);
// Mean of sensitivity and specificity; equals the AUC of hard predictions.
double balanced_accuracy(const Confusion& c);

// Mann-Whitney estimate: fraction of (positive, negative) pairs ranked
// correctly, ties counting one half. Both classes must be present.
double auc(std::span<const int> y_true, std::span<const double> scores);

struct MetricSet {
  double precision = 0.0;
  double recall = 0.0;
  double f_measure = 0.0;
  double auc = 0.0;
  double g_mean = 0.0;
  double balanced_accuracy = 0.0;

  friend bool operator==(const MetricSet&, const MetricSet&) = default;
};

inline constexpr std::string_view kMetricNames[] = {"precision", "recall", "f_measure",
                                                    "auc",       "g_mean", "balanced_accuracy"};

double metric_value(const MetricSet& m, std::string_view name);

// Predicts positive for scores above 0.5 and computes every metric.
MetricSet evaluate_scores(std::span<const int> y_true, std::span<const double> scores);

// Model-selection criterion: the mean of F-measure, AUC and G-mean.
inline double selection_score(const MetricSet& m) { return (m.f_measure + m.auc + m.g_mean) / 3.0; }

// Element-wise arithmetic mean.
MetricSet mean(std::span<const MetricSet> sets);

}  // namespace rbu
