#include "rbu/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "rbu/classifiers.hpp"
#include "rbu/error.hpp"

namespace rbu {
namespace {

double ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

Confusion confusion(std::span<const int> y_true, std::span<const int> y_pred) {
  if (y_true.size() != y_pred.size()) {
    throw ParameterError("label and prediction counts differ");
  }
  if (y_true.empty()) {
    throw ParameterError("confusion matrix of zero predictions");
  }
  Confusion c;
  for (std::size_t i = 0; i < y_true.size(); ++i) {
    const bool actual = y_true[i] == 1;
    const bool predicted = y_pred[i] == 1;
    if (actual) {
      ++(predicted ? c.tp : c.fn);
    } else {
      ++(predicted ? c.fp : c.tn);
    }
  }
  return c;
}

double precision(const Confusion& c) { return ratio(c.tp, c.tp + c.fp); }
double recall(const Confusion& c) { return ratio(c.tp, c.tp + c.fn); }
double specificity(const Confusion& c) { return ratio(c.tn, c.tn + c.fp); }

double f_measure(const Confusion& c) {
  const double p = precision(c);
  const double r = recall(c);
  return p + r > 0.0 ? 2.0 * p * r / (p + r) : 0.0;
}

double g_mean(const Confusion& c) { return std::sqrt(recall(c) * specificity(c)); }

double balanced_accuracy(const Confusion& c) { return 0.5 * (recall(c) + specificity(c)); }

double auc(std::span<const int> y_true, std::span<const double> scores) {
  if (y_true.size() != scores.size()) {
    throw ParameterError("label and score counts differ");
  }
  const std::size_t n = scores.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });

  // Sum of average ranks (1-based) of the positives.
  double positive_rank_sum = 0.0;
  std::size_t n_pos = 0;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && scores[order[j]] == scores[order[i]]) {
      ++j;
    }
    const double rank = 0.5 * static_cast<double>(i + 1 + j);
    for (std::size_t t = i; t < j; ++t) {
      if (y_true[order[t]] == 1) {
        positive_rank_sum += rank;
        ++n_pos;
      }
    }
    i = j;
  }
  const std::size_t n_neg = n - n_pos;
  if (n_pos == 0 || n_neg == 0) {
    throw DataError("AUC is undefined unless both classes are present");
  }
  const double np = static_cast<double>(n_pos);
  const double u = positive_rank_sum - np * (np + 1.0) / 2.0;
  return u / (np * static_cast<double>(n_neg));
}

double metric_value(const MetricSet& m, std::string_view name) {
  if (name == "precision") return m.precision;
  if (name == "recall") return m.recall;
  if (name == "f_measure") return m.f_measure;
  if (name == "auc") return m.auc;
  if (name == "g_mean") return m.g_mean;
  if (name == "balanced_accuracy") return m.balanced_accuracy;
  throw ParameterError("unknown metric '" + std::string(name) + "'");
}

MetricSet evaluate_scores(std::span<const int> y_true, std::span<const double> scores) {
  std::vector<int> predicted(scores.size());
  std::transform(scores.begin(), scores.end(), predicted.begin(),
                 [](double s) { return predict_positive(s) ? 1 : 0; });
  const Confusion c = confusion(y_true, predicted);
  MetricSet m;
  m.precision = precision(c);
  m.recall = recall(c);
  m.f_measure = f_measure(c);
  m.auc = auc(y_true, scores);
  m.g_mean = g_mean(c);
  m.balanced_accuracy = balanced_accuracy(c);
  return m;
}

MetricSet mean(std::span<const MetricSet> sets) {
  MetricSet out;
  if (sets.empty()) {
    return out;
  }
  for (const auto& s : sets) {
    out.precision += s.precision;
    out.recall += s.recall;
    out.f_measure += s.f_measure;
    out.auc += s.auc;
    out.g_mean += s.g_mean;
    out.balanced_accuracy += s.balanced_accuracy;
  }
  const double n = static_cast<double>(sets.size());
  out.precision /= n;
  out.recall /= n;
  out.f_measure /= n;
  out.auc /= n;
  out.g_mean /= n;
  out.balanced_accuracy /= n;
  return out;
}

}  // namespace rbu
