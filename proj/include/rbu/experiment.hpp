#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rbu/classifiers.hpp"
#include "rbu/dataset.hpp"
#include "rbu/matrix.hpp"
#include "rbu/metrics.hpp"
#include "rbu/ranking.hpp"
#include "rbu/resample_spec.hpp"
#include "rbu/seeding.hpp"
#include "rbu/stats.hpp"
#include "rbu/task.hpp"

namespace rbu {

// A named method and the hyperparameter grid searched for it.
struct MethodGrid {
  std::string name;
  std::vector<ResampleSpec> grid;
};

// Rows of a dataset with binary labels (1 = minority) and, for every row,
// its index in the originating dataset.
struct LabelledData {
  Matrix x;
  std::vector<int> y;
  std::vector<std::size_t> source;

  std::size_t size() const { return y.size(); }
  LabelledData subset(std::span<const std::size_t> rows) const;
  BinaryTask task() const;
};

struct ExperimentDataset {
  std::string name;
  LabelledData data;  // encoded, not standardized
  DatasetStats stats;
};

// Encodes categoricals and fixes the minority class (least frequent by default).
ExperimentDataset prepare_dataset(const Dataset& d, const std::optional<std::string>& minority_label = std::nullopt);

struct ExperimentConfig {
  std::vector<ClassifierKind> classifiers{ClassifierKind::knn};
  std::uint64_t seed = kDefaultSeed;
  std::size_t outer_repeats = 5;
  std::size_t inner_repeats = 3;
  std::size_t jobs = 1;
  // Standardize each dataset once up front instead of per training fold.
  bool global_standardize = false;
};

// Throws LeakageError when a non-synthetic row of `trained_on` originates from
// one of `test_rows` (sorted ascending).
void assert_no_leakage(std::span<const std::size_t> trained_on, std::span<const std::size_t> test_rows);

struct Selection {
  std::size_t index = 0;
  std::vector<double> scores;  // mean inner criterion per grid point
};

// Inner repeats x 2 cross-validation on `train` for every grid point, scoring
// the mean over folds of (F + AUC + G-mean) / 3. A fold whose resampling or
// fitting fails scores 0. The first grid point wins ties. A single-point grid
// is returned without evaluation.
Selection select_params(const LabelledData& train, std::span<const ResampleSpec> grid, ClassifierKind classifier,
                        std::uint64_t seed, std::size_t inner_repeats = 3, bool standardize = true);

struct FoldRecord {
  std::string dataset;
  std::string method;
  ClassifierKind classifier = ClassifierKind::knn;
  std::size_t fold = 0;
  std::optional<ResampleSpec> spec;
  std::optional<MetricSet> metrics;
  std::string error;
  std::size_t leakage_checks = 0;
};

struct CellSummary {
  std::string dataset;
  std::string method;
  ClassifierKind classifier = ClassifierKind::knn;
  std::size_t folds = 0;
  // Fold mean; empty when any fold failed.
  std::optional<MetricSet> mean;
};

struct RankSummary {
  ClassifierKind classifier = ClassifierKind::knn;
  std::string metric;
  RankTable table;
  std::optional<FriedmanResult> friedman;
};

struct EvalReport {
  std::uint64_t seed = 0;
  std::size_t outer_repeats = 5;
  std::size_t inner_repeats = 3;
  std::vector<FoldRecord> runs;
  std::vector<CellSummary> aggregates;
  std::vector<RankSummary> ranks;
  std::vector<DatasetStats> datasets;
  std::vector<std::string> warnings;
  std::size_t leakage_checks = 0;
};

// Outer repeats x 2 cross-validation per (dataset, method, classifier): per
// fold, standardize on the training half, select hyperparameters on it,
// resample it, fit, and score the untouched test half. Failures are recorded
// per fold; LeakageError is rethrown. Results do not depend on `jobs`.
EvalReport run_experiment(const std::vector<ExperimentDataset>& datasets, const std::vector<MethodGrid>& methods,
                          const ExperimentConfig& config);

// Metric values are reported rounded to this many decimals.
inline constexpr int kMetricDecimals = 6;
double round_metric(double value);

}  // namespace rbu
