#include "rbu/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "rbu/error.hpp"
#include "rbu/folds.hpp"
#include "rbu/preprocess.hpp"

namespace rbu {
namespace {

struct Split {
  LabelledData train;
  LabelledData test;
};

Split split(const LabelledData& data, const Fold& fold, bool standardize) {
  Split s{data.subset(fold.train), data.subset(fold.test)};
  if (standardize) {
    const Standardizer scaler = Standardizer::fit(s.train.x);
    s.train.x = scaler.transform(s.train.x);
    s.test.x = scaler.transform(s.test.x);
  }
  return s;
}

std::vector<std::size_t> sorted_sources(const BinaryTask& task) {
  std::vector<std::size_t> out;
  out.reserve(task.size());
  for (std::size_t s : task.majority_source) {
    out.push_back(s);
  }
  for (std::size_t s : task.minority_source) {
    out.push_back(s);
  }
  return out;
}

MetricSet fit_and_score(ClassifierKind classifier, const BinaryTask& train, const LabelledData& test) {
  const TrainedModel model = fit(classifier, train);
  return evaluate_scores(test.y, score_rows(model, test.x));
}

}  // namespace

LabelledData LabelledData::subset(std::span<const std::size_t> rows) const {
  LabelledData out;
  out.x = x.select_rows(rows);
  out.y.reserve(rows.size());
  out.source.reserve(rows.size());
  for (std::size_t r : rows) {
    out.y.push_back(y[r]);
    out.source.push_back(source[r]);
  }
  return out;
}

BinaryTask LabelledData::task() const {
  std::vector<std::size_t> all(size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    all[i] = i;
  }
  BinaryTask t = make_task(x, y, all);
  for (auto& s : t.majority_source) {
    s = source[s];
  }
  for (auto& s : t.minority_source) {
    s = source[s];
  }
  return t;
}

ExperimentDataset prepare_dataset(const Dataset& d, const std::optional<std::string>& minority_label) {
  const Dataset encoded = encode_categoricals(d);
  const std::string minority = minority_class(encoded, minority_label);
  ExperimentDataset out;
  out.name = d.name;
  out.data.x = encoded.features;
  out.data.y = binary_labels(encoded, minority);
  out.data.source.resize(encoded.size());
  for (std::size_t i = 0; i < encoded.size(); ++i) {
    out.data.source[i] = i;
  }
  out.stats = dataset_stats(encoded, minority);
  return out;
}

void assert_no_leakage(std::span<const std::size_t> trained_on, std::span<const std::size_t> test_rows) {
  for (std::size_t s : trained_on) {
    if (s != kSynthetic && std::binary_search(test_rows.begin(), test_rows.end(), s)) {
      throw LeakageError("test row " + std::to_string(s) + " reached model training");
    }
  }
}

Selection select_params(const LabelledData& train, std::span<const ResampleSpec> grid, ClassifierKind classifier,
                        std::uint64_t seed, std::size_t inner_repeats, bool standardize) {
  if (grid.empty()) {
    throw ParameterError("parameter grid is empty");
  }
  Selection sel;
  sel.scores.assign(grid.size(), 0.0);
  if (grid.size() == 1) {
    return sel;
  }

  std::optional<FoldPlan> plan;
  try {
    plan = make_folds(train.y, inner_repeats, derive_seed(seed, "folds"));
  } catch (const Error&) {
    // No inner split is possible; every grid point scores 0 and the first wins.
    return sel;
  }

  for (std::size_t f = 0; f < plan->folds.size(); ++f) {
    const Fold& fold = plan->folds[f];
    const Split s = split(train, fold, standardize);
    const BinaryTask inner_task = s.train.task();
    for (std::size_t g = 0; g < grid.size(); ++g) {
      try {
        ResampleSpec spec = grid[g];
        spec.seed = derive_seed(seed, static_cast<std::uint64_t>(g), static_cast<std::uint64_t>(f));
        sel.scores[g] += selection_score(fit_and_score(classifier, resample(inner_task, spec), s.test));
      } catch (const Error&) {
        // Scores 0 for this fold.
      }
    }
  }
  for (double& v : sel.scores) {
    v /= static_cast<double>(plan->folds.size());
  }
  for (std::size_t g = 1; g < grid.size(); ++g) {
    if (sel.scores[g] > sel.scores[sel.index]) {
      sel.index = g;
    }
  }
  return sel;
}

double round_metric(double value) {
  const double scale = std::pow(10.0, kMetricDecimals);
  return std::round(value * scale) / scale;
}

EvalReport run_experiment(const std::vector<ExperimentDataset>& datasets, const std::vector<MethodGrid>& methods,
                          const ExperimentConfig& config) {
  if (config.classifiers.empty()) {
    throw ParameterError("no classifier selected");
  }
  for (const auto& m : methods) {
    if (m.grid.empty()) {
      throw ParameterError("method " + m.name + " has an empty grid");
    }
  }

  EvalReport report;
  report.seed = config.seed;
  report.outer_repeats = config.outer_repeats;
  report.inner_repeats = config.inner_repeats;

  const std::size_t n_folds = 2 * config.outer_repeats;
  std::vector<LabelledData> prepared;
  std::vector<std::optional<FoldPlan>> plans;
  std::vector<std::string> plan_errors;
  for (const auto& d : datasets) {
    report.datasets.push_back(d.stats);
    LabelledData data = d.data;
    if (config.global_standardize) {
      data.x = Standardizer::fit(data.x).transform(data.x);
    }
    prepared.push_back(std::move(data));
    try {
      plans.emplace_back(make_folds(d.data.y, config.outer_repeats, derive_seed(config.seed, "folds", d.name)));
      plan_errors.emplace_back();
    } catch (const Error& e) {
      plans.emplace_back();
      plan_errors.emplace_back(e.what());
      report.warnings.push_back("dataset " + d.name + ": " + e.what());
    }
  }

  struct Unit {
    std::size_t dataset;
    std::size_t method;
    std::size_t classifier;
    std::size_t fold;
  };
  std::vector<Unit> units;
  for (std::size_t d = 0; d < datasets.size(); ++d) {
    for (std::size_t m = 0; m < methods.size(); ++m) {
      for (std::size_t c = 0; c < config.classifiers.size(); ++c) {
        for (std::size_t f = 0; f < n_folds; ++f) {
          units.push_back({d, m, c, f});
        }
      }
    }
  }
  report.runs.resize(units.size());

  auto run_unit = [&](const Unit& u) {
    const auto& ds = datasets[u.dataset];
    const auto& method = methods[u.method];
    FoldRecord rec;
    rec.dataset = ds.name;
    rec.method = method.name;
    rec.classifier = config.classifiers[u.classifier];
    rec.fold = u.fold;
    if (!plans[u.dataset]) {
      rec.error = plan_errors[u.dataset];
      return rec;
    }
    const Fold& fold = plans[u.dataset]->folds[u.fold];
    const std::uint64_t unit_seed =
        derive_seed(config.seed, ds.name, method.name, static_cast<std::uint64_t>(u.fold));
    try {
      const Split s = split(prepared[u.dataset], fold, !config.global_standardize);
      std::vector<std::size_t> test_rows = s.test.source;
      std::sort(test_rows.begin(), test_rows.end());

      assert_no_leakage(s.train.source, test_rows);
      ++rec.leakage_checks;

      const Selection sel = select_params(s.train, method.grid, rec.classifier, derive_seed(unit_seed, "select"),
                                          config.inner_repeats, !config.global_standardize);
      ResampleSpec spec = method.grid[sel.index];
      spec.seed = derive_seed(unit_seed, "final");
      rec.spec = spec;

      const BinaryTask resampled = resample(s.train.task(), spec);
      assert_no_leakage(sorted_sources(resampled), test_rows);
      ++rec.leakage_checks;

      rec.metrics = fit_and_score(rec.classifier, resampled, s.test);
    } catch (const LeakageError&) {
      throw;
    } catch (const std::exception& e) {
      rec.error = e.what();
    }
    return rec;
  };

  const std::size_t workers = std::max<std::size_t>(1, std::min(config.jobs, units.size()));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < units.size(); i = next++) {
      try {
        report.runs[i] = run_unit(units[i]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) {
          failure = std::current_exception();
        }
        next = units.size();
      }
    }
  };
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back(worker);
    }
    for (auto& t : pool) {
      t.join();
    }
  }
  if (failure) {
    std::rethrow_exception(failure);
  }

  for (const auto& r : report.runs) {
    report.leakage_checks += r.leakage_checks;
  }

  // Runs are laid out as consecutive blocks of n_folds per cell.
  for (std::size_t start = 0; start < report.runs.size(); start += n_folds) {
    CellSummary cell;
    cell.dataset = report.runs[start].dataset;
    cell.method = report.runs[start].method;
    cell.classifier = report.runs[start].classifier;
    std::vector<MetricSet> sets;
    for (std::size_t f = 0; f < n_folds; ++f) {
      const auto& r = report.runs[start + f];
      if (r.metrics) {
        sets.push_back(*r.metrics);
      } else {
        report.warnings.push_back(r.dataset + " / " + r.method + " / " + std::string(to_string(r.classifier)) +
                                  " fold " + std::to_string(r.fold) + ": " + r.error);
      }
    }
    cell.folds = sets.size();
    if (sets.size() == n_folds) {
      cell.mean = mean(sets);
    }
    report.aggregates.push_back(std::move(cell));
  }

  if (methods.size() >= 2 && !datasets.empty()) {
    std::vector<std::string> method_names;
    for (const auto& m : methods) {
      method_names.push_back(m.name);
    }
    std::vector<std::string> dataset_names;
    for (const auto& d : datasets) {
      dataset_names.push_back(d.name);
    }
    const std::size_t n_cls = config.classifiers.size();
    for (std::size_t c = 0; c < n_cls; ++c) {
      for (std::string_view metric : kMetricNames) {
        std::vector<std::vector<std::optional<double>>> scores(datasets.size(),
                                                               std::vector<std::optional<double>>(methods.size()));
        for (std::size_t d = 0; d < datasets.size(); ++d) {
          for (std::size_t m = 0; m < methods.size(); ++m) {
            const auto& cell = report.aggregates[(d * methods.size() + m) * n_cls + c];
            if (cell.mean) {
              scores[d][m] = round_metric(metric_value(*cell.mean, metric));
            }
          }
        }
        RankSummary summary;
        summary.classifier = config.classifiers[c];
        summary.metric = std::string(metric);
        summary.table = average_ranks(dataset_names, method_names, scores);
        if (summary.table.ranks.size() >= 2) {
          summary.friedman = friedman_statistic(summary.table.ranks);
        }
        for (const auto& w : summary.table.warnings) {
          report.warnings.push_back(std::string(to_string(summary.classifier)) + " " + summary.metric + ": " + w);
        }
        report.ranks.push_back(std::move(summary));
      }
    }
  }
  return report;
}

}  // namespace rbu
