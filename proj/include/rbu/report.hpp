#pragma once

#include <iosfwd>

#include "json.hpp"
#include "rbu/experiment.hpp"

namespace rbu {

inline constexpr int kReportSchema = 1;

// {"schema": 1, "seed", "protocol", "runs", "aggregates", "ranks", "friedman",
//  "datasets", "warnings", "leakage_checks"}; metrics rounded to 6 decimals.
nlohmann::json report_to_json(const EvalReport& report);

// One row per outer fold: dataset,method,classifier,fold,spec,<metrics>,error.
void write_report_csv(std::ostream& out, const EvalReport& report);

nlohmann::json stats_to_json(const DatasetStats& s);

}  // namespace rbu
