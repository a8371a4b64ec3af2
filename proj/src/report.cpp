#include "rbu/report.hpp"

#include <ostream>

#include "rbu/formats.hpp"
#include "rbu/typing.hpp"

namespace rbu {
namespace {

using nlohmann::json;

json metrics_json(const MetricSet& m) {
  json j = json::object();
  for (std::string_view name : kMetricNames) {
    j[std::string(name)] = round_metric(metric_value(m, name));
  }
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) {
    return s;
  }
  std::string out = "\"";
  for (char c : s) {
    out += c == '"' ? std::string("\"\"") : std::string(1, c);
  }
  return out + "\"";
}

}  // namespace

json stats_to_json(const DatasetStats& s) {
  json types = json::object();
  for (std::size_t t = 0; t < 4; ++t) {
    types[std::string(to_string(static_cast<MinorityType>(t)))] = s.type_proportions[t];
  }
  return json{{"name", s.name},         {"ir", s.ir},
              {"samples", s.samples},   {"features", s.features},
              {"majority", s.n_majority}, {"minority", s.n_minority},
              {"types", types}};
}

json report_to_json(const EvalReport& report) {
  json runs = json::array();
  for (const auto& r : report.runs) {
    json j{{"dataset", r.dataset},
           {"method", r.method},
           {"classifier", to_string(r.classifier)},
           {"fold", r.fold},
           {"spec", r.spec ? to_json(*r.spec) : json(nullptr)},
           {"metrics", r.metrics ? metrics_json(*r.metrics) : json(nullptr)}};
    if (!r.error.empty()) {
      j["error"] = r.error;
    }
    runs.push_back(std::move(j));
  }

  json aggregates = json::array();
  for (const auto& a : report.aggregates) {
    aggregates.push_back(json{{"dataset", a.dataset},
                              {"method", a.method},
                              {"classifier", to_string(a.classifier)},
                              {"folds", a.folds},
                              {"metrics", a.mean ? metrics_json(*a.mean) : json(nullptr)}});
  }

  json ranks = json::object();
  json friedman = json::object();
  for (const auto& r : report.ranks) {
    const std::string cls(to_string(r.classifier));
    json per_method = json::object();
    for (std::size_t j = 0; j < r.table.methods.size(); ++j) {
      per_method[r.table.methods[j]] = r.table.ranks.empty() ? json(nullptr) : json(r.table.mean_ranks[j]);
    }
    json per_dataset = json::object();
    for (std::size_t d = 0; d < r.table.datasets.size(); ++d) {
      per_dataset[r.table.datasets[d]] = r.table.ranks[d];
    }
    ranks[cls][r.metric] = json{{"mean", per_method}, {"datasets", per_dataset}};
    friedman[cls][r.metric] = r.friedman ? json{{"chi_square", r.friedman->chi_square},
                                                {"df", r.friedman->df},
                                                {"datasets", r.friedman->datasets},
                                                {"methods", r.friedman->methods}}
                                         : json(nullptr);
  }

  json datasets = json::array();
  for (const auto& s : report.datasets) {
    datasets.push_back(stats_to_json(s));
  }

  return json{{"schema", kReportSchema},
              {"seed", report.seed},
              {"protocol", {{"outer", json::array({report.outer_repeats, 2})},
                            {"inner", json::array({report.inner_repeats, 2})}}},
              {"runs", runs},
              {"aggregates", aggregates},
              {"ranks", ranks},
              {"friedman", friedman},
              {"datasets", datasets},
              {"warnings", report.warnings},
              {"leakage_checks", report.leakage_checks}};
}

void write_report_csv(std::ostream& out, const EvalReport& report) {
  out << "dataset,method,classifier,fold,spec";
  for (std::string_view name : kMetricNames) {
    out << ',' << name;
  }
  out << ",error\n";
  for (const auto& r : report.runs) {
    out << csv_field(r.dataset) << ',' << csv_field(r.method) << ',' << to_string(r.classifier) << ',' << r.fold
        << ',' << csv_field(r.spec ? r.spec->describe() : std::string());
    for (std::string_view name : kMetricNames) {
      out << ',';
      if (r.metrics) {
        out << format_number(round_metric(metric_value(*r.metrics, name)));
      }
    }
    out << ',' << csv_field(r.error) << '\n';
  }
}

}  // namespace rbu
