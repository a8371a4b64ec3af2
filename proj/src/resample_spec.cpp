#include "rbu/resample_spec.hpp"

#include <cmath>
#include <sstream>

#include "rbu/error.hpp"
#include "rbu/resamplers.hpp"
#include "rbu/seeding.hpp"
#include "rbu/undersampling.hpp"

namespace rbu {
namespace {

constexpr std::pair<Method, std::string_view> kNames[] = {
    {Method::none, "none"},   {Method::rus, "rus"},     {Method::ros, "ros"},
    {Method::smote, "smote"}, {Method::enn, "enn"},     {Method::renn, "renn"},
    {Method::tomek, "tomek"}, {Method::near_miss, "near_miss"}, {Method::rbu, "rbu"},
    {Method::pipeline, "pipeline"},
};

bool uses_ratio(Method m) {
  return m == Method::rus || m == Method::ros || m == Method::smote || m == Method::near_miss ||
         m == Method::rbu;
}

bool uses_k(Method m) {
  return m == Method::smote || m == Method::enn || m == Method::renn || m == Method::near_miss;
}

ResampleSpec stage(Method method, std::optional<double> ratio = std::nullopt,
                   std::optional<std::size_t> k = std::nullopt) {
  ResampleSpec s;
  s.method = method;
  s.ratio = ratio;
  s.k = k;
  return s;
}

std::string number(double v) {
  std::ostringstream s;
  s << v;
  return s.str();
}

}  // namespace

std::string_view method_name(Method m) {
  for (const auto& [method, name] : kNames) {
    if (method == m) {
      return name;
    }
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  if (name == "nm") {
    return Method::near_miss;
  }
  for (const auto& [method, n] : kNames) {
    if (n == name) {
      return method;
    }
  }
  throw ParameterError("unknown resampling method '" + std::string(name) + "'");
}

std::size_t ResampleSpec::k_value() const {
  if (k) {
    return *k;
  }
  return method == Method::smote ? 5 : 3;
}

std::string ResampleSpec::describe() const {
  if (method == Method::pipeline) {
    std::string out = (name.empty() ? std::string("pipeline") : name) + "[";
    for (std::size_t i = 0; i < stages.size(); ++i) {
      out += (i ? "," : "") + stages[i].describe();
    }
    return out + "]";
  }
  std::string out(method_name(method));
  std::vector<std::string> parts;
  if (uses_k(method)) {
    parts.push_back("k=" + std::to_string(k_value()));
  }
  if (method == Method::rbu) {
    parts.push_back("gamma=" + number(gamma_value()));
  }
  if (uses_ratio(method)) {
    parts.push_back("ratio=" + number(ratio_value()));
  }
  if (parts.empty()) {
    return out;
  }
  out += "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    out += (i ? "," : "") + parts[i];
  }
  return out + ")";
}

ResampleSpec make_stl(std::size_t k, double ratio) {
  ResampleSpec spec;
  spec.method = Method::pipeline;
  spec.name = "stl";
  spec.stages = {stage(Method::smote, ratio, k), stage(Method::tomek)};
  return spec;
}

ResampleSpec make_senn(std::size_t k, double ratio, std::size_t enn_k) {
  ResampleSpec spec;
  spec.method = Method::pipeline;
  spec.name = "senn";
  spec.stages = {stage(Method::smote, ratio, k), stage(Method::enn, std::nullopt, enn_k)};
  return spec;
}

ResampleSpec spec_for(std::string_view name, std::optional<std::size_t> k, std::optional<double> ratio,
                      std::optional<double> gamma, std::uint64_t seed) {
  ResampleSpec spec;
  if (name == "stl" || name == "senn") {
    const std::size_t smote_k = k.value_or(5);
    const double r = ratio.value_or(1.0);
    spec = name == "stl" ? make_stl(smote_k, r) : make_senn(smote_k, r);
  } else {
    spec.method = parse_method(name);
    if (spec.method == Method::pipeline) {
      throw ParameterError("pipelines are built from 'stl', 'senn' or a grid file");
    }
    if (uses_k(spec.method)) {
      spec.k = k;
    }
    if (uses_ratio(spec.method)) {
      spec.ratio = ratio;
    }
    if (spec.method == Method::rbu) {
      spec.gamma = gamma;
    }
  }
  spec.seed = seed;
  validate(spec);
  return spec;
}

void validate(const ResampleSpec& spec) {
  if (spec.ratio && !(*spec.ratio >= 0.0 && *spec.ratio <= 1.0)) {
    throw ParameterError("ratio must lie in [0, 1]");
  }
  if (spec.method == Method::near_miss && !(spec.ratio_value() > 0.0)) {
    throw ParameterError("NearMiss ratio must lie in (0, 1]");
  }
  if (spec.gamma) {
    check_gamma(*spec.gamma);
  }
  if (spec.k && *spec.k < 1) {
    throw ParameterError("k must be at least 1");
  }
  if (spec.method == Method::pipeline) {
    if (spec.stages.empty()) {
      throw ParameterError("pipeline needs at least one stage");
    }
    for (const auto& stage : spec.stages) {
      validate(stage);
    }
  }
}

BinaryTask resample(const BinaryTask& task, const ResampleSpec& spec) {
  validate(spec);
  switch (spec.method) {
    case Method::none:
      return task;
    case Method::rus:
      return rus(task, spec.ratio_value(), spec.seed);
    case Method::ros:
      return ros(task, spec.ratio_value(), spec.seed);
    case Method::smote:
      return smote(task, spec.k_value(), spec.ratio_value(), spec.seed);
    case Method::enn:
      return enn(task, spec.k_value());
    case Method::renn:
      return renn(task, spec.k_value());
    case Method::tomek:
      return tomek(task);
    case Method::near_miss:
      return near_miss(task, spec.k_value(), spec.ratio_value());
    case Method::rbu:
      return rbu(task, RbuParams{spec.gamma_value(), spec.ratio_value(), spec.tie_rule, spec.seed});
    case Method::pipeline: {
      BinaryTask current = task;
      for (std::size_t i = 0; i < spec.stages.size(); ++i) {
        ResampleSpec stage = spec.stages[i];
        stage.seed = derive_seed(spec.seed, static_cast<std::uint64_t>(i));
        current = resample(current, stage);
      }
      return current;
    }
  }
  throw ParameterError("unhandled resampling method");
}

nlohmann::json to_json(const ResampleSpec& spec) {
  nlohmann::json j{{"method", method_name(spec.method)}};
  if (!spec.name.empty()) {
    j["name"] = spec.name;
  }
  if (spec.ratio) {
    j["ratio"] = *spec.ratio;
  }
  if (spec.gamma) {
    j["gamma"] = *spec.gamma;
  }
  if (spec.k) {
    j["k"] = *spec.k;
  }
  if (spec.tie_rule == TieRule::seeded_random) {
    j["tie_rule"] = "seeded_random";
  }
  if (spec.method == Method::pipeline) {
    j["stages"] = nlohmann::json::array();
    for (const auto& stage : spec.stages) {
      j["stages"].push_back(to_json(stage));
    }
  }
  return j;
}

ResampleSpec spec_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("method") || !j["method"].is_string()) {
    throw ParameterError("resample spec must be an object with a string 'method'");
  }
  const auto name = j["method"].get<std::string>();
  ResampleSpec spec;
  if (name == "stl" || name == "senn") {
    spec = name == "stl" ? make_stl(5, 1.0) : make_senn(5, 1.0);
    if (j.contains("k")) {
      spec.stages[0].k = j["k"].get<std::size_t>();
    }
    if (j.contains("ratio")) {
      spec.stages[0].ratio = j["ratio"].get<double>();
    }
    if (name == "senn" && j.contains("enn_k")) {
      spec.stages[1].k = j["enn_k"].get<std::size_t>();
    }
    validate(spec);
    return spec;
  }
  spec.method = parse_method(name);
  if (j.contains("name")) {
    spec.name = j["name"].get<std::string>();
  }
  if (j.contains("ratio")) {
    spec.ratio = j["ratio"].get<double>();
  }
  if (j.contains("gamma")) {
    spec.gamma = j["gamma"].get<double>();
  }
  if (j.contains("k")) {
    spec.k = j["k"].get<std::size_t>();
  }
  if (j.contains("tie_rule")) {
    const auto rule = j["tie_rule"].get<std::string>();
    if (rule == "seeded_random") {
      spec.tie_rule = TieRule::seeded_random;
    } else if (rule != "lowest_index") {
      throw ParameterError("unknown tie rule '" + rule + "'");
    }
  }
  if (spec.method == Method::pipeline) {
    if (!j.contains("stages") || !j["stages"].is_array()) {
      throw ParameterError("pipeline spec needs a 'stages' array");
    }
    for (const auto& stage : j["stages"]) {
      spec.stages.push_back(spec_from_json(stage));
    }
  }
  validate(spec);
  return spec;
}

}  // namespace rbu
