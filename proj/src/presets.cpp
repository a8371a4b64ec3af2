#include "rbu/presets.hpp"

#include <optional>
#include <string>

#include "rbu/error.hpp"

namespace rbu {
namespace {

const std::vector<double> kFinalRatios{0.5, 0.75, 1.0};
const std::vector<double> kFinalGammas{0.01, 0.1, 1.0, 10.0};
const std::vector<std::size_t> kSmoteK{1, 3, 5, 7, 9};
const std::vector<std::size_t> kUnderK{1, 3, 5, 7};
const std::vector<double> kPrelimGammas{0.001, 0.01, 0.1, 1.0, 10.0, 100.0};
const std::vector<double> kPrelimRatios{0.0, 0.2, 0.4, 0.6, 0.8, 1.0};

// Cartesian product, outermost first: k, gamma, ratio. An empty list means
// the parameter is left unset.
MethodGrid product(const std::string& name, const std::string& method, const std::vector<std::size_t>& ks,
                   const std::vector<double>& gammas, const std::vector<double>& ratios) {
  const std::vector<std::optional<std::size_t>> k_values =
      ks.empty() ? std::vector<std::optional<std::size_t>>{std::nullopt}
                 : std::vector<std::optional<std::size_t>>(ks.begin(), ks.end());
  const std::vector<std::optional<double>> g_values =
      gammas.empty() ? std::vector<std::optional<double>>{std::nullopt}
                     : std::vector<std::optional<double>>(gammas.begin(), gammas.end());
  const std::vector<std::optional<double>> r_values =
      ratios.empty() ? std::vector<std::optional<double>>{std::nullopt}
                     : std::vector<std::optional<double>>(ratios.begin(), ratios.end());
  MethodGrid grid{name, {}};
  for (const auto& k : k_values) {
    for (const auto& g : g_values) {
      for (const auto& r : r_values) {
        grid.grid.push_back(spec_for(method, k, r, g, 0));
      }
    }
  }
  return grid;
}

}  // namespace

std::vector<std::string_view> preset_methods(std::string_view preset) {
  if (preset == "paper-final") {
    return {"none", "rus", "ros", "smote", "enn", "renn", "tomek", "nm", "stl", "senn", "rbu"};
  }
  if (preset == "paper-prelim") {
    return {"rbu"};
  }
  throw ParameterError("unknown preset '" + std::string(preset) + "'");
}

MethodGrid preset_grid(std::string_view preset, std::string_view method) {
  const std::string name(method == "near_miss" ? "nm" : method);
  if (preset == "paper-prelim") {
    if (name != "rbu") {
      throw ParameterError("preset paper-prelim only defines a grid for rbu");
    }
    return product(name, name, {}, kPrelimGammas, kPrelimRatios);
  }
  if (preset != "paper-final") {
    throw ParameterError("unknown preset '" + std::string(preset) + "'");
  }
  if (name == "none" || name == "tomek") {
    return product(name, name, {}, {}, {});
  }
  if (name == "rus" || name == "ros") {
    return product(name, name, {}, {}, kFinalRatios);
  }
  if (name == "smote" || name == "stl" || name == "senn") {
    return product(name, name, kSmoteK, {}, kFinalRatios);
  }
  if (name == "enn" || name == "renn" || name == "nm") {
    return product(name, name, kUnderK, {}, {});
  }
  if (name == "rbu") {
    return product(name, name, {}, kFinalGammas, kFinalRatios);
  }
  throw ParameterError("preset paper-final has no grid for '" + name + "'");
}

std::vector<MethodGrid> preset_grids(std::string_view preset) {
  std::vector<MethodGrid> out;
  for (std::string_view m : preset_methods(preset)) {
    out.push_back(preset_grid(preset, m));
  }
  return out;
}

std::vector<MethodGrid> grids_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("methods") || !j["methods"].is_array()) {
    throw ParameterError("grid file must be an object with a 'methods' array");
  }
  std::vector<MethodGrid> out;
  for (const auto& entry : j["methods"]) {
    if (!entry.is_object() || !entry.contains("name")) {
      throw ParameterError("every grid entry needs a 'name'");
    }
    const auto name = entry["name"].get<std::string>();
    const auto method = entry.value("method", name);
    std::vector<std::size_t> ks;
    std::vector<double> gammas;
    std::vector<double> ratios;
    if (entry.contains("grid")) {
      const auto& g = entry["grid"];
      if (g.contains("k")) {
        ks = g["k"].get<std::vector<std::size_t>>();
      }
      if (g.contains("gamma")) {
        gammas = g["gamma"].get<std::vector<double>>();
      }
      if (g.contains("ratio")) {
        ratios = g["ratio"].get<std::vector<double>>();
      }
    }
    out.push_back(product(name, method, ks, gammas, ratios));
  }
  if (out.empty()) {
    throw ParameterError("grid file lists no methods");
  }
  return out;
}

}  // namespace rbu
