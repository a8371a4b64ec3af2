#pragma once

#include <string_view>
#include <vector>

#include "json.hpp"
#include "rbu/experiment.hpp"

namespace rbu {

// Method names known to the presets, in report order.
std::vector<std::string_view> preset_methods(std::string_view preset);

// "paper-final": ratio {0.5, 0.75, 1} for rus/ros/smote/stl/senn/rbu, gamma
// {0.01, 0.1, 1, 10} for rbu, k {1, 3, 5, 7, 9} for the SMOTE family and
// {1, 3, 5, 7} for enn/renn/nm; tomek and none have no parameters.
// "paper-prelim": rbu only, gamma {0.001, ..., 100} x ratio {0, 0.2, ..., 1}.
MethodGrid preset_grid(std::string_view preset, std::string_view method);
std::vector<MethodGrid> preset_grids(std::string_view preset);

// Grid file: {"methods": [{"name": "rbu", "method": "rbu",
//   "grid": {"gamma": [...], "ratio": [...], "k": [...]}}, ...]}.
// "method" defaults to "name"; every combination of listed values is a grid point.
std::vector<MethodGrid> grids_from_json(const nlohmann::json& j);

}  // namespace rbu
