#include "rbu/potential.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "rbu/error.hpp"
#include "rbu/formats.hpp"

namespace rbu {
namespace {

void check_dim(std::span<const double> x, const Matrix& points) {
  if (!points.empty() && points.cols() != x.size()) {
    throw ParameterError("point of dimension " + std::to_string(x.size()) +
                         " evaluated against points of dimension " + std::to_string(points.cols()));
  }
}

double rbf_sum(std::span<const double> x, const Matrix& points, double inv_gamma_sq) {
  double sum = 0.0;
  for (std::size_t i = 0; i < points.rows(); ++i) {
    sum += std::exp(-squared_euclidean(points.row(i), x) * inv_gamma_sq);
  }
  return sum;
}

}  // namespace

void check_gamma(double gamma) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw ParameterError("gamma must be a positive finite number");
  }
}

double rbf_value(double distance, double gamma) {
  check_gamma(gamma);
  if (!(distance >= 0.0)) {
    throw ParameterError("distance must be non-negative");
  }
  const double scaled = distance / gamma;
  return std::exp(-scaled * scaled);
}

double mutual_potential(std::span<const double> x, const Matrix& majority, const Matrix& minority,
                        double gamma) {
  check_gamma(gamma);
  check_dim(x, majority);
  check_dim(x, minority);
  const double inv = 1.0 / (gamma * gamma);
  return rbf_sum(x, majority, inv) - rbf_sum(x, minority, inv);
}

double mutual_potential(std::span<const double> x, const BinaryTask& task, double gamma) {
  return mutual_potential(x, task.majority, task.minority, gamma);
}

TieBreaker::TieBreaker(TieRule rule, std::uint64_t seed) : rule_(rule), rng_(seed) {}

std::size_t TieBreaker::choose(std::size_t count) {
  if (count <= 1 || rule_ == TieRule::lowest_index) {
    return 0;
  }
  return std::uniform_int_distribution<std::size_t>(0, count - 1)(rng_);
}

PotentialField::PotentialField(const BinaryTask& task, double gamma)
    : points_(task.majority), gamma_(gamma) {
  check_gamma(gamma);
  if (!task.minority.empty() && !task.majority.empty() && task.minority.cols() != task.majority.cols()) {
    throw ParameterError("majority and minority points have different dimensionality");
  }
  remaining_.resize(points_.rows());
  phi_.resize(points_.rows());
  for (std::size_t i = 0; i < points_.rows(); ++i) {
    remaining_[i] = i;
    phi_[i] = mutual_potential(points_.row(i), task.majority, task.minority, gamma);
  }
}

PotentialField::PotentialField(Matrix points, std::vector<double> phi, double gamma)
    : points_(std::move(points)), phi_(std::move(phi)), gamma_(gamma) {
  check_gamma(gamma);
  if (phi_.size() != points_.rows()) {
    throw ParameterError("potential count does not match point count");
  }
  remaining_.resize(points_.rows());
  for (std::size_t i = 0; i < remaining_.size(); ++i) {
    remaining_[i] = i;
  }
}

PotentialField::Removal PotentialField::pop_max() {
  TieBreaker lowest;
  return pop_max(lowest);
}

PotentialField::Removal PotentialField::pop_max(TieBreaker& ties) {
  if (empty()) {
    throw DataError("cannot pop from an empty potential field");
  }
  const double best = *std::max_element(phi_.begin(), phi_.end());
  const double floor = best - kTieTolerance * std::max(1.0, std::abs(best));
  std::vector<std::size_t> tied;
  for (std::size_t i = 0; i < phi_.size(); ++i) {
    if (phi_[i] >= floor) {
      tied.push_back(i);
    }
  }
  const std::size_t pos = tied[ties.choose(tied.size())];
  const Removal removal{remaining_[pos], phi_[pos]};
  remaining_.erase(remaining_.begin() + static_cast<std::ptrdiff_t>(pos));
  phi_.erase(phi_.begin() + static_cast<std::ptrdiff_t>(pos));
  ++removed_;
  return removal;
}

void PotentialField::subtract_contribution(std::span<const double> removed) {
  if (removed.size() != points_.cols()) {
    throw ParameterError("removed point has dimension " + std::to_string(removed.size()) +
                         ", field points have " + std::to_string(points_.cols()));
  }
  const double inv = 1.0 / (gamma_ * gamma_);
  for (std::size_t i = 0; i < remaining_.size(); ++i) {
    phi_[i] -= std::exp(-squared_euclidean(points_.row(remaining_[i]), removed) * inv);
  }
}

double PotentialGrid::x_center(std::size_t ix) const {
  const double step = (bounds.x_hi - bounds.x_lo) / static_cast<double>(resolution);
  return bounds.x_lo + (static_cast<double>(ix) + 0.5) * step;
}

double PotentialGrid::y_center(std::size_t iy) const {
  const double step = (bounds.y_hi - bounds.y_lo) / static_cast<double>(resolution);
  return bounds.y_lo + (static_cast<double>(iy) + 0.5) * step;
}

PotentialGrid potential_grid(const BinaryTask& task, double gamma, const GridBounds& bounds,
                             std::size_t resolution) {
  check_gamma(gamma);
  if (task.dim() != 2) {
    throw ParameterError("potential grids require two-dimensional data, got " +
                         std::to_string(task.dim()) + " features");
  }
  if (resolution < 2) {
    throw ParameterError("grid resolution must be at least 2");
  }
  if (!(bounds.x_lo < bounds.x_hi) || !(bounds.y_lo < bounds.y_hi)) {
    throw ParameterError("grid bounds must satisfy lo < hi on both axes");
  }
  PotentialGrid grid{bounds, resolution, gamma, std::vector<double>(resolution * resolution)};
  for (std::size_t iy = 0; iy < resolution; ++iy) {
    for (std::size_t ix = 0; ix < resolution; ++ix) {
      const double x[2] = {grid.x_center(ix), grid.y_center(iy)};
      grid.values[iy * resolution + ix] = mutual_potential(x, task, gamma);
    }
  }
  return grid;
}

GridBounds bounding_box(const BinaryTask& task, double margin) {
  if (task.dim() != 2) {
    throw ParameterError("bounding box requires two-dimensional data");
  }
  const Matrix all = task.stacked();
  if (all.empty()) {
    throw DataError("bounding box of an empty task");
  }
  GridBounds b{all(0, 0), all(0, 0), all(0, 1), all(0, 1)};
  for (std::size_t r = 1; r < all.rows(); ++r) {
    b.x_lo = std::min(b.x_lo, all(r, 0));
    b.x_hi = std::max(b.x_hi, all(r, 0));
    b.y_lo = std::min(b.y_lo, all(r, 1));
    b.y_hi = std::max(b.y_hi, all(r, 1));
  }
  const double wx = std::max(b.x_hi - b.x_lo, 1e-9);
  const double wy = std::max(b.y_hi - b.y_lo, 1e-9);
  return {b.x_lo - margin * wx - (b.x_hi == b.x_lo ? 0.5 : 0.0),
          b.x_hi + margin * wx + (b.x_hi == b.x_lo ? 0.5 : 0.0),
          b.y_lo - margin * wy - (b.y_hi == b.y_lo ? 0.5 : 0.0),
          b.y_hi + margin * wy + (b.y_hi == b.y_lo ? 0.5 : 0.0)};
}

void write_grid_csv(std::ostream& out, const PotentialGrid& grid) {
  out << "x,y,phi\n";
  for (std::size_t iy = 0; iy < grid.resolution; ++iy) {
    for (std::size_t ix = 0; ix < grid.resolution; ++ix) {
      out << format_number(grid.x_center(ix)) << ',' << format_number(grid.y_center(iy)) << ','
          << format_number(grid.at(ix, iy)) << '\n';
    }
  }
}

nlohmann::json grid_to_json(const PotentialGrid& grid) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t iy = 0; iy < grid.resolution; ++iy) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t ix = 0; ix < grid.resolution; ++ix) {
      row.push_back(grid.at(ix, iy));
    }
    rows.push_back(std::move(row));
  }
  return {
      {"bounds", {{grid.bounds.x_lo, grid.bounds.x_hi}, {grid.bounds.y_lo, grid.bounds.y_hi}}},
      {"resolution", grid.resolution},
      {"gamma", grid.gamma},
      {"values", std::move(rows)},
  };
}

}  // namespace rbu
