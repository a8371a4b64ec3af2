#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <span>
#include <vector>

#include "json.hpp"
#include "rbu/matrix.hpp"
#include "rbu/task.hpp"

namespace rbu {

// Gaussian radial basis function exp(-(distance / gamma)^2).
double rbf_value(double distance, double gamma);

// Mutual class potential at x: the sum of RBF contributions of the majority
// points minus the sum of contributions of the minority points.
double mutual_potential(std::span<const double> x, const Matrix& majority, const Matrix& minority,
                        double gamma);
double mutual_potential(std::span<const double> x, const BinaryTask& task, double gamma);

// Throws ParameterError unless gamma is finite and strictly positive.
void check_gamma(double gamma);

enum class TieRule { lowest_index, seeded_random };

// Potentials within this relative distance of the maximum count as tied, so
// that rounding noise from incremental updates cannot reorder equal points.
inline constexpr double kTieTolerance = 1e-12;

// Resolves ties among maximal potentials: the lowest index, or a uniformly
// random candidate drawn from a seeded stream.
class TieBreaker {
 public:
  explicit TieBreaker(TieRule rule = TieRule::lowest_index, std::uint64_t seed = 0);

  TieRule rule() const { return rule_; }
  // Picks one of `count` candidates, given in ascending index order.
  std::size_t choose(std::size_t count);

 private:
  TieRule rule_;
  std::mt19937_64 rng_;
};

// Potentials of the remaining majority points, kept current under removals.
//
// Built against the full majority set (each point's own contribution of 1
// included) and the full minority set; every removal then subtracts the
// removed point's RBF from the survivors. Not safe for concurrent mutation.
class PotentialField {
 public:
  struct Removal {
    std::size_t index;  // row of the original majority matrix
    double potential;   // potential at the moment of removal
  };

  PotentialField(const BinaryTask& task, double gamma);
  // Field over `points` with given potentials, e.g. to resume a saved state.
  PotentialField(Matrix points, std::vector<double> phi, double gamma);

  std::size_t size() const { return remaining_.size(); }
  bool empty() const { return remaining_.empty(); }
  double gamma() const { return gamma_; }
  std::size_t removed_count() const { return removed_; }

  // Potentials of the remaining points, parallel to indices().
  std::span<const double> potentials() const { return phi_; }
  // Original row indices of the remaining points, ascending.
  std::span<const std::size_t> indices() const { return remaining_; }
  std::span<const double> point(std::size_t original_index) const { return points_.row(original_index); }

  // Removes and returns the point with maximal potential.
  Removal pop_max(TieBreaker& ties);
  Removal pop_max();

  // Lowers every remaining potential by the RBF of its distance to `removed`.
  void subtract_contribution(std::span<const double> removed);

 private:
  Matrix points_;
  std::vector<std::size_t> remaining_;
  std::vector<double> phi_;
  double gamma_;
  std::size_t removed_ = 0;
};

inline PotentialField init_field(const BinaryTask& task, double gamma) { return {task, gamma}; }

struct GridBounds {
  double x_lo = 0.0;
  double x_hi = 1.0;
  double y_lo = 0.0;
  double y_hi = 1.0;
};

// Mutual potential sampled at cell centres of a resolution x resolution grid.
// Row-major: values[iy * resolution + ix], iy indexing the second axis.
struct PotentialGrid {
  GridBounds bounds;
  std::size_t resolution = 0;
  double gamma = 0.0;
  std::vector<double> values;

  double x_center(std::size_t ix) const;
  double y_center(std::size_t iy) const;
  double at(std::size_t ix, std::size_t iy) const { return values[iy * resolution + ix]; }
};

// Requires two-dimensional data and resolution >= 2.
PotentialGrid potential_grid(const BinaryTask& task, double gamma, const GridBounds& bounds,
                             std::size_t resolution);

// Bounding box of all points, widened by `margin` times each side's extent.
GridBounds bounding_box(const BinaryTask& task, double margin = 0.1);

// CSV with columns x,y,phi, one row per cell in row-major order.
void write_grid_csv(std::ostream& out, const PotentialGrid& grid);
// {"bounds": [[x_lo, x_hi], [y_lo, y_hi]], "resolution": r, "gamma": g, "values": [[...], ...]}
nlohmann::json grid_to_json(const PotentialGrid& grid);

}  // namespace rbu
