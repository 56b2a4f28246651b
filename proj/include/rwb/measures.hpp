#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rwb/errors.hpp"
#include "rwb/matrix.hpp"

namespace rwb {

/// A location in d-dimensional Euclidean space.
struct Point {
  std::vector<double> coords;

  Point() = default;
  explicit Point(std::vector<double> c) : coords(std::move(c)) {}
  Point(std::initializer_list<double> c) : coords(c) {}

  std::size_t dim() const { return coords.size(); }

  friend bool operator==(const Point& a, const Point& b) { return a.coords == b.coords; }
};

double squared_distance(const Point& a, const Point& b);
double euclidean_distance(const Point& a, const Point& b);

/// Finitely supported probability measure: atoms plus simplex weights.
/// Weights must be nonnegative and sum to 1 within 1e-9; the constructor
/// enforces it (renormalization is always an explicit caller choice).
struct DiscreteMeasure {
  std::vector<Point> locations;
  std::vector<double> weights;

  DiscreteMeasure() = default;
  DiscreteMeasure(std::vector<Point> locs, std::vector<double> w);

  std::size_t size() const { return locations.size(); }
  std::size_t dim() const { return locations.empty() ? 0 : locations[0].dim(); }

  /// Scales weights so they sum to exactly 1.
  DiscreteMeasure renormalized() const;

  friend bool operator==(const DiscreteMeasure& a, const DiscreteMeasure& b) {
    return a.locations == b.locations && a.weights == b.weights;
  }
};

/// Point mass at x.
DiscreteMeasure dirac(Point x);

/// A collection of measures with strictly positive per-measure weights
/// (the input set and its coresets share this shape).
struct WeightedMeasureSet {
  std::vector<DiscreteMeasure> measures;
  std::vector<double> set_weights;

  WeightedMeasureSet() = default;
  WeightedMeasureSet(std::vector<DiscreteMeasure> ms, std::vector<double> ws);
  /// All-ones weights.
  explicit WeightedMeasureSet(std::vector<DiscreteMeasure> ms);

  std::size_t size() const { return measures.size(); }
  double total_weight() const;
};

/// Pairwise ground costs dist(x_i, y_j)^z for one pair of supports.
struct CostMatrix {
  Matrix entries;
  double exponent = 1.0;
};

/// entries[i][j] = ||x_i - y_j||_2^z. All points must share a dimension; z >= 1.
CostMatrix build_cost_matrix(const std::vector<Point>& xs, const std::vector<Point>& ys,
                             double z);

// --- JSON file formats ---------------------------------------------------
//
// Measure file: {"points": [[f64,...],...], "weights": [f64,...]}
// Dataset file: {"measures": [<measure>,...], "set_weights": [f64,...]}
//   with set_weights defaulting to all-ones when absent.

DiscreteMeasure load_measure(const std::string& path);
void save_measure(const DiscreteMeasure& m, const std::string& path);

WeightedMeasureSet load_dataset(const std::string& path);
void save_dataset(const WeightedMeasureSet& ds, const std::string& path);

/// Reads only the "points" array of a measure-format file (support sets).
std::vector<Point> load_points(const std::string& path);

}  // namespace rwb
