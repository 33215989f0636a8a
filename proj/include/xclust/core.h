/*
Copyright 2026 The xclust Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    https://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#ifndef XCLUST_CORE_H_
#define XCLUST_CORE_H_

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace xclust {

// 0-based position of a point in its dataset.
using PointId = int;
// Cluster labels are 1-based.
using Label = int;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Raised when an instance exceeds a solver's configured size limits.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class CostKind { kMeans, kMedians };

std::string ToString(CostKind kind);
// Accepts "means" / "medians"; throws std::invalid_argument otherwise.
CostKind ParseCostKind(const std::string& text);

struct Point {
  std::vector<double> coords;

  Point() = default;
  explicit Point(std::vector<double> c) : coords(std::move(c)) {}
  Point(std::initializer_list<double> c) : coords(c) {}

  int dim() const { return static_cast<int>(coords.size()); }
  double operator[](int i) const { return coords[i]; }

  friend bool operator==(const Point&, const Point&) = default;
};

// An ordered multiset of points sharing one dimension. A point's id is its
// position.
class Dataset {
 public:
  Dataset() = default;
  // Throws std::invalid_argument on empty input, mixed dimensions, d == 0 or
  // non-finite coordinates.
  explicit Dataset(std::vector<Point> points);

  int size() const { return static_cast<int>(points_.size()); }
  int dim() const { return dim_; }
  const Point& point(PointId id) const { return points_[id]; }
  const std::vector<Point>& points() const { return points_; }
  // `axis` is 0-based here.
  double coord(PointId id, int axis) const { return points_[id].coords[axis]; }

  std::vector<PointId> AllIds() const;
  // New dataset holding the given points in the given order.
  Dataset Subset(std::span<const PointId> ids) const;

 private:
  std::vector<Point> points_;
  int dim_ = 0;
};

// An axis cut: x goes left iff x[dim] <= theta. `dim` is 1-based, matching
// the usual x[1], ..., x[d] notation in reports and JSON.
struct Cut {
  int dim = 1;
  double theta = 0.0;

  bool GoesLeft(const Point& p) const { return p.coords[dim - 1] <= theta; }

  friend bool operator==(const Cut&, const Cut&) = default;
};

// Axis-aligned half-open region (lower, upper]. Bounds may be +-infinity.
struct Box {
  std::vector<double> lower;
  std::vector<double> upper;

  static Box Universal(int dim);
  bool Contains(const Point& p) const;
};

// Distinct values of the dim-th coordinate (1-based), strictly increasing.
std::vector<double> CanonicalThresholds(const Dataset& ds, int dim);
// Same, restricted to a subset of ids.
std::vector<double> CanonicalThresholds(const Dataset& ds,
                                        std::span<const PointId> ids, int dim);

std::pair<std::vector<Point>, std::vector<Point>> CutApply(
    std::span<const Point> pts, const Cut& cut);
// Id-based variant used by the solvers; keeps input order on both sides.
std::pair<std::vector<PointId>, std::vector<PointId>> CutApply(
    const Dataset& ds, std::span<const PointId> ids, const Cut& cut);

// Means: sum of squared distances to the mean. Medians: sum of L1 distances
// to the coordinatewise median. Throws std::invalid_argument on empty input.
double ClusterCost(std::span<const Point> pts, CostKind kind);
double ClusterCost(const Dataset& ds, std::span<const PointId> ids,
                   CostKind kind);

// Coordinatewise mean, or coordinatewise lower median.
Point Centroid(std::span<const Point> pts, CostKind kind);
Point Centroid(const Dataset& ds, std::span<const PointId> ids, CostKind kind);

std::vector<PointId> BoxMembers(const Dataset& ds, const Box& box);

// Per-axis sorted distinct coordinates of a dataset. Boxes over the dataset
// are stored as index pairs into these arrays: lower index -1 stands for
// -infinity and upper index size() for +infinity.
class CanonicalGrid {
 public:
  explicit CanonicalGrid(const Dataset& ds);

  int dim() const { return static_cast<int>(values_.size()); }
  // Number of canonical values on a 0-based axis.
  int count(int axis) const { return static_cast<int>(values_[axis].size()); }
  double value(int axis, int index) const { return values_[axis][index]; }
  const std::vector<double>& values(int axis) const { return values_[axis]; }
  // Index of a coordinate value that is known to be canonical.
  int IndexOf(int axis, double v) const;
  // Canonical index of a point's coordinate on a 0-based axis.
  int PointIndex(int axis, PointId id) const { return point_index_[axis][id]; }

 private:
  std::vector<std::vector<double>> values_;
  std::vector<std::vector<int>> point_index_;
};

// Box in index form: per axis (lo, hi) with lo < hi; a point with canonical
// index c on that axis is inside iff lo < c <= hi.
struct GridBox {
  std::vector<int> lo;
  std::vector<int> hi;

  static GridBox Universal(const CanonicalGrid& grid);
  // Dense integer key, unique per box for the given grid.
  std::uint64_t Encode(const CanonicalGrid& grid) const;
  Box ToBox(const CanonicalGrid& grid) const;
  // Children of a cut at canonical index t on `axis`, requiring lo < t < hi.
  GridBox LeftOf(int axis, int t) const;
  GridBox RightOf(int axis, int t) const;
};

}  // namespace xclust

#endif  // XCLUST_CORE_H_
