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

#include "xclust/core.h"

#include <algorithm>
#include <cmath>

namespace xclust {
namespace {

void CheckNonEmpty(std::size_t n, const char* what) {
  if (n == 0) throw std::invalid_argument(std::string(what) + ": empty input");
}

// Sum of |x - median| for one axis; `values` is scratch and gets reordered.
double MedianDeviation(std::vector<double>& values) {
  std::sort(values.begin(), values.end());
  const double median = values[(values.size() - 1) / 2];
  double total = 0.0;
  for (double v : values) total += std::abs(v - median);
  return total;
}

template <typename CoordFn>
double CostImpl(int n, int d, CoordFn coord, CostKind kind) {
  double total = 0.0;
  std::vector<double> scratch(n);
  for (int axis = 0; axis < d; ++axis) {
    for (int j = 0; j < n; ++j) scratch[j] = coord(j, axis);
    if (kind == CostKind::kMeans) {
      double mean = 0.0;
      for (double v : scratch) mean += v;
      mean /= n;
      for (double v : scratch) total += (v - mean) * (v - mean);
    } else {
      total += MedianDeviation(scratch);
    }
  }
  return total;
}

template <typename CoordFn>
Point CentroidImpl(int n, int d, CoordFn coord, CostKind kind) {
  std::vector<double> center(d);
  std::vector<double> scratch(n);
  for (int axis = 0; axis < d; ++axis) {
    for (int j = 0; j < n; ++j) scratch[j] = coord(j, axis);
    if (kind == CostKind::kMeans) {
      double mean = 0.0;
      for (double v : scratch) mean += v;
      center[axis] = mean / n;
    } else {
      std::sort(scratch.begin(), scratch.end());
      center[axis] = scratch[(n - 1) / 2];
    }
  }
  return Point(std::move(center));
}

}  // namespace

std::string ToString(CostKind kind) {
  return kind == CostKind::kMeans ? "means" : "medians";
}

CostKind ParseCostKind(const std::string& text) {
  if (text == "means") return CostKind::kMeans;
  if (text == "medians") return CostKind::kMedians;
  throw std::invalid_argument("unknown cost kind '" + text +
                              "' (expected means or medians)");
}

Dataset::Dataset(std::vector<Point> points) : points_(std::move(points)) {
  if (points_.empty()) throw std::invalid_argument("dataset has no points");
  dim_ = points_.front().dim();
  if (dim_ < 1) throw std::invalid_argument("points must have dimension >= 1");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].dim() != dim_) {
      throw std::invalid_argument("point " + std::to_string(i) +
                                  " has dimension " +
                                  std::to_string(points_[i].dim()) +
                                  ", expected " + std::to_string(dim_));
    }
    for (double v : points_[i].coords) {
      if (!std::isfinite(v)) {
        throw std::invalid_argument("point " + std::to_string(i) +
                                    " has a non-finite coordinate");
      }
    }
  }
}

std::vector<PointId> Dataset::AllIds() const {
  std::vector<PointId> ids(points_.size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
  return ids;
}

Dataset Dataset::Subset(std::span<const PointId> ids) const {
  std::vector<Point> pts;
  pts.reserve(ids.size());
  for (PointId id : ids) pts.push_back(points_[id]);
  return Dataset(std::move(pts));
}

Box Box::Universal(int dim) {
  return Box{std::vector<double>(dim, -kInf), std::vector<double>(dim, kInf)};
}

bool Box::Contains(const Point& p) const {
  for (int i = 0; i < p.dim(); ++i) {
    if (!(lower[i] < p[i] && p[i] <= upper[i])) return false;
  }
  return true;
}

std::vector<double> CanonicalThresholds(const Dataset& ds, int dim) {
  const auto ids = ds.AllIds();
  return CanonicalThresholds(ds, ids, dim);
}

std::vector<double> CanonicalThresholds(const Dataset& ds,
                                        std::span<const PointId> ids,
                                        int dim) {
  if (dim < 1 || dim > ds.dim()) {
    throw std::invalid_argument("dimension " + std::to_string(dim) +
                                " out of range 1.." + std::to_string(ds.dim()));
  }
  std::vector<double> values;
  values.reserve(ids.size());
  for (PointId id : ids) values.push_back(ds.coord(id, dim - 1));
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

std::pair<std::vector<Point>, std::vector<Point>> CutApply(
    std::span<const Point> pts, const Cut& cut) {
  std::pair<std::vector<Point>, std::vector<Point>> out;
  for (const Point& p : pts) {
    (cut.GoesLeft(p) ? out.first : out.second).push_back(p);
  }
  return out;
}

std::pair<std::vector<PointId>, std::vector<PointId>> CutApply(
    const Dataset& ds, std::span<const PointId> ids, const Cut& cut) {
  std::pair<std::vector<PointId>, std::vector<PointId>> out;
  for (PointId id : ids) {
    (cut.GoesLeft(ds.point(id)) ? out.first : out.second).push_back(id);
  }
  return out;
}

double ClusterCost(std::span<const Point> pts, CostKind kind) {
  CheckNonEmpty(pts.size(), "cluster_cost");
  return CostImpl(
      static_cast<int>(pts.size()), pts.front().dim(),
      [&](int j, int axis) { return pts[j][axis]; }, kind);
}

double ClusterCost(const Dataset& ds, std::span<const PointId> ids,
                   CostKind kind) {
  CheckNonEmpty(ids.size(), "cluster_cost");
  return CostImpl(
      static_cast<int>(ids.size()), ds.dim(),
      [&](int j, int axis) { return ds.coord(ids[j], axis); }, kind);
}

Point Centroid(std::span<const Point> pts, CostKind kind) {
  CheckNonEmpty(pts.size(), "centroid");
  return CentroidImpl(
      static_cast<int>(pts.size()), pts.front().dim(),
      [&](int j, int axis) { return pts[j][axis]; }, kind);
}

Point Centroid(const Dataset& ds, std::span<const PointId> ids, CostKind kind) {
  CheckNonEmpty(ids.size(), "centroid");
  return CentroidImpl(
      static_cast<int>(ids.size()), ds.dim(),
      [&](int j, int axis) { return ds.coord(ids[j], axis); }, kind);
}

std::vector<PointId> BoxMembers(const Dataset& ds, const Box& box) {
  std::vector<PointId> ids;
  for (PointId id = 0; id < ds.size(); ++id) {
    if (box.Contains(ds.point(id))) ids.push_back(id);
  }
  return ids;
}

CanonicalGrid::CanonicalGrid(const Dataset& ds)
    : values_(ds.dim()), point_index_(ds.dim()) {
  for (int axis = 0; axis < ds.dim(); ++axis) {
    values_[axis] = CanonicalThresholds(ds, axis + 1);
    point_index_[axis].resize(ds.size());
    for (PointId id = 0; id < ds.size(); ++id) {
      point_index_[axis][id] = IndexOf(axis, ds.coord(id, axis));
    }
  }
}

int CanonicalGrid::IndexOf(int axis, double v) const {
  const auto& vals = values_[axis];
  auto it = std::lower_bound(vals.begin(), vals.end(), v);
  if (it == vals.end() || *it != v) {
    throw std::invalid_argument("value is not a canonical coordinate");
  }
  return static_cast<int>(it - vals.begin());
}

GridBox GridBox::Universal(const CanonicalGrid& grid) {
  GridBox box;
  box.lo.assign(grid.dim(), -1);
  box.hi.resize(grid.dim());
  for (int axis = 0; axis < grid.dim(); ++axis) box.hi[axis] = grid.count(axis);
  return box;
}

std::uint64_t GridBox::Encode(const CanonicalGrid& grid) const {
  std::uint64_t key = 0;
  for (int axis = 0; axis < grid.dim(); ++axis) {
    const std::uint64_t radix = static_cast<std::uint64_t>(grid.count(axis)) + 1;
    key = (key * radix + static_cast<std::uint64_t>(lo[axis] + 1)) * radix +
          static_cast<std::uint64_t>(hi[axis]);
  }
  return key;
}

Box GridBox::ToBox(const CanonicalGrid& grid) const {
  Box box = Box::Universal(grid.dim());
  for (int axis = 0; axis < grid.dim(); ++axis) {
    if (lo[axis] >= 0) box.lower[axis] = grid.value(axis, lo[axis]);
    if (hi[axis] < grid.count(axis)) box.upper[axis] = grid.value(axis, hi[axis]);
  }
  return box;
}

GridBox GridBox::LeftOf(int axis, int t) const {
  GridBox child = *this;
  child.hi[axis] = t;
  return child;
}

GridBox GridBox::RightOf(int axis, int t) const {
  GridBox child = *this;
  child.lo[axis] = t;
  return child;
}

}  // namespace xclust
