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

// Optimal explainable clustering by memoization over canonical boxes:
// cost(box, s) is the cheapest explainable s-clustering of the points inside
// the box, +inf when the box holds fewer than s points or none can be formed.

#include <cmath>
#include <unordered_map>

#include "xclust/explainable.h"

namespace xclust {
namespace {

struct Entry {
  double cost = kInf;
  int axis = -1;  // -1: leaf
  int t = 0;
  int left_leaves = 0;
};

struct KeyHash {
  std::size_t operator()(const std::pair<std::uint64_t, int>& k) const {
    return std::hash<std::uint64_t>()(k.first * 0x9E3779B97F4A7C15ULL +
                                      static_cast<std::uint64_t>(k.second));
  }
};

class CostDp {
 public:
  CostDp(const Dataset& ds, CostKind kind)
      : ds_(ds), kind_(kind), grid_(ds) {}

  const CanonicalGrid& grid() const { return grid_; }

  double Omega(const GridBox& box, int s) {
    const std::pair<std::uint64_t, int> key{box.Encode(grid_), s};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second.cost;

    Entry entry;
    const std::vector<PointId>& members = Members(box);
    if (static_cast<int>(members.size()) >= s) {
      if (s == 1) {
        entry.cost = ClusterCost(ds_, members, kind_);
      } else {
        for (int s1 = 1; s1 < s; ++s1) {
          for (int axis = 0; axis < grid_.dim(); ++axis) {
            for (int t = box.lo[axis] + 1; t < box.hi[axis]; ++t) {
              const double c1 = Omega(box.LeftOf(axis, t), s1);
              if (c1 >= entry.cost) continue;
              const double c2 = Omega(box.RightOf(axis, t), s - s1);
              const double cost = c1 + c2;
              if (cost < entry.cost) entry = Entry{cost, axis, t, s1};
            }
          }
        }
      }
    }
    memo_.emplace(key, entry);
    return entry.cost;
  }

  ThresholdTree Build(const GridBox& box, int s) {
    const Entry& e = memo_.at({box.Encode(grid_), s});
    if (e.axis < 0) return ThresholdTree::Leaf(1);
    const Cut cut{e.axis + 1, grid_.value(e.axis, e.t)};
    return ThresholdTree::Split(cut, Build(box.LeftOf(e.axis, e.t), e.left_leaves),
                                Build(box.RightOf(e.axis, e.t), s - e.left_leaves));
  }

 private:
  const std::vector<PointId>& Members(const GridBox& box) {
    const std::uint64_t code = box.Encode(grid_);
    auto it = members_.find(code);
    if (it != members_.end()) return it->second;
    std::vector<PointId> ids;
    for (PointId id = 0; id < ds_.size(); ++id) {
      bool inside = true;
      for (int axis = 0; axis < grid_.dim() && inside; ++axis) {
        const int c = grid_.PointIndex(axis, id);
        inside = box.lo[axis] < c && c <= box.hi[axis];
      }
      if (inside) ids.push_back(id);
    }
    return members_.emplace(code, std::move(ids)).first->second;
  }

  const Dataset& ds_;
  CostKind kind_;
  CanonicalGrid grid_;
  std::unordered_map<std::uint64_t, std::vector<PointId>> members_;
  std::unordered_map<std::pair<std::uint64_t, int>, Entry, KeyHash> memo_;
};

}  // namespace

ExplainableResult SolveDp(const Dataset& ds, int k, CostKind kind,
                          const SolverLimits& limits) {
  if (k < 1 || k > ds.size()) {
    throw std::invalid_argument("k=" + std::to_string(k) +
                                " must be in 1..n (n=" +
                                std::to_string(ds.size()) + ")");
  }
  if (!limits.force &&
      (ds.size() > limits.max_points || ds.dim() > limits.max_dim)) {
    throw ResourceError("box DP limited to n <= " +
                        std::to_string(limits.max_points) + " and d <= " +
                        std::to_string(limits.max_dim) +
                        "; use branching or approx, or force");
  }
  CostDp dp(ds, kind);
  double log_keys = 0.0;
  for (int axis = 0; axis < ds.dim(); ++axis) {
    log_keys += 2.0 * std::log2(dp.grid().count(axis) + 1.0);
  }
  if (log_keys > 62.0) throw ResourceError("box state space too large");

  const GridBox root = GridBox::Universal(dp.grid());
  if (dp.Omega(root, k) == kInf) {
    throw std::invalid_argument(
        "no explainable clustering with nonempty clusters (too few distinct "
        "points for k=" + std::to_string(k) + ")");
  }
  ExplainableResult result;
  result.tree = RelabelLeftToRight(dp.Build(root, k));
  result.clusters = TreeEvaluate(result.tree, ds);
  result.cost = ClusteringCost(ds, result.clusters, kind);
  result.kind = kind;
  return result;
}

}  // namespace xclust
