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

#include <optional>

#include "xclust/explainable.h"

namespace xclust {
namespace {

struct Branch {
  double cost = kInf;
  std::optional<ThresholdTree> tree;
};

class Brancher {
 public:
  Brancher(const Dataset& ds, CostKind kind) : ds_(ds), kind_(kind) {}

  Branch Best(const std::vector<PointId>& ids, int k) const {
    if (static_cast<int>(ids.size()) < k) return {};
    if (k == 1) return {ClusterCost(ds_, ids, kind_), ThresholdTree::Leaf(1)};

    Branch best;
    for (int k1 = 1; k1 < k; ++k1) {
      for (int dim = 1; dim <= ds_.dim(); ++dim) {
        for (double theta : CanonicalThresholds(ds_, ids, dim)) {
          const Cut cut{dim, theta};
          const auto [left, right] = CutApply(ds_, ids, cut);
          if (static_cast<int>(left.size()) < k1 ||
              static_cast<int>(right.size()) < k - k1) {
            continue;
          }
          Branch l = Best(left, k1);
          if (!l.tree || l.cost >= best.cost) continue;
          Branch r = Best(right, k - k1);
          if (!r.tree) continue;
          const double cost = l.cost + r.cost;
          if (cost < best.cost) {
            best.cost = cost;
            best.tree = ThresholdTree::Split(cut, *l.tree, *r.tree);
          }
        }
      }
    }
    return best;
  }

 private:
  const Dataset& ds_;
  CostKind kind_;
};

}  // namespace

double ClusteringCost(const Dataset& ds, const LabeledClusters& clusters,
                      CostKind kind) {
  double total = 0.0;
  for (const auto& [label, ids] : clusters) {
    if (!ids.empty()) total += ClusterCost(ds, ids, kind);
  }
  return total;
}

ExplainableResult SolveBranching(const Dataset& ds, int k, CostKind kind,
                                 const SolverLimits& limits) {
  if (k < 1 || k > ds.size()) {
    throw std::invalid_argument("k=" + std::to_string(k) +
                                " must be in 1..n (n=" +
                                std::to_string(ds.size()) + ")");
  }
  if (!limits.force && k > limits.max_k) {
    throw ResourceError("branching solver limited to k <= " +
                        std::to_string(limits.max_k) + "; force to override");
  }
  const Branch best = Brancher(ds, kind).Best(ds.AllIds(), k);
  if (!best.tree) {
    throw std::invalid_argument(
        "no explainable clustering with nonempty clusters (too few distinct "
        "points for k=" + std::to_string(k) + ")");
  }
  ExplainableResult result;
  result.tree = RelabelLeftToRight(*best.tree);
  result.clusters = TreeEvaluate(result.tree, ds);
  result.cost = ClusteringCost(ds, result.clusters, kind);
  result.kind = kind;
  return result;
}

}  // namespace xclust
