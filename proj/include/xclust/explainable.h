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

// Explainable k-means / k-median: find the threshold tree with k nonempty
// leaves of minimum clustering cost.

#ifndef XCLUST_EXPLAINABLE_H_
#define XCLUST_EXPLAINABLE_H_

#include <cstdint>
#include <vector>

#include "xclust/core.h"
#include "xclust/tree.h"

namespace xclust {

struct ExplainableResult {
  ThresholdTree tree = ThresholdTree::Leaf(1);
  LabeledClusters clusters;
  double cost = 0.0;
  CostKind kind = CostKind::kMeans;
};

struct SolverLimits {
  int max_k = 8;        // branching
  int max_points = 40;  // box DP
  int max_dim = 4;      // box DP
  bool force = false;
};

// Exhaustive branching over (left leaf count, cut) at every node. Ties go to
// the smaller left leaf count, then (dim, theta) lexicographically.
ExplainableResult SolveBranching(const Dataset& ds, int k, CostKind kind,
                                 const SolverLimits& limits = {});

// Memoized optimum over canonical boxes and leaf counts. Same tie-breaking as
// SolveBranching.
ExplainableResult SolveDp(const Dataset& ds, int k, CostKind kind,
                          const SolverLimits& limits = {});

struct ApproxResult {
  std::vector<PointId> kept;
  std::vector<PointId> removed;
  ThresholdTree tree = ThresholdTree::Leaf(1);
  LabeledClusters clusters;  // over kept points
  double cost = 0.0;
  double epsilon = 0.0;
  int band = 0;  // n' = floor(eps * n / k); 0 means the exact branch ran
  // Per axis (0-based) the grid thresholds that were searched.
  std::vector<std::vector<double>> rank_grid;
  bool exact_fallback = false;
  // The winning candidate had empty leaves: they were pruned and other leaves
  // split until k leaves remained.
  bool repaired = false;
  // Some split added by the repair uses a canonical threshold off the grid.
  bool off_grid = false;
};

struct ApproxOptions {
  int threads = 1;
  SolverLimits limits;  // for the exact fallback
};

// Searches all tree shapes with cuts restricted to every n'-th order
// statistic per axis, discarding the n' points just above each used grid
// line. Removes at most (k - 1) * n' <= eps * n points and costs no more than
// the best explainable clustering of all points.
ApproxResult SolveApprox(const Dataset& ds, int k, CostKind kind,
                         double epsilon, const ApproxOptions& options = {});

struct LloydResult {
  std::vector<Point> centers;
  std::vector<Label> labels;  // 1-based, per point
  double cost = 0.0;
  int iterations = 0;
};

// Unconstrained Lloyd iterations from k distinct seeded points. Medians use
// L1 assignment and coordinatewise medians.
LloydResult LloydBaseline(const Dataset& ds, int k, CostKind kind,
                          std::uint64_t seed, int iters);

// Sum of cluster costs over the nonempty clusters.
double ClusteringCost(const Dataset& ds, const LabeledClusters& clusters,
                      CostKind kind);

}  // namespace xclust

#endif  // XCLUST_EXPLAINABLE_H_
