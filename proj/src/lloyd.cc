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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "xclust/explainable.h"

namespace xclust {
namespace {

double Distance(const Point& a, const Point& b, CostKind kind) {
  double total = 0.0;
  for (int i = 0; i < a.dim(); ++i) {
    const double diff = a[i] - b[i];
    total += kind == CostKind::kMeans ? diff * diff : std::abs(diff);
  }
  return total;
}

}  // namespace

LloydResult LloydBaseline(const Dataset& ds, int k, CostKind kind,
                          std::uint64_t seed, int iters) {
  const int n = ds.size();
  if (k < 1 || k > n) {
    throw std::invalid_argument("k=" + std::to_string(k) +
                                " must be in 1..n (n=" + std::to_string(n) +
                                ")");
  }
  if (iters < 1) throw std::invalid_argument("iters must be >= 1");

  std::mt19937_64 rng(seed);
  std::vector<PointId> ids = ds.AllIds();
  std::vector<PointId> seeds;
  std::sample(ids.begin(), ids.end(), std::back_inserter(seeds), k, rng);

  LloydResult result;
  for (PointId id : seeds) result.centers.push_back(ds.point(id));
  result.labels.assign(n, 0);

  for (int it = 0; it < iters; ++it) {
    bool changed = false;
    for (PointId id = 0; id < n; ++id) {
      Label best = 1;
      double best_dist = kInf;
      for (int c = 0; c < k; ++c) {
        const double dist = Distance(ds.point(id), result.centers[c], kind);
        if (dist < best_dist) {
          best_dist = dist;
          best = c + 1;
        }
      }
      if (result.labels[id] != best) {
        result.labels[id] = best;
        changed = true;
      }
    }
    result.iterations = it + 1;
    if (!changed) break;
    for (int c = 0; c < k; ++c) {
      std::vector<PointId> members;
      for (PointId id = 0; id < n; ++id) {
        if (result.labels[id] == c + 1) members.push_back(id);
      }
      // An emptied cluster keeps its previous center.
      if (!members.empty()) result.centers[c] = Centroid(ds, members, kind);
    }
  }

  LabeledClusters clusters;
  for (PointId id = 0; id < n; ++id) clusters[result.labels[id]].push_back(id);
  result.cost = ClusteringCost(ds, clusters, kind);
  return result;
}

}  // namespace xclust
