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

#include "xclust/explanation.h"

namespace xclust {

KernelResult Kernelize(const Clustering& cl, int s) {
  if (s < 0) throw std::invalid_argument("budget s must be >= 0");
  const Dataset& ds = cl.dataset();
  const auto members = cl.Members(ds.AllIds());

  // Per cluster and axis, keep the s+1 extreme points at either end; a
  // removal set of size <= s cannot strip all of them.
  std::vector<bool> marked(ds.size(), false);
  for (const auto& [label, ids] : members) {
    const std::size_t keep = std::min<std::size_t>(s + 1, ids.size());
    for (int axis = 0; axis < ds.dim(); ++axis) {
      std::vector<PointId> order = ids;
      std::sort(order.begin(), order.end(), [&](PointId a, PointId b) {
        const double va = ds.coord(a, axis);
        const double vb = ds.coord(b, axis);
        return va != vb ? va < vb : a < b;
      });
      for (std::size_t j = 0; j < keep; ++j) {
        marked[order[j]] = true;
        marked[order[order.size() - 1 - j]] = true;
      }
    }
  }

  std::vector<PointId> kept;
  for (PointId id = 0; id < ds.size(); ++id) {
    if (marked[id]) kept.push_back(id);
  }
  const Dataset survivors = ds.Subset(kept);

  // Replace coordinates by their 1-based rank among the survivors' distinct
  // values; cuts only see the order, so this preserves every answer.
  std::vector<Point> compressed(kept.size(), Point(std::vector<double>(ds.dim())));
  for (int axis = 0; axis < ds.dim(); ++axis) {
    const auto values = CanonicalThresholds(survivors, axis + 1);
    for (std::size_t j = 0; j < kept.size(); ++j) {
      const auto it = std::lower_bound(values.begin(), values.end(),
                                       survivors.coord(static_cast<int>(j), axis));
      compressed[j].coords[axis] = static_cast<double>(it - values.begin() + 1);
    }
  }

  std::vector<Label> labels;
  labels.reserve(kept.size());
  for (PointId id : kept) labels.push_back(cl.label(id));
  return KernelResult{
      Clustering(Dataset(std::move(compressed)), std::move(labels), cl.k()),
      std::move(kept)};
}

}  // namespace xclust
