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

#include "xclust/oracle.h"

#include <algorithm>
#include <set>

namespace xclust {
namespace {

void Require(bool ok, const std::string& what) {
  if (!ok) throw ResourceError("oracle limit exceeded: " + what);
}

bool Left(const Point& p, int dim, double theta) {
  return p.coords[dim - 1] <= theta;
}

// All (dim, theta) pairs with theta a coordinate of some point in `ids`.
std::vector<Cut> AllCuts(const Dataset& ds, const std::vector<PointId>& ids) {
  std::vector<Cut> cuts;
  for (int dim = 1; dim <= ds.dim(); ++dim) {
    std::set<double> values;
    for (PointId id : ids) values.insert(ds.point(id).coords[dim - 1]);
    for (double v : values) cuts.push_back(Cut{dim, v});
  }
  return cuts;
}

// Some canonical tree over `ids` whose leaves are exactly the label classes.
std::optional<ThresholdTree> Separate(const Clustering& cl,
                                      const std::vector<PointId>& ids) {
  std::set<Label> labels;
  for (PointId id : ids) labels.insert(cl.label(id));
  if (labels.size() == 1) return ThresholdTree::Leaf(*labels.begin());

  for (const Cut& cut : AllCuts(cl.dataset(), ids)) {
    std::vector<PointId> left, right;
    std::set<Label> left_labels, right_labels;
    for (PointId id : ids) {
      if (Left(cl.dataset().point(id), cut.dim, cut.theta)) {
        left.push_back(id);
        left_labels.insert(cl.label(id));
      } else {
        right.push_back(id);
        right_labels.insert(cl.label(id));
      }
    }
    if (left.empty() || right.empty()) continue;
    bool clean = true;
    for (Label l : left_labels) clean = clean && !right_labels.count(l);
    if (!clean) continue;
    auto l = Separate(cl, left);
    if (!l) continue;
    auto r = Separate(cl, right);
    if (!r) continue;
    return ThresholdTree::Split(cut, *l, *r);
  }
  return std::nullopt;
}

// Visits every subset of {0..n-1} of size m in lexicographic order until
// `visit` returns true.
template <typename Visit>
bool ForEachSubset(int n, int m, Visit visit) {
  std::vector<int> pick(m);
  for (int i = 0; i < m; ++i) pick[i] = i;
  while (true) {
    if (visit(pick)) return true;
    int i = m - 1;
    while (i >= 0 && pick[i] == n - m + i) --i;
    if (i < 0) return false;
    ++pick[i];
    for (int j = i + 1; j < m; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

ExplainableResult BruteExplainable(const Dataset& ds, int k, CostKind kind) {
  Require(ds.size() <= 10, "n <= 10");
  Require(ds.dim() <= 2, "d <= 2");
  Require(k <= 4, "k <= 4");
  if (k < 1 || k > ds.size()) throw std::invalid_argument("k must be in 1..n");

  const std::vector<Cut> cuts = AllCuts(ds, ds.AllIds());
  const std::size_t m = cuts.size();
  std::optional<ExplainableResult> best;
  for (const TreeShape& shape : EnumerateShapes(k)) {
    const int internal = shape.internal_count();
    std::vector<std::size_t> digit(internal, 0);
    while (true) {
      std::vector<Cut> assigned;
      for (std::size_t c : digit) assigned.push_back(cuts[c]);
      ThresholdTree tree = shape.Instantiate(assigned);

      std::vector<std::vector<PointId>> leaves(k);
      for (PointId id = 0; id < ds.size(); ++id) {
        leaves[tree.Route(ds.point(id)) - 1].push_back(id);
      }
      const bool nonempty = std::none_of(
          leaves.begin(), leaves.end(),
          [](const std::vector<PointId>& v) { return v.empty(); });
      if (nonempty) {
        double cost = 0.0;
        for (const auto& leaf : leaves) cost += ClusterCost(ds, leaf, kind);
        if (!best || cost < best->cost) {
          ExplainableResult r;
          r.tree = tree;
          for (int l = 0; l < k; ++l) r.clusters[l + 1] = leaves[l];
          r.cost = cost;
          r.kind = kind;
          best = std::move(r);
        }
      }

      int j = internal - 1;
      while (j >= 0 && ++digit[j] == m) digit[j--] = 0;
      if (j < 0) break;
    }
  }
  if (!best) {
    throw std::invalid_argument("no explainable clustering with nonempty "
                                "clusters exists");
  }
  return *best;
}

std::optional<ExplanationResult> BruteExplanation(const Clustering& cl, int s) {
  Require(cl.size() <= 12, "n <= 12");
  Require(s <= 4, "s <= 4");
  Require(cl.k() <= 3, "k <= 3");
  if (s < 0) throw std::invalid_argument("s must be >= 0");

  const int n = cl.size();
  std::optional<ExplanationResult> found;
  for (int m = 0; m <= std::min(s, n); ++m) {
    const bool hit = ForEachSubset(n, m, [&](const std::vector<int>& pick) {
      std::vector<char> gone(n, 0);
      for (int id : pick) gone[id] = 1;
      std::vector<PointId> rest;
      for (PointId id = 0; id < n; ++id) {
        if (!gone[id]) rest.push_back(id);
      }
      std::optional<ThresholdTree> tree =
          rest.empty() ? std::optional<ThresholdTree>(ThresholdTree::Leaf(1))
                       : Separate(cl, rest);
      if (!tree) return false;
      found = ExplanationResult{std::vector<PointId>(pick.begin(), pick.end()),
                                *tree};
      return true;
    });
    if (hit) break;
  }
  return found;
}

double BruteUnconstrained(const Dataset& ds, int k, CostKind kind) {
  const int n = ds.size();
  Require(n <= 8, "n <= 8");
  if (k < 1 || k > n) throw std::invalid_argument("k must be in 1..n");

  // Restricted growth strings: part[i] <= 1 + max(part[0..i-1]).
  std::vector<int> part(n, 0);
  double best = kInf;
  std::function<void(int, int)> rec = [&](int i, int used) {
    if (used + (n - i) < k) return;
    if (i == n) {
      if (used != k) return;
      std::vector<std::vector<PointId>> groups(k);
      for (PointId id = 0; id < n; ++id) groups[part[id]].push_back(id);
      double cost = 0.0;
      for (const auto& g : groups) cost += ClusterCost(ds, g, kind);
      best = std::min(best, cost);
      return;
    }
    for (int p = 0; p <= std::min(used, k - 1); ++p) {
      part[i] = p;
      rec(i + 1, std::max(used, p + 1));
    }
  };
  rec(0, 0);
  return best;
}

}  // namespace xclust
