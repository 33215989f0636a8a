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
#include <functional>
#include <optional>
#include <limits>
#include <thread>

#include "xclust/explainable.h"

namespace xclust {
namespace {

constexpr double kMaxCandidates = 2e8;

// Per axis: ids in (value, id) order, plus the grid lines drawn over it.
struct RankGrid {
  int band = 0;   // n'
  int lines = 0;  // G
  std::vector<std::vector<PointId>> order;

  RankGrid(const Dataset& ds, int band_size, int line_count)
      : band(band_size), lines(line_count), order(ds.dim()) {
    for (int axis = 0; axis < ds.dim(); ++axis) {
      std::vector<PointId>& o = order[axis];
      o = ds.AllIds();
      std::sort(o.begin(), o.end(), [&](PointId a, PointId b) {
        const double va = ds.coord(a, axis);
        const double vb = ds.coord(b, axis);
        return va != vb ? va < vb : a < b;
      });
    }
  }

  // Threshold of grid line i (1-based): the (i * n')-th order statistic.
  double Threshold(const Dataset& ds, int axis, int i) const {
    return ds.coord(order[axis][static_cast<std::size_t>(i) * band - 1], axis);
  }

  // Marks the n' points ranked just above grid line i (line 0: the lowest n').
  void MarkBand(int axis, int i, std::vector<char>& removed) const {
    const std::size_t n = order[axis].size();
    const std::size_t begin = static_cast<std::size_t>(i) * band;
    const std::size_t end = std::min(begin + band, n);
    for (std::size_t p = begin; p < end; ++p) removed[order[axis][p]] = 1;
  }
};

struct Candidate {
  double cost = kInf;
  std::uint64_t index = std::numeric_limits<std::uint64_t>::max();

  bool Beats(const Candidate& other) const {
    return cost != other.cost ? cost < other.cost : index < other.index;
  }
};

// Drops every subtree that receives none of `kept`; a node with one empty
// side is replaced by its other side.
ThresholdTree PruneEmpty(const ThresholdTree& tree, const Dataset& ds,
                         const std::vector<PointId>& kept) {
  std::vector<int> hits(tree.nodes().size(), 0);
  for (PointId id : kept) {
    int at = 0;
    ++hits[at];
    while (!tree.node(at).is_leaf()) {
      const auto& n = tree.node(at);
      at = n.cut->GoesLeft(ds.point(id)) ? n.left : n.right;
      ++hits[at];
    }
  }
  std::function<ThresholdTree(int)> build = [&](int at) -> ThresholdTree {
    const auto& n = tree.node(at);
    if (n.is_leaf()) return ThresholdTree::Leaf(n.label);
    if (hits[n.left] == 0) return build(n.right);
    if (hits[n.right] == 0) return build(n.left);
    return ThresholdTree::Split(*n.cut, build(n.left), build(n.right));
  };
  return build(0);
}

// Brings a pruned tree back to k leaves by repeatedly applying the cut with
// the largest cost reduction over all leaves. Grid thresholds are tried first;
// other canonical thresholds only when no grid line splits any leaf. Splitting
// never raises the cost. Returns nullopt if the kept points have too few
// distinct values.
std::optional<ThresholdTree> Regrow(ThresholdTree tree, const Dataset& ds,
                                    const std::vector<PointId>& kept, int k,
                                    CostKind kind,
                                    const std::vector<std::vector<double>>& grid,
                                    bool& off_grid) {
  while (tree.leaf_count() < k) {
    tree = RelabelLeftToRight(tree);
    const LabeledClusters leaves = TreeEvaluate(tree, ds, kept);
    double best_gain = -1.0;
    Label best_leaf = 0;
    Cut best_cut;
    for (bool on_grid : {true, false}) {
      for (const auto& [label, ids] : leaves) {
        if (ids.empty()) continue;
        const double base = ClusterCost(ds, ids, kind);
        for (int dim = 1; dim <= ds.dim(); ++dim) {
          const std::vector<double> values = CanonicalThresholds(ds, ids, dim);
          for (double theta : on_grid ? grid[dim - 1] : values) {
            // Both sides must keep a point.
            if (theta < values.front() || theta >= values.back()) continue;
            const Cut cut{dim, theta};
            const auto [l, r] = CutApply(ds, ids, cut);
            const double gain =
                base - ClusterCost(ds, l, kind) - ClusterCost(ds, r, kind);
            if (gain > best_gain) {
              best_gain = gain;
              best_leaf = label;
              best_cut = cut;
            }
          }
        }
      }
      if (best_leaf != 0) {
        off_grid = off_grid || !on_grid;
        break;
      }
    }
    if (best_leaf == 0) return std::nullopt;
    std::function<ThresholdTree(int)> build = [&](int at) -> ThresholdTree {
      const auto& n = tree.node(at);
      if (n.is_leaf()) {
        if (n.label != best_leaf) return ThresholdTree::Leaf(n.label);
        return ThresholdTree::Split(best_cut, ThresholdTree::Leaf(n.label),
                                    ThresholdTree::Leaf(n.label));
      }
      return ThresholdTree::Split(*n.cut, build(n.left), build(n.right));
    };
    tree = build(0);
  }
  return RelabelLeftToRight(tree);
}

class Enumerator {
 public:
  Enumerator(const Dataset& ds, int k, CostKind kind, const RankGrid& grid)
      : ds_(ds),
        k_(k),
        kind_(kind),
        grid_(grid),
        shapes_(EnumerateShapes(k)),
        choices_(static_cast<std::uint64_t>(ds.dim()) * (grid.lines + 1)),
        per_shape_(1),
        thresholds_(ds.dim()) {
    for (int j = 0; j < k - 1; ++j) per_shape_ *= choices_;
    for (int axis = 0; axis < ds.dim(); ++axis) {
      for (int i = 1; i <= grid.lines; ++i) {
        thresholds_[axis].push_back(grid.Threshold(ds, axis, i));
      }
    }
  }

  const std::vector<std::vector<double>>& thresholds() const {
    return thresholds_;
  }

  std::uint64_t total() const { return per_shape_ * shapes_.size(); }

  struct Outcome {
    double cost = kInf;
    std::optional<ThresholdTree> tree;
    std::vector<PointId> kept;
    bool repaired = false;
    bool off_grid = false;
  };

  // Decodes a global index into a tree over the points its bands leave,
  // repairing empty leaves. Line 0 stands below every point: it removes the
  // lowest band and sends the rest right, so its left side is always pruned.
  Outcome Evaluate(std::uint64_t index, std::vector<char>& removed) const {
    const TreeShape& shape = shapes_[index / per_shape_];
    std::uint64_t rest = index % per_shape_;
    const int internal = shape.internal_count();
    std::vector<Cut> cuts(internal);
    std::fill(removed.begin(), removed.end(), 0);
    for (int j = internal - 1; j >= 0; --j) {
      const int c = static_cast<int>(rest % choices_);
      rest /= choices_;
      const int axis = c / (grid_.lines + 1);
      const int line = c % (grid_.lines + 1);
      cuts[j] = Cut{axis + 1, line == 0 ? -kInf
                                        : grid_.Threshold(ds_, axis, line)};
      grid_.MarkBand(axis, line, removed);
    }
    Outcome out;
    for (PointId id = 0; id < ds_.size(); ++id) {
      if (!removed[id]) out.kept.push_back(id);
    }
    ThresholdTree tree = shape.Instantiate(cuts);
    LabeledClusters clusters = TreeEvaluate(tree, ds_, out.kept);
    const bool all_nonempty = std::all_of(
        clusters.begin(), clusters.end(),
        [](const auto& entry) { return !entry.second.empty(); });
    if (!all_nonempty) {
      auto regrown = Regrow(PruneEmpty(tree, ds_, out.kept), ds_, out.kept,
                            k_, kind_, thresholds_, out.off_grid);
      if (!regrown) return out;
      tree = std::move(*regrown);
      clusters = TreeEvaluate(tree, ds_, out.kept);
      out.repaired = true;
    }
    out.cost = ClusteringCost(ds_, clusters, kind_);
    out.tree = std::move(tree);
    return out;
  }

  // Best candidate in [begin, end); cost is +inf if none could be used.
  Candidate Scan(std::uint64_t begin, std::uint64_t end) const {
    Candidate best;
    std::vector<char> removed(ds_.size());
    for (std::uint64_t index = begin; index < end; ++index) {
      const Candidate c{Evaluate(index, removed).cost, index};
      if (c.Beats(best)) best = c;
    }
    return best;
  }

 private:
  const Dataset& ds_;
  int k_;
  CostKind kind_;
  const RankGrid& grid_;
  std::vector<TreeShape> shapes_;
  std::uint64_t choices_;
  std::uint64_t per_shape_;
  std::vector<std::vector<double>> thresholds_;
};

ApproxResult FromExact(const Dataset& ds, int k, CostKind kind, double epsilon,
                       int band, const SolverLimits& limits) {
  ExplainableResult exact = SolveBranching(ds, k, kind, limits);
  ApproxResult result;
  result.kept = ds.AllIds();
  result.tree = std::move(exact.tree);
  result.clusters = std::move(exact.clusters);
  result.cost = exact.cost;
  result.epsilon = epsilon;
  result.band = band;
  return result;
}

}  // namespace

ApproxResult SolveApprox(const Dataset& ds, int k, CostKind kind,
                         double epsilon, const ApproxOptions& options) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("epsilon must lie in (0, 1)");
  }
  const int n = ds.size();
  if (k < 1 || k > n) {
    throw std::invalid_argument("k=" + std::to_string(k) +
                                " must be in 1..n (n=" + std::to_string(n) +
                                ")");
  }
  const int band = static_cast<int>(std::floor(epsilon * n / k));
  if (band == 0) return FromExact(ds, k, kind, epsilon, 0, options.limits);

  const int lines = static_cast<int>(
      std::min<double>(n / band, std::ceil(2.0 * k / epsilon)));
  const RankGrid grid(ds, band, lines);
  const Enumerator enumerator(ds, k, kind, grid);

  const double candidates =
      static_cast<double>(CatalanNumber(k - 1)) *
      std::pow(static_cast<double>(ds.dim()) * (lines + 1), k - 1);
  if (!options.limits.force && candidates > kMaxCandidates) {
    throw ResourceError("approximate search would enumerate " +
                        std::to_string(candidates) +
                        " candidate trees; raise epsilon or force");
  }

  const std::uint64_t total = enumerator.total();
  const int threads = static_cast<int>(std::clamp<std::uint64_t>(
      static_cast<std::uint64_t>(std::max(options.threads, 1)), 1, total));
  std::vector<Candidate> partial(threads);
  if (threads == 1) {
    partial[0] = enumerator.Scan(0, total);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (total + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      const std::uint64_t begin = std::min(total, chunk * t);
      const std::uint64_t end = std::min(total, begin + chunk);
      pool.emplace_back([&, t, begin, end] {
        partial[t] = enumerator.Scan(begin, end);
      });
    }
    for (std::thread& th : pool) th.join();
  }
  Candidate best;
  for (const Candidate& c : partial) {
    if (c.Beats(best)) best = c;
  }

  if (best.cost == kInf) {
    ApproxResult result = FromExact(ds, k, kind, epsilon, band, options.limits);
    result.exact_fallback = true;
    return result;
  }

  ApproxResult result;
  std::vector<char> removed(n);
  Enumerator::Outcome won = enumerator.Evaluate(best.index, removed);
  result.tree = std::move(*won.tree);
  result.kept = std::move(won.kept);
  for (PointId id = 0; id < n; ++id) {
    if (removed[id]) result.removed.push_back(id);
  }
  result.repaired = won.repaired;
  result.off_grid = won.off_grid;
  result.clusters = TreeEvaluate(result.tree, ds, result.kept);
  result.cost = ClusteringCost(ds, result.clusters, kind);
  result.epsilon = epsilon;
  result.band = band;
  result.rank_grid = enumerator.thresholds();
  return result;
}

}  // namespace xclust
