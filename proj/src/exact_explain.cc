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

// Exact clustering explanation by dynamic programming over canonical boxes.
//
// For a box B and a proper family S of clusters (every cluster inside B is in
// S, none outside is), w(B, S) counts the points that must go: the optimal
// number removed inside B so that the truncated clusters of S become
// explainable, plus the parts of S-clusters outside B, plus the points of
// non-S clusters inside B. Values above the budget s saturate to infinity.

#include <algorithm>
#include <bit>
#include <climits>
#include <cmath>
#include <unordered_map>

#include "xclust/explanation.h"

namespace xclust {
namespace {

constexpr int kInfW = INT_MAX;

struct BoxInfo {
  std::vector<int> inside;   // per label, points of that cluster in the box
  std::vector<Label> split;  // labels split by the box, ascending
  bool feasible = true;      // at most s clusters split
};

struct Decision {
  enum class Kind { kEmpty, kCollapse, kCut } kind = Kind::kEmpty;
  Label keep = 0;
  int axis = 0;
  int t = 0;
  std::uint64_t left_set = 0;
  std::uint64_t right_set = 0;
};

struct Entry {
  int w = kInfW;
  Decision decision;
};

struct KeyHash {
  std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& k) const {
    return std::hash<std::uint64_t>()(k.first * 0x9E3779B97F4A7C15ULL ^ k.second);
  }
};

std::uint64_t Bit(Label c) { return std::uint64_t{1} << (c - 1); }

class ExplainDp {
 public:
  ExplainDp(const Clustering& cl, int s)
      : cl_(cl), s_(s), grid_(cl.dataset()), total_(cl.k() + 1, 0) {
    for (Label c : cl.labels()) ++total_[c];
  }

  int Solve(const GridBox& box, std::uint64_t set) { return W(box, set); }

  // Rebuilds the witness below (box, set). Returns nullopt when no cluster
  // survives in the box.
  std::optional<ThresholdTree> Build(const GridBox& box, std::uint64_t set,
                                     std::vector<PointId>& removed) {
    const Decision d = memo_.at(Key(box, set)).decision;
    switch (d.kind) {
      case Decision::Kind::kEmpty:
        for (PointId id : PointsIn(box)) removed.push_back(id);
        return std::nullopt;
      case Decision::Kind::kCollapse:
        for (PointId id : PointsIn(box)) {
          if (cl_.label(id) != d.keep) removed.push_back(id);
        }
        return ThresholdTree::Leaf(d.keep);
      case Decision::Kind::kCut: {
        auto left = Build(box.LeftOf(d.axis, d.t), d.left_set, removed);
        auto right = Build(box.RightOf(d.axis, d.t), d.right_set, removed);
        if (left && right) {
          const Cut cut{d.axis + 1, grid_.value(d.axis, d.t)};
          return ThresholdTree::Split(cut, *left, *right);
        }
        return left ? left : right;
      }
    }
    return std::nullopt;
  }

  const CanonicalGrid& grid() const { return grid_; }

 private:
  bool InBox(const GridBox& box, PointId id) const {
    for (int axis = 0; axis < grid_.dim(); ++axis) {
      const int c = grid_.PointIndex(axis, id);
      if (c <= box.lo[axis] || c > box.hi[axis]) return false;
    }
    return true;
  }

  std::vector<PointId> PointsIn(const GridBox& box) const {
    std::vector<PointId> ids;
    for (PointId id = 0; id < cl_.size(); ++id) {
      if (InBox(box, id)) ids.push_back(id);
    }
    return ids;
  }

  const BoxInfo& Info(const GridBox& box) {
    const std::uint64_t code = box.Encode(grid_);
    auto it = info_.find(code);
    if (it != info_.end()) return it->second;
    BoxInfo info;
    info.inside.assign(cl_.k() + 1, 0);
    for (PointId id = 0; id < cl_.size(); ++id) {
      if (InBox(box, id)) ++info.inside[cl_.label(id)];
    }
    for (Label c = 1; c <= cl_.k(); ++c) {
      if (info.inside[c] > 0 && info.inside[c] < total_[c]) info.split.push_back(c);
    }
    info.feasible = static_cast<int>(info.split.size()) <= s_;
    return info_.emplace(code, std::move(info)).first->second;
  }

  // Memo key: the box plus which of its split clusters are kept. Clusters
  // wholly inside are always in the set and those outside never are.
  std::pair<std::uint64_t, std::uint64_t> Key(const GridBox& box,
                                              std::uint64_t set) {
    const BoxInfo& info = Info(box);
    std::uint64_t selection = 0;
    for (std::size_t j = 0; j < info.split.size(); ++j) {
      if (set & Bit(info.split[j])) selection |= std::uint64_t{1} << j;
    }
    return {box.Encode(grid_), selection};
  }

  int Saturate(long long v) const { return v > s_ ? kInfW : static_cast<int>(v); }

  int W(const GridBox& box, std::uint64_t set) {
    const auto key = Key(box, set);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second.w;

    Entry entry;
    const BoxInfo& info = Info(box);
    if (!info.feasible) {
      memo_.emplace(key, entry);
      return kInfW;
    }

    // Points that are charged regardless of how the box is explained.
    long long base = 0;
    long long kept_inside = 0;
    for (Label c = 1; c <= cl_.k(); ++c) {
      if (set & Bit(c)) {
        base += total_[c] - info.inside[c];
        kept_inside += info.inside[c];
      } else {
        base += info.inside[c];
      }
    }

    if (set == 0) {
      entry.w = Saturate(base);
      entry.decision.kind = Decision::Kind::kEmpty;
      memo_.emplace(key, entry);
      return entry.w;
    }

    // Collapse: a single cluster survives in the box.
    for (Label c = 1; c <= cl_.k(); ++c) {
      if (!(set & Bit(c))) continue;
      const int v = Saturate(base + kept_inside - info.inside[c]);
      if (v < entry.w) {
        entry.w = v;
        entry.decision = Decision{Decision::Kind::kCollapse, c, 0, 0, 0, 0};
      }
    }

    if (std::popcount(set) >= 2) {
      for (int axis = 0; axis < grid_.dim(); ++axis) {
        for (int t = box.lo[axis] + 1; t < box.hi[axis]; ++t) {
          TryCut(box, set, info, axis, t, entry);
        }
      }
    }

    memo_.emplace(key, entry);
    return entry.w;
  }

  void TryCut(const GridBox& box, std::uint64_t set, const BoxInfo& info,
              int axis, int t, Entry& entry) {
    const GridBox left = box.LeftOf(axis, t);
    const GridBox right = box.RightOf(axis, t);
    const BoxInfo& left_info = Info(left);
    if (!left_info.feasible || !Info(right).feasible) return;

    std::uint64_t forced_left = 0;
    std::uint64_t forced_right = 0;
    std::vector<Label> free;
    for (Label c = 1; c <= cl_.k(); ++c) {
      if (!(set & Bit(c))) continue;
      const int in_left = left_info.inside[c];
      const int in_right = info.inside[c] - in_left;
      if (in_left == 0) {
        forced_right |= Bit(c);
      } else if (in_right == 0) {
        forced_left |= Bit(c);
      } else {
        free.push_back(c);
      }
    }

    const std::uint64_t choices = std::uint64_t{1} << free.size();
    for (std::uint64_t mask = 0; mask < choices; ++mask) {
      std::uint64_t s1 = forced_left;
      std::uint64_t s2 = forced_right;
      for (std::size_t j = 0; j < free.size(); ++j) {
        ((mask >> j) & 1 ? s1 : s2) |= Bit(free[j]);
      }
      // Points of an S1 cluster right of the cut (and vice versa) are
      // removed, and both children charge them.
      long long delta = 0;
      for (Label c = 1; c <= cl_.k(); ++c) {
        const int in_left = left_info.inside[c];
        if (s1 & Bit(c)) delta += info.inside[c] - in_left;
        if (s2 & Bit(c)) delta += in_left;
      }
      const int w1 = W(left, s1);
      if (w1 == kInfW) continue;
      const int w2 = W(right, s2);
      if (w2 == kInfW) continue;
      const int v = Saturate(static_cast<long long>(w1) + w2 - delta);
      if (v < entry.w) {
        entry.w = v;
        entry.decision = Decision{Decision::Kind::kCut, 0, axis, t, s1, s2};
      }
    }
  }

  const Clustering& cl_;
  const int s_;
  CanonicalGrid grid_;
  std::vector<int> total_;
  std::unordered_map<std::uint64_t, BoxInfo> info_;
  std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, Entry, KeyHash>
      memo_;
};

void CheckLimits(const Clustering& cl, const ExactLimits& limits) {
  if (cl.k() > 64) throw ResourceError("exact explanation supports k <= 64");
  const CanonicalGrid grid(cl.dataset());
  double log_keys = 0.0;
  for (int axis = 0; axis < grid.dim(); ++axis) {
    log_keys += 2.0 * std::log2(grid.count(axis) + 1.0);
  }
  if (log_keys > 62.0) {
    throw ResourceError("box state space too large for exact explanation");
  }
  if (limits.force) return;
  if (cl.size() > limits.max_points || cl.dim() > limits.max_dim) {
    throw ResourceError(
        "instance too large for exact explanation (n=" +
        std::to_string(cl.size()) + ", d=" + std::to_string(cl.dim()) +
        "; limits n<=" + std::to_string(limits.max_points) +
        ", d<=" + std::to_string(limits.max_dim) +
        "); use the greedy method or kernelize first, or force");
  }
}

}  // namespace

std::optional<ExplanationResult> ExactExplain(const Clustering& cl, int s,
                                              const ExactLimits& limits) {
  if (s < 0) throw std::invalid_argument("budget s must be >= 0");
  CheckLimits(cl, limits);
  ExplainDp dp(cl, s);
  const GridBox root = GridBox::Universal(dp.grid());
  std::uint64_t all = 0;
  for (Label c = 1; c <= cl.k(); ++c) all |= Bit(c);
  if (dp.Solve(root, all) == kInfW) return std::nullopt;

  ExplanationResult result;
  auto tree = dp.Build(root, all, result.removed);
  // The root keeps every cluster, so some leaf always survives.
  result.tree = *tree;
  std::sort(result.removed.begin(), result.removed.end());
  return result;
}

OptExplanation OptExplain(const Clustering& cl, const ExactLimits& limits) {
  CheckLimits(cl, limits);
  const int upper = GreedyExplain(cl).removed_count();
  const int lower =
      cl.k() <= 1 ? 0 : (upper + cl.k() - 2) / (cl.k() - 1);
  for (int s = lower; s <= upper; ++s) {
    if (auto result = ExactExplain(cl, s, limits)) {
      return OptExplanation{result->removed_count(), std::move(*result)};
    }
  }
  // Unreachable: the greedy removal set is itself feasible at s = upper.
  throw std::logic_error("exact search found no solution within greedy bound");
}

}  // namespace xclust
