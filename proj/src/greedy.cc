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
namespace {

enum class Side { kLeft, kRight };

// Which side each present cluster keeps under one cut, following the three
// majority cases. Returns false if the cut cannot leave a cluster on both
// sides.
bool AssignSides(const std::vector<Label>& present,
                 const std::vector<int>& left_count,
                 const std::vector<int>& right_count,
                 std::vector<Side>& keep) {
  bool all_left = true;
  bool all_right = true;
  for (Label c : present) {
    all_left = all_left && left_count[c] > right_count[c];
    all_right = all_right && right_count[c] > left_count[c];
  }

  if (all_left || all_right) {
    // One cluster crosses to the minority side; pick the one with the
    // smallest minority-side loss among those that still have points there.
    const auto& major = all_left ? left_count : right_count;
    const auto& minor = all_left ? right_count : left_count;
    Label chosen = 0;
    for (Label c : present) {
      if (minor[c] > 0 && (chosen == 0 || major[c] < major[chosen])) chosen = c;
    }
    if (chosen == 0) return false;
    const Side major_side = all_left ? Side::kLeft : Side::kRight;
    const Side minor_side = all_left ? Side::kRight : Side::kLeft;
    for (Label c : present) keep[c] = c == chosen ? minor_side : major_side;
    return true;
  }

  bool has_left = false;
  bool has_right = false;
  for (Label c : present) {
    if (left_count[c] > right_count[c]) {
      keep[c] = Side::kLeft;
      has_left = true;
    } else if (right_count[c] > left_count[c]) {
      keep[c] = Side::kRight;
      has_right = true;
    }
  }
  for (Label c : present) {
    if (left_count[c] != right_count[c]) continue;
    if (!has_left) {
      keep[c] = Side::kLeft;
      has_left = true;
    } else if (!has_right) {
      keep[c] = Side::kRight;
      has_right = true;
    } else {
      keep[c] = Side::kLeft;
    }
  }
  return has_left && has_right;
}

ExplanationResult Explain(const Clustering& cl, std::vector<PointId> active) {
  const auto members = cl.Members(active);
  Label largest = 0;
  int present_count = 0;
  for (const auto& [label, ids] : members) {
    if (ids.empty()) continue;
    ++present_count;
    if (largest == 0 || ids.size() > members.at(largest).size()) largest = label;
  }
  if (present_count <= 1) {
    return ExplanationResult{{}, ThresholdTree::Leaf(largest == 0 ? 1 : largest)};
  }

  const int collapse_cost =
      static_cast<int>(active.size() - members.at(largest).size());
  const auto choice = BestCut(cl, active);
  if (!choice || collapse_cost <= static_cast<int>(choice->removal.size())) {
    // Keeping only the largest cluster is at least as cheap as any cut.
    ExplanationResult result{{}, ThresholdTree::Leaf(largest)};
    for (PointId id : active) {
      if (cl.label(id) != largest) result.removed.push_back(id);
    }
    std::sort(result.removed.begin(), result.removed.end());
    return result;
  }

  std::vector<bool> drop(cl.size(), false);
  for (PointId id : choice->removal) drop[id] = true;
  std::vector<PointId> left, right;
  for (PointId id : active) {
    if (drop[id]) continue;
    (choice->cut.GoesLeft(cl.dataset().point(id)) ? left : right).push_back(id);
  }
  ExplanationResult l = Explain(cl, std::move(left));
  ExplanationResult r = Explain(cl, std::move(right));

  ExplanationResult result{choice->removal,
                           ThresholdTree::Split(choice->cut, l.tree, r.tree)};
  result.removed.insert(result.removed.end(), l.removed.begin(),
                        l.removed.end());
  result.removed.insert(result.removed.end(), r.removed.begin(),
                        r.removed.end());
  std::sort(result.removed.begin(), result.removed.end());
  return result;
}

}  // namespace

std::optional<CutChoice> BestCut(const Clustering& cl,
                                 std::span<const PointId> active) {
  const Dataset& ds = cl.dataset();
  const auto members = cl.Members(active);
  std::vector<Label> present;
  for (const auto& [label, ids] : members) {
    if (!ids.empty()) present.push_back(label);
  }
  if (present.size() < 2) {
    throw std::invalid_argument("best_cut needs at least two nonempty clusters");
  }

  const int k = cl.k();
  std::vector<int> left_count(k + 1), right_count(k + 1);
  std::vector<Side> keep(k + 1), best_keep;
  std::optional<Cut> best_cut;
  int best_cost = 0;

  for (int dim = 1; dim <= ds.dim(); ++dim) {
    for (double theta : CanonicalThresholds(ds, active, dim)) {
      const Cut cut{dim, theta};
      std::fill(left_count.begin(), left_count.end(), 0);
      std::fill(right_count.begin(), right_count.end(), 0);
      for (PointId id : active) {
        ++(cut.GoesLeft(ds.point(id)) ? left_count : right_count)[cl.label(id)];
      }
      if (!AssignSides(present, left_count, right_count, keep)) continue;
      int cost = 0;
      for (Label c : present) {
        cost += keep[c] == Side::kLeft ? right_count[c] : left_count[c];
      }
      if (!best_cut || cost < best_cost) {
        best_cut = cut;
        best_cost = cost;
        best_keep = keep;
      }
    }
  }
  if (!best_cut) return std::nullopt;

  CutChoice choice{*best_cut, {}};
  for (PointId id : active) {
    const bool left = best_cut->GoesLeft(ds.point(id));
    if (left != (best_keep[cl.label(id)] == Side::kLeft)) {
      choice.removal.push_back(id);
    }
  }
  std::sort(choice.removal.begin(), choice.removal.end());
  return choice;
}

ExplanationResult GreedyExplain(const Clustering& cl) {
  return Explain(cl, cl.dataset().AllIds());
}

bool CheckExplainable(const Clustering& cl) {
  return GreedyExplain(cl).removed.empty();
}

}  // namespace xclust
