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

// Clustering explanation: given a labeled clustering, find few points whose
// removal lets a threshold tree reproduce the remaining clusters exactly.

#ifndef XCLUST_EXPLANATION_H_
#define XCLUST_EXPLANATION_H_

#include <optional>
#include <span>
#include <vector>

#include "xclust/core.h"
#include "xclust/tree.h"

namespace xclust {

// A partition of a dataset into k nonempty labeled clusters.
class Clustering {
 public:
  // Throws std::invalid_argument if a label is outside 1..k, some label in
  // 1..k is unused, or the label count differs from the point count.
  Clustering(Dataset ds, std::vector<Label> labels, int k);
  // k = largest label.
  Clustering(Dataset ds, std::vector<Label> labels);

  const Dataset& dataset() const { return ds_; }
  const std::vector<Label>& labels() const { return labels_; }
  Label label(PointId id) const { return labels_[id]; }
  int k() const { return k_; }
  int size() const { return ds_.size(); }
  int dim() const { return ds_.dim(); }

  // Ids per label, in id order; labels with no point among `ids` map to an
  // empty vector.
  LabeledClusters Members(std::span<const PointId> ids) const;
  // Nonempty clusters C_i \ removed, keyed by label.
  LabeledClusters Survivors(std::span<const PointId> removed) const;

 private:
  Dataset ds_;
  std::vector<Label> labels_;
  int k_;
};

struct ExplanationResult {
  // Sorted ascending.
  std::vector<PointId> removed;
  // One leaf per nonempty surviving cluster, labeled with its original label.
  ThresholdTree tree = ThresholdTree::Leaf(1);

  int removed_count() const { return static_cast<int>(removed.size()); }
};

struct CutChoice {
  Cut cut;
  std::vector<PointId> removal;  // sorted ascending
};

// Cheapest single cut over `active`: afterwards every cluster lies wholly on
// one side and each side keeps at least one cluster. Returns nullopt when no
// canonical cut can separate anything (all active points coincide on every
// axis). Throws std::invalid_argument if fewer than two clusters are present.
std::optional<CutChoice> BestCut(const Clustering& cl,
                                 std::span<const PointId> active);

// Top-down greedy explanation; removes at most (k-1) * OPT points.
ExplanationResult GreedyExplain(const Clustering& cl);

// True iff the clustering is already explainable.
bool CheckExplainable(const Clustering& cl);

struct ExactLimits {
  int max_points = 40;
  int max_dim = 4;
  bool force = false;
};

// Minimum-size removal set of size <= s with a witness tree, or nullopt if
// none exists. Throws std::invalid_argument for s < 0 and ResourceError when
// the instance exceeds `limits` (unless forced).
std::optional<ExplanationResult> ExactExplain(const Clustering& cl, int s,
                                              const ExactLimits& limits = {});

struct KernelResult {
  Clustering kernel;
  // kernel point id -> original point id
  std::vector<PointId> original_ids;
};

// Equivalent instance with at most 2(s+1)dk points whose coordinates are
// ranks in 1..(number of kernel points).
KernelResult Kernelize(const Clustering& cl, int s);

struct OptExplanation {
  int opt = 0;
  ExplanationResult result;
};

// Smallest s for which ExactExplain succeeds.
OptExplanation OptExplain(const Clustering& cl, const ExactLimits& limits = {});

}  // namespace xclust

#endif  // XCLUST_EXPLANATION_H_
