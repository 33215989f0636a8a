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

#ifndef XCLUST_TREE_H_
#define XCLUST_TREE_H_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "xclust/core.h"

namespace xclust {

// Point ids per leaf label. Leaves that receive no points map to an empty
// vector rather than being dropped.
using LabeledClusters = std::map<Label, std::vector<PointId>>;

// A threshold tree stored as a flat node array; node 0 is the root.
class ThresholdTree {
 public:
  struct Node {
    std::optional<Cut> cut;  // set on internal nodes
    int left = -1;
    int right = -1;
    Label label = 0;  // set on leaves

    bool is_leaf() const { return !cut.has_value(); }
  };

  // A single-leaf tree.
  static ThresholdTree Leaf(Label label);
  static ThresholdTree Split(const Cut& cut, const ThresholdTree& left,
                             const ThresholdTree& right);

  const Node& root() const { return nodes_.front(); }
  const Node& node(int index) const { return nodes_[index]; }
  const std::vector<Node>& nodes() const { return nodes_; }
  int leaf_count() const;
  // Leaf labels in left-to-right order.
  std::vector<Label> leaf_labels() const;
  // Internal-node cuts in preorder.
  std::vector<Cut> cuts() const;

  Label Route(const Point& p) const;

  friend bool operator==(const ThresholdTree&, const ThresholdTree&);

 private:
  ThresholdTree() = default;
  int Append(const ThresholdTree& sub);

  std::vector<Node> nodes_;
};

// Same cuts, leaves relabeled 1, 2, ... from left to right.
ThresholdTree RelabelLeftToRight(const ThresholdTree& tree);

LabeledClusters TreeEvaluate(const ThresholdTree& tree, const Dataset& ds);
// Routes only the given ids.
LabeledClusters TreeEvaluate(const ThresholdTree& tree, const Dataset& ds,
                             std::span<const PointId> ids);

// Unlabeled full binary tree; node 0 is the root, children are indices.
struct TreeShape {
  struct Node {
    int left = -1;
    int right = -1;
    bool is_leaf() const { return left < 0; }
  };
  std::vector<Node> nodes;

  int leaf_count() const;
  int internal_count() const { return leaf_count() - 1; }

  // Builds a threshold tree from cuts assigned to internal nodes in preorder;
  // leaves are labeled 1..k left to right.
  ThresholdTree Instantiate(std::span<const Cut> preorder_cuts) const;
};

// Every full binary tree with k leaves, exactly once each. Order: the left
// subtree's leaf count ascends from 1 to k-1, recursively.
std::vector<TreeShape> EnumerateShapes(int k);
std::uint64_t CatalanNumber(int n);

// Structural violations: fullness, leaf count, labels, cut dimensions. An
// empty result means the tree is valid. With `allow_label_subset`, the tree
// may have fewer than k leaves as long as its labels are distinct and within
// 1..k (explanation witnesses whose clusters were removed entirely).
std::vector<std::string> ValidateTree(const ThresholdTree& tree, int d, int k,
                                      bool allow_label_subset = false);

}  // namespace xclust

#endif  // XCLUST_TREE_H_
