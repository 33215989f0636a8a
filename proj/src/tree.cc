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

#include "xclust/tree.h"

#include <set>

namespace xclust {

ThresholdTree ThresholdTree::Leaf(Label label) {
  ThresholdTree tree;
  Node leaf;
  leaf.label = label;
  tree.nodes_.push_back(leaf);
  return tree;
}

ThresholdTree ThresholdTree::Split(const Cut& cut, const ThresholdTree& left,
                                   const ThresholdTree& right) {
  ThresholdTree tree;
  tree.nodes_.reserve(1 + left.nodes_.size() + right.nodes_.size());
  Node root;
  root.cut = cut;
  tree.nodes_.push_back(root);
  const int l = tree.Append(left);
  const int r = tree.Append(right);
  tree.nodes_[0].left = l;
  tree.nodes_[0].right = r;
  return tree;
}

int ThresholdTree::Append(const ThresholdTree& sub) {
  const int offset = static_cast<int>(nodes_.size());
  for (Node n : sub.nodes_) {
    if (!n.is_leaf()) {
      n.left += offset;
      n.right += offset;
    }
    nodes_.push_back(n);
  }
  return offset;
}

int ThresholdTree::leaf_count() const {
  int count = 0;
  for (const Node& n : nodes_) count += n.is_leaf() ? 1 : 0;
  return count;
}

std::vector<Label> ThresholdTree::leaf_labels() const {
  std::vector<Label> labels;
  std::vector<int> stack = {0};
  while (!stack.empty()) {
    const Node& n = nodes_[stack.back()];
    stack.pop_back();
    if (n.is_leaf()) {
      labels.push_back(n.label);
    } else {
      stack.push_back(n.right);
      stack.push_back(n.left);
    }
  }
  return labels;
}

std::vector<Cut> ThresholdTree::cuts() const {
  std::vector<Cut> out;
  std::vector<int> stack = {0};
  while (!stack.empty()) {
    const Node& n = nodes_[stack.back()];
    stack.pop_back();
    if (!n.is_leaf()) {
      out.push_back(*n.cut);
      stack.push_back(n.right);
      stack.push_back(n.left);
    }
  }
  return out;
}

Label ThresholdTree::Route(const Point& p) const {
  int at = 0;
  while (!nodes_[at].is_leaf()) {
    at = nodes_[at].cut->GoesLeft(p) ? nodes_[at].left : nodes_[at].right;
  }
  return nodes_[at].label;
}

bool operator==(const ThresholdTree& a, const ThresholdTree& b) {
  if (a.nodes_.size() != b.nodes_.size()) return false;
  for (std::size_t i = 0; i < a.nodes_.size(); ++i) {
    const auto& x = a.nodes_[i];
    const auto& y = b.nodes_[i];
    if (x.cut != y.cut || x.left != y.left || x.right != y.right ||
        x.label != y.label) {
      return false;
    }
  }
  return true;
}

ThresholdTree RelabelLeftToRight(const ThresholdTree& tree) {
  Label next = 1;
  std::function<ThresholdTree(int)> build = [&](int at) -> ThresholdTree {
    const auto& n = tree.node(at);
    if (n.is_leaf()) return ThresholdTree::Leaf(next++);
    ThresholdTree left = build(n.left);
    ThresholdTree right = build(n.right);
    return ThresholdTree::Split(*n.cut, left, right);
  };
  return build(0);
}

LabeledClusters TreeEvaluate(const ThresholdTree& tree, const Dataset& ds) {
  const auto ids = ds.AllIds();
  return TreeEvaluate(tree, ds, ids);
}

LabeledClusters TreeEvaluate(const ThresholdTree& tree, const Dataset& ds,
                             std::span<const PointId> ids) {
  LabeledClusters clusters;
  for (Label label : tree.leaf_labels()) clusters[label];
  for (PointId id : ids) clusters[tree.Route(ds.point(id))].push_back(id);
  return clusters;
}

int TreeShape::leaf_count() const {
  int count = 0;
  for (const Node& n : nodes) count += n.is_leaf() ? 1 : 0;
  return count;
}

ThresholdTree TreeShape::Instantiate(std::span<const Cut> preorder_cuts) const {
  std::size_t next_cut = 0;
  Label next_label = 1;
  std::function<ThresholdTree(int)> build = [&](int at) -> ThresholdTree {
    const Node& n = nodes[at];
    if (n.is_leaf()) return ThresholdTree::Leaf(next_label++);
    const Cut cut = preorder_cuts[next_cut++];
    ThresholdTree left = build(n.left);
    ThresholdTree right = build(n.right);
    return ThresholdTree::Split(cut, left, right);
  };
  return build(0);
}

namespace {

void AppendShape(const TreeShape& sub, TreeShape& out) {
  const int offset = static_cast<int>(out.nodes.size());
  for (TreeShape::Node n : sub.nodes) {
    if (!n.is_leaf()) {
      n.left += offset;
      n.right += offset;
    }
    out.nodes.push_back(n);
  }
}

}  // namespace

std::vector<TreeShape> EnumerateShapes(int k) {
  if (k < 1) throw std::invalid_argument("EnumerateShapes: k must be >= 1");
  // by_leaves[m] holds all shapes with m leaves.
  std::vector<std::vector<TreeShape>> by_leaves(k + 1);
  by_leaves[1].push_back(TreeShape{{TreeShape::Node{}}});
  for (int m = 2; m <= k; ++m) {
    for (int left = 1; left < m; ++left) {
      for (const TreeShape& l : by_leaves[left]) {
        for (const TreeShape& r : by_leaves[m - left]) {
          TreeShape shape;
          shape.nodes.push_back(TreeShape::Node{});
          shape.nodes[0].left = 1;
          AppendShape(l, shape);
          shape.nodes[0].right = static_cast<int>(shape.nodes.size());
          AppendShape(r, shape);
          by_leaves[m].push_back(std::move(shape));
        }
      }
    }
  }
  return by_leaves[k];
}

std::uint64_t CatalanNumber(int n) {
  std::uint64_t c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

std::vector<std::string> ValidateTree(const ThresholdTree& tree, int d, int k,
                                      bool allow_label_subset) {
  std::vector<std::string> violations;
  const auto& nodes = tree.nodes();
  std::vector<int> parents(nodes.size(), 0);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto& n = nodes[i];
    if (n.is_leaf()) {
      if (n.left >= 0 || n.right >= 0) {
        violations.push_back("leaf " + std::to_string(i) + " has children");
      }
      continue;
    }
    const int size = static_cast<int>(nodes.size());
    if (n.left <= 0 || n.right <= 0 || n.left >= size || n.right >= size ||
        n.left == n.right) {
      violations.push_back("node " + std::to_string(i) +
                           " is not full binary");
      continue;
    }
    ++parents[n.left];
    ++parents[n.right];
    if (n.cut->dim < 1 || n.cut->dim > d) {
      violations.push_back("dim out of range: node " + std::to_string(i) +
                           " cuts dim " + std::to_string(n.cut->dim));
    }
  }
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    if (parents[i] != 1) {
      violations.push_back("node " + std::to_string(i) + " has " +
                           std::to_string(parents[i]) + " parents");
    }
  }
  if (!violations.empty()) return violations;

  const int leaves = tree.leaf_count();
  if (allow_label_subset ? leaves > k : leaves != k) {
    violations.push_back("leaf count " + std::to_string(leaves) +
                         " does not match k=" + std::to_string(k));
  }
  std::set<Label> seen;
  for (Label label : tree.leaf_labels()) {
    if (label < 1 || label > k) {
      violations.push_back("label out of range: " + std::to_string(label));
    } else if (!seen.insert(label).second) {
      violations.push_back("duplicate label " + std::to_string(label));
    }
  }
  return violations;
}

}  // namespace xclust
