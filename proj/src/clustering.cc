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

int MaxLabel(const std::vector<Label>& labels) {
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end());
}

}  // namespace

Clustering::Clustering(Dataset ds, std::vector<Label> labels, int k)
    : ds_(std::move(ds)), labels_(std::move(labels)), k_(k) {
  if (static_cast<int>(labels_.size()) != ds_.size()) {
    throw std::invalid_argument("label count " +
                                std::to_string(labels_.size()) +
                                " does not match point count " +
                                std::to_string(ds_.size()));
  }
  if (k_ < 1) throw std::invalid_argument("k must be >= 1");
  std::vector<int> used(k_ + 1, 0);
  for (Label label : labels_) {
    if (label < 1 || label > k_) {
      throw std::invalid_argument("label " + std::to_string(label) +
                                  " outside 1.." + std::to_string(k_));
    }
    ++used[label];
  }
  for (Label label = 1; label <= k_; ++label) {
    if (used[label] == 0) {
      throw std::invalid_argument("cluster " + std::to_string(label) +
                                  " is empty");
    }
  }
}

Clustering::Clustering(Dataset ds, std::vector<Label> labels)
    : Clustering(std::move(ds), labels, MaxLabel(labels)) {}

LabeledClusters Clustering::Members(std::span<const PointId> ids) const {
  LabeledClusters out;
  for (Label label = 1; label <= k_; ++label) out[label];
  for (PointId id : ids) out[labels_[id]].push_back(id);
  return out;
}

LabeledClusters Clustering::Survivors(std::span<const PointId> removed) const {
  std::vector<bool> gone(ds_.size(), false);
  for (PointId id : removed) gone[id] = true;
  LabeledClusters out;
  for (PointId id = 0; id < ds_.size(); ++id) {
    if (!gone[id]) out[labels_[id]].push_back(id);
  }
  return out;
}

}  // namespace xclust
