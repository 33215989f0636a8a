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

// CSV datasets, tree JSON and DOT export.

#ifndef XCLUST_IO_H_
#define XCLUST_IO_H_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "xclust/core.h"
#include "xclust/tree.h"

namespace xclust {

struct Table {
  std::vector<std::string> columns;  // coordinate column names
  Dataset dataset;
  std::optional<std::vector<Label>> labels;
};

// Header row required. Every column except `label_col` is a coordinate. With
// `require_labels`, a missing label column is an error. Throws
// std::invalid_argument naming the offending line.
Table ReadCsv(std::istream& in, const std::string& label_col,
              bool require_labels);
Table ReadCsvFile(const std::string& path, const std::string& label_col,
                  bool require_labels);

void WriteCsv(std::ostream& out, const std::vector<std::string>& columns,
              const Dataset& ds, const std::vector<Label>* labels,
              const std::string& label_col);

// Shortest decimal text that parses back to the same double.
std::string FormatNumber(double v);

// {"k": k, "tree": node}; node is {"dim","theta","left","right"} or
// {"leaf": label}.
nlohmann::json TreeToJson(const ThresholdTree& tree, int k);

struct ParsedTree {
  int k = 0;
  ThresholdTree tree = ThresholdTree::Leaf(1);
};
// Throws std::invalid_argument on schema violations.
ParsedTree TreeFromJson(const nlohmann::json& doc);

// Graphviz digraph; leaves show their label and, if given, cluster size.
std::string TreeToDot(const ThresholdTree& tree,
                      const LabeledClusters* clusters = nullptr);

}  // namespace xclust

#endif  // XCLUST_IO_H_
