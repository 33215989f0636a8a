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

#include "xclust/io.h"

#include <charconv>
#include <fstream>
#include <functional>
#include <sstream>

namespace xclust {
namespace {

std::string Trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> SplitRow(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(Trim(field));
  if (!line.empty() && line.back() == ',') fields.push_back("");
  return fields;
}

std::string At(int line) { return "line " + std::to_string(line) + ": "; }

double ParseNumber(const std::string& text, int line) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw std::invalid_argument(At(line) + "not a number: '" + text + "'");
  }
  return v;
}

Label ParseLabel(const std::string& text, int line) {
  Label v = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw std::invalid_argument(At(line) + "label is not an integer: '" +
                                text + "'");
  }
  return v;
}

ThresholdTree NodeFromJson(const nlohmann::json& node, int depth) {
  if (depth > 10000) throw std::invalid_argument("tree JSON nested too deeply");
  if (!node.is_object()) throw std::invalid_argument("tree node is not an object");
  if (node.contains("leaf")) {
    if (!node["leaf"].is_number_integer()) {
      throw std::invalid_argument("leaf label must be an integer");
    }
    return ThresholdTree::Leaf(node["leaf"].get<Label>());
  }
  for (const char* key : {"dim", "theta", "left", "right"}) {
    if (!node.contains(key)) {
      throw std::invalid_argument(std::string("internal node lacks '") + key +
                                  "'");
    }
  }
  if (!node["dim"].is_number_integer() || !node["theta"].is_number()) {
    throw std::invalid_argument("internal node needs integer dim and numeric "
                                "theta");
  }
  const Cut cut{node["dim"].get<int>(), node["theta"].get<double>()};
  return ThresholdTree::Split(cut, NodeFromJson(node["left"], depth + 1),
                              NodeFromJson(node["right"], depth + 1));
}

}  // namespace

Table ReadCsv(std::istream& in, const std::string& label_col,
              bool require_labels) {
  std::string line;
  int line_no = 0;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    ++line_no;
    if (!Trim(line).empty()) {
      header = SplitRow(line);
      break;
    }
  }
  if (header.empty()) throw std::invalid_argument("CSV has no header row");

  int label_index = -1;
  Table table;
  for (int i = 0; i < static_cast<int>(header.size()); ++i) {
    if (header[i] == label_col) {
      if (label_index >= 0) {
        throw std::invalid_argument("label column '" + label_col +
                                    "' appears twice");
      }
      label_index = i;
    } else {
      table.columns.push_back(header[i]);
    }
  }
  if (require_labels && label_index < 0) {
    throw std::invalid_argument("missing label column '" + label_col + "'");
  }
  if (table.columns.empty()) {
    throw std::invalid_argument("CSV has no coordinate columns");
  }

  std::vector<Point> points;
  std::vector<Label> labels;
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    const std::vector<std::string> fields = SplitRow(line);
    if (fields.size() != header.size()) {
      throw std::invalid_argument(At(line_no) + "expected " +
                                  std::to_string(header.size()) +
                                  " fields, got " +
                                  std::to_string(fields.size()));
    }
    std::vector<double> coords;
    for (int i = 0; i < static_cast<int>(fields.size()); ++i) {
      if (i == label_index) {
        labels.push_back(ParseLabel(fields[i], line_no));
      } else {
        coords.push_back(ParseNumber(fields[i], line_no));
      }
    }
    points.emplace_back(std::move(coords));
  }
  if (points.empty()) throw std::invalid_argument("CSV has no data rows");
  table.dataset = Dataset(std::move(points));
  if (label_index >= 0) table.labels = std::move(labels);
  return table;
}

Table ReadCsvFile(const std::string& path, const std::string& label_col,
                  bool require_labels) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  return ReadCsv(in, label_col, require_labels);
}

std::string FormatNumber(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

void WriteCsv(std::ostream& out, const std::vector<std::string>& columns,
              const Dataset& ds, const std::vector<Label>* labels,
              const std::string& label_col) {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    out << (i ? "," : "") << columns[i];
  }
  if (labels) out << "," << label_col;
  out << "\n";
  for (PointId id = 0; id < ds.size(); ++id) {
    for (int axis = 0; axis < ds.dim(); ++axis) {
      out << (axis ? "," : "") << FormatNumber(ds.coord(id, axis));
    }
    if (labels) out << "," << (*labels)[id];
    out << "\n";
  }
}

nlohmann::json TreeToJson(const ThresholdTree& tree, int k) {
  std::function<nlohmann::json(int)> emit = [&](int at) {
    const auto& n = tree.node(at);
    if (n.is_leaf()) return nlohmann::json{{"leaf", n.label}};
    return nlohmann::json{{"dim", n.cut->dim},
                          {"theta", n.cut->theta},
                          {"left", emit(n.left)},
                          {"right", emit(n.right)}};
  };
  return nlohmann::json{{"k", k}, {"tree", emit(0)}};
}

ParsedTree TreeFromJson(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("k") || !doc.contains("tree")) {
    throw std::invalid_argument("tree JSON needs top-level 'k' and 'tree'");
  }
  if (!doc["k"].is_number_integer()) {
    throw std::invalid_argument("'k' must be an integer");
  }
  return ParsedTree{doc["k"].get<int>(), NodeFromJson(doc["tree"], 0)};
}

std::string TreeToDot(const ThresholdTree& tree,
                      const LabeledClusters* clusters) {
  std::ostringstream out;
  out << "digraph threshold_tree {\n  node [fontname=\"Helvetica\"];\n";
  for (int i = 0; i < static_cast<int>(tree.nodes().size()); ++i) {
    const auto& n = tree.node(i);
    if (n.is_leaf()) {
      out << "  n" << i << " [shape=box, label=\"cluster " << n.label;
      if (clusters) {
        const auto it = clusters->find(n.label);
        const std::size_t size = it == clusters->end() ? 0 : it->second.size();
        out << "\\nsize " << size;
      }
      out << "\"];\n";
    } else {
      out << "  n" << i << " [shape=ellipse, label=\"x[" << n.cut->dim
          << "] ≤ " << FormatNumber(n.cut->theta) << "\"];\n";
      out << "  n" << i << " -> n" << n.left << " [label=\"yes\"];\n";
      out << "  n" << i << " -> n" << n.right << " [label=\"no\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace xclust
