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

#include <gtest/gtest.h>

#include <sstream>

#include "test_util.h"
#include "xclust/io.h"

namespace xclust {
namespace {

Table Parse(const std::string& text, bool require_labels = true) {
  std::istringstream in(text);
  return ReadCsv(in, "cluster", require_labels);
}

TEST(ReadCsvTest, ParsesCoordinatesAndLabels) {
  const Table t = Parse("x,cluster,y\n0,1,2.5\n-1e2,2,3\n\n");
  EXPECT_EQ(t.columns, (std::vector<std::string>{"x", "y"}));
  ASSERT_EQ(t.dataset.size(), 2);
  EXPECT_EQ(t.dataset.point(1), (Point{-100, 3}));
  EXPECT_EQ(*t.labels, (std::vector<Label>{1, 2}));
}

TEST(ReadCsvTest, LabelsOptionalWhenNotRequired) {
  const Table t = Parse("a,b\r\n1,2\r\n3,4\r\n", false);
  EXPECT_FALSE(t.labels.has_value());
  EXPECT_EQ(t.dataset.dim(), 2);
}

TEST(ReadCsvTest, Rejects) {
  EXPECT_THROW(Parse(""), std::invalid_argument);
  EXPECT_THROW(Parse("x,cluster\n"), std::invalid_argument);
  EXPECT_THROW(Parse("x\n1\n"), std::invalid_argument);
  EXPECT_THROW(Parse("x,cluster\n1,1\n2\n"), std::invalid_argument);
  EXPECT_THROW(Parse("x,cluster\nabc,1\n"), std::invalid_argument);
  EXPECT_THROW(Parse("x,cluster\n1,1.5\n"), std::invalid_argument);
  EXPECT_THROW(Parse("x,cluster\nnan,1\n"), std::invalid_argument);
  EXPECT_THROW(Parse("cluster\n1\n"), std::invalid_argument);
  EXPECT_THROW(Parse("x,cluster,cluster\n1,1,1\n"), std::invalid_argument);
  EXPECT_THROW(Parse("x,cluster\n1,\n"), std::invalid_argument);
}

TEST(WriteCsvTest, RoundTrips) {
  const Dataset ds({Point{0.1, -3}, Point{1e-7, 12345.678}});
  const std::vector<Label> labels = {2, 1};
  std::ostringstream out;
  WriteCsv(out, {"p", "q"}, ds, &labels, "cluster");
  EXPECT_EQ(out.str(), "p,q,cluster\n0.1,-3,2\n1e-07,12345.678,1\n");
  const Table back = Parse(out.str());
  EXPECT_EQ(back.dataset.points(), ds.points());
  EXPECT_EQ(*back.labels, labels);
}

TEST(TreeJsonTest, RoundTrips) {
  const ThresholdTree t = ThresholdTree::Split(
      Cut{2, 0.1},
      ThresholdTree::Split(Cut{1, -3.5}, ThresholdTree::Leaf(1),
                           ThresholdTree::Leaf(3)),
      ThresholdTree::Leaf(2));
  const nlohmann::json j = TreeToJson(t, 3);
  EXPECT_EQ(j["k"], 3);
  EXPECT_EQ(j["tree"]["dim"], 2);
  EXPECT_EQ(j["tree"]["right"]["leaf"], 2);
  const ParsedTree back = TreeFromJson(nlohmann::json::parse(j.dump()));
  EXPECT_EQ(back.k, 3);
  EXPECT_EQ(back.tree, t);
}

TEST(TreeJsonTest, RejectsMalformed) {
  using nlohmann::json;
  EXPECT_THROW(TreeFromJson(json::array()), std::invalid_argument);
  EXPECT_THROW(TreeFromJson(json{{"k", 1}}), std::invalid_argument);
  EXPECT_THROW(TreeFromJson(json{{"k", "2"}, {"tree", {{"leaf", 1}}}}),
               std::invalid_argument);
  EXPECT_THROW(TreeFromJson(json{{"k", 2}, {"tree", {{"leaf", "a"}}}}),
               std::invalid_argument);
  EXPECT_THROW(TreeFromJson(json{{"k", 2}, {"tree", {{"dim", 1}, {"theta", 0}}}}),
               std::invalid_argument);
  EXPECT_THROW(TreeFromJson(json{{"k", 2}, {"tree", 5}}), std::invalid_argument);
}

TEST(TreeDotTest, LabelsCutsAndSizes) {
  const ThresholdTree t = ThresholdTree::Split(
      Cut{1, 2.5}, ThresholdTree::Leaf(1), ThresholdTree::Leaf(2));
  const LabeledClusters clusters = {{1, {0, 1}}, {2, {2}}};
  const std::string dot = TreeToDot(t, &clusters);
  EXPECT_NE(dot.find("digraph"), std::string::npos);
  EXPECT_NE(dot.find("x[1] ≤ 2.5"), std::string::npos);
  EXPECT_NE(dot.find("cluster 1\\nsize 2"), std::string::npos);
  EXPECT_NE(dot.find("cluster 2\\nsize 1"), std::string::npos);
}

}  // namespace
}  // namespace xclust
