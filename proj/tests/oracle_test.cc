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

#include "test_util.h"
#include "xclust/oracle.h"

namespace xclust {
namespace {

Dataset Line(std::initializer_list<double> xs) {
  std::vector<Point> pts;
  for (double x : xs) pts.push_back(Point{x});
  return Dataset(pts);
}

TEST(BruteExplainableTest, Examples) {
  const Dataset four = Line({0, 1, 10, 11});
  EXPECT_DOUBLE_EQ(BruteExplainable(four, 2, CostKind::kMeans).cost, 1.0);
  EXPECT_EQ(BruteExplainable(four, 4, CostKind::kMeans).cost, 0.0);
  EXPECT_EQ(BruteExplainable(four, 1, CostKind::kMedians).cost,
            ClusterCost(four, four.AllIds(), CostKind::kMedians));
}

TEST(BruteExplainableTest, Limits) {
  std::vector<Point> pts;
  for (int i = 0; i < 11; ++i) pts.push_back(Point{static_cast<double>(i)});
  EXPECT_THROW(BruteExplainable(Dataset(pts), 2, CostKind::kMeans), ResourceError);
  EXPECT_THROW(BruteExplainable(Dataset({Point{0, 0, 0}}), 1, CostKind::kMeans),
               ResourceError);
  EXPECT_THROW(BruteExplainable(Line({0, 1, 2, 3, 4}), 5, CostKind::kMeans),
               ResourceError);
}

TEST(BruteExplanationTest, Examples) {
  const Clustering sep(Line({0, 1, 5, 6}), {1, 1, 2, 2});
  const auto e = BruteExplanation(sep, 0);
  ASSERT_TRUE(e.has_value());
  EXPECT_TRUE(e->removed.empty());

  const Clustering xor_cl(
      Dataset({Point{0, 0}, Point{1, 1}, Point{0, 1}, Point{1, 0}}), {1, 1, 2, 2});
  EXPECT_FALSE(BruteExplanation(xor_cl, 0).has_value());
  EXPECT_FALSE(BruteExplanation(xor_cl, 1).has_value());
  const auto two = BruteExplanation(xor_cl, 2);
  ASSERT_TRUE(two.has_value());
  EXPECT_EQ(two->removed, (std::vector<PointId>{0, 1}));
  EXPECT_TRUE(testing::ExplainsSurvivors(xor_cl, *two));
}

TEST(BruteExplanationTest, Limits) {
  const Clustering sep(Line({0, 1, 5, 6}), {1, 1, 2, 2});
  EXPECT_THROW(BruteExplanation(sep, 5), ResourceError);
  const Clustering four_labels(Line({0, 1, 5, 6}), {1, 2, 3, 4});
  EXPECT_THROW(BruteExplanation(four_labels, 0), ResourceError);
}

TEST(BruteUnconstrainedTest, Examples) {
  const Dataset four = Line({0, 1, 10, 11});
  EXPECT_DOUBLE_EQ(BruteUnconstrained(four, 2, CostKind::kMeans), 1.0);
  EXPECT_EQ(BruteUnconstrained(four, 4, CostKind::kMeans), 0.0);
  EXPECT_EQ(BruteUnconstrained(four, 1, CostKind::kMeans),
            ClusterCost(four, four.AllIds(), CostKind::kMeans));
  std::vector<Point> pts;
  for (int i = 0; i < 9; ++i) pts.push_back(Point{static_cast<double>(i)});
  EXPECT_THROW(BruteUnconstrained(Dataset(pts), 2, CostKind::kMeans), ResourceError);
}

class OraclePropertyTest : public ::testing::TestWithParam<int> {};

TEST_P(OraclePropertyTest, Relations) {
  testing::Rng rng(40 + GetParam());
  const Clustering cl = testing::RandomClustering(rng, 8, 2, 3);
  bool before = false;
  for (int s = 0; s <= 4; ++s) {
    const auto r = BruteExplanation(cl, s);
    if (before) EXPECT_TRUE(r.has_value());
    before = r.has_value();
    if (r) EXPECT_TRUE(testing::ExplainsSurvivors(cl, *r));
  }
  for (CostKind kind : {CostKind::kMeans, CostKind::kMedians}) {
    for (int k = 1; k <= std::min(3, cl.size()); ++k) {
      double brute;
      try {
        brute = BruteExplainable(cl.dataset(), k, kind).cost;
      } catch (const std::invalid_argument&) {
        continue;
      }
      EXPECT_GE(brute * (1 + 1e-9) + 1e-12,
                BruteUnconstrained(cl.dataset(), k, kind));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, OraclePropertyTest, ::testing::Range(0, 30));

}  // namespace
}  // namespace xclust
