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
#include "xclust/explanation.h"
#include "xclust/oracle.h"

namespace xclust {
namespace {

Clustering Xor() {
  return Clustering(Dataset({Point{0, 0}, Point{1, 1}, Point{0, 1}, Point{1, 0}}),
                    {1, 1, 2, 2});
}

Clustering Separated() {
  return Clustering(
      Dataset({Point{-2, 0}, Point{-1, 3}, Point{0, 1}, Point{4, 0}, Point{5, 2}}),
      {1, 1, 1, 2, 2});
}

TEST(ClusteringTest, Validation) {
  const Dataset ds({Point{0}, Point{1}});
  EXPECT_THROW(Clustering(ds, {1}), std::invalid_argument);
  EXPECT_THROW(Clustering(ds, {1, 3}), std::invalid_argument);
  EXPECT_THROW(Clustering(ds, {0, 1}), std::invalid_argument);
  EXPECT_THROW(Clustering(ds, {1, 1}, 2), std::invalid_argument);
  EXPECT_EQ(Clustering(ds, {2, 1}).k(), 2);
}

TEST(BestCutTest, SeparatedNeedsNoRemoval) {
  const Clustering cl = Separated();
  const auto c = BestCut(cl, cl.dataset().AllIds());
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->cut, (Cut{1, 0}));
  EXPECT_TRUE(c->removal.empty());
}

TEST(BestCutTest, DuplicatesMoveTogether) {
  const Clustering cl(Dataset({Point{0}, Point{0}, Point{1}}), {1, 1, 2});
  const auto c = BestCut(cl, cl.dataset().AllIds());
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->cut, (Cut{1, 0}));
  EXPECT_TRUE(c->removal.empty());
}

// Every canonical cut of the XOR pattern splits both clusters one-one, so a
// single removal always leaves one cluster on both sides.
TEST(BestCutTest, XorNeedsTwoRemovals) {
  const Clustering cl = Xor();
  const auto c = BestCut(cl, cl.dataset().AllIds());
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->cut, (Cut{1, 0}));
  EXPECT_EQ(c->removal.size(), 2u);
}

TEST(BestCutTest, Errors) {
  const Clustering cl = Separated();
  const std::vector<PointId> one_cluster = {0, 1};
  EXPECT_THROW(BestCut(cl, one_cluster), std::invalid_argument);
  const Clustering coincident(Dataset({Point{1}, Point{1}}), {1, 2});
  EXPECT_FALSE(BestCut(coincident, coincident.dataset().AllIds()).has_value());
}

TEST(GreedyExplainTest, Examples) {
  const ExplanationResult sep = GreedyExplain(Separated());
  EXPECT_TRUE(sep.removed.empty());
  EXPECT_TRUE(testing::ExplainsSurvivors(Separated(), sep));

  const Clustering single(Dataset({Point{0}, Point{4}}), {1, 1});
  const ExplanationResult one = GreedyExplain(single);
  EXPECT_TRUE(one.removed.empty());
  EXPECT_EQ(one.tree, ThresholdTree::Leaf(1));

  const ExplanationResult x = GreedyExplain(Xor());
  EXPECT_EQ(x.removed_count(), 2);
  EXPECT_TRUE(testing::ExplainsSurvivors(Xor(), x));
}

TEST(CheckExplainableTest, Examples) {
  EXPECT_TRUE(CheckExplainable(Separated()));
  EXPECT_FALSE(CheckExplainable(Xor()));
  EXPECT_TRUE(CheckExplainable(Clustering(Dataset({Point{3}}), {1})));
}

TEST(ExactExplainTest, Examples) {
  const auto sep = ExactExplain(Separated(), 0);
  ASSERT_TRUE(sep.has_value());
  EXPECT_TRUE(sep->removed.empty());

  EXPECT_FALSE(ExactExplain(Xor(), 0).has_value());
  EXPECT_FALSE(ExactExplain(Xor(), 1).has_value());
  const auto two = ExactExplain(Xor(), 2);
  ASSERT_TRUE(two.has_value());
  EXPECT_EQ(two->removed_count(), 2);
  EXPECT_TRUE(testing::ExplainsSurvivors(Xor(), *two));

  EXPECT_THROW(ExactExplain(Xor(), -1), std::invalid_argument);
}

TEST(ExactExplainTest, LargeBudgetAlwaysSucceeds) {
  testing::Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Clustering cl = testing::RandomClustering(rng, 9, 2, 3);
    const auto r = ExactExplain(cl, cl.size() - 1);
    ASSERT_TRUE(r.has_value());
    EXPECT_TRUE(testing::ExplainsSurvivors(cl, *r));
  }
}

TEST(ExactExplainTest, GuardRails) {
  std::vector<Point> pts;
  std::vector<Label> labels;
  for (int i = 0; i < 41; ++i) {
    pts.push_back(Point{static_cast<double>(i)});
    labels.push_back(i % 2 + 1);
  }
  const Clustering big(Dataset(pts), labels);
  EXPECT_THROW(ExactExplain(big, 1), ResourceError);
  EXPECT_THROW(OptExplain(big), ResourceError);
  EXPECT_FALSE(ExactExplain(big, 1, ExactLimits{40, 4, true}).has_value());
}

TEST(OptExplainTest, Examples) {
  EXPECT_EQ(OptExplain(Separated()).opt, 0);
  EXPECT_EQ(OptExplain(Xor()).opt, 2);
  const Clustering interleaved(Dataset({Point{0}, Point{2}, Point{1}, Point{3}}),
                               {1, 1, 2, 2});
  const OptExplanation o = OptExplain(interleaved);
  EXPECT_EQ(o.opt, 1);
  EXPECT_TRUE(testing::ExplainsSurvivors(interleaved, o.result));
}

TEST(KernelizeTest, Examples) {
  std::vector<Point> line;
  for (int i = 0; i < 10; ++i) line.push_back(Point{i * 1.5});
  const KernelResult one =
      Kernelize(Clustering(Dataset(line), std::vector<Label>(10, 1)), 0);
  EXPECT_EQ(one.kernel.size(), 2);
  EXPECT_EQ(one.kernel.dataset().point(0), (Point{1}));
  EXPECT_EQ(one.kernel.dataset().point(1), (Point{2}));
  EXPECT_EQ(one.original_ids, (std::vector<PointId>{0, 9}));

  const KernelResult all = Kernelize(Separated(), 3);
  EXPECT_EQ(all.kernel.size(), 5);
  EXPECT_EQ(all.kernel.labels(), Separated().labels());
  EXPECT_EQ(all.kernel.dataset().point(0), (Point{1, 1}));
  EXPECT_EQ(all.kernel.dataset().point(4), (Point{5, 3}));

  EXPECT_THROW(Kernelize(Separated(), -1), std::invalid_argument);
}

TEST(KernelizeTest, SizeBoundAtScale) {
  testing::Rng rng(77);
  const Dataset ds = testing::RandomDataset(rng, 100, 2, false);
  const Clustering cl(ds, testing::RandomLabels(rng, 100, 2), 2);
  const KernelResult kr = Kernelize(cl, 1);
  EXPECT_LE(kr.kernel.size(), 16);
}

class ExplanationPropertyTest : public ::testing::TestWithParam<int> {};

TEST_P(ExplanationPropertyTest, SoundBoundedMonotone) {
  testing::Rng rng(1000 + GetParam());
  const Clustering cl = testing::RandomClustering(rng, 10, 2, 3);

  const ExplanationResult g = GreedyExplain(cl);
  EXPECT_TRUE(testing::ExplainsSurvivors(cl, g));
  const OptExplanation o = OptExplain(cl);
  EXPECT_TRUE(testing::ExplainsSurvivors(cl, o.result));
  EXPECT_EQ(o.result.removed_count(), o.opt);
  EXPECT_LE(g.removed_count(), (cl.k() - 1) * o.opt);
  EXPECT_EQ(CheckExplainable(cl), o.opt == 0);

  bool before = false;
  for (int s = 0; s <= 4; ++s) {
    const auto r = ExactExplain(cl, s);
    EXPECT_EQ(r.has_value(), s >= o.opt);
    if (before) EXPECT_TRUE(r.has_value());
    before = r.has_value();
    if (r) {
      EXPECT_EQ(r->removed_count(), o.opt);
      EXPECT_TRUE(testing::ExplainsSurvivors(cl, *r));
    }
  }

  // OPT never grows on a label-preserving subset.
  std::vector<PointId> keep;
  std::vector<Label> labels;
  for (PointId id = 0; id < cl.size(); ++id) {
    if (testing::Uniform(rng, 0, 3) > 0) keep.push_back(id);
  }
  if (!keep.empty()) {
    std::vector<Label> remap(cl.k() + 1, 0);
    Label next = 0;
    for (PointId id : keep) {
      if (!remap[cl.label(id)]) remap[cl.label(id)] = ++next;
      labels.push_back(remap[cl.label(id)]);
    }
    const Clustering sub(cl.dataset().Subset(keep), labels);
    EXPECT_LE(OptExplain(sub).opt, o.opt);
  }

  for (int s = 0; s <= 3; ++s) {
    const KernelResult kr = Kernelize(cl, s);
    EXPECT_LE(kr.kernel.size(), 2 * (s + 1) * cl.dim() * cl.k());
    EXPECT_EQ(ExactExplain(kr.kernel, s).has_value(),
              ExactExplain(cl, s).has_value());
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, ExplanationPropertyTest, ::testing::Range(0, 80));

}  // namespace
}  // namespace xclust
