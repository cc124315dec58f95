/* Copyright 2026 The MapMetrics Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "mapmetrics/synthetic.h"

#include <gtest/gtest.h>

#include <algorithm>

#include "mapmetrics/dap.h"
#include "mapmetrics/errors.h"

namespace mapmetrics {
namespace {

TEST(SyntheticTest, Deterministic) {
  for (ScenarioKind kind : AllScenarioKinds()) {
    EXPECT_EQ(SynthesizeScenario(kind, DefaultMagnitude(kind), 9, "a"),
              SynthesizeScenario(kind, DefaultMagnitude(kind), 9, "a"));
  }
  EXPECT_NE(SynthesizeScenario(ScenarioKind::kShift, 1.0, 1, "a"),
            SynthesizeScenario(ScenarioKind::kShift, 1.0, 2, "a"));
}

TEST(SyntheticTest, ParseNames) {
  for (ScenarioKind kind : AllScenarioKinds()) {
    EXPECT_EQ(ParseScenarioKind(ScenarioName(kind)), kind);
  }
  EXPECT_THROW(ParseScenarioKind("wobble"), InputError);
  EXPECT_THROW(SynthesizeScenario(ScenarioKind::kShift, -1.0, 1, "a"),
               InputError);
}

TEST(SyntheticTest, ShiftMovesEveryPointOneMeter) {
  const SceneRecord s = SynthesizeScenario(ScenarioKind::kShift, 1.0, 5, "a");
  EXPECT_EQ(s.classes.count("crossing"), 0u);
  for (const auto& [name, sample] : s.classes) {
    ASSERT_EQ(sample.ground_truth.size(), sample.predictions.size());
    for (std::size_t k = 0; k < sample.ground_truth.size(); ++k) {
      const Polyline& g = sample.ground_truth[k].geometry;
      const Polyline& p = sample.predictions[k].geometry;
      ASSERT_EQ(g.size(), p.size());
      for (std::size_t i = 0; i < g.size(); ++i) {
        EXPECT_NEAR(PointDistance(g.point(i), p.point(i)), 1.0, 1e-12);
      }
    }
  }
}

TEST(SyntheticTest, MisorderKeepsPointSet) {
  const SceneRecord s =
      SynthesizeScenario(ScenarioKind::kMisorder, 0.5, 5, "a");
  bool any_changed = false;
  for (const auto& [name, sample] : s.classes) {
    for (std::size_t k = 0; k < sample.ground_truth.size(); ++k) {
      auto g = sample.ground_truth[k].geometry.points();
      auto p = sample.predictions[k].geometry.points();
      any_changed = any_changed || g != p;
      auto less = [](const Point& a, const Point& b) {
        return std::lexicographical_compare(
            a.coords().begin(), a.coords().end(), b.coords().begin(),
            b.coords().end());
      };
      std::sort(g.begin(), g.end(), less);
      std::sort(p.begin(), p.end(), less);
      EXPECT_EQ(g, p);
    }
  }
  EXPECT_TRUE(any_changed);
}

TEST(SyntheticTest, SpuriousInstancesCrossingArchetype) {
  const SceneRecord s =
      SynthesizeScenario(ScenarioKind::kSpuriousInstances, 4.0, 5, "a");
  const ClassSample& c = s.classes.at("crossing");
  ASSERT_EQ(c.ground_truth.size(), 1u);
  ASSERT_EQ(c.predictions.size(), 5u);
  const DapResult r =
      Dap(InstanceSet{c.ground_truth}, InstanceSet{c.predictions}, {1.5, 1.0});
  EXPECT_NEAR(r.normalized_value, 0.8, 1e-12);
  EXPECT_NEAR(r.normalized_det, 0.8, 1e-12);
  EXPECT_EQ(r.normalized_loc, 0.0);
}

TEST(SyntheticTest, DropTailAndOutlier) {
  const SceneRecord d =
      SynthesizeScenario(ScenarioKind::kDropTail, 0.3, 5, "a");
  for (const auto& [name, sample] : d.classes) {
    if (name == "crossing") continue;
    for (std::size_t k = 0; k < sample.ground_truth.size(); ++k) {
      EXPECT_NEAR(ArcLength(sample.predictions[k].geometry),
                  0.7 * ArcLength(sample.ground_truth[k].geometry), 1e-9);
    }
  }
  const SceneRecord o =
      SynthesizeScenario(ScenarioKind::kOutlierPoint, 3.0, 5, "a");
  for (const auto& [name, sample] : o.classes) {
    const Polyline& g = sample.ground_truth[0].geometry;
    const Polyline& p = sample.predictions[0].geometry;
    std::size_t moved = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      const double dist = PointDistance(g.point(i), p.point(i));
      if (dist > 0) {
        ++moved;
        EXPECT_NEAR(dist, 3.0, 1e-12);
      }
    }
    EXPECT_EQ(moved, 1u);
  }
}

TEST(SyntheticTest, MixedCorpusCyclesKinds) {
  const auto corpus = SynthesizeMixedCorpus(10, 1);
  ASSERT_EQ(corpus.size(), 10u);
  EXPECT_EQ(corpus[0].sample_id, "shift-0");
  EXPECT_EQ(corpus[6].sample_id, "misorder-6");
}

}  // namespace
}  // namespace mapmetrics
