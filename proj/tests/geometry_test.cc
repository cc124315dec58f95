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

#include "mapmetrics/geometry.h"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "mapmetrics/errors.h"
#include "mapmetrics/validation.h"

namespace mapmetrics {
namespace {

Polyline Line(std::vector<Point> pts, bool closed = false) {
  return Polyline(pts, closed);
}

TEST(PointTest, EuclideanDistance) {
  EXPECT_DOUBLE_EQ(PointDistance(Point{0, 0}, Point{3, 4}), 5.0);
  EXPECT_DOUBLE_EQ(PointDistance(Point{1, 2, 3}, Point{1, 2, 3}), 0.0);
}

TEST(PointTest, RejectsNonFinite) {
  EXPECT_THROW(Point({0.0, std::numeric_limits<double>::quiet_NaN()}),
               InputError);
  EXPECT_THROW(Point({std::numeric_limits<double>::infinity(), 0.0}),
               InputError);
}

TEST(PointTest, DimensionMismatchThrows) {
  EXPECT_THROW(PointDistance(Point{0, 0}, Point{0, 0, 0}), InputError);
}

TEST(PolylineTest, MixedDimensionsRejected) {
  EXPECT_THROW(Line({{0, 0}, {1, 1, 1}}), InputError);
  EXPECT_THROW(Polyline::FromFlat(2, {0, 0, 1}), InputError);
}

TEST(PolylineTest, ClosingDuplicateDropped) {
  const Polyline square = Line({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 0}}, true);
  EXPECT_EQ(square.size(), 4u);
  EXPECT_TRUE(square.closed());
  // Open polylines keep a repeated endpoint.
  EXPECT_EQ(Line({{0, 0}, {1, 0}, {0, 0}}).size(), 3u);
}

TEST(PolylineTest, EmptyIsRepresentable) {
  Polyline empty;
  EXPECT_TRUE(empty.empty());
  EXPECT_EQ(empty.size(), 0u);
  EXPECT_EQ(ArcLength(empty), 0.0);
}

TEST(ArcLengthTest, OpenAndClosed) {
  const std::vector<Point> pts = {{0, 0}, {3, 0}, {3, 4}};
  EXPECT_DOUBLE_EQ(ArcLength(Line(pts)), 7.0);
  EXPECT_DOUBLE_EQ(ArcLength(Line(pts, true)), 12.0);
}

TEST(ResampleTest, OpenSegmentKeepsFarEndpoint) {
  // Arc positions 0, 0.5, 1.0 plus the endpoint 1.3 (0.3 >= 0.25 past the
  // last sample).
  const Polyline r = ResampleEquidistant(Line({{0, 0}, {1.3, 0}}), 0.5);
  ASSERT_EQ(r.size(), 4u);
  EXPECT_DOUBLE_EQ(r.point(1)[0], 0.5);
  EXPECT_DOUBLE_EQ(r.point(2)[0], 1.0);
  EXPECT_DOUBLE_EQ(r.point(3)[0], 1.3);
}

TEST(ResampleTest, OpenSegmentDropsNearEndpoint) {
  const Polyline r = ResampleEquidistant(Line({{0, 0}, {1.2, 0}}), 0.5);
  ASSERT_EQ(r.size(), 3u);
  EXPECT_DOUBLE_EQ(r.point(2)[0], 1.0);
}

TEST(ResampleTest, ExactMultipleEndsOnEndpoint) {
  const Polyline r = ResampleEquidistant(Line({{0, 0}, {2, 0}}), 0.5);
  ASSERT_EQ(r.size(), 5u);
  EXPECT_DOUBLE_EQ(r.point(4)[0], 2.0);
}

TEST(ResampleTest, FollowsCorners) {
  const Polyline r = ResampleEquidistant(Line({{0, 0}, {1, 0}, {1, 1}}), 0.5);
  ASSERT_EQ(r.size(), 5u);
  EXPECT_DOUBLE_EQ(r.point(3)[0], 1.0);
  EXPECT_DOUBLE_EQ(r.point(3)[1], 0.5);
}

TEST(ResampleTest, ClosedWrapsWithoutRepeatingStart) {
  const Polyline square = Line({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, true);
  const Polyline r = ResampleEquidistant(square, 0.5);
  ASSERT_EQ(r.size(), 8u);
  EXPECT_TRUE(r.closed());
  EXPECT_DOUBLE_EQ(r.point(7)[0], 0.0);
  EXPECT_DOUBLE_EQ(r.point(7)[1], 0.5);
}

TEST(ResampleTest, DegenerateInputs) {
  EXPECT_EQ(ResampleEquidistant(Line({{2, 3}}), 0.5).size(), 1u);
  EXPECT_EQ(ResampleEquidistant(Line({{2, 3}, {2, 3}}), 0.5).size(), 1u);
  EXPECT_TRUE(ResampleEquidistant(Polyline(), 0.5).empty());
  EXPECT_THROW(ResampleEquidistant(Line({{0, 0}, {1, 0}}), 0.0), InputError);
  EXPECT_THROW(ResampleEquidistant(Line({{0, 0}, {1, 0}}), -1.0), InputError);
}

TEST(ResampleTest, ThreeDimensional) {
  const Polyline r = ResampleEquidistant(Line({{0, 0, 0}, {0, 0, 1}}), 0.5);
  ASSERT_EQ(r.size(), 3u);
  EXPECT_EQ(r.dim(), 3u);
  EXPECT_DOUBLE_EQ(r.point(1)[2], 0.5);
}

TEST(ReverseTest, ReversesOrderKeepsKind) {
  const Polyline r = Reverse(Line({{0, 0}, {1, 0}, {2, 5}}, true));
  EXPECT_TRUE(r.closed());
  EXPECT_EQ(r.PointAt(0), (Point{2, 5}));
  EXPECT_EQ(r.PointAt(2), (Point{0, 0}));
}

TEST(CyclicShiftTest, Semantics) {
  const Polyline tri = Line({{0, 0}, {1, 0}, {0, 1}}, true);
  const Polyline s = CyclicShift(tri, 1);
  EXPECT_EQ(s.PointAt(0), (Point{1, 0}));
  EXPECT_EQ(s.PointAt(2), (Point{0, 0}));
  EXPECT_EQ(CyclicShift(tri, -1), CyclicShift(tri, 2));
  EXPECT_EQ(CyclicShift(tri, 3), tri);
}

TEST(CyclicShiftTest, OpenInputIsContractError) {
  EXPECT_THROW(CyclicShift(Line({{0, 0}, {1, 0}}), 1), ContractError);
}

TEST(MetricParamsTest, Validation) {
  EXPECT_NO_THROW((MetricParams{1.5, 1.0}.Validate()));
  EXPECT_THROW((MetricParams{0.0, 1.0}.Validate()), InputError);
  EXPECT_THROW((MetricParams{-1.0, 1.0}.Validate()), InputError);
  EXPECT_THROW((MetricParams{1.0, 0.5}.Validate()), InputError);
  EXPECT_THROW(
      (MetricParams{1.0, std::numeric_limits<double>::infinity()}.Validate()),
      InputError);
}

TEST(MetricParamsTest, UnmatchedCostIsHalfCutoffPower) {
  EXPECT_DOUBLE_EQ((MetricParams{1.5, 1.0}.UnmatchedCost()), 0.75);
  EXPECT_DOUBLE_EQ((MetricParams{2.0, 2.0}.UnmatchedCost()), 2.0);
}

// Property: consecutive resampled points are never farther apart than the
// spacing, the first point is kept, and arc length does not grow.
TEST(ResampleProperty, SpacingAndLengthBounds) {
  RandomSource rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const bool closed = trial % 3 == 0;
    const Polyline g = rng.RandomPolyline(rng.Int(2, 9), 10.0, closed);
    const double s = rng.Uniform(0.1, 2.0);
    const Polyline r = ResampleEquidistant(g, s);
    ASSERT_FALSE(r.empty());
    EXPECT_EQ(r.PointAt(0), g.PointAt(0));
    for (std::size_t i = 1; i < r.size(); ++i) {
      EXPECT_LE(PointDistance(r.point(i - 1), r.point(i)), s + 1e-9);
    }
    EXPECT_LE(ArcLength(r), ArcLength(g) + 1e-9);
    const std::size_t expected_min =
        static_cast<std::size_t>(std::floor(ArcLength(g) / s - 1e-9)) + 1;
    EXPECT_GE(r.size(), expected_min);
  }
}

TEST(ReverseProperty, InvolutionAndShiftComposition) {
  RandomSource rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Polyline g = rng.RandomPolyline(rng.Int(1, 8), 5.0, true);
    EXPECT_EQ(Reverse(Reverse(g)), g);
    const long long a = static_cast<long long>(rng.Int(0, 10));
    const long long b = static_cast<long long>(rng.Int(0, 10));
    EXPECT_EQ(CyclicShift(CyclicShift(g, a), b), CyclicShift(g, a + b));
  }
}

}  // namespace
}  // namespace mapmetrics
