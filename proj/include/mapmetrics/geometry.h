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

// Points, polylines and polygons in R^N, plus the base point metric and the
// resampling / reversal / cyclic-shift utilities used by every metric.

#ifndef MAPMETRICS_GEOMETRY_H_
#define MAPMETRICS_GEOMETRY_H_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace mapmetrics {

// A point in R^N. Coordinates are meters and always finite.
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<double> coords);
  Point(std::initializer_list<double> coords);

  std::size_t dim() const { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  std::span<const double> coords() const { return coords_; }

  friend bool operator==(const Point&, const Point&) = default;

 private:
  std::vector<double> coords_;
};

// Ordered point sequence, either open (polyline) or closed (polygon).
//
// Points are stored flat (point-major) so metric kernels can walk them
// without per-point allocations. A closed polyline never stores its closing
// duplicate: if the last point lies within kDuplicateTolerance of the first it
// is dropped on construction. Empty polylines are representable; they are the
// degenerate input of the sequence metrics.
class Polyline {
 public:
  static constexpr double kDuplicateTolerance = 1e-9;
  static constexpr std::size_t kDefaultDim = 2;

  Polyline() = default;
  Polyline(const std::vector<Point>& points, bool closed = false);

  // `coords.size()` must be a multiple of `dim`.
  static Polyline FromFlat(std::size_t dim, std::vector<double> coords,
                           bool closed = false);

  std::size_t size() const { return dim_ == 0 ? 0 : coords_.size() / dim_; }
  bool empty() const { return coords_.empty(); }
  std::size_t dim() const { return dim_; }
  bool closed() const { return closed_; }

  std::span<const double> point(std::size_t i) const {
    return std::span<const double>(coords_).subspan(i * dim_, dim_);
  }
  Point PointAt(std::size_t i) const;
  std::vector<Point> points() const;
  std::span<const double> flat() const { return coords_; }

  friend bool operator==(const Polyline&, const Polyline&) = default;

 private:
  Polyline(std::size_t dim, std::vector<double> coords, bool closed);
  void Normalize();

  std::size_t dim_ = kDefaultDim;
  std::vector<double> coords_;
  bool closed_ = false;
};

enum class BaseMetric { kEuclidean };

// Parameters shared by every cutoff metric in the library.
struct MetricParams {
  double cutoff = 1.5;    // c > 0, meters.
  double exponent = 1.0;  // 1 <= p < inf.
  BaseMetric base_metric = BaseMetric::kEuclidean;

  // Throws InputError unless c > 0 and 1 <= p < inf.
  void Validate() const;

  // Insertion / deletion cost of one unmatched point: c^p / 2.
  double UnmatchedCost() const;
  // d^p, with the p == 1 and p == 2 cases taken exactly.
  double Power(double d) const;
  // x^(1/p).
  double Root(double x) const;
  long double Root(long double x) const;
};

double PointDistance(std::span<const double> a, std::span<const double> b,
                     const MetricParams& params = {});
double PointDistance(const Point& a, const Point& b,
                     const MetricParams& params = {});

// Total traversal length; closed polylines include the closing edge.
double ArcLength(const Polyline& line);

// Places samples along the arc at multiples of `spacing` from the first
// vertex. Open polylines keep their last vertex unless it lies within
// spacing / 2 of the final sample; closed polylines wrap the perimeter and do
// not repeat the start. Zero-length input yields its single distinct point.
Polyline ResampleEquidistant(const Polyline& line, double spacing);

Polyline Reverse(const Polyline& line);

// Output point k is input point (k + s) mod n. Throws ContractError for open
// polylines.
Polyline CyclicShift(const Polyline& line, long long shift);

}  // namespace mapmetrics

#endif  // MAPMETRICS_GEOMETRY_H_
