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

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "mapmetrics/errors.h"

namespace mapmetrics {
namespace {

void CheckFinite(std::span<const double> coords) {
  for (double v : coords) {
    if (!std::isfinite(v)) {
      throw InputError("non-finite coordinate " + std::to_string(v));
    }
  }
}

// Relative slack when counting how many spacing multiples fit in an arc.
constexpr double kArcSlack = 1e-9;

}  // namespace

Point::Point(std::vector<double> coords) : coords_(std::move(coords)) {
  CheckFinite(coords_);
}

Point::Point(std::initializer_list<double> coords) : coords_(coords) {
  CheckFinite(coords_);
}

Polyline::Polyline(const std::vector<Point>& points, bool closed)
    : closed_(closed) {
  if (!points.empty()) dim_ = points.front().dim();
  if (dim_ == 0) throw InputError("zero-dimensional point in polyline");
  coords_.reserve(points.size() * dim_);
  for (const auto& p : points) {
    if (p.dim() != dim_) {
      throw InputError("mixed point dimensions in polyline: " +
                       std::to_string(dim_) + " vs " + std::to_string(p.dim()));
    }
    coords_.insert(coords_.end(), p.coords().begin(), p.coords().end());
  }
  Normalize();
}

Polyline::Polyline(std::size_t dim, std::vector<double> coords, bool closed)
    : dim_(dim), coords_(std::move(coords)), closed_(closed) {
  if (dim_ == 0) throw InputError("zero-dimensional polyline");
  if (coords_.size() % dim_ != 0) {
    throw InputError("flat coordinate count " + std::to_string(coords_.size()) +
                     " is not a multiple of dimension " + std::to_string(dim_));
  }
  CheckFinite(coords_);
  Normalize();
}

Polyline Polyline::FromFlat(std::size_t dim, std::vector<double> coords,
                            bool closed) {
  return Polyline(dim, std::move(coords), closed);
}

void Polyline::Normalize() {
  if (!closed_) return;
  while (size() > 1 &&
         PointDistance(point(0), point(size() - 1)) < kDuplicateTolerance) {
    coords_.resize(coords_.size() - dim_);
  }
}

Point Polyline::PointAt(std::size_t i) const {
  auto p = point(i);
  return Point(std::vector<double>(p.begin(), p.end()));
}

std::vector<Point> Polyline::points() const {
  std::vector<Point> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(PointAt(i));
  return out;
}

void MetricParams::Validate() const {
  if (!(cutoff > 0.0) || !std::isfinite(cutoff)) {
    throw InputError("cutoff c must be a finite positive number, got " +
                     std::to_string(cutoff));
  }
  if (!(exponent >= 1.0) || !std::isfinite(exponent)) {
    throw InputError("exponent p must satisfy 1 <= p < inf, got " +
                     std::to_string(exponent));
  }
}

double MetricParams::UnmatchedCost() const { return Power(cutoff) / 2.0; }

double MetricParams::Power(double d) const {
  if (exponent == 1.0) return d;
  if (exponent == 2.0) return d * d;
  return std::pow(d, exponent);
}

double MetricParams::Root(double x) const {
  if (exponent == 1.0) return x;
  if (exponent == 2.0) return std::sqrt(x);
  return std::pow(x, 1.0 / exponent);
}

long double MetricParams::Root(long double x) const {
  if (exponent == 1.0) return x;
  if (exponent == 2.0) return std::sqrt(x);
  return std::pow(x, 1.0L / static_cast<long double>(exponent));
}

double PointDistance(std::span<const double> a, std::span<const double> b,
                     const MetricParams& /*params*/) {
  if (a.size() != b.size()) {
    throw InputError("point dimension mismatch: " + std::to_string(a.size()) +
                     " vs " + std::to_string(b.size()));
  }
  double sum = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double diff = a[k] - b[k];
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

double PointDistance(const Point& a, const Point& b,
                     const MetricParams& params) {
  return PointDistance(a.coords(), b.coords(), params);
}

double ArcLength(const Polyline& line) {
  const std::size_t n = line.size();
  if (n < 2) return 0.0;
  double total = 0.0;
  for (std::size_t i = 1; i < n; ++i) {
    total += PointDistance(line.point(i - 1), line.point(i));
  }
  if (line.closed()) total += PointDistance(line.point(n - 1), line.point(0));
  return total;
}

Polyline ResampleEquidistant(const Polyline& line, double spacing) {
  if (!(spacing > 0.0) || !std::isfinite(spacing)) {
    throw InputError("resampling spacing must be positive, got " +
                     std::to_string(spacing));
  }
  const std::size_t n = line.size();
  const std::size_t dim = line.dim();
  if (n == 0) return line;

  const double length = ArcLength(line);
  if (length <= 0.0) {
    auto first = line.point(0);
    return Polyline::FromFlat(dim, {first.begin(), first.end()}, line.closed());
  }

  std::size_t sample_count;
  if (line.closed()) {
    sample_count =
        static_cast<std::size_t>(std::floor(length / spacing - kArcSlack)) + 1;
  } else {
    sample_count =
        static_cast<std::size_t>(std::floor(length / spacing + kArcSlack)) + 1;
  }

  const std::size_t segment_count = line.closed() ? n : n - 1;
  std::vector<double> out;
  out.reserve((sample_count + 1) * dim);

  std::size_t seg = 0;
  double seg_start = 0.0;  // arc position of the current segment's start
  double seg_len = PointDistance(line.point(0), line.point(1 % n));
  for (std::size_t k = 0; k < sample_count; ++k) {
    const double target = static_cast<double>(k) * spacing;
    while (seg + 1 < segment_count && target > seg_start + seg_len) {
      seg_start += seg_len;
      ++seg;
      seg_len = PointDistance(line.point(seg), line.point((seg + 1) % n));
    }
    auto a = line.point(seg);
    auto b = line.point((seg + 1) % n);
    const double t = seg_len > 0.0
                         ? std::clamp((target - seg_start) / seg_len, 0.0, 1.0)
                         : 0.0;
    for (std::size_t d = 0; d < dim; ++d) {
      out.push_back(a[d] + t * (b[d] - a[d]));
    }
  }

  if (!line.closed()) {
    const double last_sample = static_cast<double>(sample_count - 1) * spacing;
    if (length - last_sample >= spacing / 2.0) {
      auto last = line.point(n - 1);
      out.insert(out.end(), last.begin(), last.end());
    }
  }
  return Polyline::FromFlat(dim, std::move(out), line.closed());
}

Polyline Reverse(const Polyline& line) {
  const std::size_t n = line.size();
  const std::size_t dim = line.dim();
  std::vector<double> out;
  out.reserve(n * dim);
  for (std::size_t i = n; i-- > 0;) {
    auto p = line.point(i);
    out.insert(out.end(), p.begin(), p.end());
  }
  return Polyline::FromFlat(dim, std::move(out), line.closed());
}

Polyline CyclicShift(const Polyline& line, long long shift) {
  if (!line.closed()) {
    throw ContractError("CyclicShift requires a closed polyline");
  }
  const std::size_t n = line.size();
  if (n == 0) return line;
  const long long ln = static_cast<long long>(n);
  const std::size_t offset = static_cast<std::size_t>(((shift % ln) + ln) % ln);
  std::vector<double> out;
  out.reserve(n * line.dim());
  for (std::size_t k = 0; k < n; ++k) {
    auto p = line.point((k + offset) % n);
    out.insert(out.end(), p.begin(), p.end());
  }
  return Polyline::FromFlat(line.dim(), std::move(out), true);
}

}  // namespace mapmetrics
