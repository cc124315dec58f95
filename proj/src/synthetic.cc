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

#include <algorithm>
#include <cmath>
#include <random>

#include "mapmetrics/errors.h"

namespace mapmetrics {
namespace {

constexpr double kHalfSqrt2 = 0.70710678118654752440;
// Along-line direction and its normal.
constexpr double kAlong[2] = {kHalfSqrt2, -kHalfSqrt2};
constexpr double kNormal[2] = {kHalfSqrt2, kHalfSqrt2};

constexpr double kLineSpacing = 10.0;
constexpr double kFarOffset = 200.0;

// Uniform doubles straight from the engine bits, so corpora are identical
// across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double Uniform(double lo, double hi) {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }
  std::size_t Index(std::size_t n) {
    return static_cast<std::size_t>(engine_() % n);
  }

 private:
  std::mt19937_64 engine_;
};

Polyline Translate(const Polyline& g, double dx, double dy) {
  std::vector<double> flat(g.flat().begin(), g.flat().end());
  for (std::size_t i = 0; i < flat.size(); i += 2) {
    flat[i] += dx;
    flat[i + 1] += dy;
  }
  return Polyline::FromFlat(2, std::move(flat), g.closed());
}

Polyline Straight(double x0, double y0, int length_m) {
  std::vector<double> flat;
  for (int t = 0; t <= length_m; ++t) {
    flat.push_back(x0 + kAlong[0] * t);
    flat.push_back(y0 + kAlong[1] * t);
  }
  return Polyline::FromFlat(2, std::move(flat), false);
}

Polyline Rectangle(double cx, double cy, double width, double depth) {
  const double hw = width / 2.0, hd = depth / 2.0;
  const double corners[4][2] = {{-hw, -hd}, {hw, -hd}, {hw, hd}, {-hw, hd}};
  std::vector<double> flat;
  for (const auto& c : corners) {
    flat.push_back(cx + kAlong[0] * c[0] + kNormal[0] * c[1]);
    flat.push_back(cy + kAlong[1] * c[0] + kNormal[1] * c[1]);
  }
  return Polyline::FromFlat(2, std::move(flat), true);
}

Polyline Scramble(const Polyline& g, double fraction, Rng& rng) {
  const std::size_t n = g.size();
  if (n < 2) return g;
  std::vector<Point> pts = g.points();
  const std::size_t swaps = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::lround(fraction * n / 2.0)));
  std::vector<std::size_t> slots(n - 1);
  for (std::size_t k = 0; k < slots.size(); ++k) slots[k] = k;
  for (std::size_t k = slots.size(); k > 1; --k) {
    std::swap(slots[k - 1], slots[rng.Index(k)]);
  }
  std::vector<char> used(n, 0);
  std::size_t done = 0;
  for (std::size_t k : slots) {
    if (done == swaps) break;
    if (used[k] || used[k + 1]) continue;
    std::swap(pts[k], pts[k + 1]);
    used[k] = used[k + 1] = 1;
    ++done;
  }
  return Polyline(pts, g.closed());
}

Polyline CutTo(const Polyline& g, double keep_fraction) {
  const double target = ArcLength(g) * keep_fraction;
  std::vector<double> flat(g.point(0).begin(), g.point(0).end());
  double walked = 0.0;
  for (std::size_t i = 1; i < g.size(); ++i) {
    const double seg = PointDistance(g.point(i - 1), g.point(i));
    if (walked + seg >= target) {
      const double t = seg > 0.0 ? (target - walked) / seg : 0.0;
      for (std::size_t d = 0; d < 2; ++d) {
        flat.push_back(g.point(i - 1)[d] +
                       t * (g.point(i)[d] - g.point(i - 1)[d]));
      }
      break;
    }
    flat.insert(flat.end(), g.point(i).begin(), g.point(i).end());
    walked += seg;
  }
  return Polyline::FromFlat(2, std::move(flat), false);
}

Polyline DisplaceVertex(const Polyline& g, std::size_t index, double amount) {
  std::vector<double> flat(g.flat().begin(), g.flat().end());
  flat[2 * index] += kNormal[0] * amount;
  flat[2 * index + 1] += kNormal[1] * amount;
  return Polyline::FromFlat(2, std::move(flat), g.closed());
}

Instance Make(const Polyline& g, const std::string& label) {
  return Instance{1.0, g, label};
}

}  // namespace

const char* ScenarioName(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::kShift:
      return "shift";
    case ScenarioKind::kMisorder:
      return "misorder";
    case ScenarioKind::kDropTail:
      return "drop_tail";
    case ScenarioKind::kSpuriousInstances:
      return "spurious_instances";
    case ScenarioKind::kOutlierPoint:
      return "outlier_point";
  }
  return "unknown";
}

ScenarioKind ParseScenarioKind(const std::string& name) {
  for (ScenarioKind kind : AllScenarioKinds()) {
    if (name == ScenarioName(kind)) return kind;
  }
  throw InputError("unknown scenario kind '" + name + "'");
}

const std::vector<ScenarioKind>& AllScenarioKinds() {
  static const std::vector<ScenarioKind> kinds = {
      ScenarioKind::kShift, ScenarioKind::kMisorder, ScenarioKind::kDropTail,
      ScenarioKind::kSpuriousInstances, ScenarioKind::kOutlierPoint};
  return kinds;
}

double DefaultMagnitude(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::kShift:
      return 1.0;
    case ScenarioKind::kMisorder:
      return 0.5;
    case ScenarioKind::kDropTail:
      return 0.3;
    case ScenarioKind::kSpuriousInstances:
      return 2.0;
    case ScenarioKind::kOutlierPoint:
      return 3.0;
  }
  return 1.0;
}

SceneRecord SynthesizeScenario(ScenarioKind kind, double magnitude,
                               std::uint64_t seed,
                               const std::string& sample_id) {
  if (!std::isfinite(magnitude) || magnitude < 0.0) {
    throw InputError("scenario magnitude must be finite and non-negative");
  }
  Rng rng(seed);
  const double ox = rng.Uniform(-20.0, 20.0);
  const double oy = rng.Uniform(-20.0, 20.0);

  SceneRecord scene;
  scene.sample_id = sample_id;
  const char* line_classes[4] = {"divider", "divider", "boundary", "boundary"};
  for (int k = 0; k < 4; ++k) {
    const double along = rng.Uniform(0.0, 5.0);
    const int length = 8 + static_cast<int>(rng.Index(13));  // 8..20 m
    const double x0 = ox + kNormal[0] * kLineSpacing * k + kAlong[0] * along;
    const double y0 = oy + kNormal[1] * kLineSpacing * k + kAlong[1] * along;
    scene.classes[line_classes[k]].ground_truth.push_back(
        Make(Straight(x0, y0, length), line_classes[k]));
  }
  if (kind != ScenarioKind::kShift) {
    const double cx = ox - kNormal[0] * 15.0 + kAlong[0] * 5.0;
    const double cy = oy - kNormal[1] * 15.0 + kAlong[1] * 5.0;
    scene.classes["crossing"].ground_truth.push_back(
        Make(Rectangle(cx, cy, rng.Uniform(5.0, 8.0), rng.Uniform(2.5, 4.0)),
             "crossing"));
  }

  for (auto& [name, sample] : scene.classes) {
    std::size_t spurious_index = 0;
    for (const Instance& gt : sample.ground_truth) {
      const Polyline& g = gt.geometry;
      Polyline pred = g;
      switch (kind) {
        case ScenarioKind::kShift:
          pred = Translate(g, kNormal[0] * magnitude, kNormal[1] * magnitude);
          break;
        case ScenarioKind::kMisorder:
          pred = Scramble(g, std::clamp(magnitude, 0.0, 1.0), rng);
          break;
        case ScenarioKind::kDropTail:
          if (!g.closed())
            pred = CutTo(g, std::clamp(1.0 - magnitude, 0.0, 1.0));
          break;
        case ScenarioKind::kSpuriousInstances:
          break;
        case ScenarioKind::kOutlierPoint:
          pred = DisplaceVertex(g, g.closed() ? 0 : 1 + rng.Index(g.size() - 2),
                                magnitude);
          break;
      }
      sample.predictions.push_back(Make(pred, name));
    }
    if (kind == ScenarioKind::kSpuriousInstances) {
      const std::size_t extra =
          static_cast<std::size_t>(std::lround(magnitude));
      for (std::size_t e = 0; e < extra; ++e) {
        const Polyline& src =
            sample.ground_truth[e % sample.ground_truth.size()].geometry;
        const double off =
            kFarOffset + 30.0 * static_cast<double>(spurious_index++);
        sample.predictions.push_back(
            Make(Translate(src, kNormal[0] * off, kNormal[1] * off), name));
      }
    }
  }
  return scene;
}

std::vector<SceneRecord> SynthesizeCorpus(ScenarioKind kind, double magnitude,
                                          std::size_t count,
                                          std::uint64_t seed) {
  std::vector<SceneRecord> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(SynthesizeScenario(
        kind, magnitude, seed + i,
        std::string(ScenarioName(kind)) + "-" + std::to_string(i)));
  }
  return out;
}

std::vector<SceneRecord> SynthesizeMixedCorpus(std::size_t count,
                                               std::uint64_t seed) {
  const auto& kinds = AllScenarioKinds();
  std::vector<SceneRecord> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const ScenarioKind kind = kinds[i % kinds.size()];
    out.push_back(SynthesizeScenario(
        kind, DefaultMagnitude(kind), seed + i,
        std::string(ScenarioName(kind)) + "-" + std::to_string(i)));
  }
  return out;
}

}  // namespace mapmetrics
