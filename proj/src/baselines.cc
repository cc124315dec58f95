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

#include "mapmetrics/baselines.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "mapmetrics/errors.h"

namespace mapmetrics {
namespace {

void CheckNonEmpty(const Polyline& x, const Polyline& y, const char* op) {
  if (x.empty() || y.empty()) {
    throw InputError(std::string(op) + " needs non-empty polylines");
  }
}

double MeanNearest(const Polyline& from, const Polyline& to) {
  double sum = 0.0;
  for (std::size_t i = 0; i < from.size(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < to.size(); ++j) {
      best = std::min(best, PointDistance(from.point(i), to.point(j)));
    }
    sum += best;
  }
  return sum / static_cast<double>(from.size());
}

double FrechetOpen(const Polyline& x, const Polyline& y, std::size_t shift) {
  const std::size_t n = x.size(), m = y.size();
  std::vector<double> prev(m), curr(m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const double d = PointDistance(x.point(i), y.point((j + shift) % m));
      double reach;
      if (i == 0 && j == 0) {
        reach = d;
      } else if (i == 0) {
        reach = std::max(curr[j - 1], d);
      } else if (j == 0) {
        reach = std::max(prev[0], d);
      } else {
        reach = std::max(std::min({prev[j], curr[j - 1], prev[j - 1]}), d);
      }
      curr[j] = reach;
    }
    prev.swap(curr);
  }
  return prev[m - 1];
}

}  // namespace

double Chamfer(const Polyline& x, const Polyline& y) {
  CheckNonEmpty(x, y, "Chamfer");
  return 0.5 * (MeanNearest(x, y) + MeanNearest(y, x));
}

double DirectedHausdorff(const Polyline& x, const Polyline& y) {
  CheckNonEmpty(x, y, "DirectedHausdorff");
  double worst = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < y.size(); ++j) {
      best = std::min(best, PointDistance(x.point(i), y.point(j)));
    }
    worst = std::max(worst, best);
  }
  return worst;
}

double FrechetDiscrete(const Polyline& x, const Polyline& y,
                       const FrechetOptions& options) {
  CheckNonEmpty(x, y, "FrechetDiscrete");
  if (!options.cyclic || !x.closed() || !y.closed()) {
    return FrechetOpen(x, y, 0);
  }
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < y.size(); ++s) {
    best = std::min(best, FrechetOpen(x, y, s));
  }
  return best;
}

void ApConfig::Validate() const {
  if (thresholds.empty()) throw InputError("AP needs at least one threshold");
  for (std::size_t k = 0; k < thresholds.size(); ++k) {
    if (!(thresholds[k] > 0.0) || !std::isfinite(thresholds[k])) {
      throw InputError("AP thresholds must be positive, got " +
                       std::to_string(thresholds[k]));
    }
    if (k > 0 && !(thresholds[k] > thresholds[k - 1])) {
      throw InputError("AP thresholds must be strictly increasing");
    }
  }
}

ApConfig ApConfig::ChamferDefault() { return ApConfig{}; }

ApConfig ApConfig::FrechetDefault() {
  ApConfig config;
  config.thresholds = {1.0, 2.0, 3.0};
  config.base = ApBase::kFrechet;
  return config;
}

double BaseDistanceFor(ApBase base, const Polyline& a, const Polyline& b,
                       const FrechetOptions& frechet) {
  return base == ApBase::kChamfer ? Chamfer(a, b)
                                  : FrechetDiscrete(a, b, frechet);
}

std::vector<Detection> MatchDetections(const std::vector<double>& confidences,
                                       const std::vector<double>& distances,
                                       std::size_t gt_count, double tau) {
  const std::size_t n = confidences.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return confidences[a] > confidences[b];
                   });
  std::vector<char> gt_taken(gt_count, 0);
  std::vector<Detection> out;
  out.reserve(n);
  for (std::size_t p : order) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_gt = gt_count;
    for (std::size_t g = 0; g < gt_count; ++g) {
      if (gt_taken[g]) continue;
      const double d = distances[p * gt_count + g];
      if (d < best) {
        best = d;
        best_gt = g;
      }
    }
    const bool tp = best_gt < gt_count && best <= tau + kThresholdSlack;
    if (tp) gt_taken[best_gt] = 1;
    out.push_back({confidences[p], tp});
  }
  return out;
}

double AveragePrecisionFromDetections(std::vector<Detection> detections,
                                      std::size_t gt_count) {
  if (gt_count == 0) return detections.empty() ? 1.0 : 0.0;
  std::stable_sort(detections.begin(), detections.end(),
                   [](const Detection& a, const Detection& b) {
                     return a.confidence > b.confidence;
                   });
  const std::size_t n = detections.size();
  std::vector<double> precision(n), recall(n);
  std::size_t tp = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (detections[k].true_positive) ++tp;
    precision[k] = static_cast<double>(tp) / static_cast<double>(k + 1);
    recall[k] = static_cast<double>(tp) / static_cast<double>(gt_count);
  }
  for (std::size_t k = n; k-- > 1;) {
    precision[k - 1] = std::max(precision[k - 1], precision[k]);
  }
  double ap = 0.0, prev_recall = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    if (!detections[k].true_positive) continue;
    ap += (recall[k] - prev_recall) * precision[k];
    prev_recall = recall[k];
  }
  return ap;
}

double AveragePrecision(const std::vector<ScoredPrediction>& predictions,
                        const std::vector<Polyline>& ground_truth,
                        const ApConfig& config, double tau) {
  const std::size_t n = predictions.size(), g = ground_truth.size();
  std::vector<double> confidences(n), distances(n * g);
  for (std::size_t p = 0; p < n; ++p) {
    confidences[p] = predictions[p].confidence;
    for (std::size_t k = 0; k < g; ++k) {
      distances[p * g + k] =
          BaseDistanceFor(config.base, predictions[p].geometry, ground_truth[k],
                          config.frechet);
    }
  }
  return AveragePrecisionFromDetections(
      MatchDetections(confidences, distances, g, tau), g);
}

double MeanAp(const std::map<std::string, std::map<double, double>>&
                  per_class_per_threshold) {
  if (per_class_per_threshold.empty()) {
    throw InputError("mAP needs at least one class");
  }
  double class_sum = 0.0;
  for (const auto& [name, per_threshold] : per_class_per_threshold) {
    if (per_threshold.empty()) {
      throw InputError("class '" + name + "' has no AP thresholds");
    }
    double sum = 0.0;
    for (const auto& [tau, ap] : per_threshold) sum += ap;
    class_sum += sum / static_cast<double>(per_threshold.size());
  }
  return class_sum / static_cast<double>(per_class_per_threshold.size());
}

}  // namespace mapmetrics
