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

// Threshold-based comparison metrics: Chamfer distance, discrete Frechet
// distance and the average precision built on top of either.

#ifndef MAPMETRICS_BASELINES_H_
#define MAPMETRICS_BASELINES_H_

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "mapmetrics/geometry.h"

namespace mapmetrics {

// Symmetric mean of nearest-neighbour distances; ignores point order.
// Throws InputError for empty input.
double Chamfer(const Polyline& x, const Polyline& y);

// Max over x of the distance to the nearest point of y.
double DirectedHausdorff(const Polyline& x, const Polyline& y);

struct FrechetOptions {
  // For two closed polylines, minimize over all cyclic shifts of y.
  bool cyclic = false;
};

// Discrete Frechet distance (coupling DP). Throws InputError for empty input.
double FrechetDiscrete(const Polyline& x, const Polyline& y,
                       const FrechetOptions& options = {});

enum class ApBase { kChamfer, kFrechet };

struct ApConfig {
  std::vector<double> thresholds = {0.5, 1.0, 1.5};  // strictly increasing
  ApBase base = ApBase::kChamfer;
  FrechetOptions frechet;

  // Throws InputError unless thresholds are positive and strictly increasing.
  void Validate() const;
  static ApConfig ChamferDefault();
  static ApConfig FrechetDefault();  // {1.0, 2.0, 3.0}
};

// Distances are compared to thresholds with this absolute slack, so that a
// geometrically exact distance of tau still counts as within tau.
inline constexpr double kThresholdSlack = 1e-9;

struct ScoredPrediction {
  double confidence = 0.0;
  Polyline geometry;
};

double BaseDistanceFor(ApBase base, const Polyline& a, const Polyline& b,
                       const FrechetOptions& frechet = {});

// One prediction's outcome after greedy matching.
struct Detection {
  double confidence = 0.0;
  bool true_positive = false;
};

// Greedy matching at one threshold. `distances` is predictions x ground truth
// (row-major). Predictions are visited by confidence descending (stable); each
// takes the nearest unmatched ground truth within tau. The returned
// detections are in visiting order.
std::vector<Detection> MatchDetections(const std::vector<double>& confidences,
                                       const std::vector<double>& distances,
                                       std::size_t gt_count, double tau);

// All-point interpolated AP over detections pooled from any number of
// samples. Detections are stably re-sorted by confidence, so pooled order
// decides ties. With no ground truth: 1 if there are no detections, else 0.
double AveragePrecisionFromDetections(std::vector<Detection> detections,
                                      std::size_t gt_count);

// Single-sample AP at threshold tau.
double AveragePrecision(const std::vector<ScoredPrediction>& predictions,
                        const std::vector<Polyline>& ground_truth,
                        const ApConfig& config, double tau);

// Mean over thresholds within each class, then over classes.
// Throws InputError when empty.
double MeanAp(const std::map<std::string, std::map<double, double>>&
                  per_class_per_threshold);

}  // namespace mapmetrics

#endif  // MAPMETRICS_BASELINES_H_
