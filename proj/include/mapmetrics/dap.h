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

// DAP: a soft multi-instance metric between two sets of confidence-weighted
// polylines. It is P-GOSPA (alpha = 2, cutoff 1) with normalized SOSPA as the
// single-instance base distance:
//
//   d(X, Y)^p = min_theta  sum_{(i,j)} [min(r_i, r_j) dbar_ij^p
//                                       + |r_i - r_j| / 2]
//               + (sum of unassigned r) / 2
//
// The first bracketed term summed over the optimum is the localization error,
// everything else the detection error.

#ifndef MAPMETRICS_DAP_H_
#define MAPMETRICS_DAP_H_

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "mapmetrics/geometry.h"

namespace mapmetrics {

struct Instance {
  double confidence = 1.0;  // existence probability in [0, 1]
  Polyline geometry;
  std::string class_label;

  friend bool operator==(const Instance&, const Instance&) = default;
};

struct InstanceSet {
  std::vector<Instance> instances;

  double ExistenceMass() const;
  std::size_t size() const { return instances.size(); }
  bool empty() const { return instances.empty(); }
};

// Direction-aware normalized SOSPA between two instance geometries.
struct BaseDistance {
  double normalized = 1.0;  // in [0, 1]
  bool reversed = false;    // the reversed traversal was strictly better
  bool cross_kind = false;  // open vs closed; normalized is then 1
};

// min over both traversal directions of normalized SOSPA (cyclic for
// polygons), open vs closed pairs scored 1. The argument pair is put in a
// canonical order first, so BaseInstanceDistance(a, b) and
// BaseInstanceDistance(b, a) are bitwise equal.
BaseDistance BaseInstanceDistance(const Polyline& a, const Polyline& b,
                                  const MetricParams& params);

struct DapPair {
  std::size_t i = 0;  // index into X
  std::size_t j = 0;  // index into Y
  double base_distance = 0.0;
  bool reversed = false;
};

struct DapResult {
  double value = 0.0;
  double loc_error = 0.0;
  double det_error = 0.0;
  double normalized_value = 0.0;
  double normalized_loc = 0.0;
  double normalized_det = 0.0;
  std::vector<DapPair> assignment;
};

// Pairs whose net gain over leaving both unassigned is exactly zero (e.g.
// base distance 1) are left unassigned, so such mismatches count as
// detection error.
//
// Throws InputError for confidences outside [0, 1] or mixed class labels.
DapResult Dap(const InstanceSet& x, const InstanceSet& y,
              const MetricParams& params);

// Exhaustive minimum over every assignment set; |X|, |Y| <= kDapBruteForceMax.
inline constexpr std::size_t kDapBruteForceMax = 6;
DapResult DapBruteForce(const InstanceSet& x, const InstanceSet& y,
                        const MetricParams& params);

// Per-class means of the per-sample normalized DAP and its two components.
struct ClassDapAggregate {
  std::size_t sample_count = 0;
  double dap_mean = 0.0;
  double loc_mean = 0.0;
  double det_mean = 0.0;
};

// Arithmetic mean over samples, accumulated in the given order.
ClassDapAggregate AggregateSamples(const std::vector<DapResult>& samples);

struct MeanDap {
  double mdap = 0.0;
  double mloc = 0.0;
  double mdet = 0.0;
};

// Class-wise mean. Throws InputError for an empty map.
MeanDap MeanOverClasses(
    const std::map<std::string, ClassDapAggregate>& per_class);

}  // namespace mapmetrics

#endif  // MAPMETRICS_DAP_H_
