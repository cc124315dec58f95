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

// Sequence OSPA (SOSPA): an order-aware cutoff metric between point
// sequences. Matched pairs must be strictly increasing in both sequences; each
// matched pair costs d(x_i, y_j)^p and each unmatched point costs c^p / 2. The
// minimum over ordered assignments is an edit-distance (minimum trace)
// problem and is solved here by a Wagner-Fischer style dynamic program.

#ifndef MAPMETRICS_SOSPA_H_
#define MAPMETRICS_SOSPA_H_

#include <cstddef>
#include <vector>

#include "mapmetrics/geometry.h"

namespace mapmetrics {

// Zero-based (i, j) indices into the two sequences.
struct IndexPair {
  std::size_t i = 0;
  std::size_t j = 0;
  friend bool operator==(const IndexPair&, const IndexPair&) = default;
  friend auto operator<=>(const IndexPair&, const IndexPair&) = default;
};

// Index pairs strictly increasing in both coordinates.
using OrderedAssignment = std::vector<IndexPair>;

// True iff every i and every j is strictly increasing along `pairs`.
bool IsOrderedAssignment(const OrderedAssignment& pairs);

struct SospaResult {
  double value = 0.0;            // the metric, (raw_power_cost)^(1/p)
  double raw_power_cost = 0.0;   // minimum trace cost
  OrderedAssignment assignment;  // one optimum
  std::size_t matched_count = 0;
  std::size_t unmatched_count = 0;
};

// Recomputes the trace cost of `assignment` between x and y directly:
// sum of d^p over pairs plus c^p / 2 per unmatched point.
double TraceCost(const Polyline& x, const Polyline& y,
                 const OrderedAssignment& assignment,
                 const MetricParams& params);

// SOSPA between two open polylines (either may be empty). Throws
// ContractError for closed input and InputError on dimension mismatch.
//
// Backtracking prefers a match over a deletion over an insertion, so the
// reported assignment is deterministic; the value does not depend on it.
SospaResult Sospa(const Polyline& x, const Polyline& y,
                  const MetricParams& params);

// Exhaustive minimum over all ordered assignment sets. Inputs are limited to
// kBruteForceMaxLength points each (SizeGuardError otherwise). Accepts open
// or closed input and treats both as plain sequences.
inline constexpr std::size_t kBruteForceMaxLength = 8;
SospaResult SospaBruteForce(const Polyline& x, const Polyline& y,
                            const MetricParams& params);

// Upper bound attained by the empty assignment: ((c^p/2)(nx + ny))^(1/p).
double SospaUpperBound(std::size_t nx, std::size_t ny,
                       const MetricParams& params);

// 2 d / (bound + d), in [0, 1]. Returns 0 when both sequences are empty.
double NormalizeSospa(double value, std::size_t nx, std::size_t ny,
                      const MetricParams& params);

// Normalized SOSPA. Open inputs use Sospa, closed inputs the cyclic variant.
// Mixed kinds throw ContractError.
double SospaNormalized(const Polyline& x, const Polyline& y,
                       const MetricParams& params);

struct DirectionalSospaResult {
  SospaResult best;       // optimum against y or reverse(y)
  bool reversed = false;  // true iff reverse(y) was strictly better
  std::size_t shift = 0;  // cyclic shift applied to the (reversed) y
};

// min(sospa(x, y), sospa(x, reverse(y))); forward wins ties. Closed inputs
// are delegated to CyclicSospaDirectionalMin.
DirectionalSospaResult SospaDirectionalMin(const Polyline& x, const Polyline& y,
                                           const MetricParams& params);

}  // namespace mapmetrics

#endif  // MAPMETRICS_SOSPA_H_
