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

// SOSPA between polygons, i.e. minimized over the start index of both
// cyclic sequences. Rotating only the second sequence reaches the same
// minimum, so the solver runs |y| open dynamic programs, O(|x| |y|^2) total.
// Pass the shorter polygon second when speed matters.
//
// Cyclic SOSPA is not claimed to satisfy the triangle inequality.

#ifndef MAPMETRICS_CYCLIC_SOSPA_H_
#define MAPMETRICS_CYCLIC_SOSPA_H_

#include <cstddef>

#include "mapmetrics/geometry.h"
#include "mapmetrics/sospa.h"

namespace mapmetrics {

struct CyclicSospaResult {
  double value = 0.0;
  std::size_t best_shift_x = 0;  // always 0 except from the two-sided oracle
  std::size_t best_shift_y = 0;  // in [0, |y| - 1]
  bool reversed = false;         // set by the directional variant only
  // Open SOSPA result between the shifted x and the shifted (reversed) y.
  SospaResult inner;
};

// One-sided shift search. Both inputs must be closed (ContractError
// otherwise). The lowest shift index wins ties.
CyclicSospaResult CyclicSospa(const Polyline& x, const Polyline& y,
                              const MetricParams& params);

// Minimum over every (s_x, s_y) shift pair; inputs limited to
// kBruteForceMaxLength points each.
CyclicSospaResult CyclicSospaTwoSided(const Polyline& x, const Polyline& y,
                                      const MetricParams& params);

// min(CyclicSospa(x, y), CyclicSospa(x, reverse(y))); forward wins ties.
CyclicSospaResult CyclicSospaDirectionalMin(const Polyline& x,
                                            const Polyline& y,
                                            const MetricParams& params);

}  // namespace mapmetrics

#endif  // MAPMETRICS_CYCLIC_SOSPA_H_
