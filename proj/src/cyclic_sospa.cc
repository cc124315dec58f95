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

#include "mapmetrics/cyclic_sospa.h"

#include <algorithm>
#include <string>
#include <vector>

#include "mapmetrics/errors.h"
#include "sospa_dp.h"

namespace mapmetrics {
namespace {

void CheckClosed(const Polyline& x, const Polyline& y, const char* op) {
  if (!x.closed() || !y.closed()) {
    throw ContractError(std::string(op) + " expects closed polylines");
  }
}

}  // namespace

CyclicSospaResult CyclicSospa(const Polyline& x, const Polyline& y,
                              const MetricParams& params) {
  params.Validate();
  CheckClosed(x, y, "CyclicSospa");
  const std::size_t n = x.size(), m = y.size();
  const auto costs = internal::PowerCostMatrix(x, y, params);
  const long double indel = params.UnmatchedCost();

  std::size_t best_shift = 0;
  if (m > 1) {
    std::vector<long double> prev, curr;
    long double best = 0.0L;
    for (std::size_t s = 0; s < m; ++s) {
      const long double v = internal::TraceValue(
          n, m,
          [&](std::size_t i, std::size_t j) {
            const std::size_t js = j + s < m ? j + s : j + s - m;
            return costs[i * m + js];
          },
          indel, prev, curr);
      if (s == 0 || v < best) {
        best = v;
        best_shift = s;
      }
    }
  }

  CyclicSospaResult result;
  result.best_shift_y = best_shift;
  result.inner = internal::TraceSolve(
      n, m,
      [&](std::size_t i, std::size_t j) {
        return costs[i * m + (j + best_shift) % m];
      },
      indel, params);
  result.value = result.inner.value;
  return result;
}

CyclicSospaResult CyclicSospaTwoSided(const Polyline& x, const Polyline& y,
                                      const MetricParams& params) {
  params.Validate();
  CheckClosed(x, y, "CyclicSospaTwoSided");
  if (x.size() > kBruteForceMaxLength || y.size() > kBruteForceMaxLength) {
    throw SizeGuardError("CyclicSospaTwoSided accepts at most " +
                         std::to_string(kBruteForceMaxLength) +
                         " points per polygon");
  }
  const std::size_t n = x.size(), m = y.size();
  const auto costs = internal::PowerCostMatrix(x, y, params);
  const long double indel = params.UnmatchedCost();

  std::size_t best_sx = 0, best_sy = 0;
  long double best = 0.0L;
  bool first = true;
  std::vector<long double> prev, curr;
  for (std::size_t sx = 0; sx < std::max<std::size_t>(n, 1); ++sx) {
    for (std::size_t sy = 0; sy < std::max<std::size_t>(m, 1); ++sy) {
      const long double v = internal::TraceValue(
          n, m,
          [&](std::size_t i, std::size_t j) {
            return costs[((i + sx) % n) * m + (j + sy) % m];
          },
          indel, prev, curr);
      if (first || v < best) {
        best = v;
        best_sx = sx;
        best_sy = sy;
        first = false;
      }
    }
  }

  CyclicSospaResult result;
  result.best_shift_x = best_sx;
  result.best_shift_y = best_sy;
  result.inner = internal::TraceSolve(
      n, m,
      [&](std::size_t i, std::size_t j) {
        return costs[((i + best_sx) % n) * m + (j + best_sy) % m];
      },
      indel, params);
  result.value = result.inner.value;
  return result;
}

CyclicSospaResult CyclicSospaDirectionalMin(const Polyline& x,
                                            const Polyline& y,
                                            const MetricParams& params) {
  CyclicSospaResult forward = CyclicSospa(x, y, params);
  CyclicSospaResult backward = CyclicSospa(x, Reverse(y), params);
  if (backward.value < forward.value) {
    backward.reversed = true;
    return backward;
  }
  return forward;
}

}  // namespace mapmetrics
