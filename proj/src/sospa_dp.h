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

// Minimum-trace dynamic program shared by the open and cyclic solvers.

#ifndef MAPMETRICS_SRC_SOSPA_DP_H_
#define MAPMETRICS_SRC_SOSPA_DP_H_

#include <algorithm>
#include <cstddef>
#include <vector>

#include "mapmetrics/geometry.h"
#include "mapmetrics/sospa.h"

namespace mapmetrics::internal {

// Row-major nx * ny matrix of d(x_i, y_j)^p.
std::vector<double> PowerCostMatrix(const Polyline& x, const Polyline& y,
                                    const MetricParams& params);

// Minimum trace cost for cost(i, j) and a constant indel cost, two rows only.
template <typename CostFn>
long double TraceValue(std::size_t n, std::size_t m, CostFn&& cost,
                       long double indel, std::vector<long double>& prev,
                       std::vector<long double>& curr) {
  prev.resize(m + 1);
  curr.resize(m + 1);
  for (std::size_t j = 0; j <= m; ++j) prev[j] = indel * j;
  for (std::size_t i = 1; i <= n; ++i) {
    curr[0] = indel * i;
    for (std::size_t j = 1; j <= m; ++j) {
      const long double diag = prev[j - 1] + cost(i - 1, j - 1);
      const long double del = prev[j] + indel;
      const long double ins = curr[j - 1] + indel;
      curr[j] = std::min(diag, std::min(del, ins));
    }
    prev.swap(curr);
  }
  return prev[m];
}

// Full table plus backtracking. Ties prefer match, then deletion (x_i left
// unmatched), then insertion.
template <typename CostFn>
SospaResult TraceSolve(std::size_t n, std::size_t m, CostFn&& cost,
                       long double indel, const MetricParams& params) {
  const std::size_t w = m + 1;
  std::vector<long double> table((n + 1) * w);
  for (std::size_t j = 0; j <= m; ++j) table[j] = indel * j;
  for (std::size_t i = 1; i <= n; ++i) {
    long double* row = &table[i * w];
    const long double* up = &table[(i - 1) * w];
    row[0] = indel * i;
    for (std::size_t j = 1; j <= m; ++j) {
      const long double diag = up[j - 1] + cost(i - 1, j - 1);
      const long double del = up[j] + indel;
      const long double ins = row[j - 1] + indel;
      row[j] = std::min(diag, std::min(del, ins));
    }
  }

  SospaResult result;
  std::size_t i = n, j = m;
  while (i > 0 || j > 0) {
    const long double here = table[i * w + j];
    if (i > 0 && j > 0 &&
        here == table[(i - 1) * w + (j - 1)] + cost(i - 1, j - 1)) {
      result.assignment.push_back({i - 1, j - 1});
      --i;
      --j;
    } else if (i > 0 && (j == 0 || here == table[(i - 1) * w + j] + indel)) {
      --i;
    } else {
      --j;
    }
  }
  std::reverse(result.assignment.begin(), result.assignment.end());

  const long double raw = table[n * w + m];
  result.raw_power_cost = static_cast<double>(raw);
  result.value = static_cast<double>(params.Root(raw));
  result.matched_count = result.assignment.size();
  result.unmatched_count = n + m - 2 * result.matched_count;
  return result;
}

}  // namespace mapmetrics::internal

#endif  // MAPMETRICS_SRC_SOSPA_DP_H_
