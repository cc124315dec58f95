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

#include "mapmetrics/sospa.h"

#include <limits>
#include <string>

#include "mapmetrics/cyclic_sospa.h"
#include "mapmetrics/errors.h"
#include "sospa_dp.h"

namespace mapmetrics {
namespace internal {

std::vector<double> PowerCostMatrix(const Polyline& x, const Polyline& y,
                                    const MetricParams& params) {
  const std::size_t n = x.size(), m = y.size();
  if (n > 0 && m > 0 && x.dim() != y.dim()) {
    throw InputError("polyline dimension mismatch: " + std::to_string(x.dim()) +
                     " vs " + std::to_string(y.dim()));
  }
  std::vector<double> costs(n * m);
  for (std::size_t i = 0; i < n; ++i) {
    auto xi = x.point(i);
    for (std::size_t j = 0; j < m; ++j) {
      costs[i * m + j] = params.Power(PointDistance(xi, y.point(j), params));
    }
  }
  return costs;
}

}  // namespace internal

namespace {

void CheckOpen(const Polyline& x, const Polyline& y, const char* op) {
  if (x.closed() || y.closed()) {
    throw ContractError(std::string(op) +
                        " expects open polylines; use the cyclic variant for "
                        "polygons");
  }
}

}  // namespace

bool IsOrderedAssignment(const OrderedAssignment& pairs) {
  for (std::size_t k = 1; k < pairs.size(); ++k) {
    if (pairs[k].i <= pairs[k - 1].i || pairs[k].j <= pairs[k - 1].j) {
      return false;
    }
  }
  return true;
}

double TraceCost(const Polyline& x, const Polyline& y,
                 const OrderedAssignment& assignment,
                 const MetricParams& params) {
  long double total = 0.0L;
  for (const auto& [i, j] : assignment) {
    total += params.Power(PointDistance(x.point(i), y.point(j), params));
  }
  const std::size_t unmatched = x.size() + y.size() - 2 * assignment.size();
  total += static_cast<long double>(params.UnmatchedCost()) * unmatched;
  return static_cast<double>(total);
}

SospaResult Sospa(const Polyline& x, const Polyline& y,
                  const MetricParams& params) {
  params.Validate();
  CheckOpen(x, y, "Sospa");
  const std::size_t n = x.size(), m = y.size();
  const auto costs = internal::PowerCostMatrix(x, y, params);
  return internal::TraceSolve(
      n, m, [&](std::size_t i, std::size_t j) { return costs[i * m + j]; },
      params.UnmatchedCost(), params);
}

namespace {

struct BruteForceSearch {
  const std::vector<double>& costs;
  std::size_t n, m;
  long double indel;

  long double best = std::numeric_limits<long double>::infinity();
  OrderedAssignment best_pairs;
  OrderedAssignment current;

  // Every ordered set is produced exactly once: pairs are appended in
  // increasing (i, j) order.
  void Visit(std::size_t next_i, std::size_t next_j, long double matched_sum) {
    const std::size_t unmatched = n + m - 2 * current.size();
    const long double total = matched_sum + indel * unmatched;
    if (total < best) {
      best = total;
      best_pairs = current;
    }
    for (std::size_t i = next_i; i < n; ++i) {
      for (std::size_t j = next_j; j < m; ++j) {
        current.push_back({i, j});
        Visit(i + 1, j + 1, matched_sum + costs[i * m + j]);
        current.pop_back();
      }
    }
  }
};

}  // namespace

SospaResult SospaBruteForce(const Polyline& x, const Polyline& y,
                            const MetricParams& params) {
  params.Validate();
  if (x.size() > kBruteForceMaxLength || y.size() > kBruteForceMaxLength) {
    throw SizeGuardError("SospaBruteForce accepts at most " +
                         std::to_string(kBruteForceMaxLength) +
                         " points per sequence");
  }
  const auto costs = internal::PowerCostMatrix(x, y, params);
  BruteForceSearch search{costs,
                          x.size(),
                          y.size(),
                          params.UnmatchedCost(),
                          std::numeric_limits<long double>::infinity(),
                          {},
                          {}};
  search.Visit(0, 0, 0.0L);

  SospaResult result;
  result.raw_power_cost = static_cast<double>(search.best);
  result.value = static_cast<double>(params.Root(search.best));
  result.assignment = std::move(search.best_pairs);
  result.matched_count = result.assignment.size();
  result.unmatched_count = x.size() + y.size() - 2 * result.matched_count;
  return result;
}

double SospaUpperBound(std::size_t nx, std::size_t ny,
                       const MetricParams& params) {
  const long double raw =
      static_cast<long double>(params.UnmatchedCost()) * (nx + ny);
  return static_cast<double>(params.Root(raw));
}

double NormalizeSospa(double value, std::size_t nx, std::size_t ny,
                      const MetricParams& params) {
  if (nx + ny == 0) return 0.0;
  const double bound = SospaUpperBound(nx, ny, params);
  const double denom = bound + value;
  return denom > 0.0 ? 2.0 * value / denom : 0.0;
}

double SospaNormalized(const Polyline& x, const Polyline& y,
                       const MetricParams& params) {
  if (x.closed() != y.closed()) {
    throw ContractError(
        "SospaNormalized: cannot compare open and closed "
        "geometry");
  }
  const double value =
      x.closed() ? CyclicSospa(x, y, params).value : Sospa(x, y, params).value;
  return NormalizeSospa(value, x.size(), y.size(), params);
}

DirectionalSospaResult SospaDirectionalMin(const Polyline& x, const Polyline& y,
                                           const MetricParams& params) {
  if (x.closed() != y.closed()) {
    throw ContractError(
        "SospaDirectionalMin: cannot compare open and closed "
        "geometry");
  }
  DirectionalSospaResult out;
  if (x.closed()) {
    CyclicSospaResult cyclic = CyclicSospaDirectionalMin(x, y, params);
    out.best = std::move(cyclic.inner);
    out.reversed = cyclic.reversed;
    out.shift = cyclic.best_shift_y;
    return out;
  }
  SospaResult forward = Sospa(x, y, params);
  SospaResult backward = Sospa(x, Reverse(y), params);
  if (backward.value < forward.value) {
    out.best = std::move(backward);
    out.reversed = true;
  } else {
    out.best = std::move(forward);
  }
  return out;
}

}  // namespace mapmetrics
