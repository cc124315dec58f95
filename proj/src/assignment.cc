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

#include "mapmetrics/assignment.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "mapmetrics/errors.h"

namespace mapmetrics {
namespace {

void CheckEntry(double value, std::size_t r, std::size_t c) {
  if (!std::isfinite(value)) {
    throw InputError("non-finite cost at (" + std::to_string(r) + ", " +
                     std::to_string(c) + ")");
  }
}

// Square min-cost perfect matching, potentials formulation. `a` is 1-based
// (N+1) x (N+1); returns row_of_col[1..N].
std::vector<std::size_t> HungarianSquare(const std::vector<double>& a,
                                         std::size_t n) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  const std::size_t w = n + 1;
  std::vector<double> u(w, 0.0), v(w, 0.0);
  std::vector<std::size_t> row_of_col(w, 0), way(w, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    row_of_col[0] = i;
    std::size_t j0 = 0;
    std::vector<double> minv(w, kInf);
    std::vector<char> used(w, 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = row_of_col[j0];
      double delta = kInf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = a[i0 * w + j] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[row_of_col[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (row_of_col[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      row_of_col[j0] = row_of_col[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  return row_of_col;
}

}  // namespace

CostMatrix::CostMatrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), entries_(rows * cols, fill) {
  CheckEntry(fill, 0, 0);
}

CostMatrix::CostMatrix(std::size_t rows, std::size_t cols,
                       std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw InputError("cost matrix has " + std::to_string(entries_.size()) +
                     " entries, expected " + std::to_string(rows_ * cols_));
  }
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) CheckEntry((*this)(r, c), r, c);
  }
}

void CostMatrix::Set(std::size_t r, std::size_t c, double value) {
  CheckEntry(value, r, c);
  entries_[r * cols_ + c] = value;
}

AssignmentResult SolveAssignment(const CostMatrix& costs) {
  AssignmentResult result;
  const std::size_t n = std::max(costs.rows(), costs.cols());
  if (costs.rows() == 0 || costs.cols() == 0) return result;

  const std::size_t w = n + 1;
  std::vector<double> a(w * w, 0.0);
  for (std::size_t r = 0; r < costs.rows(); ++r) {
    for (std::size_t c = 0; c < costs.cols(); ++c) {
      a[(r + 1) * w + (c + 1)] = std::min(costs(r, c), 0.0);
    }
  }
  const auto row_of_col = HungarianSquare(a, n);

  long double total = 0.0L;
  for (std::size_t j = 1; j <= n; ++j) {
    const std::size_t r = row_of_col[j] - 1, c = j - 1;
    if (r < costs.rows() && c < costs.cols() && costs(r, c) < 0.0) {
      result.pairs.push_back({r, c});
    }
  }
  std::sort(result.pairs.begin(), result.pairs.end());
  for (const auto& [r, c] : result.pairs) total += costs(r, c);
  result.total = static_cast<double>(total);
  return result;
}

namespace {

struct MatchingSearch {
  const CostMatrix& costs;
  std::vector<char> col_used;
  std::vector<IndexPair> current;
  std::vector<IndexPair> best_pairs;
  long double best = 0.0L;  // the empty matching

  void Visit(std::size_t row, long double sum) {
    if (row == costs.rows()) {
      if (sum < best) {
        best = sum;
        best_pairs = current;
      }
      return;
    }
    Visit(row + 1, sum);  // row left unassigned
    for (std::size_t c = 0; c < costs.cols(); ++c) {
      if (col_used[c]) continue;
      col_used[c] = 1;
      current.push_back({row, c});
      Visit(row + 1, sum + costs(row, c));
      current.pop_back();
      col_used[c] = 0;
    }
  }
};

}  // namespace

AssignmentResult SolveAssignmentBruteForce(const CostMatrix& costs) {
  if (costs.rows() > kAssignmentBruteForceMax ||
      costs.cols() > kAssignmentBruteForceMax) {
    throw SizeGuardError("SolveAssignmentBruteForce accepts at most " +
                         std::to_string(kAssignmentBruteForceMax) +
                         " rows and columns");
  }
  MatchingSearch search{costs, std::vector<char>(costs.cols(), 0), {}, {}};
  search.Visit(0, 0.0L);
  return {search.best_pairs, static_cast<double>(search.best)};
}

double GospaUnordered(const Polyline& x, const Polyline& y,
                      const MetricParams& params) {
  params.Validate();
  const std::size_t n = x.size(), m = y.size();
  const double cutoff_power = params.Power(params.cutoff);
  CostMatrix net(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      // Matching replaces two unmatched points, i.e. saves c^p.
      net.Set(i, j,
              params.Power(PointDistance(x.point(i), y.point(j), params)) -
                  cutoff_power);
    }
  }
  const AssignmentResult assignment = SolveAssignment(net);
  const long double raw =
      static_cast<long double>(params.UnmatchedCost()) * (n + m) +
      assignment.total;
  return static_cast<double>(params.Root(std::max(raw, 0.0L)));
}

}  // namespace mapmetrics
