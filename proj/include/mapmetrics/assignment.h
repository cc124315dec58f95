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

#ifndef MAPMETRICS_ASSIGNMENT_H_
#define MAPMETRICS_ASSIGNMENT_H_

#include <cstddef>
#include <vector>

#include "mapmetrics/geometry.h"
#include "mapmetrics/sospa.h"

namespace mapmetrics {

// Dense rows x cols matrix of finite costs, row-major.
class CostMatrix {
 public:
  CostMatrix() = default;
  CostMatrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  // Throws InputError if entries.size() != rows * cols or any entry is not
  // finite.
  CostMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  // Throws InputError for non-finite values.
  void Set(std::size_t r, std::size_t c, double value);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> entries_;
};

struct AssignmentResult {
  std::vector<IndexPair> pairs;  // (row, col), sorted by row
  double total = 0.0;            // sum of the chosen costs
};

// Minimum-total partial assignment: each row and column is used at most once
// and leaving either unassigned is free, so only strictly negative entries
// are ever selected. Solved by the Hungarian method on the matrix of
// min(cost, 0) padded with zeros to a square, O(max(rows, cols)^3).
AssignmentResult SolveAssignment(const CostMatrix& costs);

// Exhaustive minimum over all partial matchings; rows and cols limited to
// kAssignmentBruteForceMax.
inline constexpr std::size_t kAssignmentBruteForceMax = 8;
AssignmentResult SolveAssignmentBruteForce(const CostMatrix& costs);

// GOSPA (alpha = 2) between the point multisets of x and y: the cost
// structure of SOSPA without the ordering constraint. Point order and the
// closed flag are ignored.
double GospaUnordered(const Polyline& x, const Polyline& y,
                      const MetricParams& params);

}  // namespace mapmetrics

#endif  // MAPMETRICS_ASSIGNMENT_H_
