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

// Randomized oracle-equivalence and metric-axiom suites, runnable from the
// command line. Each suite draws its inputs from a seeded generator.

#ifndef MAPMETRICS_VALIDATION_H_
#define MAPMETRICS_VALIDATION_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mapmetrics/dap.h"
#include "mapmetrics/geometry.h"

namespace mapmetrics {

class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  double Uniform(double lo, double hi);
  // Uniform integer in [lo, hi].
  std::size_t Int(std::size_t lo, std::size_t hi);

  // `length` points uniform in [0, extent]^2.
  Polyline RandomPolyline(std::size_t length, double extent, bool closed);
  InstanceSet RandomInstances(std::size_t count, std::size_t max_points,
                              double extent, const std::string& label = "c");

 private:
  std::mt19937_64 engine_;
};

struct SuiteResult {
  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  double worst = 0.0;  // largest observed error / slack violation
  // Informational suites report findings but never count as failures.
  bool informational = false;
  std::string detail;

  bool passed() const { return informational || failures == 0; }
};

struct ValidationOptions {
  std::uint64_t seed = 20260101;
  std::size_t sospa_trials = 1000;
  std::size_t cyclic_trials = 500;
  std::size_t assignment_trials = 500;
  std::size_t dap_trials = 500;
  bool log_cyclic_triangle = false;
};

SuiteResult RunSospaOracleSuite(const ValidationOptions& options);
SuiteResult RunSospaAxiomSuite(const ValidationOptions& options);
SuiteResult RunNormalizedSospaTriangleSuite(const ValidationOptions& options);
SuiteResult RunCyclicShiftSuite(const ValidationOptions& options);
SuiteResult RunAssignmentOracleSuite(const ValidationOptions& options);
SuiteResult RunDapOracleSuite(const ValidationOptions& options);
SuiteResult RunDapAxiomSuite(const ValidationOptions& options);
// Searches random polygon triples for triangle-inequality violations of
// cyclic SOSPA. Informational.
SuiteResult RunCyclicTriangleSurvey(const ValidationOptions& options);

// Every suite above; the survey only when options.log_cyclic_triangle.
std::vector<SuiteResult> RunAllSuites(const ValidationOptions& options);

// |a - b| <= tol * max(|a|, |b|), with equality required when both are 0.
bool RelativelyEqual(double a, double b, double tol);

}  // namespace mapmetrics

#endif  // MAPMETRICS_VALIDATION_H_
