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

#include "mapmetrics/validation.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mapmetrics/assignment.h"
#include "mapmetrics/cyclic_sospa.h"
#include "mapmetrics/sospa.h"

namespace mapmetrics {
namespace {

constexpr double kEquivalenceTol = 1e-12;
constexpr double kTriangleSlack = 1e-9;
constexpr double kExponents[3] = {1.0, 1.5, 2.0};

void Record(SuiteResult& r, bool ok, double error) {
  ++r.trials;
  if (!ok) ++r.failures;
  r.worst = std::max(r.worst, error);
}

double RelError(double a, double b) {
  const double scale = std::max(std::fabs(a), std::fabs(b));
  return scale > 0.0 ? std::fabs(a - b) / scale : 0.0;
}

}  // namespace

double RandomSource::Uniform(double lo, double hi) {
  const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

std::size_t RandomSource::Int(std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(engine_() % (hi - lo + 1));
}

Polyline RandomSource::RandomPolyline(std::size_t length, double extent,
                                      bool closed) {
  std::vector<double> flat;
  flat.reserve(2 * length);
  for (std::size_t k = 0; k < 2 * length; ++k) {
    flat.push_back(Uniform(0.0, extent));
  }
  return Polyline::FromFlat(2, std::move(flat), closed);
}

InstanceSet RandomSource::RandomInstances(std::size_t count,
                                          std::size_t max_points, double extent,
                                          const std::string& label) {
  InstanceSet set;
  for (std::size_t k = 0; k < count; ++k) {
    set.instances.push_back({Uniform(0.0, 1.0),
                             RandomPolyline(Int(1, max_points), extent, false),
                             label});
  }
  return set;
}

bool RelativelyEqual(double a, double b, double tol) {
  return RelError(a, b) <= tol;
}

SuiteResult RunSospaOracleSuite(const ValidationOptions& options) {
  SuiteResult r;
  r.name = "sospa_dp_vs_bruteforce";
  RandomSource rng(options.seed);
  for (std::size_t t = 0; t < options.sospa_trials; ++t) {
    MetricParams params{rng.Uniform(0.1, 3.0), kExponents[t % 3]};
    const Polyline x = rng.RandomPolyline(rng.Int(0, 6), 3.0, false);
    const Polyline y = rng.RandomPolyline(rng.Int(0, 6), 3.0, false);
    const double dp = Sospa(x, y, params).value;
    const double brute = SospaBruteForce(x, y, params).value;
    const double err = RelError(dp, brute);
    Record(r, err <= kEquivalenceTol, err);
  }
  return r;
}

SuiteResult RunSospaAxiomSuite(const ValidationOptions& options) {
  SuiteResult r;
  r.name = "sospa_metric_axioms";
  RandomSource rng(options.seed + 1);
  for (std::size_t t = 0; t < options.sospa_trials; ++t) {
    MetricParams params{rng.Uniform(0.1, 3.0), t % 2 == 0 ? 1.0 : 2.0};
    const Polyline x = rng.RandomPolyline(rng.Int(0, 8), 3.0, false);
    const Polyline y = rng.RandomPolyline(rng.Int(0, 8), 3.0, false);
    const Polyline z = rng.RandomPolyline(rng.Int(0, 8), 3.0, false);
    const double xy = Sospa(x, y, params).value;
    const double yx = Sospa(y, x, params).value;
    const double xz = Sospa(x, z, params).value;
    const double zy = Sospa(z, y, params).value;
    const double xx = Sospa(x, x, params).value;
    const double excess = xy - (xz + zy);
    const bool ok = excess <= kTriangleSlack && xy == yx && xx == 0.0;
    Record(r, ok, std::max(0.0, excess));
  }
  return r;
}

SuiteResult RunNormalizedSospaTriangleSuite(const ValidationOptions& options) {
  SuiteResult r;
  r.name = "normalized_sospa_triangle_p1";
  RandomSource rng(options.seed + 2);
  for (std::size_t t = 0; t < options.sospa_trials; ++t) {
    MetricParams params{rng.Uniform(0.1, 3.0), 1.0};
    const Polyline x = rng.RandomPolyline(rng.Int(0, 8), 3.0, false);
    const Polyline y = rng.RandomPolyline(rng.Int(0, 8), 3.0, false);
    const Polyline z = rng.RandomPolyline(rng.Int(0, 8), 3.0, false);
    const double xy = SospaNormalized(x, y, params);
    const double xz = SospaNormalized(x, z, params);
    const double zy = SospaNormalized(z, y, params);
    const double excess = xy - (xz + zy);
    const bool in_range = xy >= 0.0 && xy <= 1.0 && xz >= 0.0 && xz <= 1.0 &&
                          zy >= 0.0 && zy <= 1.0;
    Record(r, excess <= kTriangleSlack && in_range, std::max(0.0, excess));
  }
  return r;
}

SuiteResult RunCyclicShiftSuite(const ValidationOptions& options) {
  SuiteResult r;
  r.name = "cyclic_one_sided_vs_two_sided";
  RandomSource rng(options.seed + 3);
  for (std::size_t t = 0; t < options.cyclic_trials; ++t) {
    MetricParams params{rng.Uniform(0.1, 3.0), kExponents[t % 3]};
    const Polyline x = rng.RandomPolyline(rng.Int(1, 7), 3.0, true);
    const Polyline y = rng.RandomPolyline(rng.Int(1, 7), 3.0, true);
    const double one = CyclicSospa(x, y, params).value;
    const double two = CyclicSospaTwoSided(x, y, params).value;
    const double err = RelError(one, two);
    Record(r, err <= kEquivalenceTol, err);
  }
  return r;
}

SuiteResult RunAssignmentOracleSuite(const ValidationOptions& options) {
  SuiteResult r;
  r.name = "assignment_hungarian_vs_enumeration";
  RandomSource rng(options.seed + 4);
  for (std::size_t t = 0; t < options.assignment_trials; ++t) {
    const std::size_t rows = rng.Int(0, 7), cols = rng.Int(0, 7);
    CostMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j)
        m.Set(i, j, rng.Uniform(-2.0, 1.0));
    }
    const double fast = SolveAssignment(m).total;
    const double brute = SolveAssignmentBruteForce(m).total;
    const double err = std::fabs(fast - brute);
    Record(r, err <= kEquivalenceTol * std::max(1.0, std::fabs(brute)), err);
  }
  return r;
}

SuiteResult RunDapOracleSuite(const ValidationOptions& options) {
  SuiteResult r;
  r.name = "dap_hungarian_vs_enumeration";
  RandomSource rng(options.seed + 5);
  for (std::size_t t = 0; t < options.dap_trials; ++t) {
    MetricParams params{rng.Uniform(0.5, 3.0), t % 2 == 0 ? 1.0 : 2.0};
    const InstanceSet x = rng.RandomInstances(rng.Int(0, 5), 6, 4.0);
    const InstanceSet y = rng.RandomInstances(rng.Int(0, 5), 6, 4.0);
    const DapResult fast = Dap(x, y, params);
    const DapResult brute = DapBruteForce(x, y, params);
    double err = RelError(fast.value, brute.value);
    bool ok = err <= kEquivalenceTol;
    if (params.exponent == 1.0) {
      const double decomposition =
          std::fabs(fast.value - (fast.loc_error + fast.det_error));
      const double normalized = std::fabs(
          fast.normalized_value - (fast.normalized_loc + fast.normalized_det));
      ok = ok && decomposition <= kEquivalenceTol &&
           normalized <= kEquivalenceTol;
      err = std::max({err, decomposition, normalized});
    }
    Record(r, ok, err);
  }
  return r;
}

SuiteResult RunDapAxiomSuite(const ValidationOptions& options) {
  SuiteResult r;
  r.name = "dap_metric_axioms_p1";
  RandomSource rng(options.seed + 6);
  for (std::size_t t = 0; t < options.dap_trials; ++t) {
    MetricParams params{rng.Uniform(0.5, 3.0), 1.0};
    const InstanceSet x = rng.RandomInstances(rng.Int(0, 5), 6, 4.0);
    const InstanceSet y = rng.RandomInstances(rng.Int(0, 5), 6, 4.0);
    const InstanceSet z = rng.RandomInstances(rng.Int(0, 5), 6, 4.0);
    const DapResult xy = Dap(x, y, params), yx = Dap(y, x, params);
    const DapResult xz = Dap(x, z, params), zy = Dap(z, y, params);
    const DapResult xx = Dap(x, x, params);
    const double excess = xy.value - (xz.value + zy.value);
    const double excess_norm =
        xy.normalized_value - (xz.normalized_value + zy.normalized_value);
    const double rx = x.ExistenceMass(), ry = y.ExistenceMass();
    const bool bounds = xy.value <= 0.5 * (rx + ry) + kEquivalenceTol &&
                        xy.value >= 0.5 * std::fabs(rx - ry) - kEquivalenceTol;
    const bool ok = excess <= kTriangleSlack && excess_norm <= kTriangleSlack &&
                    xy.value == yx.value &&
                    xy.normalized_value == yx.normalized_value &&
                    xx.value == 0.0 && bounds && xy.normalized_value >= 0.0 &&
                    xy.normalized_value <= 1.0;
    Record(r, ok, std::max({0.0, excess, excess_norm}));
  }
  return r;
}

SuiteResult RunCyclicTriangleSurvey(const ValidationOptions& options) {
  SuiteResult r;
  r.name = "cyclic_triangle_survey";
  r.informational = true;
  RandomSource rng(options.seed + 7);
  std::size_t violations = 0;
  double worst = 0.0;
  for (std::size_t t = 0; t < options.cyclic_trials; ++t) {
    MetricParams params{rng.Uniform(0.1, 3.0), 1.0};
    const Polyline x = rng.RandomPolyline(rng.Int(1, 6), 3.0, true);
    const Polyline y = rng.RandomPolyline(rng.Int(1, 6), 3.0, true);
    const Polyline z = rng.RandomPolyline(rng.Int(1, 6), 3.0, true);
    const double excess =
        CyclicSospa(x, y, params).value -
        (CyclicSospa(x, z, params).value + CyclicSospa(z, y, params).value);
    ++r.trials;
    if (excess > kTriangleSlack) {
      ++violations;
      worst = std::max(worst, excess);
    }
  }
  r.worst = worst;
  std::ostringstream msg;
  msg << violations << " triangle violations found";
  r.detail = msg.str();
  return r;
}

std::vector<SuiteResult> RunAllSuites(const ValidationOptions& options) {
  std::vector<SuiteResult> out = {RunSospaOracleSuite(options),
                                  RunSospaAxiomSuite(options),
                                  RunNormalizedSospaTriangleSuite(options),
                                  RunCyclicShiftSuite(options),
                                  RunAssignmentOracleSuite(options),
                                  RunDapOracleSuite(options),
                                  RunDapAxiomSuite(options)};
  if (options.log_cyclic_triangle)
    out.push_back(RunCyclicTriangleSurvey(options));
  return out;
}

}  // namespace mapmetrics
