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

#include "mapmetrics/dap.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "mapmetrics/assignment.h"
#include "mapmetrics/errors.h"
#include "mapmetrics/sospa.h"
#include "sospa_dp.h"

namespace mapmetrics {
namespace {

bool CanonicalLess(const Polyline& a, const Polyline& b) {
  if (a.closed() != b.closed()) return a.closed() < b.closed();
  if (a.size() != b.size()) return a.size() < b.size();
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  auto fa = a.flat(), fb = b.flat();
  return std::lexicographical_compare(fa.begin(), fa.end(), fb.begin(),
                                      fb.end());
}

// Lower bound on every point-to-point distance between a and b.
double BoundingBoxGap(const Polyline& a, const Polyline& b) {
  const std::size_t dim = a.dim();
  double sum = 0.0;
  for (std::size_t d = 0; d < dim; ++d) {
    double a_lo = a.point(0)[d], a_hi = a_lo, b_lo = b.point(0)[d], b_hi = b_lo;
    for (std::size_t i = 1; i < a.size(); ++i) {
      a_lo = std::min(a_lo, a.point(i)[d]);
      a_hi = std::max(a_hi, a.point(i)[d]);
    }
    for (std::size_t j = 1; j < b.size(); ++j) {
      b_lo = std::min(b_lo, b.point(j)[d]);
      b_hi = std::max(b_hi, b.point(j)[d]);
    }
    const double gap = std::max({0.0, a_lo - b_hi, b_lo - a_hi});
    sum += gap * gap;
  }
  return std::sqrt(sum);
}

struct DirectionalValue {
  long double raw = 0.0L;
  bool reversed = false;
};

// Value-only counterpart of SospaDirectionalMin / CyclicSospaDirectionalMin,
// sharing one cost matrix across all directions and shifts. Produces the
// same floating-point operations as those functions.
DirectionalValue DirectionalRaw(const Polyline& x, const Polyline& y,
                                const MetricParams& params) {
  const std::size_t n = x.size(), m = y.size();
  const auto costs = internal::PowerCostMatrix(x, y, params);
  const long double indel = params.UnmatchedCost();
  std::vector<long double> prev, curr;

  if (!x.closed()) {
    const long double fwd = internal::TraceValue(
        n, m, [&](std::size_t i, std::size_t j) { return costs[i * m + j]; },
        indel, prev, curr);
    const long double bwd = internal::TraceValue(
        n, m,
        [&](std::size_t i, std::size_t j) {
          return costs[i * m + (m - 1 - j)];
        },
        indel, prev, curr);
    return bwd < fwd ? DirectionalValue{bwd, true}
                     : DirectionalValue{fwd, false};
  }

  long double best[2] = {0.0L, 0.0L};
  for (int dir = 0; dir < 2; ++dir) {
    const std::size_t shifts = std::max<std::size_t>(m, 1);
    for (std::size_t s = 0; s < shifts; ++s) {
      const long double v = internal::TraceValue(
          n, m,
          [&](std::size_t i, std::size_t j) {
            const std::size_t js = j + s < m ? j + s : j + s - m;
            return costs[i * m + (dir == 0 ? js : m - 1 - js)];
          },
          indel, prev, curr);
      if (s == 0 || v < best[dir]) best[dir] = v;
    }
  }
  return best[1] < best[0] ? DirectionalValue{best[1], true}
                           : DirectionalValue{best[0], false};
}

void ValidateSets(const InstanceSet& x, const InstanceSet& y) {
  const std::string* label = nullptr;
  auto check = [&](const InstanceSet& set, const char* name) {
    for (std::size_t k = 0; k < set.instances.size(); ++k) {
      const Instance& inst = set.instances[k];
      if (!(inst.confidence >= 0.0 && inst.confidence <= 1.0)) {
        throw InputError(std::string(name) + "[" + std::to_string(k) +
                         "].confidence = " + std::to_string(inst.confidence) +
                         " is outside [0, 1]");
      }
      if (label == nullptr) {
        label = &inst.class_label;
      } else if (*label != inst.class_label) {
        throw InputError("DAP expects a single class, got '" + *label +
                         "' and '" + inst.class_label + "'");
      }
    }
  };
  check(x, "X");
  check(y, "Y");
}

std::vector<BaseDistance> BaseDistanceMatrix(const InstanceSet& x,
                                             const InstanceSet& y,
                                             const MetricParams& params) {
  std::vector<BaseDistance> out;
  out.reserve(x.size() * y.size());
  for (const auto& xi : x.instances) {
    for (const auto& yj : y.instances) {
      out.push_back(BaseInstanceDistance(xi.geometry, yj.geometry, params));
    }
  }
  return out;
}

long double SortedSum(std::vector<double>& terms) {
  std::sort(terms.begin(), terms.end());
  long double total = 0.0L;
  for (double t : terms) total += t;
  return total;
}

// Fills value, decomposition and normalized forms for the assignment `pairs`.
DapResult Assemble(const InstanceSet& x, const InstanceSet& y,
                   const std::vector<BaseDistance>& base,
                   const std::vector<IndexPair>& pairs,
                   const MetricParams& params) {
  const std::size_t ny = y.size();
  std::vector<char> x_used(x.size(), 0), y_used(ny, 0);
  // Terms are summed in sorted order so that swapping X and Y, which
  // permutes the pairs, cannot change a single bit of the result.
  std::vector<double> loc_terms, det_terms;
  DapResult result;
  for (const auto& [i, j] : pairs) {
    const double ri = x.instances[i].confidence;
    const double rj = y.instances[j].confidence;
    const BaseDistance& b = base[i * ny + j];
    loc_terms.push_back(std::min(ri, rj) * params.Power(b.normalized));
    det_terms.push_back(0.5 * std::fabs(ri - rj));
    x_used[i] = y_used[j] = 1;
    result.assignment.push_back({i, j, b.normalized, b.reversed});
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x_used[i]) det_terms.push_back(0.5 * x.instances[i].confidence);
  }
  for (std::size_t j = 0; j < ny; ++j) {
    if (!y_used[j]) det_terms.push_back(0.5 * y.instances[j].confidence);
  }
  const long double loc = SortedSum(loc_terms);
  const long double det = SortedSum(det_terms);

  result.loc_error = static_cast<double>(loc);
  result.det_error = static_cast<double>(det);
  const long double total = loc + det;
  result.value = static_cast<double>(params.Root(total));

  const double half_mass = 0.5 * (x.ExistenceMass() + y.ExistenceMass());
  const double denom = params.Root(half_mass) + result.value;
  if (denom > 0.0) {
    // value <= root(half_mass) holds exactly, but rounding can overshoot 1
    // by an ulp.
    result.normalized_value = std::min(1.0, 2.0 * result.value / denom);
    if (params.exponent == 1.0) {
      result.normalized_loc = 2.0 * result.loc_error / denom;
      result.normalized_det = 2.0 * result.det_error / denom;
    } else if (total > 0.0L) {
      // Proportional split of the normalized value; reduces to the p = 1
      // formulas above.
      const double share = static_cast<double>(loc / total);
      result.normalized_loc = result.normalized_value * share;
      result.normalized_det = result.normalized_value - result.normalized_loc;
    }
  }
  return result;
}

}  // namespace

double InstanceSet::ExistenceMass() const {
  long double mass = 0.0L;
  for (const auto& inst : instances) mass += inst.confidence;
  return static_cast<double>(mass);
}

BaseDistance BaseInstanceDistance(const Polyline& a, const Polyline& b,
                                  const MetricParams& params) {
  params.Validate();
  BaseDistance out;
  if (a.closed() != b.closed()) {
    out.cross_kind = true;
    return out;
  }
  const bool swap = CanonicalLess(b, a);
  const Polyline& x = swap ? b : a;
  const Polyline& y = swap ? a : b;

  if (x.empty() != y.empty()) return out;  // nothing can be matched
  if (x.empty()) {
    out.normalized = 0.0;
    return out;
  }
  if (x.dim() != y.dim()) {
    throw InputError("instance dimension mismatch: " + std::to_string(x.dim()) +
                     " vs " + std::to_string(y.dim()));
  }
  // Every pair at distance >= c: unmatching is optimal and dbar is 1.
  if (BoundingBoxGap(x, y) >= params.cutoff) return out;

  const DirectionalValue dv = DirectionalRaw(x, y, params);
  const double value = static_cast<double>(params.Root(dv.raw));
  out.normalized = NormalizeSospa(value, x.size(), y.size(), params);
  out.reversed = dv.reversed;
  return out;
}

DapResult Dap(const InstanceSet& x, const InstanceSet& y,
              const MetricParams& params) {
  params.Validate();
  ValidateSets(x, y);
  const auto base = BaseDistanceMatrix(x, y, params);
  const std::size_t ny = y.size();

  // Net change of assigning (i, j) instead of leaving both unassigned:
  // min(r_i, r_j) dbar^p + |r_i - r_j|/2 - (r_i + r_j)/2
  //   = min(r_i, r_j) (dbar^p - 1) <= 0.
  CostMatrix net(x.size(), ny);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < ny; ++j) {
      const double r =
          std::min(x.instances[i].confidence, y.instances[j].confidence);
      net.Set(i, j, r * (params.Power(base[i * ny + j].normalized) - 1.0));
    }
  }
  const AssignmentResult solved = SolveAssignment(net);
  return Assemble(x, y, base, solved.pairs, params);
}

namespace {

struct DapSearch {
  const InstanceSet& x;
  const InstanceSet& y;
  const std::vector<BaseDistance>& base;
  const MetricParams& params;
  std::vector<char> y_used;
  std::vector<IndexPair> current;
  std::vector<IndexPair> best_pairs;
  long double best = 0.0L;
  bool have_best = false;

  // Direct evaluation of the objective for the current assignment prefix
  // once every X instance has been decided.
  long double Evaluate() const {
    std::vector<char> x_used(x.size(), 0), yu(y.size(), 0);
    long double total = 0.0L;
    for (const auto& [i, j] : current) {
      const double ri = x.instances[i].confidence;
      const double rj = y.instances[j].confidence;
      total +=
          std::min(ri, rj) * params.Power(base[i * y.size() + j].normalized) +
          0.5 * std::fabs(ri - rj);
      x_used[i] = yu[j] = 1;
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (!x_used[i]) total += 0.5L * x.instances[i].confidence;
    }
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (!yu[j]) total += 0.5L * y.instances[j].confidence;
    }
    return total;
  }

  void Visit(std::size_t i) {
    if (i == x.size()) {
      const long double total = Evaluate();
      if (!have_best || total < best) {
        best = total;
        best_pairs = current;
        have_best = true;
      }
      return;
    }
    Visit(i + 1);
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y_used[j]) continue;
      y_used[j] = 1;
      current.push_back({i, j});
      Visit(i + 1);
      current.pop_back();
      y_used[j] = 0;
    }
  }
};

}  // namespace

DapResult DapBruteForce(const InstanceSet& x, const InstanceSet& y,
                        const MetricParams& params) {
  params.Validate();
  ValidateSets(x, y);
  if (x.size() > kDapBruteForceMax || y.size() > kDapBruteForceMax) {
    throw SizeGuardError("DapBruteForce accepts at most " +
                         std::to_string(kDapBruteForceMax) +
                         " instances per set");
  }
  const auto base = BaseDistanceMatrix(x, y, params);
  DapSearch search{x, y, base, params, std::vector<char>(y.size(), 0), {}, {}};
  search.Visit(0);
  return Assemble(x, y, base, search.best_pairs, params);
}

ClassDapAggregate AggregateSamples(const std::vector<DapResult>& samples) {
  ClassDapAggregate agg;
  agg.sample_count = samples.size();
  if (samples.empty()) return agg;
  long double dap = 0.0L, loc = 0.0L, det = 0.0L;
  for (const auto& s : samples) {
    dap += s.normalized_value;
    loc += s.normalized_loc;
    det += s.normalized_det;
  }
  const long double n = samples.size();
  agg.dap_mean = static_cast<double>(dap / n);
  agg.loc_mean = static_cast<double>(loc / n);
  agg.det_mean = static_cast<double>(det / n);
  return agg;
}

MeanDap MeanOverClasses(
    const std::map<std::string, ClassDapAggregate>& per_class) {
  if (per_class.empty()) throw InputError("mDAP needs at least one class");
  long double dap = 0.0L, loc = 0.0L, det = 0.0L;
  for (const auto& [name, agg] : per_class) {
    dap += agg.dap_mean;
    loc += agg.loc_mean;
    det += agg.det_mean;
  }
  const long double n = per_class.size();
  return {static_cast<double>(dap / n), static_cast<double>(loc / n),
          static_cast<double>(det / n)};
}

}  // namespace mapmetrics
