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

// Dataset-level evaluation harness.
//
// Every (sample, class) pair is an independent work item: its geometries are
// resampled, DAP is computed on them and the CD / FD distance matrices are
// turned into per-threshold detections. Items run on a worker pool and are
// reduced in sample order, so reported numbers do not depend on the worker
// count.
//
// Aggregation: normalized DAP and its two components are averaged over the
// samples that list a class; AP pools detections over those samples. A class
// that never appears in any sample is not reported.

#ifndef MAPMETRICS_EVALUATE_H_
#define MAPMETRICS_EVALUATE_H_

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mapmetrics/baselines.h"
#include "mapmetrics/geometry.h"
#include "mapmetrics/scene.h"

namespace mapmetrics {

enum class MetricFamily { kDap, kCdAp, kFdAp };

// "dap", "cd_ap", "fd_ap".
const char* MetricFamilyName(MetricFamily family);
// Throws InputError for unknown names.
MetricFamily ParseMetricFamily(const std::string& name);

struct EvalConfig {
  MetricParams params;  // c = 1.5, p = 1
  ApConfig cd = ApConfig::ChamferDefault();
  ApConfig fd = ApConfig::FrechetDefault();
  double sampling = 0.5;  // meters; resampling spacing
  std::set<MetricFamily> metrics = {MetricFamily::kDap, MetricFamily::kCdAp};
  std::size_t workers = 1;
  Vocabulary vocabulary = Vocabulary::Default();
  // Unknown class names raise InputError instead of a warning.
  bool strict_classes = false;
  // Keep only the K most confident predictions per (sample, class).
  std::optional<std::size_t> top_k;
};

struct ClassReport {
  std::string class_name;
  std::size_t sample_count = 0;
  double dap_mean = 0.0;
  double loc_mean = 0.0;
  double det_mean = 0.0;
  std::map<double, double> cd_ap;  // threshold -> AP
  std::map<double, double> fd_ap;
  double cd_map = 0.0;  // mean over cd thresholds
  double fd_map = 0.0;
  std::map<std::string, double> runtime_ms;  // metric family -> kernel time
};

struct EvalReport {
  std::set<MetricFamily> metrics;
  std::vector<ClassReport> classes;  // vocabulary order
  double mdap = 0.0;
  double mloc = 0.0;
  double mdet = 0.0;
  double cd_map = 0.0;
  double fd_map = 0.0;
  std::map<std::string, double> runtime_ms;
  std::vector<std::string> warnings;
};

EvalReport Evaluate(const std::vector<SceneRecord>& scenes,
                    const EvalConfig& config);

// Worker count from MAPMETRICS_WORKERS if set, else hardware concurrency.
std::size_t DefaultWorkerCount();

// Machine-readable report. Runtimes are omitted when include_runtime is false
// so two runs can be compared byte for byte.
std::string ReportToJson(const EvalReport& report, const EvalConfig& config,
                         bool include_runtime = true);

// Fixed-width text table; AP columns appear only for requested families.
std::string ReportToTable(const EvalReport& report, const EvalConfig& config);

}  // namespace mapmetrics

#endif  // MAPMETRICS_EVALUATE_H_
