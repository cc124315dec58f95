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

#include "mapmetrics/evaluate.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "mapmetrics/dap.h"
#include "mapmetrics/errors.h"

namespace mapmetrics {
namespace {

using Clock = std::chrono::steady_clock;

double MillisSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

struct WorkItem {
  std::size_t scene = 0;
  std::size_t class_index = 0;  // into the vocabulary
};

struct ItemResult {
  DapResult dap;
  std::vector<std::vector<Detection>> cd;  // per cd threshold
  std::vector<std::vector<Detection>> fd;  // per fd threshold
  std::size_t gt_count = 0;
  double dap_ms = 0.0, cd_ms = 0.0, fd_ms = 0.0;
};

Polyline Prepare(const Polyline& g, double sampling) {
  return g.empty() ? g : ResampleEquidistant(g, sampling);
}

std::vector<std::vector<Detection>> ApDetections(
    const std::vector<Instance>& preds, const std::vector<Instance>& gts,
    const ApConfig& ap) {
  const std::size_t n = preds.size(), g = gts.size();
  std::vector<double> confidences(n), distances(n * g);
  for (std::size_t p = 0; p < n; ++p) {
    confidences[p] = preds[p].confidence;
    for (std::size_t k = 0; k < g; ++k) {
      distances[p * g + k] = BaseDistanceFor(ap.base, preds[p].geometry,
                                             gts[k].geometry, ap.frechet);
    }
  }
  std::vector<std::vector<Detection>> out;
  out.reserve(ap.thresholds.size());
  for (double tau : ap.thresholds) {
    out.push_back(MatchDetections(confidences, distances, g, tau));
  }
  return out;
}

ItemResult RunItem(const ClassSample& raw, const EvalConfig& config) {
  ClassSample sample;
  for (const auto& inst : raw.ground_truth) {
    sample.ground_truth.push_back({inst.confidence,
                                   Prepare(inst.geometry, config.sampling),
                                   inst.class_label});
  }
  sample.predictions = raw.predictions;
  if (config.top_k && sample.predictions.size() > *config.top_k) {
    std::stable_sort(sample.predictions.begin(), sample.predictions.end(),
                     [](const Instance& a, const Instance& b) {
                       return a.confidence > b.confidence;
                     });
    sample.predictions.resize(*config.top_k);
  }
  for (auto& inst : sample.predictions) {
    inst.geometry = Prepare(inst.geometry, config.sampling);
  }

  ItemResult out;
  out.gt_count = sample.ground_truth.size();
  const auto& metrics = config.metrics;
  if (metrics.count(MetricFamily::kDap)) {
    const auto start = Clock::now();
    out.dap = Dap(InstanceSet{sample.ground_truth},
                  InstanceSet{sample.predictions}, config.params);
    out.dap_ms = MillisSince(start);
  }
  if (metrics.count(MetricFamily::kCdAp)) {
    const auto start = Clock::now();
    out.cd = ApDetections(sample.predictions, sample.ground_truth, config.cd);
    out.cd_ms = MillisSince(start);
  }
  if (metrics.count(MetricFamily::kFdAp)) {
    const auto start = Clock::now();
    out.fd = ApDetections(sample.predictions, sample.ground_truth, config.fd);
    out.fd_ms = MillisSince(start);
  }
  return out;
}

std::map<double, double> PooledAp(
    const std::vector<const ItemResult*>& items, const ApConfig& ap,
    std::vector<std::vector<Detection>> ItemResult::* field) {
  std::map<double, double> out;
  std::size_t gt_total = 0;
  for (const ItemResult* item : items) gt_total += item->gt_count;
  for (std::size_t t = 0; t < ap.thresholds.size(); ++t) {
    std::vector<Detection> pooled;
    for (const ItemResult* item : items) {
      const auto& dets = (item->*field)[t];
      pooled.insert(pooled.end(), dets.begin(), dets.end());
    }
    out[ap.thresholds[t]] =
        AveragePrecisionFromDetections(std::move(pooled), gt_total);
  }
  return out;
}

double MeanOf(const std::map<double, double>& values) {
  if (values.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& [k, v] : values) sum += v;
  return sum / static_cast<double>(values.size());
}

}  // namespace

const char* MetricFamilyName(MetricFamily family) {
  switch (family) {
    case MetricFamily::kDap:
      return "dap";
    case MetricFamily::kCdAp:
      return "cd_ap";
    case MetricFamily::kFdAp:
      return "fd_ap";
  }
  return "unknown";
}

MetricFamily ParseMetricFamily(const std::string& name) {
  if (name == "dap") return MetricFamily::kDap;
  if (name == "cd_ap") return MetricFamily::kCdAp;
  if (name == "fd_ap") return MetricFamily::kFdAp;
  throw InputError("unknown metric '" + name +
                   "' (expected dap, cd_ap, fd_ap)");
}

std::size_t DefaultWorkerCount() {
  if (const char* env = std::getenv("MAPMETRICS_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

EvalReport Evaluate(const std::vector<SceneRecord>& scenes,
                    const EvalConfig& config) {
  config.params.Validate();
  if (!(config.sampling > 0.0)) {
    throw InputError("sampling distance must be positive");
  }
  if (config.metrics.count(MetricFamily::kCdAp)) config.cd.Validate();
  if (config.metrics.count(MetricFamily::kFdAp)) config.fd.Validate();

  EvalReport report;
  report.metrics = config.metrics;
  const auto& vocab = config.vocabulary.classes;

  std::vector<WorkItem> items;
  std::set<std::string> unknown;
  for (std::size_t s = 0; s < scenes.size(); ++s) {
    for (const auto& [name, sample] : scenes[s].classes) {
      if (config.vocabulary.Find(name) == nullptr &&
          unknown.insert(name).second) {
        const std::string msg = "unknown class '" + name + "' in sample '" +
                                scenes[s].sample_id + "'";
        if (config.strict_classes) throw InputError(msg);
        report.warnings.push_back(msg + "; skipped");
      }
    }
    for (std::size_t c = 0; c < vocab.size(); ++c) {
      if (scenes[s].classes.count(vocab[c].name)) items.push_back({s, c});
    }
  }

  std::vector<ItemResult> results(items.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t k = next.fetch_add(1);
      if (k >= items.size()) return;
      try {
        const WorkItem& item = items[k];
        results[k] =
            RunItem(scenes[item.scene].classes.at(vocab[item.class_index].name),
                    config);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(items.size());
        return;
      }
    }
  };
  const std::size_t workers =
      std::max<std::size_t>(1, std::min(config.workers, items.size()));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  const bool has_dap = config.metrics.count(MetricFamily::kDap) > 0;
  const bool has_cd = config.metrics.count(MetricFamily::kCdAp) > 0;
  const bool has_fd = config.metrics.count(MetricFamily::kFdAp) > 0;
  std::map<std::string, ClassDapAggregate> dap_per_class;
  double dap_ms_total = 0.0, cd_ms_total = 0.0, fd_ms_total = 0.0;
  for (std::size_t c = 0; c < vocab.size(); ++c) {
    std::vector<const ItemResult*> mine;
    std::vector<DapResult> daps;
    ClassReport cr;
    cr.class_name = vocab[c].name;
    double dap_ms = 0.0, cd_ms = 0.0, fd_ms = 0.0;
    for (std::size_t k = 0; k < items.size(); ++k) {
      if (items[k].class_index != c) continue;
      mine.push_back(&results[k]);
      daps.push_back(results[k].dap);
      dap_ms += results[k].dap_ms;
      cd_ms += results[k].cd_ms;
      fd_ms += results[k].fd_ms;
    }
    if (mine.empty()) continue;
    cr.sample_count = mine.size();
    if (has_dap) {
      const ClassDapAggregate agg = AggregateSamples(daps);
      cr.dap_mean = agg.dap_mean;
      cr.loc_mean = agg.loc_mean;
      cr.det_mean = agg.det_mean;
      dap_per_class[cr.class_name] = agg;
      cr.runtime_ms["dap"] = dap_ms;
    }
    if (has_cd) {
      cr.cd_ap = PooledAp(mine, config.cd, &ItemResult::cd);
      cr.cd_map = MeanOf(cr.cd_ap);
      cr.runtime_ms["cd_ap"] = cd_ms;
    }
    if (has_fd) {
      cr.fd_ap = PooledAp(mine, config.fd, &ItemResult::fd);
      cr.fd_map = MeanOf(cr.fd_ap);
      cr.runtime_ms["fd_ap"] = fd_ms;
    }
    std::size_t gt_total = 0;
    for (const ItemResult* item : mine) gt_total += item->gt_count;
    if ((has_cd || has_fd) && gt_total == 0) {
      report.warnings.push_back("class '" + cr.class_name +
                                "' has no ground truth; AP set to 0 if it has "
                                "predictions, else 1");
    }
    dap_ms_total += dap_ms;
    cd_ms_total += cd_ms;
    fd_ms_total += fd_ms;
    report.classes.push_back(std::move(cr));
  }

  if (!report.classes.empty()) {
    if (has_dap) {
      const MeanDap mean = MeanOverClasses(dap_per_class);
      report.mdap = mean.mdap;
      report.mloc = mean.mloc;
      report.mdet = mean.mdet;
      report.runtime_ms["dap"] = dap_ms_total;
    }
    std::map<std::string, std::map<double, double>> cd_all, fd_all;
    for (const auto& cr : report.classes) {
      cd_all[cr.class_name] = cr.cd_ap;
      fd_all[cr.class_name] = cr.fd_ap;
    }
    if (has_cd) {
      report.cd_map = MeanAp(cd_all);
      report.runtime_ms["cd_ap"] = cd_ms_total;
    }
    if (has_fd) {
      report.fd_map = MeanAp(fd_all);
      report.runtime_ms["fd_ap"] = fd_ms_total;
    }
  }
  return report;
}

namespace {

std::string ThresholdKey(double tau) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", tau);
  return buf;
}

}  // namespace

std::string ReportToJson(const EvalReport& report, const EvalConfig& config,
                         bool include_runtime) {
  using nlohmann::json;
  json metrics = json::array();
  for (MetricFamily m : report.metrics) metrics.push_back(MetricFamilyName(m));
  json doc;
  doc["config"] = {{"cutoff_c", config.params.cutoff},
                   {"p", config.params.exponent},
                   {"sampling", config.sampling},
                   {"metrics", metrics},
                   {"cd_thresholds", config.cd.thresholds},
                   {"fd_thresholds", config.fd.thresholds}};
  const bool has_dap = report.metrics.count(MetricFamily::kDap) > 0;
  const bool has_cd = report.metrics.count(MetricFamily::kCdAp) > 0;
  const bool has_fd = report.metrics.count(MetricFamily::kFdAp) > 0;

  json classes = json::array();
  for (const auto& cr : report.classes) {
    json c = {{"class_name", cr.class_name}, {"sample_count", cr.sample_count}};
    if (has_dap) {
      c["dap_mean"] = cr.dap_mean;
      c["loc_mean"] = cr.loc_mean;
      c["det_mean"] = cr.det_mean;
    }
    auto ap_json = [](const std::map<double, double>& ap) {
      json out = json::object();
      for (const auto& [tau, v] : ap) out[ThresholdKey(tau)] = v;
      return out;
    };
    if (has_cd) {
      c["cd_ap"] = ap_json(cr.cd_ap);
      c["cd_map"] = cr.cd_map;
    }
    if (has_fd) {
      c["fd_ap"] = ap_json(cr.fd_ap);
      c["fd_map"] = cr.fd_map;
    }
    if (include_runtime) c["runtime_ms"] = cr.runtime_ms;
    classes.push_back(std::move(c));
  }
  doc["classes"] = std::move(classes);

  json overall = json::object();
  if (has_dap) {
    overall["mdap"] = report.mdap;
    overall["mloc"] = report.mloc;
    overall["mdet"] = report.mdet;
  }
  if (has_cd) overall["cd_map"] = report.cd_map;
  if (has_fd) overall["fd_map"] = report.fd_map;
  if (include_runtime) overall["runtime_ms"] = report.runtime_ms;
  doc["overall"] = std::move(overall);
  doc["warnings"] = report.warnings;
  return doc.dump(2) + "\n";
}

std::string ReportToTable(const EvalReport& report, const EvalConfig& config) {
  const bool has_dap = report.metrics.count(MetricFamily::kDap) > 0;
  const bool has_cd = report.metrics.count(MetricFamily::kCdAp) > 0;
  const bool has_fd = report.metrics.count(MetricFamily::kFdAp) > 0;
  std::ostringstream out;
  char buf[64];
  auto cell = [&](const char* fmt, auto v) {
    std::snprintf(buf, sizeof(buf), fmt, v);
    out << buf;
  };

  cell("%-12s", "class");
  cell("%8s", "samples");
  if (has_dap) {
    cell("%9s", "DAP");
    cell("%9s", "Loc.");
    cell("%9s", "Det.");
  }
  if (has_cd) {
    for (double t : config.cd.thresholds) {
      cell("%9s", ("CD@" + ThresholdKey(t)).c_str());
    }
    cell("%9s", "CD-mAP");
  }
  if (has_fd) {
    for (double t : config.fd.thresholds) {
      cell("%9s", ("FD@" + ThresholdKey(t)).c_str());
    }
    cell("%9s", "FD-mAP");
  }
  out << "\n";

  for (const auto& cr : report.classes) {
    cell("%-12s", cr.class_name.c_str());
    cell("%8zu", cr.sample_count);
    if (has_dap) {
      cell("%9.4f", cr.dap_mean);
      cell("%9.4f", cr.loc_mean);
      cell("%9.4f", cr.det_mean);
    }
    if (has_cd) {
      for (const auto& [t, v] : cr.cd_ap) cell("%9.4f", v);
      cell("%9.4f", cr.cd_map);
    }
    if (has_fd) {
      for (const auto& [t, v] : cr.fd_ap) cell("%9.4f", v);
      cell("%9.4f", cr.fd_map);
    }
    out << "\n";
  }

  out << "overall:";
  if (has_dap) {
    cell("  mDAP %.4f", report.mdap);
    cell("  mLoc %.4f", report.mloc);
    cell("  mDet %.4f", report.mdet);
  }
  if (has_cd) cell("  CD-mAP %.4f", report.cd_map);
  if (has_fd) cell("  FD-mAP %.4f", report.fd_map);
  out << "\n";
  for (const auto& [family, ms] : report.runtime_ms) {
    cell("%-8s", family.c_str());
    cell(" kernel time %.1f ms\n", ms);
  }
  for (const auto& w : report.warnings) out << "warning: " << w << "\n";
  return out.str();
}

}  // namespace mapmetrics
