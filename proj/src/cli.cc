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

#include "mapmetrics/cli.h"

#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mapmetrics/assignment.h"
#include "mapmetrics/baselines.h"
#include "mapmetrics/cyclic_sospa.h"
#include "mapmetrics/dap.h"
#include "mapmetrics/errors.h"
#include "mapmetrics/evaluate.h"
#include "mapmetrics/scene.h"
#include "mapmetrics/sospa.h"
#include "mapmetrics/synthetic.h"
#include "mapmetrics/validation.h"

namespace mapmetrics {
namespace {

using nlohmann::json;

std::string Num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << text;
  if (!out) throw IoError("failed writing '" + path + "'");
}

Polyline ParseInlineGeometry(const std::string& text, bool closed) {
  std::vector<double> flat;
  std::size_t dim = 0;
  std::stringstream points(text);
  std::string point;
  while (std::getline(points, point, ';')) {
    if (point.find_first_not_of(" \t\n") == std::string::npos) continue;
    std::stringstream coords(point);
    std::string coord;
    std::size_t d = 0;
    while (std::getline(coords, coord, ',')) {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(coord, &used);
      } catch (const std::exception&) {
        throw InputError("bad coordinate '" + coord + "' in geometry");
      }
      if (coord.find_first_not_of(" \t\n", used) != std::string::npos) {
        throw InputError("bad coordinate '" + coord + "' in geometry");
      }
      flat.push_back(v);
      ++d;
    }
    if (dim == 0) dim = d;
    if (d == 0 || d != dim) {
      throw InputError("inconsistent point dimension in geometry '" + text +
                       "'");
    }
  }
  if (flat.empty()) throw InputError("geometry has no points");
  return Polyline::FromFlat(dim, std::move(flat), closed);
}

// Shared by eval and pair.
struct ParamFlags {
  double cutoff = 1.5;
  double p = 1.0;
  void Add(CLI::App* app) {
    app->add_option("--cutoff,-c", cutoff, "cutoff c in meters")
        ->capture_default_str();
    app->add_option("--p,-p", p, "exponent p >= 1")->capture_default_str();
  }
  MetricParams Params() const {
    MetricParams params{cutoff, p};
    params.Validate();
    return params;
  }
};

struct EvalFlags {
  ParamFlags params;
  std::string input;
  double sampling = 0.5;
  std::vector<std::string> metrics = {"dap", "cd_ap"};
  std::vector<double> cd_thresholds = ApConfig::ChamferDefault().thresholds;
  std::vector<double> fd_thresholds = ApConfig::FrechetDefault().thresholds;
  bool fd_cyclic = false;
  std::size_t workers = 0;
  std::string output;
  std::string format = "table";
  std::optional<std::size_t> top_k;
  bool strict_classes = false;
  bool no_runtime = false;
};

int CmdEval(const EvalFlags& f, std::ostream& out, std::ostream& err) {
  EvalConfig config;
  config.params = f.params.Params();
  if (!(f.sampling > 0.0)) throw InputError("--sampling must be positive");
  config.sampling = f.sampling;
  config.metrics.clear();
  for (const auto& m : f.metrics) config.metrics.insert(ParseMetricFamily(m));
  config.cd.thresholds = f.cd_thresholds;
  config.cd.Validate();
  config.fd.thresholds = f.fd_thresholds;
  config.fd.frechet.cyclic = f.fd_cyclic;
  config.fd.Validate();
  config.workers = f.workers > 0 ? f.workers : DefaultWorkerCount();
  config.strict_classes = f.strict_classes;
  config.top_k = f.top_k;

  const std::vector<SceneRecord> scenes = LoadScenes(f.input);
  const EvalReport report = Evaluate(scenes, config);
  for (const auto& w : report.warnings) err << "warning: " << w << "\n";

  const std::string as_json = ReportToJson(report, config, !f.no_runtime);
  if (!f.output.empty()) WriteFile(f.output, as_json);
  out << (f.format == "json" ? as_json : ReportToTable(report, config));
  return kExitOk;
}

struct PairFlags {
  ParamFlags params;
  std::string a, b;
  bool closed_a = false, closed_b = false;
  double sampling = 0.0;
  std::string format = "text";
};

json AssignmentJson(const OrderedAssignment& pairs) {
  json arr = json::array();
  for (const auto& [i, j] : pairs) arr.push_back({i, j});
  return arr;
}

int CmdPair(const PairFlags& f, std::ostream& out, std::ostream& err) {
  const MetricParams params = f.params.Params();
  Polyline a = ParseGeometryArgument(f.a, f.closed_a);
  Polyline b = ParseGeometryArgument(f.b, f.closed_b);
  if (a.dim() != b.dim()) throw InputError("geometries differ in dimension");
  if (f.sampling < 0.0) throw InputError("--sampling must be non-negative");
  if (f.sampling > 0.0) {
    a = ResampleEquidistant(a, f.sampling);
    b = ResampleEquidistant(b, f.sampling);
  }

  json doc;
  doc["points_a"] = a.size();
  doc["points_b"] = b.size();
  doc["closed_a"] = a.closed();
  doc["closed_b"] = b.closed();
  const bool cross_kind = a.closed() != b.closed();
  if (cross_kind) {
    err << "warning: open vs closed geometry; SOSPA is undefined and the DAP "
           "base distance is 1\n";
  } else if (a.closed()) {
    const CyclicSospaResult cyc = CyclicSospa(a, b, params);
    const CyclicSospaResult dir = CyclicSospaDirectionalMin(a, b, params);
    doc["sospa"] = cyc.value;
    doc["sospa_normalized"] = SospaNormalized(a, b, params);
    doc["shift_b"] = cyc.best_shift_y;
    doc["assignment"] = AssignmentJson(cyc.inner.assignment);
    doc["sospa_directional"] = dir.value;
    doc["directional_reversed"] = dir.reversed;
  } else {
    const SospaResult s = Sospa(a, b, params);
    const DirectionalSospaResult dir = SospaDirectionalMin(a, b, params);
    doc["sospa"] = s.value;
    doc["sospa_normalized"] = SospaNormalized(a, b, params);
    doc["assignment"] = AssignmentJson(s.assignment);
    doc["sospa_directional"] = dir.best.value;
    doc["directional_reversed"] = dir.reversed;
  }
  doc["dap_base_distance"] = BaseInstanceDistance(a, b, params).normalized;
  doc["gospa_unordered"] = GospaUnordered(a, b, params);
  doc["chamfer"] = Chamfer(a, b);
  doc["frechet"] = FrechetDiscrete(a, b);

  if (f.format == "json") {
    out << doc.dump(2) << "\n";
    return kExitOk;
  }
  const char* order[] = {"points_a",
                         "points_b",
                         "closed_a",
                         "closed_b",
                         "sospa",
                         "sospa_normalized",
                         "shift_b",
                         "assignment",
                         "sospa_directional",
                         "directional_reversed",
                         "dap_base_distance",
                         "gospa_unordered",
                         "chamfer",
                         "frechet"};
  for (const char* key : order) {
    if (!doc.contains(key)) continue;
    const json& v = doc[key];
    out << key << " ";
    if (v.is_number_float()) {
      out << Num(v.get<double>());
    } else if (v.is_array()) {
      for (std::size_t k = 0; k < v.size(); ++k) {
        out << (k ? " " : "") << "(" << v[k][0] << "," << v[k][1] << ")";
      }
    } else {
      out << v.dump();
    }
    out << "\n";
  }
  return kExitOk;
}

struct OracleFlags {
  ValidationOptions options;
  double trial_scale = 1.0;
};

int CmdOracle(const OracleFlags& f, std::ostream& out) {
  ValidationOptions options = f.options;
  if (!(f.trial_scale > 0.0))
    throw InputError("--trial-scale must be positive");
  auto scale = [&](std::size_t n) {
    return std::max<std::size_t>(1,
                                 static_cast<std::size_t>(n * f.trial_scale));
  };
  options.sospa_trials = scale(options.sospa_trials);
  options.cyclic_trials = scale(options.cyclic_trials);
  options.assignment_trials = scale(options.assignment_trials);
  options.dap_trials = scale(options.dap_trials);

  bool ok = true;
  for (const SuiteResult& r : RunAllSuites(options)) {
    const char* tag = r.informational ? "INFO" : (r.passed() ? "PASS" : "FAIL");
    out << "[" << tag << "] " << r.name << " trials=" << r.trials
        << " failures=" << (r.informational ? 0 : r.failures)
        << " worst=" << r.worst;
    if (!r.detail.empty()) out << " (" << r.detail << ")";
    out << "\n";
    ok = ok && r.passed();
  }
  out << (ok ? "all suites passed" : "some suites FAILED") << " (seed "
      << options.seed << ")\n";
  return ok ? kExitOk : kExitOracleFailure;
}

struct SynthFlags {
  std::string kind;
  std::optional<double> magnitude;
  std::size_t count = 10;
  std::uint64_t seed = 1;
  std::string out;
};

int CmdSynth(const SynthFlags& f, std::ostream& out) {
  std::vector<SceneRecord> scenes;
  if (f.kind == "mixed") {
    if (f.magnitude) throw InputError("--magnitude does not apply to 'mixed'");
    scenes = SynthesizeMixedCorpus(f.count, f.seed);
  } else {
    const ScenarioKind kind = ParseScenarioKind(f.kind);
    scenes = SynthesizeCorpus(
        kind, f.magnitude.value_or(DefaultMagnitude(kind)), f.count, f.seed);
  }
  if (f.out.empty() || f.out == "-") {
    out << SerializeScenes(scenes);
  } else {
    SaveScenes(f.out, scenes);
  }
  return kExitOk;
}

}  // namespace

Polyline ParseGeometryArgument(const std::string& text, bool closed) {
  if (text.empty() || text[0] != '@') return ParseInlineGeometry(text, closed);
  const std::string path = text.substr(1);
  const std::string body = ReadFile(path);
  const auto first = body.find_first_not_of(" \t\r\n");
  if (first == std::string::npos || body[first] != '{') {
    return ParseInlineGeometry(body, closed);
  }
  json doc;
  try {
    doc = json::parse(body);
  } catch (const json::exception& e) {
    throw InputError(path + ": not valid JSON: " + e.what());
  }
  if (!doc.contains("points") || !doc["points"].is_array()) {
    throw InputError(path + ": missing \"points\" array");
  }
  std::vector<double> flat;
  std::size_t dim = 0;
  for (const json& p : doc["points"]) {
    if (!p.is_array() || p.empty() || (dim != 0 && p.size() != dim)) {
      throw InputError(path +
                       ": points must be equal-length coordinate arrays");
    }
    dim = p.size();
    for (const json& v : p) {
      if (!v.is_number())
        throw InputError(path + ": coordinates must be numbers");
      flat.push_back(v.get<double>());
    }
  }
  if (flat.empty()) throw InputError(path + ": geometry has no points");
  if (doc.contains("closed")) {
    if (!doc["closed"].is_boolean())
      throw InputError(path + ": \"closed\" must be a boolean");
    closed = doc["closed"].get<bool>();
  }
  return Polyline::FromFlat(dim, std::move(flat), closed);
}

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Order-aware map metrics: SOSPA, DAP and threshold baselines"};
  app.name("mapmetrics");
  app.require_subcommand(1, 1);

  EvalFlags ef;
  CLI::App* eval = app.add_subcommand("eval", "evaluate a scene file");
  ef.params.Add(eval);
  eval->add_option("--input,-i", ef.input, "scene file")->required();
  eval->add_option("--sampling", ef.sampling, "resampling spacing in meters")
      ->capture_default_str();
  eval->add_option("--metrics", ef.metrics, "subset of dap,cd_ap,fd_ap")
      ->delimiter(',')
      ->capture_default_str();
  eval->add_option("--cd-thresholds", ef.cd_thresholds, "Chamfer AP thresholds")
      ->delimiter(',')
      ->capture_default_str();
  eval->add_option("--fd-thresholds", ef.fd_thresholds, "Frechet AP thresholds")
      ->delimiter(',')
      ->capture_default_str();
  eval->add_flag("--fd-cyclic", ef.fd_cyclic,
                 "minimize Frechet over polygon start points");
  eval->add_option(
      "--workers,-j", ef.workers,
      "worker threads (default: $MAPMETRICS_WORKERS or all cores)");
  eval->add_option("--output,-o", ef.output, "write the JSON report here");
  eval->add_option("--format", ef.format, "stdout format")
      ->check(CLI::IsMember({"table", "json"}))
      ->capture_default_str();
  eval->add_option(
      "--top-k", ef.top_k,
      "keep the K most confident predictions per sample and class");
  eval->add_flag("--strict-classes", ef.strict_classes,
                 "fail on classes outside the vocabulary");
  eval->add_flag("--no-runtime", ef.no_runtime,
                 "omit timings from the JSON report");

  PairFlags pf;
  CLI::App* pair = app.add_subcommand("pair", "compare two geometries");
  pf.params.Add(pair);
  pair->add_option("a", pf.a, "\"x,y;x,y;...\" or @file")->required();
  pair->add_option("b", pf.b, "\"x,y;x,y;...\" or @file")->required();
  pair->add_flag("--closed-a", pf.closed_a, "treat a as a polygon");
  pair->add_flag("--closed-b", pf.closed_b, "treat b as a polygon");
  pair->add_option("--sampling", pf.sampling,
                   "resample both first (0 keeps the vertices)")
      ->capture_default_str();
  pair->add_option("--format", pf.format)
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  OracleFlags of;
  CLI::App* oracle = app.add_subcommand(
      "oracle", "run the randomized oracle and axiom suites");
  oracle->add_option("--seed", of.options.seed)->capture_default_str();
  oracle->add_flag("--log-cyclic-triangle", of.options.log_cyclic_triangle,
                   "also search for cyclic SOSPA triangle violations");
  oracle
      ->add_option("--trial-scale", of.trial_scale,
                   "multiply every suite's trial count")
      ->capture_default_str();

  SynthFlags sf;
  CLI::App* synth = app.add_subcommand("synth", "write a synthetic scene file");
  synth->add_option("--kind", sf.kind, "scenario kind or 'mixed'")->required();
  synth->add_option("--magnitude", sf.magnitude, "perturbation size");
  synth->add_option("--count", sf.count)->capture_default_str();
  synth->add_option("--seed", sf.seed)->capture_default_str();
  synth->add_option("--out,-o", sf.out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*eval) return CmdEval(ef, out, err);
    if (*pair) return CmdPair(pf, out, err);
    if (*oracle) return CmdOracle(of, out);
    if (*synth) return CmdSynth(sf, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::logic_error& e) {
    // InputError, ContractError, SizeGuardError.
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitUsage;
}

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  std::vector<const char*> argv = {"mapmetrics"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace mapmetrics
