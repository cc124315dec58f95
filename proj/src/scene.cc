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

#include "mapmetrics/scene.h"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "mapmetrics/errors.h"

namespace mapmetrics {
namespace {

using nlohmann::json;

[[noreturn]] void Fail(const std::string& path, const std::string& message) {
  throw InputError(path + ": " + message);
}

const json& Require(const json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) Fail(path, std::string("missing field '") + key + "'");
  return *it;
}

Polyline ParseGeometry(const json& entry, const std::string& path) {
  const json& pts = Require(entry, "points", path);
  if (!pts.is_array() || pts.empty()) {
    Fail(path + ".points", "expected a non-empty array of points");
  }
  bool closed = false;
  if (auto it = entry.find("closed"); it != entry.end()) {
    if (!it->is_boolean()) Fail(path + ".closed", "expected a boolean");
    closed = it->get<bool>();
  }
  std::size_t dim = 0;
  std::vector<double> flat;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    const std::string pp = path + ".points[" + std::to_string(k) + "]";
    const json& p = pts[k];
    if (!p.is_array() || p.empty())
      Fail(pp, "expected an array of coordinates");
    if (dim == 0) dim = p.size();
    if (p.size() != dim) {
      Fail(pp, "has " + std::to_string(p.size()) + " coordinates, expected " +
                   std::to_string(dim));
    }
    for (const json& v : p) {
      if (!v.is_number()) Fail(pp, "coordinates must be numbers");
      flat.push_back(v.get<double>());
    }
  }
  try {
    return Polyline::FromFlat(dim, std::move(flat), closed);
  } catch (const InputError& e) {
    Fail(path, e.what());
  }
}

std::vector<Instance> ParseInstances(const json& arr, const std::string& path,
                                     const std::string& label, bool truth) {
  if (!arr.is_array()) Fail(path, "expected an array");
  std::vector<Instance> out;
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const std::string ip = path + "[" + std::to_string(k) + "]";
    const json& entry = arr[k];
    if (!entry.is_object()) Fail(ip, "expected an object");
    Instance inst;
    inst.class_label = label;
    auto conf = entry.find("confidence");
    if (truth) {
      if (conf != entry.end() &&
          !(conf->is_number() && conf->get<double>() == 1.0)) {
        Fail(ip + ".confidence",
             "ground-truth confidence must be 1, got " + conf->dump());
      }
      inst.confidence = 1.0;
    } else {
      if (conf == entry.end()) Fail(ip, "missing field 'confidence'");
      if (!conf->is_number()) Fail(ip + ".confidence", "expected a number");
      inst.confidence = conf->get<double>();
      if (!(inst.confidence >= 0.0 && inst.confidence <= 1.0)) {
        Fail(ip + ".confidence",
             "value " + conf->dump() + " is outside [0, 1]");
      }
    }
    inst.geometry = ParseGeometry(entry, ip);
    out.push_back(std::move(inst));
  }
  return out;
}

json GeometryToJson(const Instance& inst, bool with_confidence) {
  json entry = json::object();
  if (with_confidence) entry["confidence"] = inst.confidence;
  json pts = json::array();
  const Polyline& g = inst.geometry;
  for (std::size_t i = 0; i < g.size(); ++i) {
    auto p = g.point(i);
    pts.push_back(json(std::vector<double>(p.begin(), p.end())));
  }
  entry["points"] = std::move(pts);
  entry["closed"] = g.closed();
  return entry;
}

}  // namespace

Vocabulary Vocabulary::Default() {
  return Vocabulary{
      {{"crossing", true}, {"divider", false}, {"boundary", false}}};
}

const ClassSpec* Vocabulary::Find(const std::string& name) const {
  for (const auto& spec : classes) {
    if (spec.name == name) return &spec;
  }
  return nullptr;
}

std::vector<SceneRecord> ParseScenes(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("scene file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) Fail("$", "expected a top-level object");
  const json& scenes = Require(doc, "scenes", "$");
  if (!scenes.is_array()) Fail("scenes", "expected an array");

  std::vector<SceneRecord> out;
  out.reserve(scenes.size());
  for (std::size_t s = 0; s < scenes.size(); ++s) {
    std::string sp = "scenes[" + std::to_string(s) + "]";
    const json& scene = scenes[s];
    if (!scene.is_object()) Fail(sp, "expected an object");
    const json& id = Require(scene, "sample_id", sp);
    if (!id.is_string()) Fail(sp + ".sample_id", "expected a string");
    SceneRecord record;
    record.sample_id = id.get<std::string>();
    sp += " (sample_id '" + record.sample_id + "')";

    const json& classes = Require(scene, "classes", sp);
    if (!classes.is_object()) Fail(sp + ".classes", "expected an object");
    for (const auto& [name, body] : classes.items()) {
      const std::string cp = sp + ".classes." + name;
      if (!body.is_object()) Fail(cp, "expected an object");
      ClassSample sample;
      if (auto it = body.find("ground_truth"); it != body.end()) {
        sample.ground_truth =
            ParseInstances(*it, cp + ".ground_truth", name, /*truth=*/true);
      }
      if (auto it = body.find("predictions"); it != body.end()) {
        sample.predictions =
            ParseInstances(*it, cp + ".predictions", name, /*truth=*/false);
      }
      record.classes.emplace(name, std::move(sample));
    }
    out.push_back(std::move(record));
  }
  return out;
}

std::vector<SceneRecord> LoadScenes(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open scene file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseScenes(buffer.str());
}

std::string SerializeScenes(const std::vector<SceneRecord>& scenes) {
  json arr = json::array();
  for (const auto& scene : scenes) {
    json classes = json::object();
    for (const auto& [name, sample] : scene.classes) {
      json gt = json::array(), preds = json::array();
      for (const auto& inst : sample.ground_truth) {
        gt.push_back(GeometryToJson(inst, false));
      }
      for (const auto& inst : sample.predictions) {
        preds.push_back(GeometryToJson(inst, true));
      }
      classes[name] = {{"ground_truth", std::move(gt)},
                       {"predictions", std::move(preds)}};
    }
    arr.push_back(
        {{"sample_id", scene.sample_id}, {"classes", std::move(classes)}});
  }
  return json{{"scenes", std::move(arr)}}.dump(1) + "\n";
}

void SaveScenes(const std::string& path,
                const std::vector<SceneRecord>& scenes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write scene file '" + path + "'");
  out << SerializeScenes(scenes);
  if (!out) throw IoError("failed writing scene file '" + path + "'");
}

}  // namespace mapmetrics
