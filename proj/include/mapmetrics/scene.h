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

// Scene files: one JSON document holding every evaluation sample.
//
//   { "scenes": [ { "sample_id": "...",
//                   "classes": { "<name>": {
//                     "ground_truth": [ {"points": [[x, y], ...], "closed": b}
//                     ], "predictions":  [ {"confidence": r,
//                                        "points": [[x, y], ...],
//                                        "closed": b} ] } } } ] }
//
// Ground-truth entries may carry "confidence", but it must be exactly 1.
// "closed" defaults to false.

#ifndef MAPMETRICS_SCENE_H_
#define MAPMETRICS_SCENE_H_

#include <map>
#include <string>
#include <vector>

#include "mapmetrics/dap.h"

namespace mapmetrics {

struct ClassSample {
  std::vector<Instance> ground_truth;  // confidences are 1
  std::vector<Instance> predictions;

  friend bool operator==(const ClassSample&, const ClassSample&) = default;
};

struct SceneRecord {
  std::string sample_id;
  std::map<std::string, ClassSample> classes;

  friend bool operator==(const SceneRecord&, const SceneRecord&) = default;
};

struct ClassSpec {
  std::string name;
  bool closed = false;
};

struct Vocabulary {
  std::vector<ClassSpec> classes;

  // crossing (polygons), divider and boundary (polylines).
  static Vocabulary Default();
  const ClassSpec* Find(const std::string& name) const;
};

// Throws InputError naming the offending field path, e.g.
// "scenes[2] (sample_id 'a').classes.divider.predictions[0].confidence".
std::vector<SceneRecord> ParseScenes(const std::string& text);
std::vector<SceneRecord> LoadScenes(const std::string& path);

// Deterministic serialization; ParseScenes(SerializeScenes(s)) == s.
std::string SerializeScenes(const std::vector<SceneRecord>& scenes);
void SaveScenes(const std::string& path,
                const std::vector<SceneRecord>& scenes);

}  // namespace mapmetrics

#endif  // MAPMETRICS_SCENE_H_
