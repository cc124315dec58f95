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

// Seeded synthetic scenes, each realizing one failure mode of threshold-based
// map metrics. Ground truth consists of straight dividers and boundaries laid
// out along the direction (1, -1)/sqrt(2), 10 m apart, plus one rectangular
// crossing. Predictions are copies of the ground truth (confidence 1) with
// the named perturbation applied.

#ifndef MAPMETRICS_SYNTHETIC_H_
#define MAPMETRICS_SYNTHETIC_H_

#include <cstdint>
#include <string>
#include <vector>

#include "mapmetrics/scene.h"

namespace mapmetrics {

enum class ScenarioKind {
  // Every prediction translated by `magnitude` meters along (1, 1)/sqrt(2),
  // perpendicular to the lines. Lines only (no crossing).
  kShift,
  // Vertex order scrambled by swapping adjacent vertices; `magnitude` is the
  // fraction of vertices involved, in (0, 1].
  kMisorder,
  // Lines cut to the leading (1 - magnitude) fraction of their length.
  kDropTail,
  // `magnitude` extra confidence-1 predictions per class, far from any
  // ground truth.
  kSpuriousInstances,
  // One interior vertex per prediction displaced `magnitude` meters.
  kOutlierPoint,
};

const char* ScenarioName(ScenarioKind kind);
// Throws InputError for unknown names.
ScenarioKind ParseScenarioKind(const std::string& name);
const std::vector<ScenarioKind>& AllScenarioKinds();
// Magnitude used when none is given.
double DefaultMagnitude(ScenarioKind kind);

SceneRecord SynthesizeScenario(ScenarioKind kind, double magnitude,
                               std::uint64_t seed,
                               const std::string& sample_id);

// `count` samples of one kind with seeds seed, seed + 1, ...
std::vector<SceneRecord> SynthesizeCorpus(ScenarioKind kind, double magnitude,
                                          std::size_t count,
                                          std::uint64_t seed);

// `count` samples cycling through every kind at its default magnitude.
std::vector<SceneRecord> SynthesizeMixedCorpus(std::size_t count,
                                               std::uint64_t seed);

}  // namespace mapmetrics

#endif  // MAPMETRICS_SYNTHETIC_H_
