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

// The mapmetrics command line: eval, pair, oracle and synth subcommands.
// RunCli is the whole program minus main(), so tests can drive it with
// string streams.

#ifndef MAPMETRICS_CLI_H_
#define MAPMETRICS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

#include "mapmetrics/geometry.h"

namespace mapmetrics {

enum ExitCode : int {
  kExitOk = 0,
  kExitOracleFailure = 1,
  kExitUsage = 2,
  kExitInvalidInput = 3,
  kExitIo = 4,
};

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

// Inline geometry "x,y;x,y;..." (any dimension, consistent across points),
// or "@path" naming a file with either that text or a JSON object
// {"points": [[x, y], ...], "closed": bool}. A file's "closed" field wins
// over `closed`.
Polyline ParseGeometryArgument(const std::string& text, bool closed);

}  // namespace mapmetrics

#endif  // MAPMETRICS_CLI_H_
