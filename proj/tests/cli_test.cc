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

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "mapmetrics/errors.h"
#include "mapmetrics/scene.h"

namespace mapmetrics {
namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun Cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string TempPath(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

std::string Slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Value printed after "key " on its own line.
std::string Field(const std::string& text, const std::string& key) {
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.rfind(key + " ", 0) == 0) return line.substr(key.size() + 1);
  }
  return "<missing>";
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(Cli({}).code, kExitUsage);
  EXPECT_EQ(Cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(Cli({"eval"}).code, kExitUsage);
  EXPECT_EQ(Cli({"--help"}).code, kExitOk);
}

TEST(CliTest, PairIdentical) {
  const CliRun r = Cli({"pair", "0,0;1,0;2,1", "0,0;1,0;2,1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  for (const char* key :
       {"sospa", "sospa_normalized", "sospa_directional", "gospa_unordered",
        "chamfer", "frechet", "dap_base_distance"}) {
    EXPECT_EQ(Field(r.out, key), "0.000000") << key;
  }
  EXPECT_EQ(Field(r.out, "assignment"), "(0,0) (1,1) (2,2)");
}

TEST(CliTest, PairSwappedOrder) {
  const CliRun r =
      Cli({"pair", "0,0;1,0", "1,0;0,0", "--cutoff", "1", "--p", "1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(Field(r.out, "sospa"), "1.000000");
  EXPECT_EQ(Field(r.out, "gospa_unordered"), "0.000000");
  EXPECT_EQ(Field(r.out, "chamfer"), "0.000000");
  EXPECT_EQ(Field(r.out, "directional_reversed"), "true");
}

TEST(CliTest, PairShiftedLine) {
  const CliRun r = Cli({"pair",
                        "0,0;0.7071067811865476,-0.7071067811865476;"
                        "1.4142135623730951,-1.4142135623730951",
                        "0.7071067811865476,0.7071067811865476;"
                        "1.4142135623730951,0;"
                        "2.121320343559643,-0.7071067811865476"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(Field(r.out, "sospa_normalized"), "0.800000");
}

TEST(CliTest, PairPolygonsAndCrossKind) {
  CliRun r = Cli({"pair", "0,0;1,0;1,1;0,1", "1,0;1,1;0,1;0,0", "--closed-a",
                  "--closed-b"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(Field(r.out, "sospa"), "0.000000");
  EXPECT_EQ(Field(r.out, "shift_b"), "3");
  r = Cli({"pair", "0,0;1,0;1,1", "0,0;1,0", "--closed-a"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.err.find("warning"), std::string::npos);
  EXPECT_EQ(Field(r.out, "dap_base_distance"), "1.000000");
  EXPECT_EQ(Field(r.out, "sospa"), "<missing>");
}

TEST(CliTest, PairFileAndBadGeometry) {
  const std::string path = TempPath("mapmetrics_cli_geom.json");
  std::ofstream(path) << R"({"points": [[0, 0], [1, 0]], "closed": false})";
  const CliRun r = Cli({"pair", "@" + path, "0,0;1,0", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("\"sospa\": 0.0"), std::string::npos) << r.out;
  std::remove(path.c_str());
  EXPECT_EQ(Cli({"pair", "0,0;1", "0,0"}).code, kExitInvalidInput);
  EXPECT_EQ(Cli({"pair", "0,zz", "0,0"}).code, kExitInvalidInput);
  EXPECT_EQ(Cli({"pair", "@/nonexistent/geom", "0,0"}).code, kExitIo);
  EXPECT_EQ(Cli({"pair", "0,0", "0,0", "--cutoff", "-2"}).code,
            kExitInvalidInput);
}

TEST(CliTest, SynthIsDeterministic) {
  const std::string a = TempPath("mapmetrics_cli_synth_a.json");
  const std::string b = TempPath("mapmetrics_cli_synth_b.json");
  ASSERT_EQ(Cli({"synth", "--kind", "shift", "--magnitude", "1.0", "--count",
                 "10", "--seed", "4", "--out", a})
                .code,
            kExitOk);
  ASSERT_EQ(Cli({"synth", "--kind", "shift", "--magnitude", "1.0", "--count",
                 "10", "--seed", "4", "--out", b})
                .code,
            kExitOk);
  EXPECT_EQ(Slurp(a), Slurp(b));
  EXPECT_EQ(LoadScenes(a).size(), 10u);
  std::remove(a.c_str());
  std::remove(b.c_str());
  EXPECT_EQ(Cli({"synth", "--kind", "nope"}).code, kExitInvalidInput);
  const CliRun mixed = Cli({"synth", "--kind", "mixed", "--count", "3"});
  EXPECT_EQ(ParseScenes(mixed.out).size(), 3u);
}

TEST(CliTest, SpuriousSynthRealizesDetectionArchetype) {
  const std::string path = TempPath("mapmetrics_cli_spurious.json");
  ASSERT_EQ(Cli({"synth", "--kind", "spurious_instances", "--magnitude", "4",
                 "--count", "2", "--out", path})
                .code,
            kExitOk);
  const CliRun r = Cli({"eval", "--input", path, "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  // The crossing class has one ground truth and four far-away extras.
  const auto crossing = r.out.find("\"class_name\": \"crossing\"");
  ASSERT_NE(crossing, std::string::npos);
  const auto dap = r.out.find("\"dap_mean\": 0.8", crossing);
  EXPECT_NE(dap, std::string::npos) << r.out;
  std::remove(path.c_str());
}

TEST(CliTest, EvalTableJsonAndMetricSelection) {
  const std::string scenes = TempPath("mapmetrics_cli_eval.json");
  const std::string report = TempPath("mapmetrics_cli_report.json");
  ASSERT_EQ(
      Cli({"synth", "--kind", "mixed", "--count", "5", "--out", scenes}).code,
      kExitOk);
  CliRun r =
      Cli({"eval", "--input", scenes, "--output", report, "--workers", "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("mDAP"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("CD-mAP"), std::string::npos);
  EXPECT_NE(Slurp(report).find("\"mdap\""), std::string::npos);

  r = Cli({"eval", "--input", scenes, "--metrics", "dap"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.find("CD"), std::string::npos);

  r = Cli({"eval", "--input", scenes, "--metrics", "dap,fd_ap", "--format",
           "json", "--no-runtime"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("fd_map"), std::string::npos);
  EXPECT_EQ(r.out.find("runtime_ms"), std::string::npos);
  EXPECT_EQ(Cli({"eval", "--input", scenes, "--metrics", "iou"}).code,
            kExitInvalidInput);
  EXPECT_EQ(Cli({"eval", "--input", scenes, "--sampling", "0"}).code,
            kExitInvalidInput);
  std::remove(scenes.c_str());
  std::remove(report.c_str());
}

TEST(CliTest, EvalBadInputs) {
  EXPECT_EQ(Cli({"eval", "--input", "/nonexistent/scenes.json"}).code, kExitIo);
  const std::string path = TempPath("mapmetrics_cli_bad.json");
  std::ofstream(path)
      << R"({"scenes": [{"sample_id": "q", "classes": {"divider":
      {"predictions": [{"confidence": 1.2, "points": [[0, 0]]}]}}}]})";
  const CliRun r = Cli({"eval", "--input", path});
  EXPECT_EQ(r.code, kExitInvalidInput);
  EXPECT_NE(r.err.find("predictions[0].confidence"), std::string::npos)
      << r.err;
  std::remove(path.c_str());
}

TEST(CliTest, OracleSmallRun) {
  CliRun r = Cli({"oracle", "--seed", "9", "--trial-scale", "0.05"});
  EXPECT_EQ(r.code, kExitOk) << r.out;
  EXPECT_NE(r.out.find("all suites passed"), std::string::npos);
  EXPECT_EQ(r.out.find("[FAIL]"), std::string::npos);
  r = Cli({"oracle", "--trial-scale", "0.05", "--log-cyclic-triangle"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("[INFO] cyclic_triangle_survey"), std::string::npos);
}

}  // namespace
}  // namespace mapmetrics
