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

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>

#include "mapmetrics/errors.h"
#include "mapmetrics/synthetic.h"

namespace mapmetrics {
namespace {

constexpr char kMinimal[] = R"({"scenes": [{"sample_id": "s0", "classes": {
  "divider": {"ground_truth": [{"points": [[0, 0], [1, 0]]}],
              "predictions": [{"confidence": 0.7, "points": [[0, 0.1], [1, 0.1]]}]}}}]})";

std::string ErrorOf(const std::string& text) {
  try {
    ParseScenes(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

TEST(ParseScenesTest, MinimalFile) {
  const auto scenes = ParseScenes(kMinimal);
  ASSERT_EQ(scenes.size(), 1u);
  EXPECT_EQ(scenes[0].sample_id, "s0");
  const ClassSample& d = scenes[0].classes.at("divider");
  ASSERT_EQ(d.ground_truth.size(), 1u);
  ASSERT_EQ(d.predictions.size(), 1u);
  EXPECT_EQ(d.ground_truth[0].confidence, 1.0);
  EXPECT_EQ(d.predictions[0].confidence, 0.7);
  EXPECT_EQ(d.predictions[0].class_label, "divider");
  EXPECT_FALSE(d.ground_truth[0].geometry.closed());
}

TEST(ParseScenesTest, ConfidenceOutOfRangeNamesFieldPath) {
  std::string text = kMinimal;
  text.replace(text.find("0.7"), 3, "1.2");
  const std::string err = ErrorOf(text);
  EXPECT_NE(err.find("scenes[0] (sample_id 's0').classes.divider.predictions[0]"
                     ".confidence"),
            std::string::npos)
      << err;
}

TEST(ParseScenesTest, GroundTruthConfidenceMustBeOne) {
  const std::string err = ErrorOf(
      R"({"scenes": [{"sample_id": "a", "classes": {"divider": {"ground_truth":
          [{"confidence": 0.5, "points": [[0, 0]]}]}}}]})");
  EXPECT_NE(err.find("ground_truth[0].confidence"), std::string::npos) << err;
  EXPECT_NO_THROW(ParseScenes(
      R"({"scenes": [{"sample_id": "a", "classes": {"divider": {"ground_truth":
          [{"confidence": 1, "points": [[0, 0]]}]}}}]})"));
}

TEST(ParseScenesTest, SchemaViolations) {
  EXPECT_NE(ErrorOf("{"), "");
  EXPECT_NE(ErrorOf("[]").find("top-level"), std::string::npos);
  EXPECT_NE(ErrorOf(R"({"scenes": [{"classes": {}}]})").find("sample_id"),
            std::string::npos);
  EXPECT_NE(ErrorOf(R"({"scenes": [{"sample_id": "a", "classes": {"divider":
      {"predictions": [{"points": [[0, 0]]}]}}}]})")
                .find("missing field 'confidence'"),
            std::string::npos);
  EXPECT_NE(ErrorOf(R"({"scenes": [{"sample_id": "a", "classes": {"divider":
      {"ground_truth": [{"points": [[0, 0], [1, 0, 2]]}]}}}]})")
                .find("points[1]"),
            std::string::npos);
  EXPECT_NE(ErrorOf(R"({"scenes": [{"sample_id": "a", "classes": {"divider":
      {"ground_truth": [{"points": []}]}}}]})")
                .find(".points"),
            std::string::npos);
  EXPECT_NE(ErrorOf(R"({"scenes": [{"sample_id": "a", "classes": {"divider":
      {"ground_truth": [{"points": [[0, 0]], "closed": "yes"}]}}}]})")
                .find(".closed"),
            std::string::npos);
}

TEST(SerializeScenesTest, RoundTrip) {
  const auto scenes = SynthesizeMixedCorpus(5, 3);
  const std::string text = SerializeScenes(scenes);
  EXPECT_EQ(ParseScenes(text), scenes);
  EXPECT_EQ(SerializeScenes(ParseScenes(text)), text);
}

TEST(SerializeScenesTest, FileRoundTripAndIoErrors) {
  const auto path =
      (std::filesystem::temp_directory_path() / "mapmetrics_scene_test.json")
          .string();
  const auto scenes = ParseScenes(kMinimal);
  SaveScenes(path, scenes);
  EXPECT_EQ(LoadScenes(path), scenes);
  std::remove(path.c_str());
  EXPECT_THROW(LoadScenes("/nonexistent/dir/scenes.json"), IoError);
}

TEST(VocabularyTest, Default) {
  const Vocabulary v = Vocabulary::Default();
  ASSERT_NE(v.Find("crossing"), nullptr);
  EXPECT_TRUE(v.Find("crossing")->closed);
  EXPECT_FALSE(v.Find("divider")->closed);
  EXPECT_FALSE(v.Find("boundary")->closed);
  EXPECT_EQ(v.Find("lane"), nullptr);
}

}  // namespace
}  // namespace mapmetrics
