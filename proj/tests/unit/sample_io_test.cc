// Copyright 2026 The AZP Augment Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "azp/sample_io.h"

#include <random>

#include "absl/strings/match.h"
#include "gtest/gtest.h"
#include "json.hpp"
#include "testing/generators.h"

namespace azp {
namespace {

using nlohmann::json;

// The file format carries number and gender only.
AzpSample Persisted(AzpSample sample) {
  sample.features.person = Person::kUnknown;
  return sample;
}

TEST(SampleIoTest, RoundTripsRandomSamples) {
  std::mt19937 rng(5);
  std::vector<AzpSample> samples;
  for (int i = 0; i < 1000; ++i) {
    samples.push_back(Persisted(testing::RandomSample(rng, i)));
  }
  std::string text = SerializeSamples(samples);
  absl::StatusOr<std::vector<AzpSample>> parsed = ParseSamples(text);
  ASSERT_TRUE(parsed.ok()) << parsed.status();
  ASSERT_EQ(parsed->size(), samples.size());
  for (size_t i = 0; i < samples.size(); ++i) {
    ASSERT_EQ((*parsed)[i], samples[i]) << SampleToLine(samples[i]);
  }
  EXPECT_EQ(SerializeSamples(*parsed), text);
}

TEST(SampleIoTest, FieldOrderIsFixed) {
  std::mt19937 rng(1);
  std::string line = SampleToLine(testing::RandomSample(rng, 0));
  json j = json::parse(line);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  // nlohmann::json sorts keys; check the raw text order instead.
  size_t last = 0;
  for (const char *key :
       {"\"id\"", "\"method\"", "\"ant_tokens\"", "\"ant_pos\"",
        "\"azp_tokens\"", "\"azp_pos\"", "\"gap_index\"", "\"verb_index\"",
        "\"ant_start\"", "\"ant_end\"", "\"number\"", "\"gender\"",
        "\"source\""}) {
    size_t at = line.find(key);
    ASSERT_NE(at, std::string::npos) << key;
    EXPECT_GT(at + 1, last) << key;
    last = at;
  }
  EXPECT_EQ(keys.size(), 13u);
}

json GoodRecord() {
  return json::parse(R"({
    "id": "wiki:1", "method": "onp",
    "ant_tokens": ["باريس", "هي"], "ant_pos": ["NNP", "PRP"],
    "azp_tokens": ["تقع", "في"], "azp_pos": ["VBP", "IN"],
    "gap_index": 1, "verb_index": 0, "ant_start": 0, "ant_end": 1,
    "number": "singular", "gender": "feminine",
    "source": {"corpus": "wiki", "document": "باريس", "sentence": 1}})");
}

TEST(SampleIoTest, ParsesGoodRecord) {
  absl::StatusOr<AzpSample> sample = SampleFromLine(GoodRecord().dump(), 1);
  ASSERT_TRUE(sample.ok()) << sample.status();
  EXPECT_EQ(sample->method, Method::kOnp);
  EXPECT_EQ(sample->azp_sentence.azp_gaps, (std::vector<int>{1}));
  EXPECT_EQ(sample->features.gender, Gender::kFeminine);
  EXPECT_EQ(sample->source.document, "باريس");
}

TEST(SampleIoTest, ErrorsNameRecordAndField) {
  struct Case {
    std::function<void(json *)> mutate;
    std::string field;
  };
  std::vector<Case> cases = {
      {[](json *j) { j->erase("gap_index"); }, "gap_index"},
      {[](json *j) { (*j)["method"] = "zzz"; }, "method"},
      {[](json *j) { (*j)["number"] = "many"; }, "number"},
      {[](json *j) { (*j)["azp_pos"] = json::array({"VBP"}); }, "azp_pos"},
      {[](json *j) { (*j)["extra"] = 1; }, "extra"},
      {[](json *j) { (*j)["verb_index"] = "0"; }, "verb_index"},
  };
  for (const Case &c : cases) {
    json j = GoodRecord();
    c.mutate(&j);
    absl::StatusOr<AzpSample> sample = SampleFromLine(j.dump(), 7);
    ASSERT_FALSE(sample.ok()) << c.field;
    EXPECT_TRUE(absl::StrContains(sample.status().message(), "record 7"))
        << sample.status();
    EXPECT_TRUE(absl::StrContains(sample.status().message(), c.field))
        << sample.status();
  }
}

TEST(SampleIoTest, StructuralInvariantsChecked) {
  json j = GoodRecord();
  j["verb_index"] = 1;  // "في" is not a verb
  EXPECT_FALSE(SampleFromLine(j.dump(), 1).ok());
  j = GoodRecord();
  j["ant_end"] = 5;
  EXPECT_FALSE(SampleFromLine(j.dump(), 1).ok());
  EXPECT_FALSE(SampleFromLine("{not json", 1).ok());
}

TEST(SampleIoTest, FileRoundTrip) {
  std::mt19937 rng(2);
  std::vector<AzpSample> samples;
  for (int i = 0; i < 20; ++i) {
    samples.push_back(Persisted(testing::RandomSample(rng, i)));
  }
  std::string path = ::testing::TempDir() + "/samples.azp";
  ASSERT_TRUE(WriteSamples(samples, path).ok());
  absl::StatusOr<std::vector<AzpSample>> read = ReadSamples(path);
  ASSERT_TRUE(read.ok()) << read.status();
  EXPECT_EQ(*read, samples);
}

}  // namespace
}  // namespace azp
