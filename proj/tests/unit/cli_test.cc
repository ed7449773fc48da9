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

#include "azp/cli.h"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include "absl/strings/match.h"
#include "azp/corpus.h"
#include "azp/sample_io.h"
#include "gtest/gtest.h"
#include "json.hpp"
#include "testing/generators.h"
#include "testing/run_fixture.h"

namespace azp {
namespace {

using testing::FixturePath;
using testing::ScratchDir;
using testing::Slurp;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome Cli(std::vector<std::string> args) {
  args.insert(args.begin(), "azp");
  std::vector<char *> argv;
  for (std::string &arg : args) argv.push_back(arg.data());
  ::testing::internal::CaptureStdout();
  ::testing::internal::CaptureStderr();
  int code = RunCli(static_cast<int>(argv.size()), argv.data());
  std::string out = ::testing::internal::GetCapturedStdout();
  std::string err = ::testing::internal::GetCapturedStderr();
  return {code, out, err};
}

TEST(CliTest, PreprocessGolden) {
  std::string dir = ScratchDir("cli_pre");
  ASSERT_TRUE(WriteStringToFile(dir + "/in.txt", "لا بأس أن تُقالَ\n").ok());
  Outcome r = Cli({"preprocess", "--in", dir + "/in.txt", "--out",
                   dir + "/out.txt"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(Slurp(dir + "/out.txt"), "لا باس ان تقال\n");
}

TEST(CliTest, UsageErrorsAreValidation) {
  EXPECT_EQ(Cli({}).code, kExitValidation);
  EXPECT_EQ(Cli({"nonsense"}).code, kExitValidation);
  EXPECT_EQ(Cli({"preprocess", "--in", "x"}).code, kExitValidation);
  EXPECT_EQ(Cli({"--help"}).code, kExitOk);
  EXPECT_EQ(Cli({"score", "--task", "ranking", "--gold", "a", "--pred", "b"})
                .code,
            kExitValidation);
}

TEST(CliTest, MissingInputIsValidation) {
  Outcome r = Cli({"stats", "--in", "/no/such/file.azp"});
  EXPECT_EQ(r.code, kExitValidation);
  EXPECT_TRUE(absl::StartsWith(r.err, "azp: invalid: ")) << r.err;
}

TEST(CliTest, MinePatternsToStdout) {
  Outcome r = Cli({"--config", FixturePath("config.json"), "mine-patterns"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(absl::StrContains(r.out, "<S> VBD | IN NNP")) << r.out;
  Outcome zero = Cli({"--config", FixturePath("config.json"), "mine-patterns",
                      "--window", "0"});
  EXPECT_EQ(zero.code, kExitValidation);
}

TEST(CliTest, RunThenStatsAndScore) {
  std::string dir = ScratchDir("cli_run");
  Outcome r = Cli({"--config", FixturePath("config.json"), "run", "--out",
                   dir + "/out", "--workers", "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(absl::StrContains(r.out, "total")) << r.out;
  std::string samples = dir + "/out/samples.azp";
  ASSERT_TRUE(std::filesystem::exists(samples));

  Outcome stats = Cli({"stats", "--in", samples});
  ASSERT_EQ(stats.code, kExitOk) << stats.err;
  EXPECT_EQ(stats.out, Slurp(dir + "/out/stats.txt"));

  // Augmented samples share their source gap, so a sample file is not a
  // valid gold set.
  Outcome dup = Cli({"score", "--task", "identification", "--gold", samples,
                     "--pred", samples});
  EXPECT_EQ(dup.code, kExitValidation);
}

std::string GapRecord(const std::string &doc, int gap, int start, int end) {
  return nlohmann::json{{"source", {{"corpus", "c"}, {"document", doc},
                                    {"sentence", 1}}},
                        {"gap_index", gap},
                        {"ant_start", start},
                        {"ant_end", end}}
             .dump() +
         "\n";
}

TEST(CliTest, Score) {
  std::string dir = ScratchDir("cli_score");
  ASSERT_TRUE(WriteStringToFile(dir + "/gold.jsonl",
                                GapRecord("a", 1, 0, 1) +
                                    GapRecord("b", 2, 0, 2) +
                                    GapRecord("b", 2, 3, 4) +
                                    GapRecord("c", 0, 0, 1))
                  .ok());
  ASSERT_TRUE(WriteStringToFile(dir + "/pred.jsonl",
                                GapRecord("a", 1, 0, 2) +
                                    GapRecord("b", 2, 3, 4))
                  .ok());
  Outcome res = Cli({"score", "--task", "resolution", "--gold",
                     dir + "/gold.jsonl", "--pred", dir + "/pred.jsonl",
                     "--baseline-f1", "57.4"});
  ASSERT_EQ(res.code, kExitOk) << res.err;
  // One of two predictions is right; three AZPs are in gold.
  EXPECT_EQ(res.out, "P\tR\tF1\tdiff\n50.0\t33.3\t40.0\t-17.4\n");

  Outcome ident = Cli({"score", "--task", "identification", "--gold",
                       dir + "/pred.jsonl", "--pred", dir + "/pred.jsonl"});
  ASSERT_EQ(ident.code, kExitOk) << ident.err;
  EXPECT_EQ(ident.out, "P\tR\tF1\tdiff\n100.0\t100.0\t100.0\t-\n");
}

TEST(CliTest, FlagsOverrideConfig) {
  std::string dir = ScratchDir("cli_flags");
  Outcome r = Cli({"--config", FixturePath("config.json"), "run", "--out",
                   dir, "--methods", "onp", "--top-k", "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  nlohmann::json manifest = nlohmann::json::parse(Slurp(dir + "/manifest.json"));
  EXPECT_EQ(manifest["config"]["top_k"], 2);
  EXPECT_EQ(manifest["counts"]["generated_total"], 0);
}

TEST(CliTest, EnvironmentEndpointBeatsConfig) {
  std::string dir = ScratchDir("cli_env");
  ::setenv("AZP_TAG_URL", "http://127.0.0.1:1", 1);
  Outcome r = Cli({"--config", FixturePath("config.json"), "run", "--out", dir,
                   "--methods", "onp"});
  ::unsetenv("AZP_TAG_URL");
  EXPECT_EQ(r.code, kExitRuntime) << r.err;
  EXPECT_TRUE(absl::StartsWith(r.err, "azp: error: ")) << r.err;
}

TEST(CliTest, FilterSplitsSamples) {
  std::string dir = ScratchDir("cli_filter");
  ASSERT_EQ(Cli({"--config", FixturePath("config.json"), "run", "--out", dir,
                 "--lenient"})
                .code,
            kExitOk);
  Outcome r = Cli({"filter", "--in", dir + "/samples.azp", "--out",
                   dir + "/kept.azp", "--rejected", dir + "/rej.tsv"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  // Samples that survived a lenient run may still fail the strict check;
  // every one of them lands in exactly one output.
  absl::StatusOr<std::vector<AzpSample>> all = ReadSamples(dir + "/samples.azp");
  absl::StatusOr<std::vector<AzpSample>> kept = ReadSamples(dir + "/kept.azp");
  ASSERT_TRUE(all.ok() && kept.ok());
  std::string rejected = Slurp(dir + "/rej.tsv");
  size_t rejected_lines = std::count(rejected.begin(), rejected.end(), '\n');
  EXPECT_EQ(kept->size() + rejected_lines, all->size());
}

}  // namespace
}  // namespace azp
