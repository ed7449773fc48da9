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

#ifndef AZP_PIPELINE_H_
#define AZP_PIPELINE_H_

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "azp/corpus.h"
#include "azp/morph.h"
#include "azp/patterns.h"
#include "azp/providers.h"
#include "azp/subject.h"
#include "json.hpp"

namespace azp {

struct PipelineConfig {
  std::string gold;     // tagged corpus with gold gaps
  std::string pages;    // JSON-lines summary pages
  std::string lexicon;  // morphology lexicon
  std::string tagset;   // optional tagset file; Arabic Penn when empty
  std::string out;      // output directory

  std::string lm;
  std::string translator;
  std::string tagger;
  std::string default_tag = "NN";

  std::set<Method> methods = {Method::kOnp, Method::kRsm, Method::kMcm,
                              Method::kBt, Method::kCsa};
  int k = 5;
  int window = 2;
  int top_k = 5;
  bool lenient = false;
  int workers = 4;
  std::string pivot = "en";
  std::string corpus_id = "wiki";
  double rate_limit = 10.0;
  int max_in_flight = 4;
};

// Parses "onp,rsm" into methods; "gold" is not a pipeline method.
absl::StatusOr<std::set<Method>> ParseMethods(absl::string_view list);
std::string MethodList(const std::set<Method> &methods);

// Applies the keys of a JSON config document onto `config`. Unknown keys
// are rejected.
absl::Status ApplyConfigJson(const nlohmann::json &j, PipelineConfig *config);
// Relative paths and stub endpoints resolve against the file's directory.
absl::Status LoadConfigFile(const std::string &path, PipelineConfig *config);

// Structural checks done before any work: numeric ranges, input files
// present, and an endpoint for every provider the methods need.
absl::Status ValidateConfig(const PipelineConfig &config);

// Canonical JSON of every setting that can affect output (the output
// directory and worker count are excluded).
nlohmann::ordered_json CanonicalConfig(const PipelineConfig &config);

// Normalizes, splits, tokenizes and tags raw pages.
absl::StatusOr<std::vector<SummaryPage>> TagPages(
    const std::vector<RawPage> &pages, TaggingProvider &tagger, int workers);

// Mines and scores gold windows; returns every scored pattern, ranked.
absl::StatusOr<std::vector<PatternStats>> MinePatterns(
    const std::vector<TaggedDocument> &gold, int window);

// DetectPage over every page; samples keep page order.
absl::StatusOr<std::vector<AzpSample>> DetectSamples(
    const std::vector<SummaryPage> &pages,
    const std::vector<PosPattern> &patterns, const MorphLexicon &lexicon,
    const DetectOptions &options, int workers, DetectStats *stats = nullptr);

struct Providers {
  std::unique_ptr<MaskedLmProvider> lm;
  std::unique_ptr<TranslationProvider> translator;
  std::unique_ptr<TaggingProvider> tagger;
};

struct GenerateOptions {
  std::set<Method> methods;
  int top_k = 5;
  std::string pivot = "en";
  int workers = 4;
};

// Applies MCM, BT and CSA (as enabled) to every input sample. Generated
// samples keep the order of their source sample.
absl::StatusOr<std::vector<AzpSample>> GenerateSamples(
    const std::vector<AzpSample> &samples, Providers &providers,
    const MorphLexicon &lexicon, const GenerateOptions &options);

// Outcome of a full run. `manifest` is byte-stable for identical inputs;
// wall-clock timings live separately in `timings`.
struct RunResult {
  nlohmann::ordered_json manifest;
  nlohmann::ordered_json timings;
  std::vector<AzpSample> kept;
  std::vector<Rejection> rejected;
};

// Runs normalize, tag, mine, detect, generate, filter and write in order.
// Writes samples.azp, rejected.tsv, patterns.tsv, stats.txt, manifest.json
// and timings.json into config.out. A failing stage aborts the run; the
// partial manifest naming that stage is still written.
absl::StatusOr<RunResult> RunPipeline(const PipelineConfig &config);

}  // namespace azp

#endif  // AZP_PIPELINE_H_
