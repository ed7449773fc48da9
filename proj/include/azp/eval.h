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

#ifndef AZP_EVAL_H_
#define AZP_EVAL_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "azp/corpus.h"

namespace azp {

// Percentages rounded half-up to one decimal, as printed in result tables.
struct ScoreReport {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::optional<double> diff;  // f1 - baseline f1, when a baseline is given
};

// Rounds half away from zero to one decimal place.
double RoundPercent(double value);

// Harmonic mean of two percentages, unrounded; 0 when both are 0.
double F1FromPrecisionRecall(double precision, double recall);

// Builds a report from raw counts. Zero denominators give zero scores.
ScoreReport MakeReport(int64_t correct, int64_t predicted, int64_t gold,
                       std::optional<double> baseline_f1 = std::nullopt);

// Location of one AZP: the sentence source plus the gap index.
struct GapKey {
  SampleSource source;
  int gap = 0;

  bool operator==(const GapKey &) const = default;
  bool operator<(const GapKey &other) const;
};

// Set-based scoring of predicted AZP locations. Duplicate keys in either
// input are an error.
absl::StatusOr<ScoreReport> ScoreIdentification(
    const std::vector<GapKey> &gold, const std::vector<GapKey> &predicted,
    std::optional<double> baseline_f1 = std::nullopt);

// A prediction is correct iff its span equals one of the gold spans for
// that AZP. Precision is over predicted AZPs, recall over gold AZPs.
// Predictions for AZPs absent from gold, or more than one prediction for
// the same AZP, are errors.
absl::StatusOr<ScoreReport> ScoreResolution(
    const std::map<GapKey, std::vector<TokenSpan>> &gold,
    const std::vector<std::pair<GapKey, TokenSpan>> &predicted,
    std::optional<double> baseline_f1 = std::nullopt);

// "P R F1 diff" header plus one row, tab separated.
std::string FormatReport(const ScoreReport &report);

// Reads JSON-lines location records ("source" and "gap_index"; the
// resolution variant also needs "ant_start"/"ant_end"). Full sample files
// qualify; other keys are ignored.
absl::StatusOr<std::vector<GapKey>> ReadGapKeys(const std::string &path);
absl::StatusOr<std::vector<std::pair<GapKey, TokenSpan>>> ReadGapSpans(
    const std::string &path);

struct MethodStats {
  std::map<Method, int64_t> counts;
  int64_t total = 0;
};

MethodStats CountByMethod(const std::vector<AzpSample> &samples);

// Aligned text table: one row per augmentation method (gold only when
// present) and a total row, counts with thousands separators.
std::string RenderStats(const MethodStats &stats);

// 2906 -> "2,906".
std::string FormatThousands(int64_t value);

}  // namespace azp

#endif  // AZP_EVAL_H_
