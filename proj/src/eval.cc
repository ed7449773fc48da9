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

#include "azp/eval.h"

#include <cmath>
#include <set>
#include <tuple>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"
#include "json.hpp"

namespace azp {

double RoundPercent(double value) {
  // The epsilon absorbs binary representation error at exact .x5 ties.
  double scaled = std::fabs(value) * 10.0;
  double rounded = std::floor(scaled + 0.5 + 1e-9) / 10.0;
  return value < 0 ? -rounded : rounded;
}

double F1FromPrecisionRecall(double precision, double recall) {
  if (precision + recall <= 0.0) return 0.0;
  return 2.0 * precision * recall / (precision + recall);
}

ScoreReport MakeReport(int64_t correct, int64_t predicted, int64_t gold,
                       std::optional<double> baseline_f1) {
  double p = predicted > 0 ? 100.0 * correct / predicted : 0.0;
  double r = gold > 0 ? 100.0 * correct / gold : 0.0;
  ScoreReport report;
  report.precision = RoundPercent(p);
  report.recall = RoundPercent(r);
  report.f1 = RoundPercent(F1FromPrecisionRecall(p, r));
  if (baseline_f1) report.diff = RoundPercent(report.f1 - *baseline_f1);
  return report;
}

bool GapKey::operator<(const GapKey &other) const {
  return std::tie(source, gap) < std::tie(other.source, other.gap);
}

namespace {

absl::Status DuplicateError(absl::string_view which, const GapKey &key) {
  return absl::InvalidArgumentError(absl::StrCat(
      "duplicate ", which, " entry ", key.source.corpus, "/",
      key.source.document, "/", key.source.sentence, "@", key.gap));
}

}  // namespace

absl::StatusOr<ScoreReport> ScoreIdentification(
    const std::vector<GapKey> &gold, const std::vector<GapKey> &predicted,
    std::optional<double> baseline_f1) {
  std::set<GapKey> gold_set;
  for (const GapKey &key : gold) {
    if (!gold_set.insert(key).second) return DuplicateError("gold", key);
  }
  std::set<GapKey> pred_set;
  int64_t correct = 0;
  for (const GapKey &key : predicted) {
    if (!pred_set.insert(key).second) return DuplicateError("predicted", key);
    correct += gold_set.count(key);
  }
  return MakeReport(correct, pred_set.size(), gold_set.size(), baseline_f1);
}

absl::StatusOr<ScoreReport> ScoreResolution(
    const std::map<GapKey, std::vector<TokenSpan>> &gold,
    const std::vector<std::pair<GapKey, TokenSpan>> &predicted,
    std::optional<double> baseline_f1) {
  std::set<GapKey> seen;
  int64_t correct = 0;
  for (const auto &[key, span] : predicted) {
    auto it = gold.find(key);
    if (it == gold.end()) {
      return absl::InvalidArgumentError(absl::StrCat(
          "predicted AZP ", key.source.document, "/", key.source.sentence,
          "@", key.gap, " is not in the gold universe"));
    }
    if (!seen.insert(key).second) return DuplicateError("predicted", key);
    for (const TokenSpan &g : it->second) {
      if (g == span) {
        ++correct;
        break;
      }
    }
  }
  return MakeReport(correct, predicted.size(), gold.size(), baseline_f1);
}

std::string FormatReport(const ScoreReport &report) {
  std::string diff = "-";
  if (report.diff) {
    diff = *report.diff > 0 ? absl::StrFormat("+%.1f", *report.diff)
                            : absl::StrFormat("%.1f", *report.diff);
    if (*report.diff == 0.0) diff = "0.0";
  }
  return absl::StrFormat("P\tR\tF1\tdiff\n%.1f\t%.1f\t%.1f\t%s\n",
                         report.precision, report.recall, report.f1, diff);
}

namespace {

using nlohmann::json;

absl::StatusOr<GapKey> KeyFrom(const json &j, int record) {
  auto error = [record](absl::string_view field) {
    return absl::InvalidArgumentError(absl::StrCat(
        "record ", record, ": field '", field, "' missing or malformed"));
  };
  if (!j.contains("source") || !j["source"].is_object()) return error("source");
  const json &s = j["source"];
  if (!s.contains("corpus") || !s["corpus"].is_string()) return error("source.corpus");
  if (!s.contains("document") || !s["document"].is_string()) {
    return error("source.document");
  }
  if (!s.contains("sentence") || !s["sentence"].is_number_integer()) {
    return error("source.sentence");
  }
  if (!j.contains("gap_index") || !j["gap_index"].is_number_integer()) {
    return error("gap_index");
  }
  GapKey key;
  key.source = SampleSource{s["corpus"].get<std::string>(),
                            s["document"].get<std::string>(),
                            s["sentence"].get<int>()};
  key.gap = j["gap_index"].get<int>();
  return key;
}

template <typename Fn>
absl::Status ForEachRecord(const std::string &path, Fn fn) {
  absl::StatusOr<std::string> text = ReadFileToString(path);
  if (!text.ok()) return text.status();
  int record = 0;
  for (absl::string_view line : absl::StrSplit(*text, '\n')) {
    if (absl::StripAsciiWhitespace(line).empty()) continue;
    ++record;
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
      return absl::InvalidArgumentError(
          absl::StrCat(path, ": record ", record, ": not a JSON object"));
    }
    if (absl::Status s = fn(j, record); !s.ok()) {
      return absl::Status(s.code(), absl::StrCat(path, ": ", s.message()));
    }
  }
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<std::vector<GapKey>> ReadGapKeys(const std::string &path) {
  std::vector<GapKey> keys;
  absl::Status status =
      ForEachRecord(path, [&](const json &j, int record) -> absl::Status {
        absl::StatusOr<GapKey> key = KeyFrom(j, record);
        if (!key.ok()) return key.status();
        keys.push_back(*key);
        return absl::OkStatus();
      });
  if (!status.ok()) return status;
  return keys;
}

absl::StatusOr<std::vector<std::pair<GapKey, TokenSpan>>> ReadGapSpans(
    const std::string &path) {
  std::vector<std::pair<GapKey, TokenSpan>> out;
  absl::Status status =
      ForEachRecord(path, [&](const json &j, int record) -> absl::Status {
        absl::StatusOr<GapKey> key = KeyFrom(j, record);
        if (!key.ok()) return key.status();
        for (const char *field : {"ant_start", "ant_end"}) {
          if (!j.contains(field) || !j[field].is_number_integer()) {
            return absl::InvalidArgumentError(absl::StrCat(
                "record ", record, ": field '", field, "' missing or malformed"));
          }
        }
        out.emplace_back(*key, TokenSpan{j["ant_start"].get<int>(),
                                         j["ant_end"].get<int>()});
        return absl::OkStatus();
      });
  if (!status.ok()) return status;
  return out;
}

MethodStats CountByMethod(const std::vector<AzpSample> &samples) {
  MethodStats stats;
  for (const AzpSample &sample : samples) {
    ++stats.counts[sample.method];
    ++stats.total;
  }
  return stats;
}

std::string FormatThousands(int64_t value) {
  std::string digits = absl::StrCat(value < 0 ? -value : value);
  std::string out;
  int n = static_cast<int>(digits.size());
  for (int i = 0; i < n; ++i) {
    if (i > 0 && (n - i) % 3 == 0) out.push_back(',');
    out.push_back(digits[i]);
  }
  return value < 0 ? "-" + out : out;
}

std::string RenderStats(const MethodStats &stats) {
  std::vector<std::pair<std::string, std::string>> rows;
  for (Method method : kAllMethods) {
    auto it = stats.counts.find(method);
    int64_t count = it == stats.counts.end() ? 0 : it->second;
    if (method == Method::kGold && count == 0) continue;
    rows.emplace_back(std::string(MethodName(method)), FormatThousands(count));
  }
  rows.emplace_back("total", FormatThousands(stats.total));
  size_t label_width = absl::string_view("method").size();
  size_t count_width = absl::string_view("count").size();
  for (const auto &[label, count] : rows) {
    label_width = std::max(label_width, label.size());
    count_width = std::max(count_width, count.size());
  }
  std::string out = absl::StrFormat("%-*s  %*s\n", label_width, "method",
                                    count_width, "count");
  for (const auto &[label, count] : rows) {
    absl::StrAppendFormat(&out, "%-*s  %*s\n", label_width, label,
                          count_width, count);
  }
  return out;
}

}  // namespace azp
