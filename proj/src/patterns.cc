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

#include "azp/patterns.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"

namespace azp {

std::string PosPattern::ToString() const {
  return absl::StrCat(absl::StrJoin(before, " "), " | ",
                      absl::StrJoin(after, " "));
}

absl::StatusOr<PosPattern> PosPattern::FromString(absl::string_view text) {
  std::vector<absl::string_view> halves = absl::StrSplit(text, '|');
  if (halves.size() != 2) {
    return absl::InvalidArgumentError(
        absl::StrCat("pattern needs exactly one '|': ", text));
  }
  PosPattern pattern;
  pattern.before = absl::StrSplit(halves[0], ' ', absl::SkipEmpty());
  pattern.after = absl::StrSplit(halves[1], ' ', absl::SkipEmpty());
  if (pattern.before.empty() || pattern.before.size() != pattern.after.size()) {
    return absl::InvalidArgumentError(
        absl::StrCat("pattern halves must be equal and non-empty: ", text));
  }
  return pattern;
}

void UnigramModel::Add(absl::string_view tag, int64_t count) {
  auto it = counts_.find(tag);
  if (it == counts_.end()) {
    counts_.emplace(std::string(tag), count);
  } else {
    it->second += count;
  }
  total_ += count;
}

void UnigramModel::AddCorpus(const std::vector<Sentence> &sentences) {
  for (const Sentence &sentence : sentences) {
    for (const Token &token : sentence.tokens) Add(token.pos);
  }
}

void UnigramModel::Merge(const UnigramModel &other) {
  for (const auto &[tag, count] : other.counts_) Add(tag, count);
}

double UnigramModel::Probability(absl::string_view tag) const {
  if (IsBoundaryTag(tag)) return 1.0;
  if (total_ == 0) return 0.0;
  auto it = counts_.find(tag);
  if (it == counts_.end()) return 0.0;
  return static_cast<double>(it->second) / static_cast<double>(total_);
}

PosPattern WindowAt(const Sentence &sentence, int gap, int window) {
  PosPattern pattern;
  for (int i = gap - window; i < gap; ++i) {
    pattern.before.push_back(i < 0 ? std::string(kBeginTag)
                                   : sentence.tokens[i].pos);
  }
  for (int i = gap; i < gap + window; ++i) {
    pattern.after.push_back(i >= sentence.size() ? std::string(kEndTag)
                                                 : sentence.tokens[i].pos);
  }
  return pattern;
}

std::vector<PosPattern> ExtractWindows(const std::vector<Sentence> &sentences,
                                       int window) {
  std::vector<PosPattern> windows;
  for (const Sentence &sentence : sentences) {
    for (int gap : sentence.azp_gaps) {
      windows.push_back(WindowAt(sentence, gap, window));
    }
  }
  return windows;
}

bool RanksBefore(const PatternStats &a, const PatternStats &b) {
  if (a.t != b.t) return a.t > b.t;
  if (a.count != b.count) return a.count > b.count;
  return a.pattern < b.pattern;
}

absl::StatusOr<std::vector<PatternStats>> ScorePatterns(
    const std::vector<PosPattern> &windows, const UnigramModel &unigrams) {
  if (windows.empty()) return absl::InvalidArgumentError("empty window set");
  std::map<PosPattern, int64_t> counts;
  for (const PosPattern &pattern : windows) ++counts[pattern];

  const int64_t n = static_cast<int64_t>(windows.size());
  std::vector<PatternStats> stats;
  stats.reserve(counts.size());
  for (const auto &[pattern, count] : counts) {
    PatternStats s;
    s.pattern = pattern;
    s.count = count;
    s.n = n;
    s.x_bar = static_cast<double>(count) / static_cast<double>(n);
    s.mu = 1.0;
    for (const std::string &tag : pattern.before) s.mu *= unigrams.Probability(tag);
    for (const std::string &tag : pattern.after) s.mu *= unigrams.Probability(tag);
    s.s2 = s.x_bar * (1.0 - s.x_bar);
    if (s.s2 > 0.0) {
      s.t = (s.x_bar - s.mu) / std::sqrt(s.s2 / static_cast<double>(n));
    } else {
      s.t = std::numeric_limits<double>::infinity();
    }
    stats.push_back(std::move(s));
  }
  std::sort(stats.begin(), stats.end(), RanksBefore);
  return stats;
}

std::vector<PosPattern> SelectTop(std::vector<PatternStats> stats, int k) {
  std::sort(stats.begin(), stats.end(), RanksBefore);
  std::vector<PosPattern> top;
  for (const PatternStats &s : stats) {
    if (static_cast<int>(top.size()) >= k) break;
    top.push_back(s.pattern);
  }
  return top;
}

std::vector<int> MatchPatterns(const std::vector<PosPattern> &patterns,
                               const Sentence &sentence) {
  std::map<int, std::set<PosPattern>> by_window;
  for (const PosPattern &pattern : patterns) {
    by_window[pattern.window()].insert(pattern);
  }
  std::vector<int> gaps;
  for (int gap = 0; gap <= sentence.size(); ++gap) {
    for (const auto &[window, set] : by_window) {
      if (set.count(WindowAt(sentence, gap, window)) > 0) {
        gaps.push_back(gap);
        break;
      }
    }
  }
  return gaps;
}

std::string SerializePatternStats(const std::vector<PatternStats> &stats) {
  std::string out;
  for (const PatternStats &s : stats) {
    std::string t = std::isinf(s.t) ? "inf" : absl::StrFormat("%.6f", s.t);
    absl::StrAppend(&out, s.pattern.ToString(), "\t", t, "\t", s.count, "\n");
  }
  return out;
}

absl::StatusOr<std::vector<PatternStats>> ParsePatternStats(
    absl::string_view text) {
  std::vector<PatternStats> stats;
  int line_number = 0;
  for (absl::string_view line : absl::StrSplit(text, '\n')) {
    ++line_number;
    line = absl::StripSuffix(line, "\r");
    if (absl::StripAsciiWhitespace(line).empty() || line[0] == '#') continue;
    std::vector<absl::string_view> columns = absl::StrSplit(line, '\t');
    if (columns.size() != 3) {
      return absl::InvalidArgumentError(absl::StrCat(
          "pattern file line ", line_number, ": expected 3 columns"));
    }
    absl::StatusOr<PosPattern> pattern = PosPattern::FromString(columns[0]);
    if (!pattern.ok()) {
      return absl::InvalidArgumentError(absl::StrCat(
          "pattern file line ", line_number, ": ", pattern.status().message()));
    }
    PatternStats s;
    s.pattern = *std::move(pattern);
    if (columns[1] == "inf") {
      s.t = std::numeric_limits<double>::infinity();
    } else if (!absl::SimpleAtod(columns[1], &s.t)) {
      return absl::InvalidArgumentError(
          absl::StrCat("pattern file line ", line_number, ": bad t-score"));
    }
    if (!absl::SimpleAtoi(columns[2], &s.count) || s.count < 0) {
      return absl::InvalidArgumentError(
          absl::StrCat("pattern file line ", line_number, ": bad count"));
    }
    stats.push_back(std::move(s));
  }
  return stats;
}

}  // namespace azp
