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

#ifndef AZP_PATTERNS_H_
#define AZP_PATTERNS_H_

#include <map>
#include <string>
#include "absl/strings/string_view.h"
#include <vector>

#include "absl/status/statusor.h"
#include "azp/corpus.h"

namespace azp {

// POS construction around a gap: `before` holds the tags at positions
// gap-w .. gap-1 and `after` the tags at gap .. gap+w-1, with <S> / </S>
// filling positions outside the sentence.
struct PosPattern {
  std::vector<std::string> before;
  std::vector<std::string> after;

  int window() const { return static_cast<int>(before.size()); }
  // "TAG TAG | TAG TAG"
  std::string ToString() const;
  static absl::StatusOr<PosPattern> FromString(absl::string_view text);

  auto operator<=>(const PosPattern &) const = default;
  bool operator==(const PosPattern &) const = default;
};

// Frequency and collocation t-score of one construction among the mined
// windows. With x = count / n, mu the independence expectation and
// s2 = x (1 - x):  t = (x - mu) / sqrt(s2 / n). A degenerate s2 of zero
// (every window identical) yields +infinity.
struct PatternStats {
  PosPattern pattern;
  int64_t count = 0;
  double x_bar = 0.0;
  double mu = 0.0;
  double s2 = 0.0;
  int64_t n = 0;
  double t = 0.0;
};

// Tag frequencies of the corpus the windows came from.
class UnigramModel {
 public:
  void Add(absl::string_view tag, int64_t count = 1);
  void AddCorpus(const std::vector<Sentence> &sentences);
  void Merge(const UnigramModel &other);

  // Relative frequency; boundary tags always have probability 1 so they
  // contribute nothing to the independence product.
  double Probability(absl::string_view tag) const;
  int64_t total() const { return total_; }

 private:
  std::map<std::string, int64_t, std::less<>> counts_;
  int64_t total_ = 0;
};

// The window at `gap` of `sentence`, boundary-padded.
PosPattern WindowAt(const Sentence &sentence, int gap, int window);

// One window per (sentence, gap) pair.
std::vector<PosPattern> ExtractWindows(const std::vector<Sentence> &sentences,
                                       int window = 2);

// Scores each distinct pattern. Sorted by t descending, ties broken as in
// SelectTop. Fails on an empty window set.
absl::StatusOr<std::vector<PatternStats>> ScorePatterns(
    const std::vector<PosPattern> &windows, const UnigramModel &unigrams);

// True if `a` ranks before `b`: higher t, then higher count, then
// lexicographic tag order.
bool RanksBefore(const PatternStats &a, const PatternStats &b);

// The k best-ranked patterns (all of them when fewer than k).
std::vector<PosPattern> SelectTop(std::vector<PatternStats> stats, int k = 5);

// Ascending, unique gap positions whose window equals one of `patterns`.
// Patterns of different window sizes may be mixed.
std::vector<int> MatchPatterns(const std::vector<PosPattern> &patterns,
                               const Sentence &sentence);

// Pattern file: one "TAG TAG | TAG TAG<TAB>t<TAB>count" line per pattern.
std::string SerializePatternStats(const std::vector<PatternStats> &stats);
absl::StatusOr<std::vector<PatternStats>> ParsePatternStats(
    absl::string_view text);

}  // namespace azp

#endif  // AZP_PATTERNS_H_
