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

#ifndef AZP_CORPUS_H_
#define AZP_CORPUS_H_

#include <optional>
#include <string>
#include "absl/strings/string_view.h"
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "azp/morph_features.h"
#include "azp/tagset.h"

namespace azp {

struct Token {
  std::string surface;
  std::string pos;
  int index = 0;
  // Optional dependency annotation: 0-based index of the head token, -1 for
  // the root or when the corpus carries no dependency columns.
  int head = -1;
  std::string deprel;

  bool operator==(const Token &) const = default;
};

// A POS-tagged sentence. A gap at position i sits before token i, so
// 0 <= gap <= tokens.size(). Gaps are kept sorted and unique.
struct Sentence {
  std::vector<Token> tokens;
  std::vector<int> azp_gaps;

  int size() const { return static_cast<int>(tokens.size()); }
  bool HasDependencies() const;
  std::vector<std::string> Surfaces() const;
  std::vector<std::string> Tags() const;
  // Space-joined surfaces.
  std::string Text() const;
  // Re-numbers token indices and sorts/deduplicates gaps.
  void Canonicalize();

  bool operator==(const Sentence &) const = default;
};

// Builds a sentence from parallel surface/tag lists.
Sentence MakeSentence(const std::vector<std::string> &surfaces,
                      const std::vector<std::string> &tags,
                      std::vector<int> gaps = {});

// Half-open token range [start, end).
struct TokenSpan {
  int start = 0;
  int end = 0;

  int length() const { return end - start; }
  bool empty() const { return end <= start; }
  bool Contains(int index) const { return index >= start && index < end; }
  bool operator==(const TokenSpan &) const = default;
};

enum class Method { kGold, kOnp, kRsm, kMcm, kBt, kCsa };

inline constexpr Method kAllMethods[] = {Method::kGold, Method::kOnp,
                                         Method::kRsm,  Method::kMcm,
                                         Method::kBt,   Method::kCsa};

absl::string_view MethodName(Method method);
std::optional<Method> ParseMethod(absl::string_view name);

struct SampleSource {
  std::string corpus;
  std::string document;
  int sentence = 0;

  bool operator==(const SampleSource &) const = default;
  bool operator<(const SampleSource &other) const;
};

// Two-sentence training record: the first sentence holds the antecedent
// mention, the second the anaphoric zero pronoun gap and its verb.
//
// Only number and gender of `features` are persisted by the sample file
// format; person is carried in memory for analysis but written as unknown.
struct AzpSample {
  std::string id;
  Method method = Method::kGold;
  Sentence antecedent_sentence;
  Sentence azp_sentence;
  int gap_index = 0;
  int verb_index = 0;
  TokenSpan antecedent_span;
  MorphFeatures features;
  SampleSource source;

  bool operator==(const AzpSample &) const = default;
};

// Checks every structural invariant of a sample: verb index in range and
// tagged as a verb, non-empty in-bounds antecedent span, and gap_index among
// the azp sentence's gaps.
absl::Status ValidateSample(const AzpSample &sample);

// Index of the antecedent head within antecedent_sentence: the rightmost
// noun of the span, or the last span token when the span holds no noun.
int AntecedentHead(const AzpSample &sample);

// Canonical output order: by source, then method, then id.
void SortSamples(std::vector<AzpSample> *samples);

struct TaggedDocument {
  std::string id;
  std::vector<Sentence> sentences;

  bool operator==(const TaggedDocument &) const = default;
};

// Parses the tab-separated column format:
//
//   # doc=<id>
//   SURFACE<TAB>POS[<TAB>HEAD<TAB>DEPREL]
//   <blank line between sentences>
//
// A `*` surface records a gap before the next token. HEAD is 1-based over
// the sentence's real tokens with 0 for the root. Other '#' lines are
// comments. Sentences before the first doc header belong to document "".
absl::StatusOr<std::vector<TaggedDocument>> ParseTagged(
    absl::string_view text, const Tagset &tagset);
absl::StatusOr<std::vector<TaggedDocument>> ReadTaggedFile(
    const std::string &path, const Tagset &tagset);

// Canonical serialization; ParseTagged(SerializeTagged(d)) == d.
std::string SerializeTagged(const std::vector<TaggedDocument> &documents);

// Arabic/Latin sentence terminators.
bool IsSentenceTerminator(char32_t c);

// Splits raw text after each run of terminators. Whitespace between
// sentences is trimmed; nothing else is dropped.
std::vector<std::string> SplitSentences(absl::string_view text);

// Whitespace tokenization with punctuation detached into single tokens.
std::vector<std::string> Tokenize(absl::string_view sentence);

struct RawPage {
  std::string title;
  std::string text;
};

// Wikipedia summary page with its sentences tagged. The first sentence is
// expected to mention the title entity.
struct SummaryPage {
  std::string title;
  std::vector<Sentence> sentences;
};

// JSON-lines file of {"title": ..., "text": ...} records.
absl::StatusOr<std::vector<RawPage>> ReadPages(const std::string &path);

absl::StatusOr<std::string> ReadFileToString(const std::string &path);
absl::Status WriteStringToFile(const std::string &path,
                               absl::string_view contents);

}  // namespace azp

#endif  // AZP_CORPUS_H_
