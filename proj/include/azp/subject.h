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

#ifndef AZP_SUBJECT_H_
#define AZP_SUBJECT_H_

#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "azp/corpus.h"
#include "azp/morph.h"
#include "azp/patterns.h"

namespace azp {

// Locates the explicit subject of the verb at `verb_index`.
//
// With dependency annotations, the subject-labelled dependent of the verb
// (and its subtree) is returned. Otherwise the verb-subject-object
// heuristic applies: scanning rightwards from the verb until the first
// preposition, return the nearest nominal chunk whose head agrees with the
// verb in number and gender. Noun and proper-noun runs form one chunk; a
// pronoun is a chunk of its own. Fails if the token is not a verb.
absl::StatusOr<std::optional<TokenSpan>> FindSubject(
    const Sentence &sentence, int verb_index, const MorphLexicon &lexicon);

// Deletes the span and records a gap where it started. Later gaps shift
// left; gaps strictly inside the span collapse onto the new gap.
absl::StatusOr<Sentence> RemoveSubject(const Sentence &sentence,
                                       const TokenSpan &span);

// Inverse of RemoveSubject: inserts `tokens` at `gap` and drops that gap.
absl::StatusOr<Sentence> InsertAtGap(const Sentence &sentence, int gap,
                                     const std::vector<Token> &tokens);

// Finds the title mention in the first sentence: the whole title as a
// contiguous token run (first occurrence), else the first title token that
// occurs as a noun. Comparison is on normalized surfaces.
std::optional<TokenSpan> LocateTitle(const std::string &title,
                                     const Sentence &first_sentence);

// Builds a two-sentence sample pairing the page's first sentence (holding
// the title antecedent) with sentence `azp_sentence_index`, which must
// already carry `gap_index` among its gaps. Returns nullopt when the title
// cannot be found in the first sentence. Index 0 is a contract violation.
absl::StatusOr<std::optional<AzpSample>> AssembleSample(
    const SummaryPage &page, int azp_sentence_index,
    const Sentence &azp_sentence, int gap_index, int verb_index,
    Method method, const MorphLexicon &lexicon, const std::string &corpus_id);

// Nearest verb left of `gap`, else nearest verb at or right of it; -1 when
// the sentence has no verb.
int GoverningVerb(const Sentence &sentence, int gap);

// Runs ONP (pattern matching) and RSM (subject removal) on every sentence
// but the first, emitting one sample per detected gap.
struct DetectOptions {
  bool onp = true;
  bool rsm = true;
  std::string corpus_id = "wiki";
};

struct DetectStats {
  int pages = 0;
  int pages_without_title = 0;
  int onp_matches = 0;
  int rsm_subjects = 0;
};

absl::StatusOr<std::vector<AzpSample>> DetectPage(
    const SummaryPage &page, const std::vector<PosPattern> &patterns,
    const MorphLexicon &lexicon, const DetectOptions &options,
    DetectStats *stats = nullptr);

}  // namespace azp

#endif  // AZP_SUBJECT_H_
