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

#ifndef AZP_AUGMENT_H_
#define AZP_AUGMENT_H_

#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "azp/corpus.h"
#include "azp/morph.h"
#include "azp/providers.h"

namespace azp {

// Masked-mention replacement: masks the antecedent head and emits one
// sample per predicted replacement, skipping predictions equal to the
// original. Outputs are not agreement-filtered. Provider errors pass
// through unchanged, so transient failures stay retryable.
absl::StatusOr<std::vector<AzpSample>> McmAugment(const AzpSample &sample,
                                                  MaskedLmProvider &lm,
                                                  int top_k,
                                                  const MorphLexicon &lexicon);

struct BackTranslationOptions {
  std::string source_lang = "ar";
  std::string pivot_lang = "en";
};

// Round-trips the AZP sentence through the pivot language, re-tags it,
// and relocates the AZP verb by normalized surface (stem match as a
// fallback). Returns nullopt when the verb is lost or the pivot text is
// empty. A subject re-introduced by the round trip is removed again and
// its position becomes the gap.
absl::StatusOr<std::optional<AzpSample>> BtAugment(
    const AzpSample &sample, TranslationProvider &translator,
    TaggingProvider &tagger, const MorphLexicon &lexicon,
    const BackTranslationOptions &options = {});

// Re-inflects the AZP verb and the antecedent head to `target` number.
// Returns nullopt when either form is outside the rule set. Requesting the
// sample's current number is a contract error.
absl::StatusOr<std::optional<AzpSample>> CsaAugment(
    const AzpSample &sample, Number target, const MorphLexicon &lexicon);

// Every number other than `current`; empty when `current` is unknown.
std::vector<Number> CsaTargets(Number current);

}  // namespace azp

#endif  // AZP_AUGMENT_H_
