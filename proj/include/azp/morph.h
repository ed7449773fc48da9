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

#ifndef AZP_MORPH_H_
#define AZP_MORPH_H_

#include <map>
#include <optional>
#include <string>
#include "absl/strings/string_view.h"
#include <vector>

#include "absl/status/statusor.h"
#include "azp/corpus.h"
#include "azp/morph_features.h"

namespace azp {

// Word classes an affix rule may apply to.
enum class RuleScope { kImperfectVerb, kPerfectVerb, kCommonNoun };

// Matches surfaces of the form prefix + stem + suffix with a stem of at
// least `min_stem` code points. Higher priority rules are tried first.
struct AffixRule {
  RuleScope scope;
  std::string prefix;
  std::string suffix;
  int min_stem = 2;
  MorphFeatures features;
  int priority = 0;
};

struct LexiconEntry {
  MorphFeatures features;
  // Explicit forms per number, used instead of the sound-paradigm rules.
  std::map<Number, std::string> inflections;
};

// Small rule-based stand-in for a full Arabic morphological analyzer:
// surface overrides first, then ordered affix rules. Immutable once built.
class MorphLexicon {
 public:
  // Built-in sound-paradigm rules with no overrides.
  MorphLexicon();

  // Loads SURFACE<TAB>NUMBER<TAB>GENDER<TAB>PERSON[<TAB>TABLE] lines where
  // TABLE is "singular=...;dual=...;plural=...". Every form named in a
  // table is also registered as an override unless listed explicitly.
  static absl::StatusOr<MorphLexicon> FromFile(const std::string &path);
  static absl::StatusOr<MorphLexicon> FromString(absl::string_view text);

  // Fails if `surface` already has an override.
  absl::Status AddEntry(absl::string_view surface, LexiconEntry entry);

  // Looks up the normalized surface, then the surface without a leading
  // definite article.
  const LexiconEntry *Find(absl::string_view surface) const;

  const std::vector<AffixRule> &rules() const { return rules_; }
  const std::map<std::string, LexiconEntry> &entries() const {
    return entries_;
  }

  static std::vector<AffixRule> DefaultRules();

 private:
  std::map<std::string, LexiconEntry> entries_;
  std::vector<AffixRule> rules_;
};

// Lexicon override, else the first matching affix rule for the token's
// word class, else all-unknown. Deterministic and total.
MorphFeatures Analyze(const Token &token, const MorphLexicon &lexicon);

// Stem left after stripping the affixes implied by the token's analysis.
// Used as a lemma when relocating verbs. Empty when no rule applies.
std::string Lemma(const Token &token, const MorphLexicon &lexicon);

// Third-person sound-paradigm re-inflection to `target` number, keeping
// gender. Returns nullopt for non-verbs and forms outside the rule set.
std::optional<Token> InflectVerb(const Token &verb,
                                 const MorphFeatures &current, Number target,
                                 const MorphLexicon &lexicon);

// Nominative sound masculine/feminine re-inflection. Broken plurals and
// proper nouns are only available through lexicon inflection tables.
std::optional<Token> InflectNoun(const Token &noun,
                                 const MorphFeatures &current, Number target,
                                 const MorphLexicon &lexicon);

// Number and gender must match. In strict mode an unknown value never
// agrees; lenient mode treats it as a wildcard.
bool Agrees(const MorphFeatures &verb, const MorphFeatures &antecedent,
            bool lenient = false);

enum class RejectReason { kNumberMismatch, kGenderMismatch, kUnanalyzable };

absl::string_view RejectReasonName(RejectReason reason);

struct Rejection {
  AzpSample sample;
  RejectReason reason;
};

struct FilterResult {
  std::vector<AzpSample> kept;
  std::vector<Rejection> rejected;
};

// Why the sample's verb and antecedent head disagree, or nullopt if they
// agree.
std::optional<RejectReason> CheckAgreement(const AzpSample &sample,
                                           const MorphLexicon &lexicon,
                                           bool lenient = false);

// Partitions samples by verb/antecedent-head agreement. Order within each
// list follows the input.
FilterResult FilterSamples(const std::vector<AzpSample> &samples,
                           const MorphLexicon &lexicon, bool lenient = false);

}  // namespace azp

#endif  // AZP_MORPH_H_
