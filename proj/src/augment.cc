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

#include "azp/augment.h"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

#include "absl/strings/str_cat.h"
#include "absl/strings/strip.h"
#include "azp/normalize.h"
#include "azp/subject.h"
#include "azp/utf8.h"

namespace azp {

absl::StatusOr<std::vector<AzpSample>> McmAugment(const AzpSample &sample,
                                                  MaskedLmProvider &lm,
                                                  int top_k,
                                                  const MorphLexicon &lexicon) {
  if (top_k < 1) return absl::InvalidArgumentError("top_k must be at least 1");
  const int head = AntecedentHead(sample);
  MaskRequest request;
  request.tokens = sample.antecedent_sentence.Surfaces();
  request.mask_index = head;
  request.top_k = top_k;
  absl::StatusOr<MaskResponse> response = lm.MaskTopK(request);
  if (!response.ok()) return response.status();

  const std::string original =
      NormalizeText(sample.antecedent_sentence.tokens[head].surface);
  std::set<std::string> seen = {original};
  std::vector<AzpSample> out;
  for (const MaskCandidate &candidate : response->candidates) {
    std::string replacement = NormalizeText(candidate.token);
    // Only single-token replacements keep the span geometry intact.
    if (utf8::SplitWhitespace(replacement).size() != 1) continue;
    if (!seen.insert(replacement).second) continue;
    AzpSample generated = sample;
    generated.method = Method::kMcm;
    generated.antecedent_sentence.tokens[head].surface = replacement;
    MorphFeatures features =
        Analyze(generated.antecedent_sentence.tokens[head], lexicon);
    generated.features.number = features.number;
    generated.features.gender = features.gender;
    generated.id = absl::StrCat(sample.id, "/mcm", out.size());
    out.push_back(std::move(generated));
    if (static_cast<int>(out.size()) >= top_k) break;
  }
  return out;
}

namespace {

// Index of the token matching `wanted`, preferring the one nearest to
// `near`. -1 when none matches.
template <typename Pred>
int NearestMatch(const Sentence &sentence, int near, Pred matches) {
  int best = -1;
  for (int i = 0; i < sentence.size(); ++i) {
    if (!matches(sentence.tokens[i])) continue;
    if (best < 0 || std::abs(i - near) < std::abs(best - near)) best = i;
  }
  return best;
}

// Drops a leading wa/fa proclitic when a stem of two letters remains.
bool StripConjunction(std::string *surface) {
  for (absl::string_view conj : {"\u0648", "\u0641"}) {
    absl::string_view rest = *surface;
    if (absl::ConsumePrefix(&rest, conj) && utf8::Length(rest) >= 2) {
      *surface = std::string(rest);
      return true;
    }
  }
  return false;
}

}  // namespace

absl::StatusOr<std::optional<AzpSample>> BtAugment(
    const AzpSample &sample, TranslationProvider &translator,
    TaggingProvider &tagger, const MorphLexicon &lexicon,
    const BackTranslationOptions &options) {
  const Sentence &original = sample.azp_sentence;
  absl::StatusOr<TranslateResponse> pivot = translator.Translate(
      {original.Text(), options.source_lang, options.pivot_lang});
  if (!pivot.ok()) return pivot.status();
  if (absl::StripAsciiWhitespace(pivot->text).empty()) {
    return std::optional<AzpSample>();
  }
  absl::StatusOr<TranslateResponse> back = translator.Translate(
      {pivot->text, options.pivot_lang, options.source_lang});
  if (!back.ok()) return back.status();

  std::vector<std::string> surfaces = Tokenize(NormalizeText(back->text));
  if (surfaces.empty()) return std::optional<AzpSample>();
  absl::StatusOr<TagResponse> tags = tagger.Tag({surfaces});
  if (!tags.ok()) return tags.status();

  // Words that survived the round trip keep their original tags.
  std::map<std::string, std::string> known_tags;
  std::multiset<std::string> original_words;
  for (const Token &token : original.tokens) {
    std::string key = NormalizeText(token.surface);
    known_tags.emplace(key, token.pos);
    original_words.insert(key);
  }
  std::vector<std::string> pos = tags->tags;
  for (size_t i = 0; i < surfaces.size(); ++i) {
    auto it = known_tags.find(surfaces[i]);
    if (it != known_tags.end()) pos[i] = it->second;
  }
  Sentence result = MakeSentence(surfaces, pos);

  const Token &verb = original.tokens[sample.verb_index];
  const std::string verb_key = NormalizeText(verb.surface);
  int verb_index = NearestMatch(result, sample.verb_index,
                                [&](const Token &t) {
                                  return t.surface == verb_key;
                                });
  if (verb_index < 0) {
    std::string lemma = Lemma(verb, lexicon);
    if (!lemma.empty()) {
      verb_index = NearestMatch(result, sample.verb_index,
                                [&](const Token &t) {
                                  if (!Tagset::IsVerb(t.pos)) return false;
                                  if (Lemma(t, lexicon) == lemma) return true;
                                  Token bare = t;
                                  return StripConjunction(&bare.surface) &&
                                         Lemma(bare, lexicon) == lemma;
                                });
    }
  }
  if (verb_index < 0) return std::optional<AzpSample>();
  result.tokens[verb_index].pos = verb.pos;

  int gap = -1;
  absl::StatusOr<std::optional<TokenSpan>> subject =
      FindSubject(result, verb_index, lexicon);
  if (!subject.ok()) return subject.status();
  if (*subject) {
    std::multiset<std::string> pool = original_words;
    bool reintroduced = false;
    for (int i = (*subject)->start; i < (*subject)->end; ++i) {
      auto it = pool.find(result.tokens[i].surface);
      if (it == pool.end()) {
        reintroduced = true;
      } else {
        pool.erase(it);
      }
    }
    if (reintroduced) {
      absl::StatusOr<Sentence> removed = RemoveSubject(result, **subject);
      if (!removed.ok()) return removed.status();
      if (verb_index >= (*subject)->end) verb_index -= (*subject)->length();
      gap = (*subject)->start;
      result = *std::move(removed);
    }
  }
  if (gap < 0) {
    gap = std::clamp(verb_index + (sample.gap_index - sample.verb_index), 0,
                     result.size());
  }
  result.azp_gaps = {gap};

  AzpSample generated = sample;
  generated.method = Method::kBt;
  generated.id = absl::StrCat(sample.id, "/bt");
  generated.azp_sentence = std::move(result);
  generated.gap_index = gap;
  generated.verb_index = verb_index;
  if (absl::Status s = ValidateSample(generated); !s.ok()) return s;
  return std::optional<AzpSample>(std::move(generated));
}

std::vector<Number> CsaTargets(Number current) {
  std::vector<Number> targets;
  if (current == Number::kUnknown) return targets;
  for (Number n : {Number::kSingular, Number::kDual, Number::kPlural}) {
    if (n != current) targets.push_back(n);
  }
  return targets;
}

absl::StatusOr<std::optional<AzpSample>> CsaAugment(
    const AzpSample &sample, Number target, const MorphLexicon &lexicon) {
  if (target == Number::kUnknown) {
    return absl::InvalidArgumentError("target number must be known");
  }
  if (target == sample.features.number) {
    return absl::FailedPreconditionError(absl::StrCat(
        "sample is already ", NumberName(target)));
  }
  const Token &verb = sample.azp_sentence.tokens[sample.verb_index];
  const int head = AntecedentHead(sample);
  const Token &noun = sample.antecedent_sentence.tokens[head];
  MorphFeatures noun_features = Analyze(noun, lexicon);

  std::optional<Token> new_verb =
      InflectVerb(verb, Analyze(verb, lexicon), target, lexicon);
  if (!new_verb) return std::optional<AzpSample>();
  std::optional<Token> new_noun =
      InflectNoun(noun, noun_features, target, lexicon);
  if (!new_noun) return std::optional<AzpSample>();

  AzpSample generated = sample;
  generated.method = Method::kCsa;
  generated.id = absl::StrCat(sample.id, "/csa-", NumberName(target));
  generated.azp_sentence.tokens[sample.verb_index] = *new_verb;
  generated.antecedent_sentence.tokens[head] = *new_noun;
  generated.features.number = target;
  generated.features.gender = noun_features.gender;
  return std::optional<AzpSample>(std::move(generated));
}

}  // namespace azp
