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

#include "azp/subject.h"

#include <algorithm>
#include <set>

#include "absl/strings/str_cat.h"
#include "azp/normalize.h"

namespace azp {

namespace {

bool IsSubjectLabel(const std::string &deprel) {
  static const std::set<std::string> *labels = new std::set<std::string>{
      "sbj", "SBJ", "subj", "SUBJ", "nsubj", "nsubj:pass", "csubj"};
  return labels->count(deprel) > 0;
}

// Token range covered by `root` and all of its dependents.
TokenSpan Subtree(const Sentence &sentence, int root) {
  std::vector<bool> inside(sentence.size(), false);
  inside[root] = true;
  // Heads may point forwards, so iterate to a fixed point.
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < sentence.size(); ++i) {
      int head = sentence.tokens[i].head;
      if (!inside[i] && head >= 0 && inside[head]) {
        inside[i] = true;
        changed = true;
      }
    }
  }
  TokenSpan span{root, root + 1};
  for (int i = 0; i < sentence.size(); ++i) {
    if (inside[i]) {
      span.start = std::min(span.start, i);
      span.end = std::max(span.end, i + 1);
    }
  }
  return span;
}

}  // namespace

absl::StatusOr<std::optional<TokenSpan>> FindSubject(
    const Sentence &sentence, int verb_index, const MorphLexicon &lexicon) {
  if (verb_index < 0 || verb_index >= sentence.size() ||
      !Tagset::IsVerb(sentence.tokens[verb_index].pos)) {
    return absl::FailedPreconditionError(
        absl::StrCat("token ", verb_index, " is not a verb"));
  }

  if (sentence.HasDependencies()) {
    for (const Token &token : sentence.tokens) {
      if (token.head == verb_index && IsSubjectLabel(token.deprel)) {
        TokenSpan span = Subtree(sentence, token.index);
        if (span.Contains(verb_index)) return std::optional<TokenSpan>();
        return std::optional<TokenSpan>(span);
      }
    }
    return std::optional<TokenSpan>();
  }

  const MorphFeatures verb =
      Analyze(sentence.tokens[verb_index], lexicon);
  int i = verb_index + 1;
  while (i < sentence.size()) {
    const std::string &pos = sentence.tokens[i].pos;
    if (Tagset::IsPreposition(pos) || Tagset::IsVerb(pos)) break;
    if (!Tagset::IsNominal(pos)) {
      ++i;
      continue;
    }
    int end = i + 1;
    if (!Tagset::IsPronoun(pos)) {
      while (end < sentence.size() &&
             Tagset::IsNoun(sentence.tokens[end].pos)) {
        ++end;
      }
    }
    if (Agrees(verb, Analyze(sentence.tokens[end - 1], lexicon))) {
      return std::optional<TokenSpan>(TokenSpan{i, end});
    }
    i = end;
  }
  return std::optional<TokenSpan>();
}

absl::StatusOr<Sentence> RemoveSubject(const Sentence &sentence,
                                       const TokenSpan &span) {
  if (span.empty() || span.start < 0 || span.end > sentence.size()) {
    return absl::OutOfRangeError(absl::StrCat(
        "span [", span.start, ", ", span.end, ") invalid for sentence of ",
        sentence.size(), " tokens"));
  }
  const int length = span.length();
  Sentence out;
  for (const Token &token : sentence.tokens) {
    if (span.Contains(token.index)) continue;
    Token copy = token;
    if (copy.head >= span.end) {
      copy.head -= length;
    } else if (span.Contains(copy.head)) {
      copy.head = -1;
    }
    out.tokens.push_back(std::move(copy));
  }
  for (int gap : sentence.azp_gaps) {
    if (gap <= span.start) {
      out.azp_gaps.push_back(gap);
    } else if (gap >= span.end) {
      out.azp_gaps.push_back(gap - length);
    } else {
      out.azp_gaps.push_back(span.start);
    }
  }
  out.azp_gaps.push_back(span.start);
  out.Canonicalize();
  return out;
}

absl::StatusOr<Sentence> InsertAtGap(const Sentence &sentence, int gap,
                                     const std::vector<Token> &tokens) {
  if (gap < 0 || gap > sentence.size()) {
    return absl::OutOfRangeError(absl::StrCat("gap ", gap, " out of range"));
  }
  const int length = static_cast<int>(tokens.size());
  Sentence out;
  for (const Token &token : sentence.tokens) {
    Token copy = token;
    if (copy.head >= gap) copy.head += length;
    out.tokens.push_back(std::move(copy));
  }
  out.tokens.insert(out.tokens.begin() + gap, tokens.begin(), tokens.end());
  for (int g : sentence.azp_gaps) {
    if (g == gap) continue;
    out.azp_gaps.push_back(g > gap ? g + length : g);
  }
  out.Canonicalize();
  return out;
}

std::optional<TokenSpan> LocateTitle(const std::string &title,
                                     const Sentence &first_sentence) {
  // Drop a disambiguation suffix such as "باريس (مدينة)".
  std::string bare = title.substr(0, title.find('('));
  std::vector<std::string> needle = Tokenize(NormalizeText(bare));
  if (needle.empty()) return std::nullopt;
  std::vector<std::string> hay;
  for (const Token &token : first_sentence.tokens) {
    hay.push_back(NormalizeText(token.surface));
  }
  auto it = std::search(hay.begin(), hay.end(), needle.begin(), needle.end());
  if (it != hay.end()) {
    int start = static_cast<int>(it - hay.begin());
    return TokenSpan{start, start + static_cast<int>(needle.size())};
  }
  for (const std::string &word : needle) {
    for (int i = 0; i < first_sentence.size(); ++i) {
      if (hay[i] == word && Tagset::IsNoun(first_sentence.tokens[i].pos)) {
        return TokenSpan{i, i + 1};
      }
    }
  }
  return std::nullopt;
}

absl::StatusOr<std::optional<AzpSample>> AssembleSample(
    const SummaryPage &page, int azp_sentence_index,
    const Sentence &azp_sentence, int gap_index, int verb_index,
    Method method, const MorphLexicon &lexicon, const std::string &corpus_id) {
  if (azp_sentence_index < 1) {
    return absl::FailedPreconditionError(
        "the first sentence holds the antecedent and cannot carry the AZP");
  }
  if (page.sentences.empty()) {
    return absl::InvalidArgumentError("page has no sentences");
  }
  std::optional<TokenSpan> span = LocateTitle(page.title, page.sentences[0]);
  if (!span) return std::optional<AzpSample>();

  AzpSample sample;
  sample.method = method;
  sample.antecedent_sentence = page.sentences[0];
  sample.antecedent_sentence.azp_gaps.clear();
  sample.azp_sentence = azp_sentence;
  sample.azp_sentence.azp_gaps = {gap_index};
  sample.gap_index = gap_index;
  sample.verb_index = verb_index;
  sample.antecedent_span = *span;
  MorphFeatures head = Analyze(
      sample.antecedent_sentence.tokens[AntecedentHead(sample)], lexicon);
  sample.features.number = head.number;
  sample.features.gender = head.gender;
  sample.source = SampleSource{corpus_id, page.title, azp_sentence_index};
  sample.id = absl::StrCat(corpus_id, ":", page.title, ":",
                           azp_sentence_index, ":", MethodName(method), ":",
                           gap_index);
  absl::Status valid = ValidateSample(sample);
  if (!valid.ok()) return valid;
  return std::optional<AzpSample>(std::move(sample));
}

int GoverningVerb(const Sentence &sentence, int gap) {
  for (int i = std::min(gap, sentence.size()) - 1; i >= 0; --i) {
    if (Tagset::IsVerb(sentence.tokens[i].pos)) return i;
  }
  for (int i = gap; i < sentence.size(); ++i) {
    if (Tagset::IsVerb(sentence.tokens[i].pos)) return i;
  }
  return -1;
}

absl::StatusOr<std::vector<AzpSample>> DetectPage(
    const SummaryPage &page, const std::vector<PosPattern> &patterns,
    const MorphLexicon &lexicon, const DetectOptions &options,
    DetectStats *stats) {
  std::vector<AzpSample> samples;
  if (stats != nullptr) ++stats->pages;
  if (page.sentences.empty() || !LocateTitle(page.title, page.sentences[0])) {
    if (stats != nullptr) ++stats->pages_without_title;
    return samples;
  }
  auto emit = [&](int index, const Sentence &sentence, int gap,
                  int verb, Method method) -> absl::Status {
    absl::StatusOr<std::optional<AzpSample>> sample = AssembleSample(
        page, index, sentence, gap, verb, method, lexicon, options.corpus_id);
    if (!sample.ok()) return sample.status();
    if (*sample) samples.push_back(**std::move(sample));
    return absl::OkStatus();
  };

  for (int index = 1; index < static_cast<int>(page.sentences.size());
       ++index) {
    Sentence sentence = page.sentences[index];
    sentence.azp_gaps.clear();
    if (options.onp) {
      for (int gap : MatchPatterns(patterns, sentence)) {
        int verb = GoverningVerb(sentence, gap);
        if (verb < 0) continue;
        if (stats != nullptr) ++stats->onp_matches;
        if (absl::Status s = emit(index, sentence, gap, verb, Method::kOnp);
            !s.ok()) {
          return s;
        }
      }
    }
    if (options.rsm) {
      for (int verb = 0; verb < sentence.size(); ++verb) {
        if (!Tagset::IsVerb(sentence.tokens[verb].pos)) continue;
        absl::StatusOr<std::optional<TokenSpan>> subject =
            FindSubject(sentence, verb, lexicon);
        if (!subject.ok()) return subject.status();
        if (!*subject) continue;
        absl::StatusOr<Sentence> removed = RemoveSubject(sentence, **subject);
        if (!removed.ok()) return removed.status();
        int new_verb =
            verb < (*subject)->start ? verb : verb - (*subject)->length();
        if (stats != nullptr) ++stats->rsm_subjects;
        if (absl::Status s = emit(index, *removed, (*subject)->start,
                                  new_verb, Method::kRsm);
            !s.ok()) {
          return s;
        }
      }
    }
  }
  return samples;
}

}  // namespace azp
