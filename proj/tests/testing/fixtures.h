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

#ifndef AZP_TESTS_TESTING_FIXTURES_H_
#define AZP_TESTS_TESTING_FIXTURES_H_

#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "absl/strings/str_split.h"
#include "azp/corpus.h"
#include "azp/morph.h"
#include "testing/generators.h"

namespace azp::testing {

inline const MorphLexicon &SeedLexicon() {
  static const MorphLexicon *lexicon = [] {
    absl::StatusOr<MorphLexicon> loaded =
        MorphLexicon::FromFile(DataPath("lexicon/seed.tsv"));
    if (!loaded.ok()) std::abort();
    return new MorphLexicon(*std::move(loaded));
  }();
  return *lexicon;
}

// Sound-paradigm words shipped with the lexicon, as (surface, POS) tokens.
inline std::vector<Token> ParadigmWords() {
  std::vector<Token> words;
  absl::StatusOr<std::string> text =
      ReadFileToString(DataPath("lexicon/paradigms.tsv"));
  if (!text.ok()) return words;
  for (absl::string_view line : absl::StrSplit(*text, '\n')) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols = absl::StrSplit(line, '\t');
    if (cols.size() != 2) continue;
    Token token;
    token.surface = cols[0];
    token.pos = cols[1];
    words.push_back(token);
  }
  return words;
}

// Verb-initial sample: antecedent sentence `ant` (first token is the
// mention), AZP sentence `azp` with the verb first and the gap after it.
inline AzpSample MakeSample(const std::vector<std::string> &ant,
                            const std::vector<std::string> &ant_pos,
                            const std::vector<std::string> &azp,
                            const std::vector<std::string> &azp_pos,
                            int span_end = 1) {
  AzpSample sample;
  sample.id = "test:1";
  sample.method = Method::kOnp;
  sample.antecedent_sentence = MakeSentence(ant, ant_pos);
  sample.azp_sentence = MakeSentence(azp, azp_pos, {1});
  sample.gap_index = 1;
  sample.verb_index = 0;
  sample.antecedent_span = {0, span_end};
  sample.source = {"test", "doc", 1};
  return sample;
}

}  // namespace azp::testing

#endif  // AZP_TESTS_TESTING_FIXTURES_H_
