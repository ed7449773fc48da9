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

#include <memory>
#include <string>
#include <vector>

#include "azp/normalize.h"
#include "gtest/gtest.h"
#include "testing/fixtures.h"
#include "testing/generators.h"

namespace azp {
namespace {

using testing::FixturePath;
using testing::MakeSample;
using testing::SeedLexicon;

AzpSample ParisSample() {
  AzpSample sample = MakeSample(
      {"باريس", "هي", "عاصمة", "فرنسا", "واكبر", "مدنها", "."},
      {"NNP", "PRP", "NN", "NNP", "JJR", "NNS", "PUNC"},
      {"تقع", "في", "شمال", "البلاد", "على", "نهر", "السين", "."},
      {"VBP", "IN", "NN", "DT+NN", "IN", "NN", "NNP", "PUNC"});
  sample.features.number = Number::kSingular;
  sample.features.gender = Gender::kFeminine;
  return sample;
}

std::unique_ptr<StubMaskedLm> FixtureLm() {
  absl::StatusOr<std::unique_ptr<StubMaskedLm>> lm =
      StubMaskedLm::FromFile(FixturePath("mask_lm.jsonl"));
  EXPECT_TRUE(lm.ok()) << lm.status();
  return *std::move(lm);
}

std::unique_ptr<StubTagger> FixtureTagger() {
  absl::StatusOr<std::unique_ptr<StubTagger>> tagger =
      StubTagger::FromFile(FixturePath("tagger.tsv"));
  EXPECT_TRUE(tagger.ok()) << tagger.status();
  return *std::move(tagger);
}

std::unique_ptr<StubTranslator> Translator(const std::string &name) {
  absl::StatusOr<std::unique_ptr<StubTranslator>> translator =
      StubTranslator::FromFile(FixturePath(name));
  EXPECT_TRUE(translator.ok()) << translator.status();
  return *std::move(translator);
}

TEST(McmTest, SkipsOriginalAndMultiToken) {
  std::unique_ptr<StubMaskedLm> lm = FixtureLm();
  absl::StatusOr<std::vector<AzpSample>> out =
      McmAugment(ParisSample(), *lm, 5, SeedLexicon());
  ASSERT_TRUE(out.ok()) << out.status();
  std::vector<std::string> heads;
  for (const AzpSample &s : *out) {
    EXPECT_EQ(s.method, Method::kMcm);
    EXPECT_TRUE(ValidateSample(s).ok());
    EXPECT_EQ(s.azp_sentence, ParisSample().azp_sentence);
    heads.push_back(s.antecedent_sentence.tokens[0].surface);
  }
  EXPECT_EQ(heads, (std::vector<std::string>{"لندن", "القاهرة", "العراق"}));
  EXPECT_EQ((*out)[2].features.gender, Gender::kMasculine);
  EXPECT_EQ((*out)[0].id, "test:1/mcm0");
  EXPECT_EQ(lm->calls(), 1);
}

TEST(McmTest, RespectsTopK) {
  std::unique_ptr<StubMaskedLm> lm = FixtureLm();
  absl::StatusOr<std::vector<AzpSample>> out =
      McmAugment(ParisSample(), *lm, 2, SeedLexicon());
  ASSERT_TRUE(out.ok());
  // The provider returns two candidates, one of which is the original.
  EXPECT_EQ(out->size(), 1u);
  EXPECT_FALSE(McmAugment(ParisSample(), *lm, 0, SeedLexicon()).ok());
}

TEST(McmTest, DuplicatesCollapse) {
  absl::StatusOr<std::unique_ptr<StubMaskedLm>> lm = StubMaskedLm::FromString(
      R"({"context": "[MASK] هي عاصمة فرنسا واكبر مدنها .", "candidates": [["لندن", 0.5], ["لُندن", 0.3], ["روما", 0.1]]})");
  ASSERT_TRUE(lm.ok());
  absl::StatusOr<std::vector<AzpSample>> out =
      McmAugment(ParisSample(), **lm, 5, SeedLexicon());
  ASSERT_TRUE(out.ok());
  ASSERT_EQ(out->size(), 2u);
  EXPECT_EQ((*out)[1].antecedent_sentence.tokens[0].surface, "روما");
}

TEST(McmTest, UnknownContextYieldsNothing) {
  std::unique_ptr<StubMaskedLm> lm = FixtureLm();
  AzpSample sample = ParisSample();
  sample.antecedent_sentence.tokens[2].surface = "مدينة";
  absl::StatusOr<std::vector<AzpSample>> out =
      McmAugment(sample, *lm, 5, SeedLexicon());
  ASSERT_TRUE(out.ok());
  EXPECT_TRUE(out->empty());
}

TEST(BtTest, IdentityKeepsSentence) {
  std::unique_ptr<StubTranslator> translator = StubTranslator::Identity();
  std::unique_ptr<StubTagger> tagger = FixtureTagger();
  absl::StatusOr<std::optional<AzpSample>> out =
      BtAugment(ParisSample(), *translator, *tagger, SeedLexicon());
  ASSERT_TRUE(out.ok()) << out.status();
  ASSERT_TRUE(out->has_value());
  const AzpSample &s = **out;
  EXPECT_EQ(s.method, Method::kBt);
  EXPECT_EQ(s.azp_sentence, ParisSample().azp_sentence);
  EXPECT_EQ(s.gap_index, 1);
  EXPECT_EQ(s.verb_index, 0);
  EXPECT_EQ(translator->calls(), 2);
}

TEST(BtTest, LostVerbDropsSample) {
  std::unique_ptr<StubTranslator> translator = Translator("bt_verb_drop.jsonl");
  std::unique_ptr<StubTagger> tagger = FixtureTagger();
  absl::StatusOr<std::optional<AzpSample>> out =
      BtAugment(ParisSample(), *translator, *tagger, SeedLexicon());
  ASSERT_TRUE(out.ok()) << out.status();
  EXPECT_FALSE(out->has_value());
}

TEST(BtTest, ReintroducedSubjectBecomesGap) {
  std::unique_ptr<StubTranslator> translator =
      Translator("bt_subject_insert.jsonl");
  std::unique_ptr<StubTagger> tagger = FixtureTagger();
  absl::StatusOr<std::optional<AzpSample>> out =
      BtAugment(ParisSample(), *translator, *tagger, SeedLexicon());
  ASSERT_TRUE(out.ok()) << out.status();
  ASSERT_TRUE(out->has_value());
  const AzpSample &s = **out;
  EXPECT_EQ(s.azp_sentence.Text(), "تقع في شمال البلاد على نهر السين .");
  EXPECT_EQ(s.gap_index, 1);
  EXPECT_EQ(s.azp_sentence.azp_gaps, std::vector<int>{1});
  EXPECT_EQ(s.verb_index, 0);
}

TEST(BtTest, ParaphraseRelocatesVerbByStem) {
  std::unique_ptr<StubTranslator> translator = Translator("bt_paraphrase.jsonl");
  absl::StatusOr<std::unique_ptr<StubTagger>> tagger =
      StubTagger::FromString("وتقع\tVBP\nفي\tIN\nعلى\tIN\nالشمال\tDT+NN\n"
                             "السين\tNNP\n.\tPUNC\n");
  ASSERT_TRUE(tagger.ok());
  absl::StatusOr<std::optional<AzpSample>> out =
      BtAugment(ParisSample(), *translator, **tagger, SeedLexicon());
  ASSERT_TRUE(out.ok()) << out.status();
  ASSERT_TRUE(out->has_value());
  const AzpSample &s = **out;
  EXPECT_EQ(s.azp_sentence.Text(), "وتقع في الشمال على نهر السين .");
  EXPECT_EQ(s.verb_index, 0);
  EXPECT_EQ(s.gap_index, 1);
  EXPECT_EQ(s.azp_sentence.tokens[0].pos, "VBP");
  EXPECT_EQ(s.azp_sentence.tokens[2].pos, "DT+NN");
}

TEST(BtTest, UntaggedParaphraseDropsSample) {
  std::unique_ptr<StubTranslator> translator = Translator("bt_paraphrase.jsonl");
  std::unique_ptr<StubTagger> tagger = FixtureTagger();
  absl::StatusOr<std::optional<AzpSample>> out =
      BtAugment(ParisSample(), *translator, *tagger, SeedLexicon());
  ASSERT_TRUE(out.ok()) << out.status();
  EXPECT_FALSE(out->has_value());
}

TEST(BtTest, EmptyPivotDropsSample) {
  absl::StatusOr<std::unique_ptr<StubTranslator>> translator =
      StubTranslator::FromString(
          R"({"source": "ar", "target": "en", "text": "تقع في شمال البلاد على نهر السين .", "translation": " "})");
  ASSERT_TRUE(translator.ok()) << translator.status();
  std::unique_ptr<StubTagger> tagger = FixtureTagger();
  absl::StatusOr<std::optional<AzpSample>> out =
      BtAugment(ParisSample(), **translator, *tagger, SeedLexicon());
  ASSERT_TRUE(out.ok()) << out.status();
  EXPECT_FALSE(out->has_value());
}

AzpSample QueenSample() {
  AzpSample sample = MakeSample({"الملكة", "هي", "زوجة", "الملك", "."},
                                {"DT+NN", "PRP", "NN", "DT+NN", "PUNC"},
                                {"تحكم", "البلاد", "."}, {"VBP", "DT+NN", "PUNC"});
  sample.features.number = Number::kSingular;
  sample.features.gender = Gender::kFeminine;
  return sample;
}

TEST(CsaTest, DualAndPlural) {
  const MorphLexicon &lexicon = SeedLexicon();
  absl::StatusOr<std::optional<AzpSample>> dual =
      CsaAugment(QueenSample(), Number::kDual, lexicon);
  ASSERT_TRUE(dual.ok()) << dual.status();
  ASSERT_TRUE(dual->has_value());
  EXPECT_EQ((*dual)->antecedent_sentence.tokens[0].surface, "الملكتان");
  const Token &dual_verb = (*dual)->azp_sentence.tokens[0];
  MorphFeatures dual_features = Analyze(dual_verb, lexicon);
  EXPECT_EQ(dual_features.number, Number::kDual);
  EXPECT_EQ(dual_features.gender, Gender::kFeminine);
  EXPECT_EQ((*dual)->features.number, Number::kDual);
  EXPECT_EQ((*dual)->id, "test:1/csa-dual");

  absl::StatusOr<std::optional<AzpSample>> plural =
      CsaAugment(QueenSample(), Number::kPlural, lexicon);
  ASSERT_TRUE(plural.ok() && plural->has_value());
  EXPECT_EQ((*plural)->antecedent_sentence.tokens[0].surface, "الملكات");
  EXPECT_EQ(Analyze((*plural)->azp_sentence.tokens[0], lexicon).number,
            Number::kPlural);
  EXPECT_FALSE(CheckAgreement(**plural, lexicon).has_value());
}

TEST(CsaTest, ContractErrors) {
  EXPECT_EQ(CsaAugment(QueenSample(), Number::kSingular, SeedLexicon())
                .status()
                .code(),
            absl::StatusCode::kFailedPrecondition);
  EXPECT_FALSE(CsaAugment(QueenSample(), Number::kUnknown, SeedLexicon()).ok());
}

TEST(CsaTest, ProperNounsAreOutsideRules) {
  absl::StatusOr<std::optional<AzpSample>> out =
      CsaAugment(ParisSample(), Number::kDual, SeedLexicon());
  ASSERT_TRUE(out.ok());
  EXPECT_FALSE(out->has_value());
}

TEST(CsaTest, Targets) {
  EXPECT_EQ(CsaTargets(Number::kSingular),
            (std::vector<Number>{Number::kDual, Number::kPlural}));
  EXPECT_EQ(CsaTargets(Number::kDual),
            (std::vector<Number>{Number::kSingular, Number::kPlural}));
  EXPECT_TRUE(CsaTargets(Number::kUnknown).empty());
}

}  // namespace
}  // namespace azp
