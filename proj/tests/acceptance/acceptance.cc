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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "absl/strings/match.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_split.h"
#include "azp/augment.h"
#include "azp/eval.h"
#include "azp/morph.h"
#include "azp/normalize.h"
#include "azp/patterns.h"
#include "azp/providers.h"
#include "azp/subject.h"
#include "testing/fixtures.h"
#include "testing/generators.h"
#include "testing/oracles.h"
#include "testing/published.h"
#include "testing/run_fixture.h"
#include "testing/vso.h"

namespace azp {
namespace {

using testing::FixturePath;
using testing::SeedLexicon;

// Empty detail means the check held.
using Check = std::function<std::string()>;

struct Criterion {
  const char *name;
  double budget_seconds;
  Check check;
  void (*note)() = nullptr;
};

std::string Normalization() {
  if (NormalizeText("لا بأس أن تُقالَ") != "لا باس ان تقال") {
    return "golden example differs";
  }
  std::mt19937 rng(2026);
  for (int i = 0; i < 10000; ++i) {
    std::string text = testing::RandomArabicString(rng, 48);
    std::string once = NormalizeText(text);
    if (NormalizeText(once) != once) return "not idempotent on fuzz input";
  }
  return "";
}

std::string F1Arithmetic() {
  std::string misses;
  for (const testing::PublishedRow &row : testing::kPublishedRows) {
    double f1 = F1FromPrecisionRecall(row.p, row.r);
    if (std::fabs(f1 - row.f1) > 0.05 + 1e-9) {
      absl::StrAppend(&misses, misses.empty() ? "" : "; ", row.table, " ",
                      row.setting, absl::StrFormat(" %.1f/%.1f -> %.2f vs %.1f",
                                                   row.p, row.r, f1, row.f1));
    }
  }
  return misses;
}

// Not a criterion: the same rows with printed P and R read as rounded.
void F1Interval() {
  int consistent = 0;
  for (const testing::PublishedRow &row : testing::kPublishedRows) {
    double lo = F1FromPrecisionRecall(row.p - 0.05, row.r - 0.05);
    double hi = F1FromPrecisionRecall(row.p + 0.05, row.r + 0.05);
    if (lo <= row.f1 + 0.05 && hi >= row.f1 - 0.05) ++consistent;
  }
  std::printf("INFO  F1 rows consistent once P and R carry rounding: %d/%zu\n",
              consistent, std::size(testing::kPublishedRows));
}

std::string TableTotal() {
  MethodStats stats;
  const Method methods[] = {Method::kOnp, Method::kRsm, Method::kMcm,
                            Method::kBt, Method::kCsa};
  std::vector<AzpSample> samples;
  for (int m = 0; m < 5; ++m) {
    for (int64_t i = 0; i < testing::kPublishedCounts[m]; ++i) {
      AzpSample sample;
      sample.method = methods[m];
      samples.push_back(sample);
    }
  }
  std::string table = RenderStats(CountByMethod(samples));
  std::string total_line;
  for (absl::string_view line : absl::StrSplit(table, '\n')) {
    if (absl::StartsWith(line, "total")) total_line = std::string(line);
  }
  if (!absl::EndsWith(total_line, testing::kPublishedTotal)) {
    return "total row: '" + total_line + "'";
  }
  return "";
}

std::vector<Sentence> RandomCorpus(std::mt19937 &rng, int max_windows) {
  static const std::vector<std::string> kTags = {"NN", "VBD", "VBP", "IN",
                                                 "PRP", "DT+NN"};
  std::vector<Sentence> corpus;
  int windows = 0;
  while (windows < max_windows - 4 && testing::Uniform(rng, 0, 40) != 0) {
    Sentence s = testing::RandomSentence(rng, kTags, 7, 4);
    windows += static_cast<int>(s.azp_gaps.size());
    corpus.push_back(s);
  }
  corpus.push_back(MakeSentence({"x", "y"}, {"VBD", "IN"}, {1}));
  return corpus;
}

std::string TTestOracle() {
  std::vector<PosPattern> windows;
  PosPattern hit{{"A", "B"}, {"C", std::string(kEndTag)}};
  for (int i = 0; i < 3; ++i) windows.push_back(hit);
  for (int i = 0; i < 97; ++i) windows.push_back({{"X", "X"}, {"X", "X"}});
  UnigramModel unigrams;
  unigrams.Add("A", 10);
  unigrams.Add("B", 10);
  unigrams.Add("C", 30);
  unigrams.Add("X", 50);
  absl::StatusOr<std::vector<PatternStats>> hand =
      ScorePatterns(windows, unigrams);
  if (!hand.ok()) return std::string(hand.status().message());
  bool found = false;
  for (const PatternStats &s : *hand) {
    if (s.pattern != hit) continue;
    found = true;
    if (std::fabs(s.mu - 0.003) > 1e-12 || std::fabs(s.t - 1.583) > 1e-3) {
      return absl::StrFormat("hand case: mu=%g t=%.4f", s.mu, s.t);
    }
  }
  if (!found) return "hand case pattern missing";

  std::mt19937 rng(5150);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Sentence> corpus = RandomCorpus(rng, 500);
    int window = testing::Uniform(rng, 1, 2);
    UnigramModel model;
    model.AddCorpus(corpus);
    absl::StatusOr<std::vector<PatternStats>> stats =
        ScorePatterns(ExtractWindows(corpus, window), model);
    if (!stats.ok()) return std::string(stats.status().message());
    std::vector<testing::OracleStat> oracle =
        testing::OracleScore(corpus, window);
    if (stats->size() != oracle.size()) {
      return absl::StrCat("corpus ", trial, ": pattern count differs");
    }
    for (size_t i = 0; i < oracle.size(); ++i) {
      const PatternStats &s = (*stats)[i];
      bool same_t = std::isinf(oracle[i].t)
                        ? std::isinf(s.t)
                        : std::fabs(s.t - oracle[i].t) <= 1e-9;
      if (s.pattern.before != oracle[i].before ||
          s.pattern.after != oracle[i].after || s.count != oracle[i].count ||
          !same_t) {
        return absl::StrCat("corpus ", trial, ": rank ", i, " differs");
      }
    }
    int k = testing::Uniform(rng, 1, 10);
    std::vector<PosPattern> top = SelectTop(*stats, k);
    if (top.size() != std::min<size_t>(k, oracle.size())) {
      return absl::StrCat("corpus ", trial, ": top-k size");
    }
    for (size_t i = 0; i < top.size(); ++i) {
      if (top[i].before != oracle[i].before || top[i].after != oracle[i].after) {
        return absl::StrCat("corpus ", trial, ": top-k order");
      }
    }
  }
  return "";
}

std::string MatchOracle() {
  std::mt19937 rng(8086);
  static const std::vector<std::string> kTags = {"NN", "VBD", "IN", "PRP"};
  for (int trial = 0; trial < 1000; ++trial) {
    Sentence s = testing::RandomSentence(rng, kTags, 9, 0);
    std::vector<PosPattern> patterns;
    std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>>
        raw;
    int count = testing::Uniform(rng, 0, 6);
    for (int i = 0; i < count; ++i) {
      int w = testing::Uniform(rng, 1, 3);
      PosPattern p;
      if (testing::Uniform(rng, 0, 1)) {
        p = WindowAt(s, testing::Uniform(rng, 0, s.size()), w);
      } else {
        std::vector<std::string> all = kTags;
        all.push_back(std::string(kBeginTag));
        all.push_back(std::string(kEndTag));
        for (int j = 0; j < w; ++j) {
          p.before.push_back(testing::Pick(rng, all));
          p.after.push_back(testing::Pick(rng, all));
        }
      }
      patterns.push_back(p);
      raw.emplace_back(p.before, p.after);
    }
    if (MatchPatterns(patterns, s) != testing::OracleMatch(raw, s)) {
      return absl::StrCat("pair ", trial, ": ", s.Text());
    }
  }
  return "";
}

std::string RsmInverse() {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 1000; ++trial) {
    Sentence s = testing::RandomSentence(rng, testing::SmallTagset(), 10, 0,
                                         /*dependencies=*/false);
    int start = testing::Uniform(rng, 0, s.size() - 1);
    int end = testing::Uniform(rng, start + 1, s.size());
    for (int g = 0; g <= s.size(); ++g) {
      if ((g < start || g > end) && testing::Uniform(rng, 0, 3) == 0) {
        s.azp_gaps.push_back(g);
      }
    }
    s.Canonicalize();
    std::vector<Token> span(s.tokens.begin() + start, s.tokens.begin() + end);
    absl::StatusOr<Sentence> removed = RemoveSubject(s, {start, end});
    if (!removed.ok()) return std::string(removed.status().message());
    absl::StatusOr<Sentence> restored = InsertAtGap(*removed, start, span);
    if (!restored.ok() || *restored != s) {
      return absl::StrCat("sentence ", trial, " not restored: ", s.Text());
    }
  }
  testing::VsoGenerator generator(SeedLexicon());
  int recovered = 0;
  const int planted_total = 1000;
  std::string first_miss;
  for (int i = 0; i < planted_total; ++i) {
    testing::PlantedSentence planted = generator.Generate(rng);
    absl::StatusOr<std::optional<TokenSpan>> found =
        FindSubject(planted.sentence, planted.verb, SeedLexicon());
    if (found.ok() && *found == planted.subject) {
      ++recovered;
    } else if (first_miss.empty()) {
      first_miss = planted.sentence.Text();
    }
  }
  if (recovered != planted_total) {
    return absl::StrCat("planted subjects recovered ", recovered, "/",
                        planted_total, "; first miss: ", first_miss);
  }
  return "";
}

std::string MorphCoherence() {
  const MorphLexicon &lex = SeedLexicon();
  const Number kNumbers[] = {Number::kSingular, Number::kDual,
                             Number::kPlural};
  int checked = 0;
  // Lexicon inflection tables.
  for (const auto &[surface, entry] : lex.entries()) {
    for (const auto &[target, form] : entry.inflections) {
      Token word;
      word.surface = surface;
      word.pos = "NN";
      std::optional<Token> out = InflectNoun(word, entry.features, target, lex);
      if (!out) {
        word.pos = "VBD";
        out = InflectVerb(word, entry.features, target, lex);
      }
      if (!out) {
        return absl::StrCat(surface, " -> ", NumberName(target),
                            ": no form");
      }
      if (Analyze(*out, lex).number != target) {
        return absl::StrCat(surface, " -> ", out->surface,
                            " analyzed as wrong number");
      }
      ++checked;
    }
  }
  // Sound paradigms through the affix rules, and the CSA round trip.
  for (const Token &word : testing::ParadigmWords()) {
    const bool verb = Tagset::IsVerb(word.pos);
    MorphFeatures current = Analyze(word, lex);
    for (Number target : kNumbers) {
      std::optional<Token> out = verb ? InflectVerb(word, current, target, lex)
                                      : InflectNoun(word, current, target, lex);
      if (!out || Analyze(*out, lex).number != target) {
        return absl::StrCat(word.surface, " -> ", NumberName(target));
      }
      ++checked;
    }
    if (!verb) continue;
    AzpSample sample = testing::MakeSample({"الملكة"}, {"DT+NN"},
                                           {word.surface, "في"},
                                           {word.pos, "IN"});
    sample.features = Analyze(word, lex);
    // Pair the verb with a noun of its own gender so both sides inflect.
    if (sample.features.gender == Gender::kMasculine) {
      sample.antecedent_sentence.tokens[0].surface = "الملك";
    }
    absl::StatusOr<std::optional<AzpSample>> dual =
        CsaAugment(sample, Number::kDual, lex);
    if (!dual.ok() || !dual->has_value()) {
      return absl::StrCat("csa dual failed for ", word.surface);
    }
    absl::StatusOr<std::optional<AzpSample>> back =
        CsaAugment(**dual, Number::kSingular, lex);
    if (!back.ok() || !back->has_value()) {
      return absl::StrCat("csa singular failed for ", word.surface);
    }
    if ((*back)->azp_sentence != sample.azp_sentence ||
        (*back)->antecedent_sentence != sample.antecedent_sentence) {
      return absl::StrCat("csa round trip changed ", word.surface);
    }
  }
  if (checked == 0) return "nothing checked";
  return "";
}

std::string FilterPartition() {
  const MorphLexicon &lex = SeedLexicon();
  AzpSample student = testing::MakeSample({"الطالب", "يحب", "الرياضيات"},
                                          {"DT+NN", "VBP", "DT+NNS"},
                                          {"يدرس", "في", "الجامعة"},
                                          {"VBP", "IN", "DT+NN"});
  AzpSample students = student;
  students.method = Method::kMcm;
  students.id = "test:1/mcm0";
  students.antecedent_sentence.tokens[0].surface = "الطلاب";
  FilterResult single = FilterSamples({student, students}, lex);
  if (single.kept.size() != 1 || single.rejected.size() != 1 ||
      single.rejected[0].sample != students ||
      single.rejected[0].reason != RejectReason::kNumberMismatch) {
    return "student->students not rejected as number_mismatch";
  }

  std::mt19937 rng(404);
  const std::vector<std::string> nouns = {"الطالب", "الطلاب", "لندن", "فيصل",
                                          "معلمة", "المعلمون", "زيوريخ",
                                          "الملكتان"};
  const std::vector<std::string> verbs = {"يدرس", "تدرس", "يدرسون", "درسوا",
                                          "درست", "كان", "يدرسن", "تدرسان"};
  for (int batch = 0; batch < 200; ++batch) {
    std::vector<AzpSample> samples;
    int n = testing::Uniform(rng, 0, 50);
    for (int i = 0; i < n; ++i) {
      AzpSample s = testing::MakeSample(
          {testing::Pick(rng, nouns)}, {"NN"}, {testing::Pick(rng, verbs), "في"},
          {testing::Uniform(rng, 0, 1) ? "VBP" : "VBD", "IN"});
      s.id = absl::StrCat("s", i);
      samples.push_back(s);
    }
    bool lenient = batch % 2 == 1;
    FilterResult result = FilterSamples(samples, lex, lenient);
    size_t k = 0;
    size_t r = 0;
    for (const AzpSample &s : samples) {
      bool rejected = CheckAgreement(s, lex, lenient).has_value();
      if (rejected) {
        if (r >= result.rejected.size() || result.rejected[r].sample != s) {
          return absl::StrCat("batch ", batch, ": rejected list");
        }
        ++r;
      } else {
        if (k >= result.kept.size() || result.kept[k] != s) {
          return absl::StrCat("batch ", batch, ": kept list");
        }
        ++k;
      }
    }
    if (k != result.kept.size() || r != result.rejected.size()) {
      return absl::StrCat("batch ", batch, ": extra samples");
    }
  }
  return "";
}

std::string BtRules() {
  const MorphLexicon &lex = SeedLexicon();
  AzpSample sample = testing::MakeSample(
      {"باريس", "هي", "عاصمة", "فرنسا", "."},
      {"NNP", "PRP", "NN", "NNP", "PUNC"},
      {"تقع", "في", "شمال", "البلاد", "على", "نهر", "السين", "."},
      {"VBP", "IN", "NN", "DT+NN", "IN", "NN", "NNP", "PUNC"});
  absl::StatusOr<std::unique_ptr<StubTagger>> tagger =
      StubTagger::FromFile(FixturePath("tagger.tsv"));
  if (!tagger.ok()) return std::string(tagger.status().message());

  std::unique_ptr<StubTranslator> identity = StubTranslator::Identity();
  absl::StatusOr<std::optional<AzpSample>> kept =
      BtAugment(sample, *identity, **tagger, lex);
  if (!kept.ok() || !kept->has_value()) return "identity dropped the sample";
  if ((*kept)->azp_sentence != sample.azp_sentence ||
      (*kept)->antecedent_sentence != sample.antecedent_sentence ||
      (*kept)->gap_index != sample.gap_index ||
      (*kept)->verb_index != sample.verb_index) {
    return "identity changed the sample";
  }

  absl::StatusOr<std::unique_ptr<StubTranslator>> drop =
      StubTranslator::FromFile(FixturePath("bt_verb_drop.jsonl"));
  if (!drop.ok()) return std::string(drop.status().message());
  absl::StatusOr<std::optional<AzpSample>> dropped =
      BtAugment(sample, **drop, **tagger, lex);
  if (!dropped.ok() || dropped->has_value()) return "verb drop kept a sample";

  absl::StatusOr<std::unique_ptr<StubTranslator>> insert =
      StubTranslator::FromFile(FixturePath("bt_subject_insert.jsonl"));
  if (!insert.ok()) return std::string(insert.status().message());
  absl::StatusOr<std::optional<AzpSample>> reinserted =
      BtAugment(sample, **insert, **tagger, lex);
  if (!reinserted.ok() || !reinserted->has_value()) {
    return "subject insert dropped the sample";
  }
  const AzpSample &s = **reinserted;
  for (const Token &t : s.azp_sentence.tokens) {
    if (t.surface == "هي") return "inserted subject still present";
  }
  if (s.azp_sentence.azp_gaps != std::vector<int>{1} || s.gap_index != 1) {
    return "gap not recorded at the removed subject";
  }
  return "";
}

std::string PipelineDeterminism() {
  std::string a = testing::ScratchDir("accept_a");
  std::string b = testing::ScratchDir("accept_b");
  for (const auto &[dir, workers] : {std::pair{a, 4}, std::pair{b, 1}}) {
    std::string command = absl::StrCat(
        "'", AZP_BINARY, "' --config '", FixturePath("config.json"),
        "' run --out '", dir, "' --workers ", workers, " > /dev/null");
    if (std::system(command.c_str()) != 0) return "run failed: " + command;
  }
  for (const char *file : {"samples.azp", "manifest.json"}) {
    std::string left = testing::Slurp(a + "/" + file);
    if (left.empty() || left != testing::Slurp(b + "/" + file)) {
      return absl::StrCat(file, " differs between runs");
    }
  }
  return "";
}

}  // namespace
}  // namespace azp

int main() {
  using azp::Criterion;
  const Criterion criteria[] = {
      {"normalization golden and idempotence", 1.0, azp::Normalization},
      {"F1 arithmetic on published rows", 1.0, azp::F1Arithmetic,
       azp::F1Interval},
      {"stats table total", 1.0, azp::TableTotal},
      {"t-test oracle", 10.0, azp::TTestOracle},
      {"pattern matching oracle", 5.0, azp::MatchOracle},
      {"subject removal inverse and planted subjects", 5.0, azp::RsmInverse},
      {"morphology coherence and CSA round trip", 5.0, azp::MorphCoherence},
      {"filter partition and number mismatch", 1.0, azp::FilterPartition},
      {"back-translation rules", 1.0, azp::BtRules},
      {"pipeline determinism", 30.0, azp::PipelineDeterminism},
  };
  int failures = 0;
  for (const Criterion &c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string detail = c.check();
    double seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    if (detail.empty() && seconds > c.budget_seconds) {
      detail = absl::StrFormat("over budget of %.0f s", c.budget_seconds);
    }
    bool ok = detail.empty();
    failures += !ok;
    std::printf("%s  %s (%.3f s)%s%s\n", ok ? "PASS" : "FAIL", c.name, seconds,
                ok ? "" : ": ", detail.c_str());
    if (c.note != nullptr) c.note();
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(std::size(criteria)) - failures,
              std::size(criteria));
  return failures == 0 ? 0 : 1;
}
