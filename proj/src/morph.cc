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

#include "azp/morph.h"

#include <algorithm>

#include "absl/strings/match.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"
#include "azp/normalize.h"
#include "azp/utf8.h"

namespace azp {

absl::string_view NumberName(Number number) {
  switch (number) {
    case Number::kSingular:
      return "singular";
    case Number::kDual:
      return "dual";
    case Number::kPlural:
      return "plural";
    case Number::kUnknown:
      return "unknown";
  }
  return "unknown";
}

absl::string_view GenderName(Gender gender) {
  switch (gender) {
    case Gender::kMasculine:
      return "masculine";
    case Gender::kFeminine:
      return "feminine";
    case Gender::kUnknown:
      return "unknown";
  }
  return "unknown";
}

absl::string_view PersonName(Person person) {
  switch (person) {
    case Person::kFirst:
      return "1";
    case Person::kSecond:
      return "2";
    case Person::kThird:
      return "3";
    case Person::kUnknown:
      return "unknown";
  }
  return "unknown";
}

std::optional<Number> ParseNumber(absl::string_view name) {
  for (Number n : {Number::kSingular, Number::kDual, Number::kPlural,
                   Number::kUnknown}) {
    if (NumberName(n) == name) return n;
  }
  return std::nullopt;
}

std::optional<Gender> ParseGender(absl::string_view name) {
  for (Gender g : {Gender::kMasculine, Gender::kFeminine, Gender::kUnknown}) {
    if (GenderName(g) == name) return g;
  }
  return std::nullopt;
}

std::optional<Person> ParsePerson(absl::string_view name) {
  for (Person p :
       {Person::kFirst, Person::kSecond, Person::kThird, Person::kUnknown}) {
    if (PersonName(p) == name) return p;
  }
  return std::nullopt;
}

std::string DebugString(const MorphFeatures &features) {
  return absl::StrCat("{", NumberName(features.number), ",",
                      GenderName(features.gender), ",",
                      PersonName(features.person), "}");
}

namespace {

constexpr absl::string_view kDefiniteArticle = "ال";

MorphFeatures Third(Number number, Gender gender) {
  return MorphFeatures{number, gender, Person::kThird};
}

struct Affixes {
  absl::string_view prefix;
  absl::string_view suffix;
};

// Third-person sound paradigms, indexed by number then gender.
Affixes VerbAffixes(bool perfect, Number number, Gender gender) {
  bool fem = gender == Gender::kFeminine;
  if (perfect) {
    switch (number) {
      case Number::kSingular:
        return fem ? Affixes{"", "ت"} : Affixes{"", ""};
      case Number::kDual:
        return fem ? Affixes{"", "تا"} : Affixes{"", "ا"};
      default:
        return fem ? Affixes{"", "ن"} : Affixes{"", "وا"};
    }
  }
  switch (number) {
    case Number::kSingular:
      return fem ? Affixes{"ت", ""} : Affixes{"ي", ""};
    case Number::kDual:
      return fem ? Affixes{"ت", "ان"} : Affixes{"ي", "ان"};
    default:
      return fem ? Affixes{"ي", "ن"} : Affixes{"ي", "ون"};
  }
}

Affixes NounAffixes(Number number, Gender gender) {
  bool fem = gender == Gender::kFeminine;
  switch (number) {
    case Number::kSingular:
      return fem ? Affixes{"", "ة"} : Affixes{"", ""};
    case Number::kDual:
      return fem ? Affixes{"", "تان"} : Affixes{"", "ان"};
    default:
      return fem ? Affixes{"", "ات"} : Affixes{"", "ون"};
  }
}

bool IsKnownNumber(Number n) { return n != Number::kUnknown; }

// Strips prefix and suffix from `surface`; nullopt if either is absent or
// the remaining stem is shorter than `min_stem` code points.
std::optional<std::string> StripAffixes(absl::string_view surface,
                                        absl::string_view prefix,
                                        absl::string_view suffix,
                                        int min_stem) {
  if (surface.size() < prefix.size() + suffix.size()) return std::nullopt;
  if (!absl::StartsWith(surface, prefix) || !absl::EndsWith(surface, suffix)) {
    return std::nullopt;
  }
  absl::string_view stem = surface.substr(
      prefix.size(), surface.size() - prefix.size() - suffix.size());
  if (static_cast<int>(utf8::Length(stem)) < min_stem) return std::nullopt;
  return std::string(stem);
}

std::optional<RuleScope> ScopeOf(absl::string_view pos) {
  if (Tagset::IsPerfectVerb(pos)) return RuleScope::kPerfectVerb;
  if (Tagset::IsImperfectVerb(pos)) return RuleScope::kImperfectVerb;
  if (Tagset::Classify(pos) == TagClass::kNoun) return RuleScope::kCommonNoun;
  return std::nullopt;
}

absl::StatusOr<std::map<Number, std::string>> ParseTable(
    absl::string_view text) {
  std::map<Number, std::string> table;
  for (absl::string_view cell : absl::StrSplit(text, ';', absl::SkipEmpty())) {
    std::pair<absl::string_view, absl::string_view> kv =
        absl::StrSplit(cell, absl::MaxSplits('=', 1));
    std::optional<Number> number =
        ParseNumber(absl::StripAsciiWhitespace(kv.first));
    absl::string_view form = absl::StripAsciiWhitespace(kv.second);
    if (!number || *number == Number::kUnknown || form.empty()) {
      return absl::InvalidArgumentError(
          absl::StrCat("bad inflection table cell '", cell, "'"));
    }
    table[*number] = NormalizeText(form);
  }
  return table;
}

}  // namespace

MorphLexicon::MorphLexicon() : rules_(DefaultRules()) {}

std::vector<AffixRule> MorphLexicon::DefaultRules() {
  using R = RuleScope;
  const Gender m = Gender::kMasculine;
  const Gender f = Gender::kFeminine;
  const Number sg = Number::kSingular;
  const Number du = Number::kDual;
  const Number pl = Number::kPlural;
  std::vector<AffixRule> rules = {
      // Imperfect: y-aktub-uuna / y-aktub-aani / t-aktub-aani / y-aktub-na.
      {R::kImperfectVerb, "ي", "ون", 2, Third(pl, m), 30},
      {R::kImperfectVerb, "ي", "ان", 2, Third(du, m), 30},
      {R::kImperfectVerb, "ت", "ان", 2, Third(du, f), 30},
      {R::kImperfectVerb, "ي", "ن", 3, Third(pl, f), 25},
      {R::kImperfectVerb, "ي", "", 2, Third(sg, m), 10},
      {R::kImperfectVerb, "ت", "", 2, Third(sg, f), 10},
      // Perfect.
      {R::kPerfectVerb, "", "وا", 2, Third(pl, m), 30},
      {R::kPerfectVerb, "", "تا", 2, Third(du, f), 30},
      {R::kPerfectVerb, "", "ا", 3, Third(du, m), 25},
      {R::kPerfectVerb, "", "ت", 3, Third(sg, f), 25},
      {R::kPerfectVerb, "", "ن", 3, Third(pl, f), 25},
      {R::kPerfectVerb, "", "", 2, Third(sg, m), 0},
      // Nominative sound nouns.
      {R::kCommonNoun, "", "تان", 2, Third(du, f), 30},
      {R::kCommonNoun, "", "ون", 3, Third(pl, m), 30},
      {R::kCommonNoun, "", "ان", 3, Third(du, m), 25},
      {R::kCommonNoun, "", "ات", 2, Third(pl, f), 25},
      {R::kCommonNoun, "", "ة", 2, Third(sg, f), 20},
      {R::kCommonNoun, "", "", 2, Third(sg, m), 0},
  };
  std::stable_sort(rules.begin(), rules.end(),
                   [](const AffixRule &a, const AffixRule &b) {
                     if (a.priority != b.priority) return a.priority > b.priority;
                     return a.prefix.size() + a.suffix.size() >
                            b.prefix.size() + b.suffix.size();
                   });
  return rules;
}

absl::Status MorphLexicon::AddEntry(absl::string_view surface,
                                    LexiconEntry entry) {
  std::string key = NormalizeText(surface);
  if (key.empty()) return absl::InvalidArgumentError("empty lexicon surface");
  if (!entries_.emplace(key, std::move(entry)).second) {
    return absl::AlreadyExistsError(
        absl::StrCat("duplicate lexicon entry '", key, "'"));
  }
  return absl::OkStatus();
}

absl::StatusOr<MorphLexicon> MorphLexicon::FromString(absl::string_view text) {
  MorphLexicon lexicon;
  // Table forms are registered after explicit entries so an explicit line
  // always wins.
  std::vector<std::pair<std::string, LexiconEntry>> derived;
  int line_number = 0;
  for (absl::string_view line : absl::StrSplit(text, '\n')) {
    ++line_number;
    line = absl::StripSuffix(line, "\r");
    if (absl::StripAsciiWhitespace(line).empty() || line[0] == '#') continue;
    std::vector<absl::string_view> cols = absl::StrSplit(line, '\t');
    auto error = [&](absl::string_view message) {
      return absl::InvalidArgumentError(
          absl::StrCat("lexicon line ", line_number, ": ", message));
    };
    if (cols.size() != 4 && cols.size() != 5) {
      return error("expected 4 or 5 tab-separated columns");
    }
    std::optional<Number> number = ParseNumber(cols[1]);
    std::optional<Gender> gender = ParseGender(cols[2]);
    std::optional<Person> person = ParsePerson(cols[3]);
    if (!number || !gender || !person) return error("bad feature value");
    LexiconEntry entry;
    entry.features = MorphFeatures{*number, *gender, *person};
    if (cols.size() == 5) {
      absl::StatusOr<std::map<Number, std::string>> table = ParseTable(cols[4]);
      if (!table.ok()) return error(table.status().message());
      entry.inflections = *std::move(table);
    }
    absl::Status added = lexicon.AddEntry(cols[0], entry);
    if (!added.ok()) return error(added.message());
    for (const auto &[n, form] : entry.inflections) {
      LexiconEntry sibling = entry;
      sibling.features.number = n;
      derived.emplace_back(form, std::move(sibling));
    }
  }
  for (auto &[form, entry] : derived) {
    lexicon.entries_.emplace(form, std::move(entry));
  }
  return lexicon;
}

absl::StatusOr<MorphLexicon> MorphLexicon::FromFile(const std::string &path) {
  absl::StatusOr<std::string> text = ReadFileToString(path);
  if (!text.ok()) return text.status();
  absl::StatusOr<MorphLexicon> lexicon = FromString(*text);
  if (!lexicon.ok()) {
    return absl::Status(lexicon.status().code(),
                        absl::StrCat(path, ": ", lexicon.status().message()));
  }
  return lexicon;
}

const LexiconEntry *MorphLexicon::Find(absl::string_view surface) const {
  std::string key = NormalizeText(surface);
  auto it = entries_.find(key);
  if (it != entries_.end()) return &it->second;
  absl::string_view bare = key;
  if (absl::ConsumePrefix(&bare, kDefiniteArticle) && utf8::Length(bare) >= 2) {
    it = entries_.find(std::string(bare));
    if (it != entries_.end()) return &it->second;
  }
  return nullptr;
}

MorphFeatures Analyze(const Token &token, const MorphLexicon &lexicon) {
  if (const LexiconEntry *entry = lexicon.Find(token.surface)) {
    return entry->features;
  }
  std::optional<RuleScope> scope = ScopeOf(token.pos);
  if (!scope) return MorphFeatures{};
  std::string surface = NormalizeText(token.surface);
  for (const AffixRule &rule : lexicon.rules()) {
    if (rule.scope != *scope) continue;
    if (StripAffixes(surface, rule.prefix, rule.suffix, rule.min_stem)) {
      return rule.features;
    }
  }
  return MorphFeatures{};
}

std::string Lemma(const Token &token, const MorphLexicon &lexicon) {
  std::optional<RuleScope> scope = ScopeOf(token.pos);
  if (!scope) return "";
  MorphFeatures features = Analyze(token, lexicon);
  if (!IsKnownNumber(features.number) || features.gender == Gender::kUnknown) {
    return "";
  }
  Affixes affixes =
      *scope == RuleScope::kCommonNoun
          ? NounAffixes(features.number, features.gender)
          : VerbAffixes(*scope == RuleScope::kPerfectVerb, features.number,
                        features.gender);
  return StripAffixes(NormalizeText(token.surface), affixes.prefix,
                      affixes.suffix, 1)
      .value_or("");
}

namespace {

// Shared lexicon-table lookup for both inflectors. Returns:
//   - a token when the table supplies the target form,
//   - nullopt inside `*handled` when the lexicon owns the word but has no
//     form for the target.
std::optional<Token> FromTable(const Token &token, Number target,
                               const MorphLexicon &lexicon, bool *handled) {
  const LexiconEntry *entry = lexicon.Find(token.surface);
  *handled = entry != nullptr;
  if (entry == nullptr) return std::nullopt;
  auto it = entry->inflections.find(target);
  if (it == entry->inflections.end()) return std::nullopt;
  Token out = token;
  std::string key = NormalizeText(token.surface);
  // Preserve a definite article the table entry was found without.
  bool definite = lexicon.entries().find(key) == lexicon.entries().end() &&
                  absl::StartsWith(key, kDefiniteArticle);
  out.surface = definite ? absl::StrCat(kDefiniteArticle, it->second)
                         : it->second;
  return out;
}

std::optional<Token> Rebuild(const Token &token, const Affixes &from,
                             const Affixes &to, Number target, Gender gender,
                             const MorphLexicon &lexicon) {
  std::optional<std::string> stem = StripAffixes(
      NormalizeText(token.surface), from.prefix, from.suffix, 2);
  if (!stem) return std::nullopt;
  Token out = token;
  out.surface = absl::StrCat(to.prefix, *stem, to.suffix);
  // Refuse forms the analyzer would read differently; keeps inflection and
  // analysis coherent.
  MorphFeatures check = Analyze(out, lexicon);
  if (check.number != target || check.gender != gender) return std::nullopt;
  return out;
}

}  // namespace

std::optional<Token> InflectVerb(const Token &verb,
                                 const MorphFeatures &current, Number target,
                                 const MorphLexicon &lexicon) {
  if (!Tagset::IsVerb(verb.pos)) return std::nullopt;
  if (target == current.number) return verb;
  if (!IsKnownNumber(target) || !IsKnownNumber(current.number) ||
      current.gender == Gender::kUnknown) {
    return std::nullopt;
  }
  bool handled = false;
  std::optional<Token> tabled = FromTable(verb, target, lexicon, &handled);
  if (handled) return tabled;
  if (current.person != Person::kThird && current.person != Person::kUnknown) {
    return std::nullopt;
  }
  bool perfect = Tagset::IsPerfectVerb(verb.pos);
  if (!perfect && !Tagset::IsImperfectVerb(verb.pos)) return std::nullopt;
  return Rebuild(verb, VerbAffixes(perfect, current.number, current.gender),
                 VerbAffixes(perfect, target, current.gender), target,
                 current.gender, lexicon);
}

std::optional<Token> InflectNoun(const Token &noun,
                                 const MorphFeatures &current, Number target,
                                 const MorphLexicon &lexicon) {
  if (!Tagset::IsNoun(noun.pos)) return std::nullopt;
  if (target == current.number) return noun;
  if (!IsKnownNumber(target)) return std::nullopt;
  bool handled = false;
  std::optional<Token> tabled = FromTable(noun, target, lexicon, &handled);
  if (handled) return tabled;
  if (Tagset::IsProperNoun(noun.pos)) return std::nullopt;
  if (!IsKnownNumber(current.number) || current.gender == Gender::kUnknown) {
    return std::nullopt;
  }
  return Rebuild(noun, NounAffixes(current.number, current.gender),
                 NounAffixes(target, current.gender), target, current.gender,
                 lexicon);
}

bool Agrees(const MorphFeatures &verb, const MorphFeatures &antecedent,
            bool lenient) {
  auto same = [lenient](auto a, auto b, auto unknown) {
    if (a == unknown || b == unknown) return lenient;
    return a == b;
  };
  return same(verb.number, antecedent.number, Number::kUnknown) &&
         same(verb.gender, antecedent.gender, Gender::kUnknown);
}

absl::string_view RejectReasonName(RejectReason reason) {
  switch (reason) {
    case RejectReason::kNumberMismatch:
      return "number_mismatch";
    case RejectReason::kGenderMismatch:
      return "gender_mismatch";
    case RejectReason::kUnanalyzable:
      return "unanalyzable";
  }
  return "unanalyzable";
}

std::optional<RejectReason> CheckAgreement(const AzpSample &sample,
                                           const MorphLexicon &lexicon,
                                           bool lenient) {
  MorphFeatures verb =
      Analyze(sample.azp_sentence.tokens[sample.verb_index], lexicon);
  MorphFeatures head = Analyze(
      sample.antecedent_sentence.tokens[AntecedentHead(sample)], lexicon);
  if (Agrees(verb, head, lenient)) return std::nullopt;
  if (!lenient &&
      (verb.number == Number::kUnknown || head.number == Number::kUnknown ||
       verb.gender == Gender::kUnknown || head.gender == Gender::kUnknown)) {
    return RejectReason::kUnanalyzable;
  }
  if (verb.number != head.number && verb.number != Number::kUnknown &&
      head.number != Number::kUnknown) {
    return RejectReason::kNumberMismatch;
  }
  return RejectReason::kGenderMismatch;
}

FilterResult FilterSamples(const std::vector<AzpSample> &samples,
                           const MorphLexicon &lexicon, bool lenient) {
  FilterResult result;
  for (const AzpSample &sample : samples) {
    std::optional<RejectReason> reason =
        CheckAgreement(sample, lexicon, lenient);
    if (reason) {
      result.rejected.push_back(Rejection{sample, *reason});
    } else {
      result.kept.push_back(sample);
    }
  }
  return result;
}

}  // namespace azp
