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

#include "azp/sample_io.h"

#include <set>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"
#include "json.hpp"

namespace azp {

namespace {

using nlohmann::json;

constexpr const char *kFields[] = {
    "id",        "method",     "ant_tokens", "ant_pos",  "azp_tokens",
    "azp_pos",   "gap_index",  "verb_index", "ant_start", "ant_end",
    "number",    "gender",     "source"};

absl::Status FieldError(int record, absl::string_view field,
                        absl::string_view message) {
  return absl::InvalidArgumentError(absl::StrCat(
      "sample record ", record, ", field '", field, "': ", message));
}

absl::StatusOr<std::vector<std::string>> StringList(const json &j, int record,
                                                    absl::string_view field) {
  if (!j.is_array()) return FieldError(record, field, "expected an array");
  std::vector<std::string> out;
  for (const json &item : j) {
    if (!item.is_string()) {
      return FieldError(record, field, "expected an array of strings");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

absl::StatusOr<int> IntField(const json &j, int record,
                             absl::string_view field) {
  if (!j.is_number_integer()) return FieldError(record, field, "expected an integer");
  return j.get<int>();
}

absl::StatusOr<Sentence> SentenceFrom(const json &tokens, const json &tags,
                                      int record, absl::string_view tok_field,
                                      absl::string_view pos_field) {
  absl::StatusOr<std::vector<std::string>> surfaces =
      StringList(tokens, record, tok_field);
  if (!surfaces.ok()) return surfaces.status();
  absl::StatusOr<std::vector<std::string>> pos =
      StringList(tags, record, pos_field);
  if (!pos.ok()) return pos.status();
  if (surfaces->size() != pos->size()) {
    return FieldError(record, pos_field,
                      absl::StrCat("length ", pos->size(), " differs from ",
                                   tok_field, " length ", surfaces->size()));
  }
  for (const std::string &s : *surfaces) {
    if (s.empty()) return FieldError(record, tok_field, "empty token");
  }
  return MakeSentence(*surfaces, *pos);
}

}  // namespace

std::string SampleToLine(const AzpSample &sample) {
  // ordered_json keeps the documented key order in the output.
  nlohmann::ordered_json j;
  j["id"] = sample.id;
  j["method"] = std::string(MethodName(sample.method));
  j["ant_tokens"] = sample.antecedent_sentence.Surfaces();
  j["ant_pos"] = sample.antecedent_sentence.Tags();
  j["azp_tokens"] = sample.azp_sentence.Surfaces();
  j["azp_pos"] = sample.azp_sentence.Tags();
  j["gap_index"] = sample.gap_index;
  j["verb_index"] = sample.verb_index;
  j["ant_start"] = sample.antecedent_span.start;
  j["ant_end"] = sample.antecedent_span.end;
  j["number"] = std::string(NumberName(sample.features.number));
  j["gender"] = std::string(GenderName(sample.features.gender));
  nlohmann::ordered_json source;
  source["corpus"] = sample.source.corpus;
  source["document"] = sample.source.document;
  source["sentence"] = sample.source.sentence;
  j["source"] = source;
  return j.dump(-1, ' ', false, json::error_handler_t::strict);
}

absl::StatusOr<AzpSample> SampleFromLine(absl::string_view line, int record) {
  json j = json::parse(line, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    return absl::InvalidArgumentError(
        absl::StrCat("sample record ", record, ": not a JSON object"));
  }
  std::set<std::string> known(std::begin(kFields), std::end(kFields));
  for (const char *field : kFields) {
    if (!j.contains(field)) return FieldError(record, field, "missing");
  }
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (known.count(it.key()) == 0) {
      return FieldError(record, it.key(), "unknown field");
    }
  }

  AzpSample sample;
  if (!j["id"].is_string()) return FieldError(record, "id", "expected a string");
  sample.id = j["id"].get<std::string>();

  if (!j["method"].is_string()) {
    return FieldError(record, "method", "expected a string");
  }
  std::optional<Method> method = ParseMethod(j["method"].get<std::string>());
  if (!method) return FieldError(record, "method", "unknown method");
  sample.method = *method;

  absl::StatusOr<Sentence> ant =
      SentenceFrom(j["ant_tokens"], j["ant_pos"], record, "ant_tokens", "ant_pos");
  if (!ant.ok()) return ant.status();
  sample.antecedent_sentence = *std::move(ant);
  absl::StatusOr<Sentence> azp =
      SentenceFrom(j["azp_tokens"], j["azp_pos"], record, "azp_tokens", "azp_pos");
  if (!azp.ok()) return azp.status();
  sample.azp_sentence = *std::move(azp);

  for (auto [field, target] :
       {std::pair<const char *, int *>{"gap_index", &sample.gap_index},
        {"verb_index", &sample.verb_index},
        {"ant_start", &sample.antecedent_span.start},
        {"ant_end", &sample.antecedent_span.end}}) {
    absl::StatusOr<int> value = IntField(j[field], record, field);
    if (!value.ok()) return value.status();
    *target = *value;
  }

  if (!j["number"].is_string()) return FieldError(record, "number", "expected a string");
  std::optional<Number> number = ParseNumber(j["number"].get<std::string>());
  if (!number) return FieldError(record, "number", "unknown value");
  if (!j["gender"].is_string()) return FieldError(record, "gender", "expected a string");
  std::optional<Gender> gender = ParseGender(j["gender"].get<std::string>());
  if (!gender) return FieldError(record, "gender", "unknown value");
  sample.features.number = *number;
  sample.features.gender = *gender;

  const json &source = j["source"];
  if (!source.is_object() || source.size() != 3 || !source.contains("corpus") ||
      !source.contains("document") || !source.contains("sentence") ||
      !source["corpus"].is_string() || !source["document"].is_string() ||
      !source["sentence"].is_number_integer()) {
    return FieldError(record, "source",
                      "expected {corpus: str, document: str, sentence: int}");
  }
  sample.source.corpus = source["corpus"].get<std::string>();
  sample.source.document = source["document"].get<std::string>();
  sample.source.sentence = source["sentence"].get<int>();

  if (sample.gap_index < 0 || sample.gap_index > sample.azp_sentence.size()) {
    return FieldError(record, "gap_index", "out of range");
  }
  sample.azp_sentence.azp_gaps = {sample.gap_index};

  absl::Status valid = ValidateSample(sample);
  if (!valid.ok()) {
    return absl::InvalidArgumentError(
        absl::StrCat("sample record ", record, ": ", valid.message()));
  }
  return sample;
}

std::string SerializeSamples(const std::vector<AzpSample> &samples) {
  std::string out;
  for (const AzpSample &sample : samples) {
    absl::StrAppend(&out, SampleToLine(sample), "\n");
  }
  return out;
}

absl::StatusOr<std::vector<AzpSample>> ParseSamples(absl::string_view text) {
  std::vector<AzpSample> samples;
  int record = 0;
  for (absl::string_view line : absl::StrSplit(text, '\n')) {
    if (absl::StripAsciiWhitespace(line).empty()) continue;
    ++record;
    absl::StatusOr<AzpSample> sample = SampleFromLine(line, record);
    if (!sample.ok()) return sample.status();
    samples.push_back(*std::move(sample));
  }
  return samples;
}

absl::StatusOr<std::vector<AzpSample>> ReadSamples(const std::string &path) {
  absl::StatusOr<std::string> text = ReadFileToString(path);
  if (!text.ok()) return text.status();
  absl::StatusOr<std::vector<AzpSample>> samples = ParseSamples(*text);
  if (!samples.ok()) {
    return absl::Status(samples.status().code(),
                        absl::StrCat(path, ": ", samples.status().message()));
  }
  return samples;
}

absl::Status WriteSamples(const std::vector<AzpSample> &samples,
                          const std::string &path) {
  return WriteStringToFile(path, SerializeSamples(samples));
}

}  // namespace azp
