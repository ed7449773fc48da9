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

#include "azp/tagset.h"

#include <fstream>

#include "absl/strings/match.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/strip.h"

namespace azp {

namespace {

absl::string_view BaseTag(absl::string_view tag) {
  absl::ConsumePrefix(&tag, "DT+");
  return tag;
}

}  // namespace

Tagset Tagset::ArabicPenn() {
  return Tagset({
      "ADJ_COMP", "ADJ_NUM",   "ADJ_VN",        "CC",       "CD",
      "DT",       "DT+ADJ_COMP", "DT+ADJ_NUM",  "DT+CD",    "DT+JJ",
      "DT+JJR",   "DT+NN",     "DT+NNP",        "DT+NNPS",  "DT+NNS",
      "DT+NOUN_QUANT", "DT+VN", "FW",           "IN",       "JJ",
      "JJR",      "NN",        "NNP",           "NNPS",     "NNS",
      "NOUN_QUANT", "NUMERIC_COMMA", "PRP",     "PRP$",     "PUNC",
      "RB",       "RP",        "UH",            "VB",       "VBD",
      "VBG",      "VBN",       "VBP",           "VN",       "WP",
      "WRB",
  });
}

absl::StatusOr<Tagset> Tagset::FromFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  std::set<std::string> tags;
  std::string line;
  while (std::getline(in, line)) {
    absl::string_view tag = absl::StripAsciiWhitespace(line);
    if (tag.empty() || tag[0] == '#') continue;
    tags.emplace(tag);
  }
  if (tags.empty()) {
    return absl::InvalidArgumentError(absl::StrCat("empty tagset: ", path));
  }
  return Tagset(std::move(tags));
}

bool Tagset::Contains(absl::string_view tag) const {
  return tags_.find(std::string(tag)) != tags_.end();
}

TagClass Tagset::Classify(absl::string_view tag) {
  absl::string_view base = BaseTag(tag);
  if (absl::StartsWith(base, "VB")) return TagClass::kVerb;
  if (base == "NNP" || base == "NNPS") return TagClass::kProperNoun;
  if (base == "NN" || base == "NNS" || base == "NOUN_QUANT") {
    return TagClass::kNoun;
  }
  if (base == "PRP") return TagClass::kPronoun;
  if (base == "IN") return TagClass::kPreposition;
  return TagClass::kOther;
}

bool Tagset::IsPerfectVerb(absl::string_view tag) {
  return BaseTag(tag) == "VBD";
}

bool Tagset::IsImperfectVerb(absl::string_view tag) {
  absl::string_view base = BaseTag(tag);
  return base == "VBP" || base == "VB";
}

}  // namespace azp
