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

#include <algorithm>

#include "absl/strings/match.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"
#include "azp/corpus.h"
#include "azp/normalize.h"
#include "azp/providers.h"
#include "azp/utf8.h"
#include "json.hpp"

namespace azp {

namespace {

using nlohmann::json;

std::string TranslationKey(absl::string_view source, absl::string_view target,
                           absl::string_view text) {
  return absl::StrCat(source, "\t", target, "\t",
                      utf8::CollapseWhitespace(NormalizeText(text)));
}

template <typename Fn>
absl::Status ForEachJsonLine(absl::string_view text, absl::string_view what,
                             Fn fn) {
  int record = 0;
  for (absl::string_view line : absl::StrSplit(text, '\n')) {
    if (absl::StripAsciiWhitespace(line).empty()) continue;
    ++record;
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
      return absl::InvalidArgumentError(
          absl::StrCat(what, " record ", record, ": not a JSON object"));
    }
    if (absl::Status s = fn(j, record); !s.ok()) {
      return absl::InvalidArgumentError(
          absl::StrCat(what, " record ", record, ": ", s.message()));
    }
  }
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<std::unique_ptr<StubMaskedLm>> StubMaskedLm::FromString(
    absl::string_view text) {
  auto stub = std::unique_ptr<StubMaskedLm>(new StubMaskedLm());
  absl::Status status = ForEachJsonLine(
      text, "mask stub", [&](const json &j, int) -> absl::Status {
        if (!j.contains("context") || !j["context"].is_string()) {
          return absl::InvalidArgumentError("missing string 'context'");
        }
        if (!j.contains("candidates") || !j["candidates"].is_array()) {
          return absl::InvalidArgumentError("missing array 'candidates'");
        }
        std::string context = j["context"].get<std::string>();
        if (!absl::StrContains(context, kMaskMarker)) {
          return absl::InvalidArgumentError("context has no [MASK] marker");
        }
        std::vector<MaskCandidate> candidates;
        for (const json &c : j["candidates"]) {
          if (!c.is_array() || c.size() != 2 || !c[0].is_string() ||
              !c[1].is_number()) {
            return absl::InvalidArgumentError(
                "candidate must be [token, score]");
          }
          candidates.push_back(
              MaskCandidate{c[0].get<std::string>(), c[1].get<double>()});
        }
        MaskRequest unbounded;
        unbounded.tokens = {"x"};
        unbounded.top_k = std::max<int>(1, candidates.size());
        if (absl::Status s =
                ValidateMaskResponse(unbounded, MaskResponse{candidates});
            !s.ok()) {
          return s;
        }
        if (!stub->table_.emplace(MaskContextKey(context), candidates)
                 .second) {
          return absl::AlreadyExistsError("duplicate context");
        }
        return absl::OkStatus();
      });
  if (!status.ok()) return status;
  return stub;
}

absl::StatusOr<std::unique_ptr<StubMaskedLm>> StubMaskedLm::FromFile(
    const std::string &path) {
  absl::StatusOr<std::string> text = ReadFileToString(path);
  if (!text.ok()) return text.status();
  absl::StatusOr<std::unique_ptr<StubMaskedLm>> stub = FromString(*text);
  if (!stub.ok()) {
    return absl::Status(stub.status().code(),
                        absl::StrCat(path, ": ", stub.status().message()));
  }
  return stub;
}

absl::StatusOr<MaskResponse> StubMaskedLm::DoMaskTopK(
    const MaskRequest &request) {
  MaskResponse response;
  auto it = table_.find(MaskContextKey(request.tokens, request.mask_index));
  if (it == table_.end()) return response;
  const std::vector<MaskCandidate> &all = it->second;
  size_t n = std::min<size_t>(all.size(), request.top_k);
  response.candidates.assign(all.begin(), all.begin() + n);
  return response;
}

std::unique_ptr<StubTranslator> StubTranslator::Identity() {
  return std::unique_ptr<StubTranslator>(new StubTranslator());
}

absl::StatusOr<std::unique_ptr<StubTranslator>> StubTranslator::FromString(
    absl::string_view text) {
  auto stub = Identity();
  absl::Status status = ForEachJsonLine(
      text, "translation stub", [&](const json &j, int) -> absl::Status {
        for (const char *field : {"source", "target", "text", "translation"}) {
          if (!j.contains(field) || !j[field].is_string()) {
            return absl::InvalidArgumentError(
                absl::StrCat("missing string '", field, "'"));
          }
        }
        std::string key = TranslationKey(j["source"].get<std::string>(),
                                         j["target"].get<std::string>(),
                                         j["text"].get<std::string>());
        if (!stub->table_.emplace(key, j["translation"].get<std::string>())
                 .second) {
          return absl::AlreadyExistsError("duplicate entry");
        }
        return absl::OkStatus();
      });
  if (!status.ok()) return status;
  return stub;
}

absl::StatusOr<std::unique_ptr<StubTranslator>> StubTranslator::FromFile(
    const std::string &path) {
  absl::StatusOr<std::string> text = ReadFileToString(path);
  if (!text.ok()) return text.status();
  absl::StatusOr<std::unique_ptr<StubTranslator>> stub = FromString(*text);
  if (!stub.ok()) {
    return absl::Status(stub.status().code(),
                        absl::StrCat(path, ": ", stub.status().message()));
  }
  return stub;
}

absl::StatusOr<TranslateResponse> StubTranslator::DoTranslate(
    const TranslateRequest &request) {
  auto it = table_.find(TranslationKey(request.source_lang,
                                       request.target_lang, request.text));
  if (it == table_.end()) return TranslateResponse{request.text};
  return TranslateResponse{it->second};
}

absl::StatusOr<std::unique_ptr<StubTagger>> StubTagger::FromString(
    absl::string_view text, std::string default_tag) {
  auto stub = std::unique_ptr<StubTagger>(new StubTagger());
  stub->default_tag_ = std::move(default_tag);
  int line_number = 0;
  for (absl::string_view line : absl::StrSplit(text, '\n')) {
    ++line_number;
    line = absl::StripSuffix(line, "\r");
    if (absl::StripAsciiWhitespace(line).empty() || line[0] == '#') continue;
    std::vector<absl::string_view> cols = absl::StrSplit(line, '\t');
    if (cols.size() != 2 || cols[0].empty() || cols[1].empty()) {
      return absl::InvalidArgumentError(absl::StrCat(
          "tag stub line ", line_number, ": expected SURFACE<TAB>TAG"));
    }
    if (cols[0] == "@default") {
      stub->default_tag_ = std::string(cols[1]);
      continue;
    }
    if (!stub->table_.emplace(NormalizeText(cols[0]), std::string(cols[1]))
             .second) {
      return absl::AlreadyExistsError(absl::StrCat(
          "tag stub line ", line_number, ": duplicate surface '", cols[0],
          "'"));
    }
  }
  if (stub->default_tag_.empty()) {
    return absl::InvalidArgumentError("tag stub needs a default tag");
  }
  return stub;
}

absl::StatusOr<std::unique_ptr<StubTagger>> StubTagger::FromFile(
    const std::string &path, std::string default_tag) {
  absl::StatusOr<std::string> text = ReadFileToString(path);
  if (!text.ok()) return text.status();
  absl::StatusOr<std::unique_ptr<StubTagger>> stub =
      FromString(*text, std::move(default_tag));
  if (!stub.ok()) {
    return absl::Status(stub.status().code(),
                        absl::StrCat(path, ": ", stub.status().message()));
  }
  return stub;
}

absl::StatusOr<TagResponse> StubTagger::DoTag(const TagRequest &request) {
  TagResponse response;
  for (const std::string &token : request.tokens) {
    auto it = table_.find(NormalizeText(token));
    response.tags.push_back(it == table_.end() ? default_tag_ : it->second);
  }
  return response;
}

}  // namespace azp
