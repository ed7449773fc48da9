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

#include "azp/providers.h"

#include <cctype>
#include <cstdlib>

#include "absl/strings/match.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/strip.h"
#include "azp/hashing.h"
#include "azp/normalize.h"
#include "azp/utf8.h"

namespace azp {

namespace {

bool IsLanguageCode(absl::string_view code) {
  return code.size() == 2 && std::islower(static_cast<unsigned char>(code[0])) &&
         std::islower(static_cast<unsigned char>(code[1]));
}

}  // namespace

absl::Status ValidateMaskRequest(const MaskRequest &request) {
  if (request.top_k < 1) {
    return absl::InvalidArgumentError("top_k must be at least 1");
  }
  if (request.mask_index < 0 ||
      request.mask_index >= static_cast<int>(request.tokens.size())) {
    return absl::InvalidArgumentError(
        absl::StrCat("mask_index ", request.mask_index, " outside ",
                     request.tokens.size(), " tokens"));
  }
  return absl::OkStatus();
}

absl::Status ValidateMaskResponse(const MaskRequest &request,
                                  const MaskResponse &response) {
  if (static_cast<int>(response.candidates.size()) > request.top_k) {
    return absl::DataLossError(
        absl::StrCat("protocol error: ", response.candidates.size(),
                     " candidates for top_k ", request.top_k));
  }
  for (size_t i = 0; i < response.candidates.size(); ++i) {
    const MaskCandidate &c = response.candidates[i];
    if (!(c.score > 0.0 && c.score <= 1.0)) {
      return absl::DataLossError(
          absl::StrCat("protocol error: score ", c.score, " outside (0, 1]"));
    }
    if (i > 0 && c.score > response.candidates[i - 1].score) {
      return absl::DataLossError(
          "protocol error: candidates not sorted by score");
    }
    if (c.token.empty()) {
      return absl::DataLossError("protocol error: empty candidate token");
    }
  }
  return absl::OkStatus();
}

absl::Status ValidateTranslateRequest(const TranslateRequest &request) {
  if (!IsLanguageCode(request.source_lang) ||
      !IsLanguageCode(request.target_lang)) {
    return absl::InvalidArgumentError(
        absl::StrCat("language codes must be two lowercase letters: '",
                     request.source_lang, "' -> '", request.target_lang, "'"));
  }
  return absl::OkStatus();
}

absl::Status ValidateTagResponse(const TagRequest &request,
                                 const TagResponse &response) {
  if (response.tags.size() != request.tokens.size()) {
    return absl::DataLossError(
        absl::StrCat("protocol error: ", response.tags.size(), " tags for ",
                     request.tokens.size(), " tokens"));
  }
  for (const std::string &tag : response.tags) {
    if (tag.empty()) return absl::DataLossError("protocol error: empty tag");
  }
  return absl::OkStatus();
}

bool IsTransient(const absl::Status &status) {
  return absl::IsUnavailable(status) || absl::IsDeadlineExceeded(status);
}

absl::StatusOr<MaskResponse> MaskedLmProvider::MaskTopK(
    const MaskRequest &request) {
  if (absl::Status s = ValidateMaskRequest(request); !s.ok()) return s;
  CountCall();
  absl::StatusOr<MaskResponse> response = DoMaskTopK(request);
  if (!response.ok()) return response;
  if (absl::Status s = ValidateMaskResponse(request, *response); !s.ok()) {
    return s;
  }
  return response;
}

absl::StatusOr<TranslateResponse> TranslationProvider::Translate(
    const TranslateRequest &request) {
  if (absl::Status s = ValidateTranslateRequest(request); !s.ok()) return s;
  CountCall();
  return DoTranslate(request);
}

absl::StatusOr<TagResponse> TaggingProvider::Tag(const TagRequest &request) {
  CountCall();
  absl::StatusOr<TagResponse> response = DoTag(request);
  if (!response.ok()) return response;
  if (absl::Status s = ValidateTagResponse(request, *response); !s.ok()) {
    return s;
  }
  return response;
}

std::string MaskContextKey(absl::string_view context_with_marker) {
  return Sha256Hex(utf8::CollapseWhitespace(NormalizeText(context_with_marker)));
}

std::string MaskContextKey(const std::vector<std::string> &tokens,
                           int mask_index) {
  std::vector<std::string> context = tokens;
  if (mask_index >= 0 && mask_index < static_cast<int>(context.size())) {
    context[mask_index] = std::string(kMaskMarker);
  }
  return MaskContextKey(absl::StrJoin(context, " "));
}

std::string ResolveEndpoint(absl::string_view flag_value, const char *env_var,
                            absl::string_view config_value) {
  if (!flag_value.empty()) return std::string(flag_value);
  if (env_var != nullptr) {
    if (const char *env = std::getenv(env_var); env != nullptr && *env) {
      return env;
    }
  }
  return std::string(config_value);
}

namespace {

bool IsHttp(absl::string_view endpoint) {
  return absl::StartsWith(endpoint, "http://") ||
         absl::StartsWith(endpoint, "https://");
}

absl::Status BadEndpoint(absl::string_view endpoint) {
  return absl::InvalidArgumentError(absl::StrCat(
      "endpoint must be stub:PATH or an http(s) URL, got '", endpoint, "'"));
}

}  // namespace

absl::StatusOr<std::unique_ptr<MaskedLmProvider>> MakeMaskedLm(
    const std::string &endpoint, const HttpOptions &options) {
  absl::string_view rest = endpoint;
  if (absl::ConsumePrefix(&rest, "stub:")) {
    absl::StatusOr<std::unique_ptr<StubMaskedLm>> stub =
        StubMaskedLm::FromFile(std::string(rest));
    if (!stub.ok()) return stub.status();
    return std::unique_ptr<MaskedLmProvider>(*std::move(stub));
  }
  if (IsHttp(endpoint)) {
    return std::unique_ptr<MaskedLmProvider>(
        std::make_unique<HttpMaskedLm>(endpoint, options));
  }
  return BadEndpoint(endpoint);
}

absl::StatusOr<std::unique_ptr<TranslationProvider>> MakeTranslator(
    const std::string &endpoint, const HttpOptions &options) {
  absl::string_view rest = endpoint;
  if (absl::ConsumePrefix(&rest, "stub:")) {
    if (rest == "identity") {
      return std::unique_ptr<TranslationProvider>(StubTranslator::Identity());
    }
    absl::StatusOr<std::unique_ptr<StubTranslator>> stub =
        StubTranslator::FromFile(std::string(rest));
    if (!stub.ok()) return stub.status();
    return std::unique_ptr<TranslationProvider>(*std::move(stub));
  }
  if (IsHttp(endpoint)) {
    return std::unique_ptr<TranslationProvider>(
        std::make_unique<HttpTranslator>(endpoint, options));
  }
  return BadEndpoint(endpoint);
}

absl::StatusOr<std::unique_ptr<TaggingProvider>> MakeTagger(
    const std::string &endpoint, const HttpOptions &options,
    std::string default_tag) {
  absl::string_view rest = endpoint;
  if (absl::ConsumePrefix(&rest, "stub:")) {
    absl::StatusOr<std::unique_ptr<StubTagger>> stub =
        StubTagger::FromFile(std::string(rest), std::move(default_tag));
    if (!stub.ok()) return stub.status();
    return std::unique_ptr<TaggingProvider>(*std::move(stub));
  }
  if (IsHttp(endpoint)) {
    return std::unique_ptr<TaggingProvider>(
        std::make_unique<HttpTagger>(endpoint, options));
  }
  return BadEndpoint(endpoint);
}

}  // namespace azp
