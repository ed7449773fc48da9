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

#ifndef AZP_PROVIDERS_H_
#define AZP_PROVIDERS_H_

#include <atomic>
#include <chrono>
#include <map>
#include <memory>
#include <mutex>
#include <semaphore>
#include <string>
#include "absl/strings/string_view.h"
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace azp {

// Marker substituted for the masked token in stub contexts.
inline constexpr absl::string_view kMaskMarker = "[MASK]";

struct MaskRequest {
  std::vector<std::string> tokens;
  int mask_index = 0;
  int top_k = 5;
};

struct MaskCandidate {
  std::string token;
  double score = 0.0;

  bool operator==(const MaskCandidate &) const = default;
};

// Candidates sorted by score descending, each score in (0, 1].
struct MaskResponse {
  std::vector<MaskCandidate> candidates;
};

struct TranslateRequest {
  std::string text;
  std::string source_lang;
  std::string target_lang;
};

struct TranslateResponse {
  std::string text;
};

struct TagRequest {
  std::vector<std::string> tokens;
};

struct TagResponse {
  std::vector<std::string> tags;
};

absl::Status ValidateMaskRequest(const MaskRequest &request);
absl::Status ValidateMaskResponse(const MaskRequest &request,
                                  const MaskResponse &response);
absl::Status ValidateTranslateRequest(const TranslateRequest &request);
absl::Status ValidateTagResponse(const TagRequest &request,
                                 const TagResponse &response);

// Unavailable and DeadlineExceeded are retryable; everything else is
// permanent.
bool IsTransient(const absl::Status &status);

// Base for the three capability clients. The public entry points validate
// request and response and count calls; subclasses implement the Do*
// hooks. Handles are safe to share between threads.
class ProviderBase {
 public:
  virtual ~ProviderBase() = default;
  int64_t calls() const { return calls_.load(); }

 protected:
  void CountCall() { calls_.fetch_add(1); }

 private:
  std::atomic<int64_t> calls_{0};
};

class MaskedLmProvider : public ProviderBase {
 public:
  absl::StatusOr<MaskResponse> MaskTopK(const MaskRequest &request);

 protected:
  virtual absl::StatusOr<MaskResponse> DoMaskTopK(
      const MaskRequest &request) = 0;
};

class TranslationProvider : public ProviderBase {
 public:
  absl::StatusOr<TranslateResponse> Translate(const TranslateRequest &request);

 protected:
  virtual absl::StatusOr<TranslateResponse> DoTranslate(
      const TranslateRequest &request) = 0;
};

class TaggingProvider : public ProviderBase {
 public:
  absl::StatusOr<TagResponse> Tag(const TagRequest &request);

 protected:
  virtual absl::StatusOr<TagResponse> DoTag(const TagRequest &request) = 0;
};

// Stable key for a masked context: SHA-256 of the normalized,
// whitespace-collapsed sentence with the masked token replaced by [MASK].
std::string MaskContextKey(const std::vector<std::string> &tokens,
                           int mask_index);
std::string MaskContextKey(absl::string_view context_with_marker);

// File-backed masked-LM. JSON lines:
//   {"context": "... [MASK] ...", "candidates": [["token", 0.4], ...]}
// Unsorted or out-of-range scores are rejected at load time. Unknown
// contexts yield no candidates.
class StubMaskedLm : public MaskedLmProvider {
 public:
  static absl::StatusOr<std::unique_ptr<StubMaskedLm>> FromFile(
      const std::string &path);
  static absl::StatusOr<std::unique_ptr<StubMaskedLm>> FromString(
      absl::string_view text);

 protected:
  absl::StatusOr<MaskResponse> DoMaskTopK(const MaskRequest &request) override;

 private:
  std::map<std::string, std::vector<MaskCandidate>> table_;
};

// File-backed translator. JSON lines:
//   {"source": "ar", "target": "en", "text": "...", "translation": "..."}
// Texts without an entry are returned unchanged, so an empty table is the
// identity translator.
class StubTranslator : public TranslationProvider {
 public:
  static std::unique_ptr<StubTranslator> Identity();
  static absl::StatusOr<std::unique_ptr<StubTranslator>> FromFile(
      const std::string &path);
  static absl::StatusOr<std::unique_ptr<StubTranslator>> FromString(
      absl::string_view text);

 protected:
  absl::StatusOr<TranslateResponse> DoTranslate(
      const TranslateRequest &request) override;

 private:
  std::map<std::string, std::string> table_;
};

// Surface-to-tag table. Lines are SURFACE<TAB>TAG; a "@default<TAB>TAG"
// line replaces the fallback tag for unknown surfaces.
class StubTagger : public TaggingProvider {
 public:
  static absl::StatusOr<std::unique_ptr<StubTagger>> FromFile(
      const std::string &path, std::string default_tag = "NN");
  static absl::StatusOr<std::unique_ptr<StubTagger>> FromString(
      absl::string_view text, std::string default_tag = "NN");

 protected:
  absl::StatusOr<TagResponse> DoTag(const TagRequest &request) override;

 private:
  std::map<std::string, std::string> table_;
  std::string default_tag_;
};

// Token bucket shared by all calls through one client. A rate of zero or
// less disables limiting.
class RateLimiter {
 public:
  RateLimiter(double per_second, double burst);
  void Acquire();

 private:
  using Clock = std::chrono::steady_clock;
  std::mutex mu_;
  double rate_;
  double burst_;
  double tokens_;
  Clock::time_point last_;
};

struct HttpOptions {
  int max_retries = 4;
  std::chrono::milliseconds initial_backoff{100};
  std::chrono::milliseconds max_backoff{2000};
  std::chrono::milliseconds timeout{10000};
  double requests_per_second = 10.0;
  int max_in_flight = 4;
};

// JSON-over-HTTP transport for the /v1/mask, /v1/translate and /v1/tag
// paths, with capped exponential backoff on transient failures.
class HttpTransport {
 public:
  HttpTransport(std::string base_url, HttpOptions options);

  // POSTs `body` to `path`. Transport errors and 5xx responses are
  // retried; 4xx responses fail permanently.
  absl::StatusOr<std::string> Post(absl::string_view path,
                                   const std::string &body);

 private:
  absl::StatusOr<std::string> PostOnce(absl::string_view path,
                                       const std::string &body);

  std::string base_url_;
  HttpOptions options_;
  RateLimiter limiter_;
  std::counting_semaphore<1024> in_flight_;
};

class HttpMaskedLm : public MaskedLmProvider {
 public:
  HttpMaskedLm(std::string base_url, HttpOptions options = {})
      : transport_(std::move(base_url), options) {}

 protected:
  absl::StatusOr<MaskResponse> DoMaskTopK(const MaskRequest &request) override;

 private:
  HttpTransport transport_;
};

class HttpTranslator : public TranslationProvider {
 public:
  HttpTranslator(std::string base_url, HttpOptions options = {})
      : transport_(std::move(base_url), options) {}

 protected:
  absl::StatusOr<TranslateResponse> DoTranslate(
      const TranslateRequest &request) override;

 private:
  HttpTransport transport_;
};

class HttpTagger : public TaggingProvider {
 public:
  HttpTagger(std::string base_url, HttpOptions options = {})
      : transport_(std::move(base_url), options) {}

 protected:
  absl::StatusOr<TagResponse> DoTag(const TagRequest &request) override;

 private:
  HttpTransport transport_;
};

// Endpoint resolution: an explicit flag wins, then the environment
// variable, then the config file value.
std::string ResolveEndpoint(absl::string_view flag_value,
                            const char *env_var,
                            absl::string_view config_value);

// Builds a client from "stub:PATH" (or "stub:identity" for translators) or
// an http:// URL.
absl::StatusOr<std::unique_ptr<MaskedLmProvider>> MakeMaskedLm(
    const std::string &endpoint, const HttpOptions &options = {});
absl::StatusOr<std::unique_ptr<TranslationProvider>> MakeTranslator(
    const std::string &endpoint, const HttpOptions &options = {});
absl::StatusOr<std::unique_ptr<TaggingProvider>> MakeTagger(
    const std::string &endpoint, const HttpOptions &options = {},
    std::string default_tag = "NN");

}  // namespace azp

#endif  // AZP_PROVIDERS_H_
