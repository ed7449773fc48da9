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
#include <thread>

#include "absl/strings/str_cat.h"
#include "azp/providers.h"
#include "httplib.h"
#include "json.hpp"

namespace azp {

namespace {

using nlohmann::json;

// Releases an in-flight slot on scope exit.
class SlotGuard {
 public:
  explicit SlotGuard(std::counting_semaphore<1024> *sem) : sem_(sem) {
    sem_->acquire();
  }
  ~SlotGuard() { sem_->release(); }
  SlotGuard(const SlotGuard &) = delete;
  SlotGuard &operator=(const SlotGuard &) = delete;

 private:
  std::counting_semaphore<1024> *sem_;
};

absl::StatusOr<json> ParseBody(const std::string &body) {
  json j = json::parse(body, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    return absl::DataLossError("protocol error: response is not a JSON object");
  }
  return j;
}

}  // namespace

RateLimiter::RateLimiter(double per_second, double burst)
    : rate_(per_second),
      burst_(std::max(1.0, burst)),
      tokens_(std::max(1.0, burst)),
      last_(Clock::now()) {}

void RateLimiter::Acquire() {
  if (rate_ <= 0.0) return;
  std::unique_lock<std::mutex> lock(mu_);
  for (;;) {
    Clock::time_point now = Clock::now();
    std::chrono::duration<double> elapsed = now - last_;
    last_ = now;
    tokens_ = std::min(burst_, tokens_ + elapsed.count() * rate_);
    if (tokens_ >= 1.0) {
      tokens_ -= 1.0;
      return;
    }
    auto wait = std::chrono::duration<double>((1.0 - tokens_) / rate_);
    lock.unlock();
    std::this_thread::sleep_for(wait);
    lock.lock();
  }
}

HttpTransport::HttpTransport(std::string base_url, HttpOptions options)
    : base_url_(std::move(base_url)),
      options_(options),
      limiter_(options.requests_per_second, options.requests_per_second),
      in_flight_(std::clamp(options.max_in_flight, 1, 1024)) {}

absl::StatusOr<std::string> HttpTransport::PostOnce(absl::string_view path,
                                                    const std::string &body) {
  SlotGuard slot(&in_flight_);
  limiter_.Acquire();
  httplib::Client client(base_url_);
  auto seconds = std::chrono::duration_cast<std::chrono::seconds>(options_.timeout);
  auto micros = std::chrono::duration_cast<std::chrono::microseconds>(
      options_.timeout - seconds);
  client.set_connection_timeout(seconds.count(), micros.count());
  client.set_read_timeout(seconds.count(), micros.count());
  client.set_write_timeout(seconds.count(), micros.count());
  httplib::Result result =
      client.Post(std::string(path), body, "application/json");
  if (!result) {
    return absl::UnavailableError(absl::StrCat(
        "request to ", base_url_, path, " failed: ",
        httplib::to_string(result.error())));
  }
  if (result->status >= 500) {
    return absl::UnavailableError(absl::StrCat(
        base_url_, path, " returned ", result->status, ": ", result->body));
  }
  if (result->status >= 400) {
    return absl::InvalidArgumentError(absl::StrCat(
        base_url_, path, " rejected request (", result->status,
        "): ", result->body));
  }
  if (result->status != 200) {
    return absl::DataLossError(absl::StrCat("protocol error: unexpected status ",
                                            result->status));
  }
  return result->body;
}

absl::StatusOr<std::string> HttpTransport::Post(absl::string_view path,
                                                const std::string &body) {
  std::chrono::milliseconds backoff = options_.initial_backoff;
  absl::Status last;
  for (int attempt = 0; attempt <= options_.max_retries; ++attempt) {
    absl::StatusOr<std::string> response = PostOnce(path, body);
    if (response.ok() || !IsTransient(response.status())) return response;
    last = response.status();
    if (attempt == options_.max_retries) break;
    std::this_thread::sleep_for(backoff);
    backoff = std::min(backoff * 2, options_.max_backoff);
  }
  return absl::UnavailableError(absl::StrCat(
      "gave up after ", options_.max_retries + 1, " attempts: ",
      last.message()));
}

absl::StatusOr<MaskResponse> HttpMaskedLm::DoMaskTopK(
    const MaskRequest &request) {
  json body = {{"tokens", request.tokens},
               {"mask_index", request.mask_index},
               {"top_k", request.top_k}};
  absl::StatusOr<std::string> raw = transport_.Post("/v1/mask", body.dump());
  if (!raw.ok()) return raw.status();
  absl::StatusOr<json> j = ParseBody(*raw);
  if (!j.ok()) return j.status();
  if (!j->contains("candidates") || !(*j)["candidates"].is_array()) {
    return absl::DataLossError("protocol error: missing 'candidates' array");
  }
  MaskResponse response;
  for (const json &c : (*j)["candidates"]) {
    if (!c.is_object() || !c.contains("token") || !c["token"].is_string() ||
        !c.contains("score") || !c["score"].is_number()) {
      return absl::DataLossError(
          "protocol error: candidate needs string 'token' and number 'score'");
    }
    response.candidates.push_back(
        MaskCandidate{c["token"].get<std::string>(), c["score"].get<double>()});
  }
  return response;
}

absl::StatusOr<TranslateResponse> HttpTranslator::DoTranslate(
    const TranslateRequest &request) {
  json body = {{"text", request.text},
               {"source_lang", request.source_lang},
               {"target_lang", request.target_lang}};
  absl::StatusOr<std::string> raw =
      transport_.Post("/v1/translate", body.dump());
  if (!raw.ok()) return raw.status();
  absl::StatusOr<json> j = ParseBody(*raw);
  if (!j.ok()) return j.status();
  if (!j->contains("text") || !(*j)["text"].is_string()) {
    return absl::DataLossError("protocol error: missing string 'text'");
  }
  return TranslateResponse{(*j)["text"].get<std::string>()};
}

absl::StatusOr<TagResponse> HttpTagger::DoTag(const TagRequest &request) {
  json body = {{"tokens", request.tokens}};
  absl::StatusOr<std::string> raw = transport_.Post("/v1/tag", body.dump());
  if (!raw.ok()) return raw.status();
  absl::StatusOr<json> j = ParseBody(*raw);
  if (!j.ok()) return j.status();
  if (!j->contains("tags") || !(*j)["tags"].is_array()) {
    return absl::DataLossError("protocol error: missing 'tags' array");
  }
  TagResponse response;
  for (const json &tag : (*j)["tags"]) {
    if (!tag.is_string()) {
      return absl::DataLossError("protocol error: tags must be strings");
    }
    response.tags.push_back(tag.get<std::string>());
  }
  return response;
}

}  // namespace azp
