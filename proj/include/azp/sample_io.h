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

#ifndef AZP_SAMPLE_IO_H_
#define AZP_SAMPLE_IO_H_

#include <string>
#include "absl/strings/string_view.h"
#include <vector>

#include "absl/status/statusor.h"
#include "azp/corpus.h"

namespace azp {

// Sample files hold one JSON object per line with exactly these keys:
// id, method, ant_tokens, ant_pos, azp_tokens, azp_pos, gap_index,
// verb_index, ant_start, ant_end, number, gender, source. `source` is
// {"corpus": str, "document": str, "sentence": int}.
std::string SampleToLine(const AzpSample &sample);

// `record` is the 1-based record number used in error messages.
absl::StatusOr<AzpSample> SampleFromLine(absl::string_view line, int record);

std::string SerializeSamples(const std::vector<AzpSample> &samples);
absl::StatusOr<std::vector<AzpSample>> ParseSamples(absl::string_view text);

absl::StatusOr<std::vector<AzpSample>> ReadSamples(const std::string &path);
absl::Status WriteSamples(const std::vector<AzpSample> &samples,
                          const std::string &path);

}  // namespace azp

#endif  // AZP_SAMPLE_IO_H_
