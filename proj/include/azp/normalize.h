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

#ifndef AZP_NORMALIZE_H_
#define AZP_NORMALIZE_H_

#include <map>
#include <set>
#include <string>
#include "absl/strings/string_view.h"

namespace azp {

// Arabic orthographic normalization applied to every text before tagging.
//
// The default configuration maps the hamzated and madda alif forms
// (U+0623, U+0625, U+0622) to bare alif (U+0627) and strips the eight
// harakat U+064B..U+0652. Superscript alef (U+0670) and tatweel (U+0640)
// are left alone unless added to `diacritics`.
struct NormalizationConfig {
  std::map<char32_t, char32_t> alif_map;
  std::set<char32_t> diacritics;

  static NormalizationConfig Default();

  // Default() plus U+0670 and U+0640 in the strip set.
  static NormalizationConfig Extended();
};

// Total, idempotent, and never lengthens the input. Code points outside the
// configuration pass through in order.
std::string NormalizeText(absl::string_view text,
                          const NormalizationConfig &config);

// Shorthand using a process-wide default configuration.
std::string NormalizeText(absl::string_view text);

}  // namespace azp

#endif  // AZP_NORMALIZE_H_
