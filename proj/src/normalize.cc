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

#include "azp/normalize.h"

#include "azp/utf8.h"

namespace azp {

NormalizationConfig NormalizationConfig::Default() {
  NormalizationConfig config;
  config.alif_map = {{0x0623, 0x0627}, {0x0625, 0x0627}, {0x0622, 0x0627}};
  for (char32_t c = 0x064B; c <= 0x0652; ++c) config.diacritics.insert(c);
  return config;
}

NormalizationConfig NormalizationConfig::Extended() {
  NormalizationConfig config = Default();
  config.diacritics.insert(0x0670);
  config.diacritics.insert(0x0640);
  return config;
}

std::string NormalizeText(absl::string_view text,
                          const NormalizationConfig &config) {
  std::string out;
  out.reserve(text.size());
  for (char32_t c : utf8::Decode(text)) {
    if (config.diacritics.count(c) > 0) continue;
    auto it = config.alif_map.find(c);
    utf8::Append(it != config.alif_map.end() ? it->second : c, &out);
  }
  return out;
}

std::string NormalizeText(absl::string_view text) {
  static const NormalizationConfig *config =
      new NormalizationConfig(NormalizationConfig::Default());
  return NormalizeText(text, *config);
}

}  // namespace azp
