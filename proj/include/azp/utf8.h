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

#ifndef AZP_UTF8_H_
#define AZP_UTF8_H_

#include <string>
#include <string_view>
#include "absl/strings/string_view.h"
#include <vector>

namespace azp {
namespace utf8 {

// Decodes UTF-8 into code points. Invalid sequences decode to U+FFFD, one
// replacement per offending byte.
std::u32string Decode(absl::string_view text);

// Encodes code points as UTF-8.
std::string Encode(std::u32string_view text);
void Append(char32_t c, std::string *out);

// Number of code points in a UTF-8 string.
size_t Length(absl::string_view text);

bool IsSpace(char32_t c);

// Splits on Unicode whitespace, dropping empty pieces.
std::vector<std::string> SplitWhitespace(absl::string_view text);

// Collapses whitespace runs to a single ASCII space and trims both ends.
std::string CollapseWhitespace(absl::string_view text);

}  // namespace utf8
}  // namespace azp

#endif  // AZP_UTF8_H_
