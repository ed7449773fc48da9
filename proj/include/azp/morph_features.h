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

#ifndef AZP_MORPH_FEATURES_H_
#define AZP_MORPH_FEATURES_H_

#include <optional>
#include <string>
#include "absl/strings/string_view.h"

namespace azp {

enum class Number { kSingular, kDual, kPlural, kUnknown };
enum class Gender { kMasculine, kFeminine, kUnknown };
enum class Person { kFirst, kSecond, kThird, kUnknown };

// Agreement bundle for a verb or a mention. `kUnknown` marks an
// inconclusive analysis, never a deliberate wildcard.
struct MorphFeatures {
  Number number = Number::kUnknown;
  Gender gender = Gender::kUnknown;
  Person person = Person::kUnknown;

  bool operator==(const MorphFeatures &) const = default;
};

absl::string_view NumberName(Number number);
absl::string_view GenderName(Gender gender);
absl::string_view PersonName(Person person);
std::optional<Number> ParseNumber(absl::string_view name);
std::optional<Gender> ParseGender(absl::string_view name);
std::optional<Person> ParsePerson(absl::string_view name);

std::string DebugString(const MorphFeatures &features);

}  // namespace azp

#endif  // AZP_MORPH_FEATURES_H_
