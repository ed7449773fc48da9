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

#ifndef AZP_TESTS_TESTING_PUBLISHED_H_
#define AZP_TESTS_TESTING_PUBLISHED_H_

#include <cstdint>

namespace azp::testing {

// Printed precision, recall and F1 of the identification and resolution
// result tables, baseline row first.
struct PublishedRow {
  const char *table;
  const char *setting;
  double p;
  double r;
  double f1;
};

inline constexpr PublishedRow kPublishedRows[] = {
    {"identification", "baseline", 60.0, 78.9, 68.2},
    {"identification", "ONP", 59.4, 79.3, 67.9},
    {"identification", "RSM", 59.8, 80.4, 68.6},
    {"identification", "MCM", 59.6, 79.8, 68.2},
    {"identification", "BT", 59.6, 80.2, 68.3},
    {"identification", "CSA", 59.3, 78.5, 67.5},
    {"resolution", "baseline", 64.4, 51.8, 57.4},
    {"resolution", "ONP", 64.8, 52.4, 57.9},
    {"resolution", "RSM", 65.6, 53.7, 59.0},
    {"resolution", "MCM", 65.3, 52.6, 58.2},
    {"resolution", "BT", 65.3, 52.9, 58.4},
    {"resolution", "CSA", 64.4, 51.6, 57.2},
};

// Per-method counts of the augmented data table and its printed total.
inline constexpr int64_t kPublishedCounts[] = {369, 1196, 736, 501, 104};
inline constexpr const char *kPublishedTotal = "2,906";

}  // namespace azp::testing

#endif  // AZP_TESTS_TESTING_PUBLISHED_H_
