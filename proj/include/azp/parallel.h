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

#ifndef AZP_PARALLEL_H_
#define AZP_PARALLEL_H_

#include <algorithm>
#include <atomic>
#include <optional>
#include <thread>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace azp {

// Runs fn(i) for i in [0, n) on up to `workers` threads. Results keep index
// order, so output never depends on scheduling. On failure the error of the
// lowest failing index is returned.
template <typename T, typename Fn>
absl::StatusOr<std::vector<T>> ParallelMap(int n, int workers, Fn fn) {
  std::vector<std::optional<absl::StatusOr<T>>> slots(n);
  std::atomic<int> next{0};
  auto drain = [&]() {
    for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
      slots[i].emplace(fn(i));
    }
  };
  int threads = std::clamp(workers, 1, std::max(1, n));
  if (threads == 1) {
    drain();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(drain);
  }
  std::vector<T> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    if (!slots[i]->ok()) return slots[i]->status();
    out.push_back(*std::move(*slots[i]));
  }
  return out;
}

}  // namespace azp

#endif  // AZP_PARALLEL_H_
