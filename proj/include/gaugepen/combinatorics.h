// Copyright 2026 The gaugepen Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <vector>

namespace gaugepen {

/// Calls fn(indices) for every increasing k-subset of {0, ..., n-1} in
/// lexicographic order. fn returns false to stop early; the return value
/// reports whether the walk ran to completion.
template <typename Fn>
bool for_each_subset(size_t n, size_t k, Fn &&fn) {
  if (k > n) {
    return true;
  }
  std::vector<size_t> idx(k);
  for (size_t i = 0; i < k; ++i) {
    idx[i] = i;
  }
  while (true) {
    if (!fn(static_cast<const std::vector<size_t> &>(idx))) {
      return false;
    }
    // Advance to the next combination.
    size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) {
      --i;
    }
    if (i == 0) {
      return true;
    }
    ++idx[i - 1];
    for (size_t j = i; j < k; ++j) {
      idx[j] = idx[j - 1] + 1;
    }
  }
}

}  // namespace gaugepen
