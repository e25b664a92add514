// Copyright 2026 The DAOC Authors
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

#pragma once

#include "clustering.hpp"
#include "network.hpp"

namespace daoc {

inline constexpr std::size_t kOracleNodeLimit = 10;

struct OracleResult {
  Clustering partition;
  double q = 0.0;
};

/// Exhaustive modularity maximization over all set partitions (restricted
/// growth string enumeration), for verification at desk scale. Ties return
/// the lexicographically least assignment. Unsupported beyond
/// kOracleNodeLimit nodes.
OracleResult best_partition_exhaustive(const Network& net);

}  // namespace daoc
