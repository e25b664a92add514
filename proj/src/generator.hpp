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

#include <cstdint>
#include <utility>

#include "clustering.hpp"
#include "network.hpp"

namespace daoc {

struct PlantedNetwork {
  Network network;
  Clustering truth;
};

/// Seeded planted-partition benchmark graph: `communities` equal blocks over
/// n nodes (labels 0..n-1), unit-weight links drawn independently with
/// probability p_in inside a block and p_out across blocks. Every block is
/// patched into a connected subgraph when the draw leaves it fragmented,
/// so each node keeps at least one link. Requires 0 <= p_out < p_in <= 1 and
/// communities dividing n.
PlantedNetwork planted_partition(std::size_t n, std::size_t communities, double p_in,
                                 double p_out, std::uint64_t seed);

/// Convenience wrapper targeting an average degree: roughly 70% of a node's
/// links stay inside its community.
PlantedNetwork planted_partition_avg_degree(std::size_t n, std::size_t communities,
                                            double avg_degree, std::uint64_t seed);

}  // namespace daoc
