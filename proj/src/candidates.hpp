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

#include <vector>

#include "network.hpp"

namespace daoc {

/// Per-node clustering-candidate state for one agglomeration iteration.
struct CandidateState {
  /// Maximal non-negative pairwise gain towards a neighbor; -1 when every
  /// neighbor gain is negative or the node has no neighbors.
  double best_gain = -1.0;
  /// Neighbors attaining best_gain within the gain tolerance, ascending.
  /// After mutual reduction every listed candidate lists this node back.
  std::vector<NodeId> candidates;
  /// Set when the node is deferred to the next iteration.
  bool propagated = false;
};

/// Phase 1: for every node, the maximal-gain neighbors. Zero-gain neighbors
/// are kept as candidates; ties within the gain tolerance are all retained;
/// self-loops never enter the search.
std::vector<CandidateState> identify_candidates(const Network& net);

/// Phase 2: mutual reduction. Filters every candidate list against a
/// snapshot of the phase-1 lists, keeping j in ccs(i) only when i is in
/// ccs(j); nodes left without candidates (or with no non-negative gain) are
/// marked propagated. Reading only the immutable snapshot keeps the result
/// independent of the node order.
void reduce_to_mutual(std::vector<CandidateState>& states);

}  // namespace daoc
