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

#include "candidates.hpp"
#include "network.hpp"

namespace daoc {

/// One of the K virtual nodes a node is decomposed into. With self-weight s
/// of the origin, every fragment carries weight s/K^2, every fragment pair is
/// linked with weight 2s/K^2 and every external link is split equally into
/// K shares, which makes the decomposition mass-preserving and neutral for
/// modularity: regrouping the K fragments into one cluster restores the
/// original singleton contribution exactly. Fragments are transient; they
/// are never materialized into a persistent Network.
struct Fragment {
  NodeId origin = kInvalidNode;
  unsigned index = 0;              // 0..K-1
  double weight = 0.0;             // self-weight s/K^2
  double inter_fragment_weight = 0.0;  // link to each sibling, 2s/K^2
  std::vector<Arc> links;          // external link shares, ascending dst
};

/// Decomposes a node into `parts` >= 2 fragments.
std::vector<Fragment> split_node(const Network& net, NodeId i, unsigned parts);

/// Complexity-preserving admissibility of splitting a node of the given
/// structural degree into `parts` fragments: the links created by the split
/// (shares to non-candidate neighbors plus inter-fragment links) must not
/// exceed the degree, i.e. parts*(degree-parts) + parts*(parts-1)/2 <= degree
/// with 2 <= parts <= degree. Exactly (2,2), (2,3) and (3,3) qualify.
bool split_admissible(std::size_t degree, std::size_t parts);

/// Fallback for inadmissible splits: among the mutual candidates of i, the
/// ones whose own candidate list shares the most members with ccs(i),
/// provided that maximum reaches ceil(|ccs(i)|/2); ties are all retained.
/// Empty result when the threshold is missed. Requires |ccs(i)| >= 2 and a
/// completed mutual reduction.
std::vector<NodeId> max_shared_candidates(const std::vector<CandidateState>& states, NodeId i);

}  // namespace daoc
