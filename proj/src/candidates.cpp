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

#include "candidates.hpp"

#include <algorithm>

#include "quality.hpp"

namespace daoc {

std::vector<CandidateState> identify_candidates(const Network& net) {
  const std::size_t n = net.node_count();
  std::vector<CandidateState> states(n);
  const double w = net.total_weight();
  if (w <= 0.0) return states;  // weightless network: nothing to cluster
  const double inv2w = 1.0 / (2.0 * w);

  for (NodeId i = 0; i < n; ++i) {
    CandidateState& st = states[i];
    const double wi = net.node_weight(i);
    double best = -1.0;
    for (const Arc& arc : net.neighbors(i)) {
      const double gain = (2.0 * arc.weight - wi * net.node_weight(arc.dst) / w) * inv2w;
      if (gain >= 0.0 && gain > best) best = gain;
    }
    if (best < 0.0) continue;  // sentinel stays -1, candidate list empty
    st.best_gain = best;
    for (const Arc& arc : net.neighbors(i)) {
      const double gain = (2.0 * arc.weight - wi * net.node_weight(arc.dst) / w) * inv2w;
      if (gain >= 0.0 && nearly_equal(gain, best)) st.candidates.push_back(arc.dst);
    }
  }
  return states;
}

void reduce_to_mutual(std::vector<CandidateState>& states) {
  // Snapshot of the unreduced candidate lists; all nodes are reduced against
  // the same immutable view.
  std::vector<std::vector<NodeId>> snapshot(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) snapshot[i] = states[i].candidates;

  auto lists = [&snapshot](NodeId node, NodeId member) {
    const auto& ccs = snapshot[node];
    return std::binary_search(ccs.begin(), ccs.end(), member);
  };

  for (std::size_t i = 0; i < states.size(); ++i) {
    CandidateState& st = states[i];
    if (st.best_gain < 0.0) {
      st.propagated = true;
      continue;
    }
    std::vector<NodeId> mutual;
    mutual.reserve(st.candidates.size());
    for (NodeId c : snapshot[i]) {
      if (lists(c, static_cast<NodeId>(i))) mutual.push_back(c);
    }
    st.candidates = std::move(mutual);
    if (st.candidates.empty()) st.propagated = true;
  }
}

}  // namespace daoc
