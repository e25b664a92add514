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

#include "decompose.hpp"

#include <algorithm>

namespace daoc {

std::vector<Fragment> split_node(const Network& net, NodeId i, unsigned parts) {
  if (parts < 2) throw InvalidArgument("decomposition requires at least two fragments");
  const double k = static_cast<double>(parts);
  const double self = net.self_weight(i);
  Fragment proto;
  proto.origin = i;
  proto.weight = self / (k * k);
  proto.inter_fragment_weight = 2.0 * self / (k * k);
  const auto nbrs = net.neighbors(i);
  proto.links.reserve(nbrs.size());
  for (const Arc& arc : nbrs) proto.links.push_back({arc.dst, arc.weight / k});

  std::vector<Fragment> fragments(parts, proto);
  for (unsigned f = 0; f < parts; ++f) fragments[f].index = f;
  return fragments;
}

bool split_admissible(std::size_t degree, std::size_t parts) {
  if (parts < 2 || parts > degree) return false;
  const std::size_t created = parts * (degree - parts) + parts * (parts - 1) / 2;
  return created <= degree;
}

std::vector<NodeId> max_shared_candidates(const std::vector<CandidateState>& states, NodeId i) {
  const auto& ccs = states[i].candidates;
  std::vector<NodeId> best;
  if (ccs.size() < 2) return best;

  std::size_t max_shared = 0;
  for (NodeId c : ccs) {
    const auto& other = states[c].candidates;
    // Both lists are ascending; count the intersection by merging.
    std::size_t shared = 0, a = 0, b = 0;
    while (a < ccs.size() && b < other.size()) {
      if (ccs[a] < other[b]) {
        ++a;
      } else if (other[b] < ccs[a]) {
        ++b;
      } else {
        ++shared;
        ++a;
        ++b;
      }
    }
    if (shared > max_shared) {
      max_shared = shared;
      best.clear();
      best.push_back(c);
    } else if (shared == max_shared && max_shared > 0) {
      best.push_back(c);
    }
  }
  const std::size_t threshold = (ccs.size() + 1) / 2;  // ceil(|ccs|/2)
  if (max_shared < threshold) best.clear();
  return best;
}

}  // namespace daoc
