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
#include <string>
#include <vector>

#include "clustering.hpp"
#include "network.hpp"

namespace daoc {

/// Removes floor(fraction * link_count) links chosen uniformly at random
/// (seeded), rejecting any removal that would leave an endpoint without
/// links. Weights are never modified and no links are created; self-loops
/// are not removal candidates. Labels are preserved. Throws Infeasible with
/// the achieved count when the degree constraint blocks the target.
Network perturb(const Network& net, double fraction, std::uint64_t seed);

struct ProtocolStage {
  int stage = 0;           // 0 is the unperturbed baseline
  double fraction = 0.0;   // cumulative removed fraction of the original links
  double f1h_mean = 0.0;   // F1h vs the previous stage, middle level, over shuffles
  double f1h_std = 0.0;
  double runtime_ms = 0.0;
  Clustering middle;       // this stage's middle-level clustering (canonical run)
};

/// The stability protocol: link removal in cumulative steps of 1%, 3%, ...,
/// 15% of the original link count. Every stage is clustered from `shuffles`
/// seeded reorderings of its serialized input and the middle hierarchy level
/// is scored with F1h against the previous stage's middle level; the mean
/// and standard deviation over the reorderings are reported (zero deviation
/// for a deterministic engine). Stage 0 scores the shuffled baseline against
/// the canonical baseline.
std::vector<ProtocolStage> run_stability_protocol(const Network& net, unsigned shuffles,
                                                  std::uint64_t seed);

/// CSV rendering: header + one row per stage.
std::string protocol_csv(const std::vector<ProtocolStage>& stages);

/// Middle level of an L-level hierarchy: index floor(L/2), 0-based from the
/// bottom.
inline std::size_t middle_level(std::size_t level_count) { return level_count / 2; }

}  // namespace daoc
