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

#include <span>

#include "clustering.hpp"
#include "network.hpp"

namespace daoc {

/// Modularity of a non-overlapping, complete clustering:
///   Q = (1/2w) * sum_C ( intra_C - vol_C^2 / (2w) )
/// where intra_C accumulates twice the internal link and self-loop weight and
/// vol_C the node weights. Q is 0 for the whole network in one cluster and
/// bounded by [-0.5, 1). Overlapping or incomplete input raises Unsupported /
/// InvalidArgument; overlaps must be evaluated on the decomposed network.
double modularity(const Network& net, const Clustering& cl);

/// Modularity of an id-indexed partition (cluster_of[i] = cluster of node i).
double modularity_partition(const Network& net, std::span<const std::uint32_t> cluster_of);

/// Modularity with every node in its own cluster.
double singleton_modularity(const Network& net);

/// Change of modularity when merging two singletons i and j:
///   dQ = (pair_weight(i,j) - w_i * w_j / w) / (2w).
/// Defined for non-adjacent pairs as well (pure density penalty); i == j is
/// an error. Symmetric in its arguments.
double modularity_gain(const Network& net, NodeId i, NodeId j);

/// Gain of merging {i} + candidates into one cluster starting from
/// singletons: the sum of pairwise gains over all unordered pairs.
double joint_merge_gain(const Network& net, NodeId i, std::span<const NodeId> candidates);

/// Accumulated gain of splitting i into K = |candidates| fragments and
/// merging each fragment with its own candidate. Fragments carry node weight
/// w_i / K and a link share link(i,c) / K to their candidate; severed
/// inter-fragment links count as inter-cluster and contribute no gain.
/// Requires K >= 2.
double split_merge_gain(const Network& net, NodeId i, std::span<const NodeId> candidates);

}  // namespace daoc
