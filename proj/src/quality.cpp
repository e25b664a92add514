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

#include "quality.hpp"

#include <algorithm>
#include <vector>

namespace daoc {

double modularity_partition(const Network& net, std::span<const std::uint32_t> cluster_of) {
  const std::size_t n = net.node_count();
  if (cluster_of.size() != n) throw InvalidArgument("partition size does not match network");
  const double w = net.total_weight();
  if (w <= 0.0) throw InvalidArgument("modularity requires positive total weight");

  std::uint32_t num_clusters = 0;
  for (std::uint32_t c : cluster_of) num_clusters = std::max(num_clusters, c + 1);
  std::vector<double> volume(num_clusters, 0.0);
  std::vector<double> intra2(num_clusters, 0.0);  // 2 * internal weight
  for (NodeId i = 0; i < n; ++i) {
    const std::uint32_t c = cluster_of[i];
    volume[c] += net.node_weight(i);
    intra2[c] += 2.0 * net.self_weight(i);
    for (const Arc& arc : net.neighbors(i)) {
      if (arc.dst > i && cluster_of[arc.dst] == c) intra2[c] += 2.0 * arc.weight;
    }
  }
  double q = 0.0;
  for (std::uint32_t c = 0; c < num_clusters; ++c) {
    q += intra2[c] - volume[c] * volume[c] / (2.0 * w);
  }
  return q / (2.0 * w);
}

double modularity(const Network& net, const Clustering& cl) {
  if (cl.empty()) throw InvalidArgument("empty clustering");
  std::vector<std::uint32_t> cluster_of(net.node_count(), kInvalidNode);
  for (std::size_t c = 0; c < cl.clusters.size(); ++c) {
    for (Label label : cl.clusters[c]) {
      const auto id = net.find_label(label);
      if (!id) throw InvalidArgument("cluster member " + std::to_string(label) +
                                     " is not a node of the network");
      if (cluster_of[*id] != kInvalidNode)
        throw Unsupported(
            "overlapping clustering; evaluate overlaps on the decomposed network");
      cluster_of[*id] = static_cast<std::uint32_t>(c);
    }
  }
  for (NodeId i = 0; i < net.node_count(); ++i) {
    if (cluster_of[i] == kInvalidNode)
      throw InvalidArgument("incomplete clustering: node " + std::to_string(net.label(i)) +
                            " is unassigned");
  }
  return modularity_partition(net, cluster_of);
}

double singleton_modularity(const Network& net) {
  const double w = net.total_weight();
  if (w <= 0.0) throw InvalidArgument("modularity requires positive total weight");
  double q = 0.0;
  for (NodeId i = 0; i < net.node_count(); ++i) {
    const double wi = net.node_weight(i);
    q += 2.0 * net.self_weight(i) - wi * wi / (2.0 * w);
  }
  return q / (2.0 * w);
}

double modularity_gain(const Network& net, NodeId i, NodeId j) {
  if (i == j) throw InvalidArgument("modularity gain requires two distinct items");
  const double w = net.total_weight();
  return (net.pair_weight(i, j) - net.node_weight(i) * net.node_weight(j) / w) / (2.0 * w);
}

double joint_merge_gain(const Network& net, NodeId i, std::span<const NodeId> candidates) {
  if (candidates.empty()) throw InvalidArgument("no candidates to merge");
  double gain = 0.0;
  for (std::size_t a = 0; a < candidates.size(); ++a) {
    gain += modularity_gain(net, i, candidates[a]);
    for (std::size_t b = a + 1; b < candidates.size(); ++b)
      gain += modularity_gain(net, candidates[a], candidates[b]);
  }
  return gain;
}

double split_merge_gain(const Network& net, NodeId i, std::span<const NodeId> candidates) {
  const std::size_t parts = candidates.size();
  if (parts < 2) throw InvalidArgument("splitting requires at least two candidates");
  const double w = net.total_weight();
  const double fragment_weight = net.node_weight(i) / static_cast<double>(parts);
  double gain = 0.0;
  for (NodeId c : candidates) {
    const double share = net.link_weight(i, c) / static_cast<double>(parts);
    gain += (2.0 * share - fragment_weight * net.node_weight(c) / w) / (2.0 * w);
  }
  return gain;
}

}  // namespace daoc
