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

#include <filesystem>
#include <vector>

#include "clustering.hpp"
#include "network.hpp"

namespace daoc {

/// A member of a formed cluster at one level. `fragment` marks a node that
/// joined through an overlap share rather than as a whole.
struct ClusterMember {
  NodeId node;
  bool fragment;

  friend bool operator==(const ClusterMember&, const ClusterMember&) = default;
};

struct LevelCluster {
  std::vector<ClusterMember> members;  // current-level input ids, ascending
  std::vector<NodeId> expansion;       // bottom-level ids, whole members first
};

struct Level {
  std::vector<LevelCluster> clusters;
  std::vector<NodeId> propagated;  // input ids carried unclustered to the next level
  double modularity = 0.0;         // projected Q of this level's grouping
  std::size_t input_node_count = 0;
};

/// Bottom-up hierarchy of (possibly overlapping) clusters, one level per
/// agglomeration iteration. The top level is completed into a full cover of
/// the bottom nodes: whatever propagates to the very end is emitted there as
/// a cluster of its own.
class Hierarchy {
 public:
  const std::vector<Level>& levels() const noexcept { return levels_; }
  std::size_t level_count() const noexcept { return levels_.size(); }
  bool empty() const noexcept { return levels_.empty(); }
  const std::vector<Label>& bottom_labels() const noexcept { return bottom_labels_; }

  /// Cluster expansions of one level as external labels, canonicalized.
  Clustering level_clustering(std::size_t index) const;
  Clustering top_clustering() const;

  /// Per-level cluster expansions, canonicalized; the shape compared by the
  /// determinism tests.
  std::vector<Clustering> signature() const;

 private:
  friend Hierarchy build_hierarchy(const Network& net);

  std::vector<Level> levels_;
  std::vector<Label> bottom_labels_;
};

/// Runs the full agglomeration: identify candidates, reduce them to mutual
/// pairs, form clusters (splitting overlaps where admissible and profitable),
/// coarsen, repeat until an iteration forms no cluster. Deterministic and
/// independent of the input arc order.
Hierarchy build_hierarchy(const Network& net);

/// Outcome of a single agglomeration iteration; exposed for white-box tests
/// of the formation and coarsening arithmetic.
struct LevelOutcome {
  bool formed = false;
  Level level;
  Network coarse;
  std::vector<std::vector<NodeId>> expansions;  // coarse node -> bottom ids
  std::vector<bool> from_cluster;               // coarse node came from a formed cluster
  std::vector<NodeId> carried_origin;           // input id for carried nodes, else invalid
};

LevelOutcome advance_level(const Network& net,
                           const std::vector<std::vector<NodeId>>& expansions,
                           std::size_t bottom_count);

/// Writes one clusters file per level (`level_<k>.cnl`, one cluster per line
/// as space-separated bottom-level labels, sorted by cluster id) plus a
/// `manifest.txt` listing the levels bottom to top. Byte-deterministic.
void write_hierarchy(const Hierarchy& h, const std::filesystem::path& directory);

}  // namespace daoc
