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

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "common.hpp"

namespace daoc {

/// One adjacency entry. `weight` is the symmetric single-counted link weight
/// between the two endpoints (an undirected unit edge has weight 1; the
/// both-direction pair weight entering the modularity gain is twice that).
struct Arc {
  NodeId dst;
  double weight;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Immutable weighted network with canonical ordering.
///
/// Nodes carry dense ids 0..n-1 assigned by ascending external label, the
/// adjacency of every node is sorted by neighbor id, and all weight
/// aggregation is performed in a fixed order, so any permutation of the same
/// input arcs builds a bit-identical Network. Self-loops represent node
/// weights and are kept out of the adjacency lists.
///
/// Weight conventions (fixed across the whole library):
///   - link(i,j): single-counted symmetric weight of the links between i, j;
///   - self(i):   accumulated self-loop weight, counted once;
///   - node weight w_i = 2*self(i) + sum_j link(i,j);
///   - total weight w = sum_i self(i) + sum_{i<j} link(i,j),
/// which makes sum_i w_i = 2w hold identically.
class Network {
 public:
  std::size_t node_count() const noexcept { return offsets_.size() - 1; }
  /// Number of links between distinct nodes (self-loops excluded).
  std::size_t link_count() const noexcept { return arcs_.size() / 2; }
  bool empty() const noexcept { return node_count() == 0; }

  double total_weight() const noexcept { return total_weight_; }
  double node_weight(NodeId i) const { return node_weight_[i]; }
  double self_weight(NodeId i) const { return self_weight_[i]; }

  /// Neighbors of i sorted by ascending id; self-loops never appear.
  std::span<const Arc> neighbors(NodeId i) const {
    return {arcs_.data() + offsets_[i], arcs_.data() + offsets_[i + 1]};
  }
  std::size_t degree(NodeId i) const { return offsets_[i + 1] - offsets_[i]; }

  /// Single-counted link weight between distinct i and j; 0 when not linked.
  double link_weight(NodeId i, NodeId j) const;
  /// Pair weight accumulated over both arc directions: 2*link(i,j) for
  /// distinct nodes, self(i) for i == j.
  double pair_weight(NodeId i, NodeId j) const;

  Label label(NodeId i) const { return labels_[i]; }
  const std::vector<Label>& labels() const noexcept { return labels_; }
  std::optional<NodeId> find_label(Label label) const;

  friend bool operator==(const Network&, const Network&) = default;

 private:
  friend class NetworkBuilder;

  std::vector<std::size_t> offsets_;  // CSR offsets, size n+1
  std::vector<Arc> arcs_;             // both directions, sorted per node
  std::vector<double> self_weight_;
  std::vector<double> node_weight_;
  std::vector<Label> labels_;         // dense id -> external label, ascending
  double total_weight_ = 0.0;
};

/// Accumulates raw arcs in any order and canonicalizes them into a Network.
/// Duplicate arcs are weight-summed; summation happens in a sorted order so
/// the result does not depend on the insertion sequence.
class NetworkBuilder {
 public:
  /// Undirected contribution: full weight added to the symmetric link.
  void add_link(Label a, Label b, double weight);
  /// Directed contribution: the arc weight lands in the symmetric aggregate,
  /// i.e. half of it on the single-counted link. A directed self-loop is
  /// accumulated like an undirected one.
  void add_arc(Label src, Label dst, double weight);
  /// Declare a node that may have no arcs (used when coarsening).
  void ensure_node(Label label);

  std::size_t raw_arc_count() const noexcept { return entries_.size(); }

  Network build() &&;

 private:
  struct Entry {
    Label a, b;  // a <= b
    double weight;
  };
  std::vector<Entry> entries_;
  std::vector<Label> isolated_;
};

/// Parses the plain-text link list: `src dst [weight]` per line, weight
/// defaults to 1, `#` starts a comment line, and an optional header line may
/// declare node/arc counts (first token `nodes`/`edges`/`arcs`/`links`).
/// For undirected input every line contributes to both directions; directed
/// input is symmetrized. With `weighted` false any weight token is ignored.
/// Throws ParseError with the offending line number; empty input is an error.
Network parse_network(std::string_view text, bool directed, bool weighted = true);

/// Reads a network file. When `directed` is not forced, the `.nsa` extension
/// selects directed parsing and everything else (`.nsl`, `.nse`, ...) is
/// undirected.
Network read_network_file(const std::filesystem::path& path,
                          std::optional<bool> directed = std::nullopt,
                          bool weighted = true);

/// Canonical serialization: one line per link and per self-loop, ascending
/// (i, j), labels preserved. Parsing it back as undirected input reproduces
/// an equal Network.
std::string serialize_network(const Network& net);

/// Seeded pseudo-random reordering of the same lines, with arc endpoints
/// randomly flipped; equal seeds give byte-identical output and any seed
/// parses back into an equal Network.
std::string serialize_shuffled(const Network& net, std::uint64_t seed);

}  // namespace daoc
