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

#include "oracle.hpp"

#include <vector>

namespace daoc {

namespace {

/// Depth-first enumeration of restricted growth strings in lexicographic
/// order, with incremental cluster volumes and internal weights. Keeping the
/// first maximum makes ties resolve to the lexicographically least partition.
class PartitionSearch {
 public:
  explicit PartitionSearch(const Network& net)
      : net_(net),
        n_(net.node_count()),
        w_(net.total_weight()),
        pair2_(n_ * n_, 0.0),
        assign_(n_, 0),
        volume_(n_, 0.0),
        intra2_(n_, 0.0),
        best_assign_(n_, 0) {
    for (NodeId i = 0; i < n_; ++i) {
      for (const Arc& arc : net.neighbors(i)) pair2_[i * n_ + arc.dst] = 2.0 * arc.weight;
    }
  }

  OracleResult run() {
    recurse(0, 0);
    OracleResult result;
    result.q = best_q_;
    std::vector<std::vector<Label>> groups;
    for (NodeId i = 0; i < n_; ++i) {
      const std::uint32_t c = best_assign_[i];
      if (c >= groups.size()) groups.resize(c + 1);
      groups[c].push_back(net_.label(i));
    }
    result.partition.clusters = std::move(groups);
    result.partition.canonicalize();
    return result;
  }

 private:
  void recurse(NodeId pos, std::uint32_t used) {
    if (pos == n_) {
      double q = 0.0;
      for (std::uint32_t c = 0; c < used; ++c)
        q += intra2_[c] - volume_[c] * volume_[c] / (2.0 * w_);
      q /= 2.0 * w_;
      if (q > best_q_) {
        best_q_ = q;
        best_assign_ = assign_;
      }
      return;
    }
    const std::uint32_t limit = used + 1;  // new cluster allowed as the last choice
    for (std::uint32_t c = 0; c < limit; ++c) {
      double added = 2.0 * net_.self_weight(pos);
      for (NodeId prev = 0; prev < pos; ++prev) {
        if (assign_[prev] == c) added += pair2_[pos * n_ + prev];
      }
      assign_[pos] = c;
      volume_[c] += net_.node_weight(pos);
      intra2_[c] += added;
      recurse(pos + 1, std::max(used, c + 1));
      volume_[c] -= net_.node_weight(pos);
      intra2_[c] -= added;
    }
  }

  const Network& net_;
  const NodeId n_;
  const double w_;
  std::vector<double> pair2_;
  std::vector<std::uint32_t> assign_;
  std::vector<double> volume_;
  std::vector<double> intra2_;
  std::vector<std::uint32_t> best_assign_;
  double best_q_ = -2.0;  // below the modularity lower bound
};

}  // namespace

OracleResult best_partition_exhaustive(const Network& net) {
  if (net.node_count() == 0) throw InvalidArgument("empty network");
  if (net.node_count() > kOracleNodeLimit)
    throw Unsupported("exhaustive search is limited to " + std::to_string(kOracleNodeLimit) +
                      " nodes");
  if (net.total_weight() <= 0.0)
    throw InvalidArgument("modularity requires positive total weight");
  return PartitionSearch(net).run();
}

}  // namespace daoc
