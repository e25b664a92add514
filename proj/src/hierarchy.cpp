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

#include "hierarchy.hpp"

#include <algorithm>
#include <cassert>
#include <cstdio>
#include <fstream>

#include "candidates.hpp"
#include "decompose.hpp"
#include "quality.hpp"

namespace daoc {

namespace {

enum class Action : std::uint8_t { kPropagate, kMerge, kSplit };

struct Decision {
  Action action = Action::kPropagate;
  std::vector<NodeId> targets;  // merge partners; for kSplit the full ccs
};

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = i;
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }

  std::size_t component_size(std::size_t x) { return size_[find(x)]; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

}  // namespace

LevelOutcome advance_level(const Network& net,
                           const std::vector<std::vector<NodeId>>& expansions,
                           std::size_t bottom_count) {
  const std::size_t n = net.node_count();
  std::vector<CandidateState> states = identify_candidates(net);
  reduce_to_mutual(states);

  // Every decision reads only the immutable candidate snapshot, so the node
  // order cannot influence which merges happen.
  std::vector<Decision> decisions(n);
  for (NodeId i = 0; i < n; ++i) {
    const CandidateState& st = states[i];
    Decision& d = decisions[i];
    if (st.propagated) continue;
    const auto& ccs = st.candidates;
    if (ccs.size() == 1) {
      d.action = Action::kMerge;
      d.targets = ccs;
      continue;
    }
    if (split_admissible(net.degree(i), ccs.size()) &&
        definitely_greater(split_merge_gain(net, i, ccs), joint_merge_gain(net, i, ccs))) {
      d.action = Action::kSplit;
      d.targets = ccs;
      continue;
    }
    std::vector<NodeId> shared = max_shared_candidates(states, i);
    if (!shared.empty()) {
      d.action = Action::kMerge;
      d.targets = std::move(shared);
      continue;
    }
    if (joint_merge_gain(net, i, ccs) >= 0.0) {
      d.action = Action::kMerge;
      d.targets = ccs;
      continue;
    }
    // Clustering would decrease the optimization function; defer the node.
  }

  // A node occupies one slot, or one slot per candidate when it splits.
  // Slot indices ascend with (node, candidate), which later makes the
  // first-encounter group numbering canonical.
  std::vector<std::size_t> slot_offset(n + 1, 0);
  for (NodeId i = 0; i < n; ++i) {
    const std::size_t count =
        decisions[i].action == Action::kSplit ? states[i].candidates.size() : 1;
    slot_offset[i + 1] = slot_offset[i] + count;
  }
  const std::size_t total_slots = slot_offset[n];
  std::vector<NodeId> slot_node(total_slots);
  for (NodeId i = 0; i < n; ++i) {
    for (std::size_t s = slot_offset[i]; s < slot_offset[i + 1]; ++s) slot_node[s] = i;
  }

  auto slot_of = [&](NodeId x, NodeId partner) -> std::size_t {
    if (decisions[x].action != Action::kSplit) return slot_offset[x];
    const auto& ccs = states[x].candidates;
    const auto it = std::lower_bound(ccs.begin(), ccs.end(), partner);
    assert(it != ccs.end() && *it == partner);  // guaranteed by mutuality
    return slot_offset[x] + static_cast<std::size_t>(it - ccs.begin());
  };

  UnionFind uf(total_slots);
  for (NodeId i = 0; i < n; ++i) {
    const Decision& d = decisions[i];
    if (d.action == Action::kMerge) {
      for (NodeId c : d.targets) uf.unite(slot_of(i, c), slot_of(c, i));
    } else if (d.action == Action::kSplit) {
      const auto& ccs = states[i].candidates;
      for (std::size_t k = 0; k < ccs.size(); ++k)
        uf.unite(slot_offset[i] + k, slot_of(ccs[k], i));
    }
  }

  // Group numbering by first encountered slot; group ids become the
  // next-level node ids, clusters and carried nodes interleaved canonically.
  std::vector<std::uint32_t> group_of_slot(total_slots);
  std::vector<std::uint32_t> group_of_root(total_slots, kInvalidNode);
  std::vector<std::size_t> group_size;
  std::uint32_t group_count = 0;
  for (std::size_t s = 0; s < total_slots; ++s) {
    const std::size_t root = uf.find(s);
    if (group_of_root[root] == kInvalidNode) {
      group_of_root[root] = group_count++;
      group_size.push_back(0);
    }
    group_of_slot[s] = group_of_root[root];
    ++group_size[group_of_slot[s]];
  }

  LevelOutcome out;
  out.formed = std::any_of(group_size.begin(), group_size.end(),
                           [](std::size_t s) { return s >= 2; });
  if (!out.formed) return out;

  // Members per group, in slot order (ascending node, fragments adjacent).
  std::vector<std::vector<ClusterMember>> members(group_count);
  for (std::size_t s = 0; s < total_slots; ++s) {
    const NodeId node = slot_node[s];
    const bool fragment = decisions[node].action == Action::kSplit;
    auto& list = members[group_of_slot[s]];
    if (!list.empty() && list.back().node == node) continue;  // several fragments, one entry
    list.push_back({node, fragment});
  }

  // Expansions: whole members first, then overlap shares, first occurrence
  // kept. The stamp array avoids per-cluster allocations.
  std::vector<std::uint32_t> stamp(bottom_count, 0);
  std::uint32_t epoch = 0;
  std::vector<std::vector<NodeId>> next_expansions(group_count);
  for (std::uint32_t g = 0; g < group_count; ++g) {
    ++epoch;
    auto& exp = next_expansions[g];
    for (int pass = 0; pass < 2; ++pass) {
      for (const ClusterMember& m : members[g]) {
        if ((pass == 1) != m.fragment) continue;
        for (NodeId b : expansions[m.node]) {
          if (stamp[b] != epoch) {
            stamp[b] = epoch;
            exp.push_back(b);
          }
        }
      }
    }
  }

  Level level;
  level.input_node_count = n;
  out.from_cluster.assign(group_count, false);
  out.carried_origin.assign(group_count, kInvalidNode);
  for (std::uint32_t g = 0; g < group_count; ++g) {
    if (group_size[g] >= 2) {
      out.from_cluster[g] = true;
      level.clusters.push_back({members[g], next_expansions[g]});
    } else {
      const NodeId node = members[g].front().node;
      assert(!members[g].front().fragment);  // fragments always pair with their candidate
      level.propagated.push_back(node);
      out.carried_origin[g] = node;
    }
  }

  // Coarsen: cluster self-weights accumulate member self-weights, internal
  // links and overlap shares; links between split fragments of one node
  // contribute to inter-cluster links when the fragments end up apart.
  NetworkBuilder builder;
  for (std::uint32_t g = 0; g < group_count; ++g) builder.ensure_node(g);
  auto parts_of = [&](NodeId i) { return slot_offset[i + 1] - slot_offset[i]; };
  for (NodeId i = 0; i < n; ++i) {
    const std::size_t ki = parts_of(i);
    const double self = net.self_weight(i);
    if (ki == 1) {
      if (self != 0.0) {
        const std::uint32_t g = group_of_slot[slot_offset[i]];
        builder.add_link(g, g, self);
      }
    } else {
      const double k = static_cast<double>(ki);
      const double fragment_self = self / (k * k);
      const double inter_fragment = 2.0 * self / (k * k);
      for (std::size_t a = 0; a < ki; ++a) {
        const std::uint32_t ga = group_of_slot[slot_offset[i] + a];
        if (fragment_self != 0.0) builder.add_link(ga, ga, fragment_self);
        if (inter_fragment != 0.0) {
          for (std::size_t b = a + 1; b < ki; ++b)
            builder.add_link(ga, group_of_slot[slot_offset[i] + b], inter_fragment);
        }
      }
    }
    for (const Arc& arc : net.neighbors(i)) {
      if (arc.dst <= i) continue;
      const std::size_t kj = parts_of(arc.dst);
      const double share = arc.weight / static_cast<double>(ki * kj);
      for (std::size_t a = 0; a < ki; ++a) {
        const std::uint32_t ga = group_of_slot[slot_offset[i] + a];
        for (std::size_t b = 0; b < kj; ++b)
          builder.add_link(ga, group_of_slot[slot_offset[arc.dst] + b], share);
      }
    }
  }
  out.coarse = std::move(builder).build();
  level.modularity = singleton_modularity(out.coarse);
  out.level = std::move(level);
  out.expansions = std::move(next_expansions);
  return out;
}

Hierarchy build_hierarchy(const Network& net) {
  Hierarchy h;
  h.bottom_labels_ = net.labels();
  const std::size_t bottom = net.node_count();
  if (bottom == 0) return h;

  Network current = net;
  std::vector<std::vector<NodeId>> expansions(bottom);
  for (NodeId i = 0; i < bottom; ++i) expansions[i] = {i};

  std::vector<bool> from_cluster;
  std::vector<NodeId> carried_origin;
  while (true) {
    LevelOutcome out = advance_level(current, expansions, bottom);
    if (!out.formed) break;
    h.levels_.push_back(std::move(out.level));
    current = std::move(out.coarse);
    expansions = std::move(out.expansions);
    from_cluster = std::move(out.from_cluster);
    carried_origin = std::move(out.carried_origin);
    if (h.levels_.size() > bottom)
      throw std::logic_error("agglomeration exceeded the node-count level bound");
  }

  // Whatever is still carried after the last formed level becomes its own
  // cluster at the top, making the top level a complete cover.
  if (!h.levels_.empty()) {
    Level& top = h.levels_.back();
    for (std::size_t g = 0; g < from_cluster.size(); ++g) {
      if (from_cluster[g]) continue;
      top.clusters.push_back(
          {{{carried_origin[g], false}}, expansions[g]});
    }
  }
  return h;
}

Clustering Hierarchy::level_clustering(std::size_t index) const {
  if (index >= levels_.size()) throw InvalidArgument("level index out of range");
  Clustering cl;
  cl.clusters.reserve(levels_[index].clusters.size());
  for (const LevelCluster& c : levels_[index].clusters) {
    std::vector<Label> labels;
    labels.reserve(c.expansion.size());
    for (NodeId b : c.expansion) labels.push_back(bottom_labels_[b]);
    cl.clusters.push_back(std::move(labels));
  }
  cl.canonicalize();
  return cl;
}

Clustering Hierarchy::top_clustering() const {
  if (levels_.empty()) return Clustering{};
  return level_clustering(levels_.size() - 1);
}

std::vector<Clustering> Hierarchy::signature() const {
  std::vector<Clustering> sig;
  sig.reserve(levels_.size());
  for (std::size_t i = 0; i < levels_.size(); ++i) sig.push_back(level_clustering(i));
  return sig;
}

void write_hierarchy(const Hierarchy& h, const std::filesystem::path& directory) {
  std::error_code ec;
  std::filesystem::create_directories(directory, ec);
  if (ec) throw IoError("cannot create directory " + directory.string());

  std::string manifest = "levels " + std::to_string(h.level_count()) + "\n";
  for (std::size_t idx = 0; idx < h.level_count(); ++idx) {
    const Level& level = h.levels()[idx];
    char name[32];
    std::snprintf(name, sizeof(name), "level_%03zu.cnl", idx + 1);

    // Lines sorted by cluster id (minimal bottom-level label), whole members
    // leading so an overlap-owning node trails its hosts.
    struct Line {
      Label id;
      std::vector<Label> labels;
    };
    std::vector<Line> lines;
    lines.reserve(level.clusters.size());
    for (const LevelCluster& c : level.clusters) {
      Line line;
      line.labels.reserve(c.expansion.size());
      for (NodeId b : c.expansion) line.labels.push_back(h.bottom_labels()[b]);
      line.id = *std::min_element(line.labels.begin(), line.labels.end());
      lines.push_back(std::move(line));
    }
    std::sort(lines.begin(), lines.end(),
              [](const Line& a, const Line& b) { return std::tie(a.id, a.labels) <
                                                        std::tie(b.id, b.labels); });

    const std::filesystem::path file = directory / name;
    std::ofstream out(file, std::ios::binary);
    if (!out) throw IoError("cannot open " + file.string() + " for writing");
    for (const Line& line : lines) {
      for (std::size_t i = 0; i < line.labels.size(); ++i) {
        if (i) out << ' ';
        out << line.labels[i];
      }
      out << '\n';
    }
    if (!out) throw IoError("write failed: " + file.string());

    char q[64];
    std::snprintf(q, sizeof(q), "%.12g", level.modularity);
    manifest += "level " + std::to_string(idx + 1) + " file " + name + " clusters " +
                std::to_string(level.clusters.size()) + " modularity " + q + "\n";
  }
  const std::filesystem::path manifest_path = directory / "manifest.txt";
  std::ofstream out(manifest_path, std::ios::binary);
  if (!out) throw IoError("cannot open " + manifest_path.string() + " for writing");
  out << manifest;
  if (!out) throw IoError("write failed: " + manifest_path.string());
}

}  // namespace daoc
