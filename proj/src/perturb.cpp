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

#include "perturb.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>

#include "hierarchy.hpp"
#include "metrics.hpp"
#include "prng.hpp"

namespace daoc {

namespace {

struct Edge {
  NodeId a, b;
};

std::vector<Edge> undirected_edges(const Network& net) {
  std::vector<Edge> edges;
  edges.reserve(net.link_count());
  for (NodeId i = 0; i < net.node_count(); ++i) {
    for (const Arc& arc : net.neighbors(i)) {
      if (arc.dst > i) edges.push_back({i, arc.dst});
    }
  }
  return edges;
}

Network remove_exact(const Network& net, std::size_t target, std::uint64_t seed) {
  const std::vector<Edge> edges = undirected_edges(net);
  if (target > edges.size()) throw InvalidArgument("cannot remove more links than exist");

  std::vector<std::size_t> order(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) order[e] = e;
  SplitMix64 rng(seed);
  shuffle(order, rng);

  std::vector<std::size_t> degree(net.node_count());
  for (NodeId i = 0; i < net.node_count(); ++i) degree[i] = net.degree(i);

  std::vector<bool> removed(edges.size(), false);
  std::size_t achieved = 0;
  for (std::size_t e : order) {
    if (achieved == target) break;
    const Edge& edge = edges[e];
    // Each node must retain at least a single link. Degrees only shrink, so
    // one pass over the shuffled candidates is exhaustive.
    if (degree[edge.a] <= 1 || degree[edge.b] <= 1) continue;
    removed[e] = true;
    --degree[edge.a];
    --degree[edge.b];
    ++achieved;
  }
  if (achieved < target)
    throw Infeasible("degree constraint blocked link removal: achieved " +
                     std::to_string(achieved) + " of " + std::to_string(target));

  NetworkBuilder builder;
  for (NodeId i = 0; i < net.node_count(); ++i) {
    builder.ensure_node(net.label(i));
    if (net.self_weight(i) != 0.0)
      builder.add_link(net.label(i), net.label(i), net.self_weight(i));
  }
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (removed[e]) continue;
    builder.add_link(net.label(edges[e].a), net.label(edges[e].b),
                     net.link_weight(edges[e].a, edges[e].b));
  }
  return std::move(builder).build();
}

}  // namespace

Network perturb(const Network& net, double fraction, std::uint64_t seed) {
  if (fraction < 0.0 || fraction >= 1.0)
    throw InvalidArgument("removal fraction must be in [0, 1)");
  const auto target = static_cast<std::size_t>(
      std::floor(fraction * static_cast<double>(net.link_count())));
  return remove_exact(net, target, seed);
}

std::vector<ProtocolStage> run_stability_protocol(const Network& net, unsigned shuffles,
                                                  std::uint64_t seed) {
  if (shuffles == 0) throw InvalidArgument("at least one shuffle is required");
  const auto original_links = static_cast<double>(net.link_count());
  SplitMix64 seeder(seed);

  auto middle_clustering = [](const Network& n) {
    const Hierarchy h = build_hierarchy(n);
    if (h.empty()) {
      Clustering cl;  // nothing ever clustered; score the singleton cover
      for (Label l : n.labels()) cl.clusters.push_back({l});
      return cl;
    }
    return h.level_clustering(middle_level(h.level_count()));
  };

  std::vector<ProtocolStage> stages;
  Network current = net;
  Clustering previous_middle;

  std::size_t removed_so_far = 0;
  for (int stage = 0; stage <= 8; ++stage) {
    const auto start = std::chrono::steady_clock::now();
    // Cumulative removal of 1%, 3%, ..., 15% of the original link count.
    const double fraction = stage == 0 ? 0.0 : 0.01 * static_cast<double>(2 * stage - 1);
    if (stage > 0) {
      const auto cumulative = static_cast<std::size_t>(std::floor(fraction * original_links));
      const std::size_t step = cumulative - removed_so_far;
      current = remove_exact(current, step, seeder.fork(static_cast<std::uint64_t>(stage)).next());
      removed_so_far = cumulative;
    }

    const Clustering canonical_middle = middle_clustering(current);
    const Clustering& reference = stage == 0 ? canonical_middle : previous_middle;

    double sum = 0.0, sum_sq = 0.0;
    for (unsigned s = 0; s < shuffles; ++s) {
      const std::string text = serialize_shuffled(
          current, seeder.fork(1000 + static_cast<std::uint64_t>(stage) * 64 + s).next());
      const Network reparsed = parse_network(text, /*directed=*/false);
      const double f1h = f1_scores(middle_clustering(reparsed), reference).f1h;
      sum += f1h;
      sum_sq += f1h * f1h;
    }
    const double mean = sum / shuffles;
    const double variance = std::max(0.0, sum_sq / shuffles - mean * mean);

    ProtocolStage row;
    row.stage = stage;
    row.fraction = fraction;
    row.f1h_mean = mean;
    row.f1h_std = std::sqrt(variance);
    row.runtime_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    row.middle = canonical_middle;
    stages.push_back(std::move(row));
    previous_middle = canonical_middle;
  }
  return stages;
}

std::string protocol_csv(const std::vector<ProtocolStage>& stages) {
  std::string out = "stage,fraction,f1h_mean,f1h_std,runtime_ms\n";
  char buf[160];
  for (const ProtocolStage& s : stages) {
    std::snprintf(buf, sizeof(buf), "%d,%.2f,%.9f,%.9f,%.3f\n", s.stage, s.fraction,
                  s.f1h_mean, s.f1h_std, s.runtime_ms);
    out += buf;
  }
  return out;
}

}  // namespace daoc
