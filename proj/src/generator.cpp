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

#include "generator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "prng.hpp"

namespace daoc {

namespace {

/// Appends Bernoulli(p) hits from the half-open index range [0, extent) via
/// geometric gap skipping; O(hits) instead of O(extent).
template <class Emit>
void sample_row(std::size_t extent, double p, SplitMix64& rng, Emit&& emit) {
  if (extent == 0 || p <= 0.0) return;
  if (p >= 1.0) {
    for (std::size_t j = 0; j < extent; ++j) emit(j);
    return;
  }
  const double log1mp = std::log1p(-p);
  double idx = -1.0;
  for (;;) {
    const double u = rng.unit();
    if (u <= 0.0) return;
    idx += 1.0 + std::floor(std::log(u) / log1mp);
    if (idx >= static_cast<double>(extent)) return;
    emit(static_cast<std::size_t>(idx));
  }
}

}  // namespace

PlantedNetwork planted_partition(std::size_t n, std::size_t communities, double p_in,
                                 double p_out, std::uint64_t seed) {
  if (n == 0 || communities == 0 || n % communities != 0)
    throw InvalidArgument("communities must divide the node count");
  if (!(p_out >= 0.0 && p_out < p_in && p_in <= 1.0))
    throw InvalidArgument("probabilities must satisfy 0 <= p_out < p_in <= 1");
  const std::size_t block = n / communities;
  if (block < 2) throw InvalidArgument("communities need at least two nodes each");

  SplitMix64 rng(seed);
  NetworkBuilder builder;
  std::vector<std::pair<NodeId, NodeId>> edges;

  // Intra-community links.
  for (std::size_t c = 0; c < communities; ++c) {
    const std::size_t base = c * block;
    for (std::size_t i = 0; i < block - 1; ++i) {
      sample_row(block - 1 - i, p_in, rng, [&](std::size_t gap) {
        edges.emplace_back(static_cast<NodeId>(base + i),
                           static_cast<NodeId>(base + i + 1 + gap));
      });
    }
  }
  // Inter-community links.
  for (std::size_t c1 = 0; c1 + 1 < communities; ++c1) {
    for (std::size_t c2 = c1 + 1; c2 < communities; ++c2) {
      for (std::size_t i = 0; i < block; ++i) {
        sample_row(block, p_out, rng, [&](std::size_t j) {
          edges.emplace_back(static_cast<NodeId>(c1 * block + i),
                             static_cast<NodeId>(c2 * block + j));
        });
      }
    }
  }

  // Patch every community into one connected piece with spanning links.
  for (std::size_t c = 0; c < communities; ++c) {
    const auto base = static_cast<NodeId>(c * block);
    std::vector<NodeId> parent(block);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](NodeId x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
      }
      return x;
    };
    for (const auto& [a, b] : edges) {
      if (a >= base && a < base + block && b >= base && b < base + block) {
        const NodeId ra = find(a - base), rb = find(b - base);
        if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
      }
    }
    NodeId previous_root = kInvalidNode;
    for (NodeId i = 0; i < block; ++i) {
      if (find(i) != i) continue;
      if (previous_root != kInvalidNode) {
        edges.emplace_back(base + previous_root, base + i);
        parent[i] = previous_root;
      }
      previous_root = find(i);
    }
  }

  for (const auto& [a, b] : edges) builder.add_link(a, b, 1.0);

  PlantedNetwork result;
  result.network = std::move(builder).build();
  result.truth.clusters.resize(communities);
  for (std::size_t c = 0; c < communities; ++c) {
    auto& members = result.truth.clusters[c];
    members.reserve(block);
    for (std::size_t i = 0; i < block; ++i) members.push_back(c * block + i);
  }
  result.truth.canonicalize();
  return result;
}

PlantedNetwork planted_partition_avg_degree(std::size_t n, std::size_t communities,
                                            double avg_degree, std::uint64_t seed) {
  const std::size_t block = communities ? n / communities : 0;
  if (block < 2) throw InvalidArgument("communities need at least two nodes each");
  const double p_in = std::min(1.0, 0.7 * avg_degree / static_cast<double>(block - 1));
  const double p_out =
      n > block ? std::min(p_in * 0.99, 0.3 * avg_degree / static_cast<double>(n - block))
                : 0.0;
  return planted_partition(n, communities, p_in, p_out, seed);
}

}  // namespace daoc
