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

// Test-only helpers: an independent modularity evaluator working from raw
// input lines (kept deliberately separate from the library's bookkeeping so
// it can serve as an oracle), seeded random fixtures, and shared fixtures.

#pragma once

#include <map>
#include <set>
#include <tuple>
#include <vector>

#include "clustering.hpp"
#include "network.hpp"
#include "prng.hpp"

namespace daoc::test {

/// An input line `a b w`: an undirected link for a != b, a node self-weight
/// otherwise.
struct RawLine {
  Label a, b;
  double weight;
};

/// Builds the production Network from the lines (undirected parsing path).
inline Network make_network(const std::vector<RawLine>& lines) {
  NetworkBuilder builder;
  for (const RawLine& l : lines) builder.add_link(l.a, l.b, l.weight);
  return std::move(builder).build();
}

/// Reference modularity from first principles: symmetric adjacency with
/// doubled diagonal, degrees as row sums, ordered-pair summation. Expects a
/// non-overlapping clustering covering all nodes of the lines.
inline double reference_modularity(const std::vector<RawLine>& lines,
                                   const std::vector<std::vector<Label>>& clusters) {
  std::map<Label, std::map<Label, double>> adjacency;
  std::set<Label> nodes;
  for (const RawLine& l : lines) {
    nodes.insert(l.a);
    nodes.insert(l.b);
    if (l.a == l.b) {
      adjacency[l.a][l.a] += 2.0 * l.weight;
    } else {
      adjacency[l.a][l.b] += l.weight;
      adjacency[l.b][l.a] += l.weight;
    }
  }
  std::map<Label, double> degree;
  double two_w = 0.0;
  for (Label i : nodes) {
    double k = 0.0;
    for (const auto& [j, w] : adjacency[i]) k += w;
    degree[i] = k;
    two_w += k;
  }
  std::map<Label, std::size_t> cluster_of;
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    for (Label l : clusters[c]) cluster_of[l] = c;
  }
  double q = 0.0;
  for (Label i : nodes) {
    for (Label j : nodes) {
      if (cluster_of.at(i) != cluster_of.at(j)) continue;
      double a = 0.0;
      if (auto it = adjacency[i].find(j); it != adjacency[i].end()) a = it->second;
      q += a - degree[i] * degree[j] / two_w;
    }
  }
  return q / two_w;
}

/// Seeded random small network: a random attachment backbone (every node
/// linked) plus extra links and occasional self-loops. Labels are 0..n-1.
inline std::vector<RawLine> random_lines(SplitMix64& rng, std::size_t min_nodes = 2,
                                         std::size_t max_nodes = 12,
                                         bool integer_weights = true) {
  const std::size_t n = min_nodes + rng.below(max_nodes - min_nodes + 1);
  auto weight = [&]() {
    return integer_weights ? static_cast<double>(1 + rng.below(3))
                           : 0.5 + static_cast<double>(rng.below(64)) / 16.0;
  };
  std::vector<RawLine> lines;
  for (Label i = 1; i < n; ++i) lines.push_back({rng.below(i), i, weight()});
  const std::size_t extra = rng.below(n + 1);
  for (std::size_t e = 0; e < extra; ++e) {
    const Label a = rng.below(n), b = rng.below(n);
    if (a != b) lines.push_back({a, b, weight()});
  }
  for (Label i = 0; i < n; ++i) {
    if (rng.below(5) == 0) lines.push_back({i, i, weight()});
  }
  return lines;
}

/// The worked overlap example: hub with self-weight 9 linked to three nodes
/// of self-weight 10 by links of weight 12. Labels: hub 9, spokes 10/20/30.
inline std::vector<RawLine> hub_fixture_lines() {
  return {{9, 9, 9},   {10, 10, 10}, {20, 20, 10}, {30, 30, 10},
          {9, 10, 12}, {9, 20, 12},  {9, 30, 12}};
}

/// Two unit-weight triangles joined by a single edge: {0,1,2} and {3,4,5}.
inline std::vector<RawLine> two_triangles_lines() {
  return {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {3, 4, 1}, {3, 5, 1}, {4, 5, 1}, {2, 3, 1}};
}

}  // namespace daoc::test
