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

#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "hierarchy.hpp"
#include "oracle.hpp"
#include "quality.hpp"
#include "support.hpp"

using namespace daoc;

namespace {

std::vector<std::vector<NodeId>> identity_expansions(std::size_t n) {
  std::vector<std::vector<NodeId>> e(n);
  for (NodeId i = 0; i < n; ++i) e[i] = {i};
  return e;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Clustering clusters(std::vector<std::vector<Label>> groups) {
  Clustering cl;
  cl.clusters = std::move(groups);
  cl.canonicalize();
  return cl;
}

}  // namespace

TEST_CASE("weighted path: strong pair clusters, weak tail propagates") {
  const Network net = test::make_network({{0, 1, 2}, {1, 2, 1}});
  const LevelOutcome out = advance_level(net, identity_expansions(3), 3);
  REQUIRE(out.formed);
  REQUIRE(out.level.clusters.size() == 1);
  CHECK(out.level.clusters[0].members ==
        std::vector<ClusterMember>{{0, false}, {1, false}});
  CHECK(out.level.propagated == std::vector<NodeId>{2});
  CHECK(out.coarse.node_count() == 2);
}

TEST_CASE("symmetric triangle collapses into one cluster, the brute-force optimum") {
  const Network net = test::make_network({{0, 1, 1}, {0, 2, 1}, {1, 2, 1}});
  const Hierarchy h = build_hierarchy(net);
  REQUIRE(h.level_count() == 1);
  CHECK(h.top_clustering() == clusters({{0, 1, 2}}));
  const OracleResult best = best_partition_exhaustive(net);
  CHECK(h.top_clustering() == best.partition);
  CHECK(h.levels()[0].modularity == doctest::Approx(best.q).epsilon(1e-12));
}

TEST_CASE("hub fixture forms three overlapping clusters with the worked-example weights") {
  const Network net = test::make_network(test::hub_fixture_lines());
  const LevelOutcome out = advance_level(net, identity_expansions(4), 4);
  REQUIRE(out.formed);
  REQUIRE(out.level.clusters.size() == 3);
  CHECK(out.level.propagated.empty());

  const NodeId hub = *net.find_label(9);
  for (const LevelCluster& c : out.level.clusters) {
    REQUIRE(c.members.size() == 2);
    // The hub participates in every cluster as a fragment.
    CHECK(c.members[0].node == hub);
    CHECK(c.members[0].fragment);
    CHECK(!c.members[1].fragment);
  }

  // Coarse accounting from the worked example: cluster self-weights 15,
  // pairwise inter-cluster links 10.
  REQUIRE(out.coarse.node_count() == 3);
  for (NodeId g = 0; g < 3; ++g) {
    CHECK(out.coarse.self_weight(g) == doctest::Approx(15.0).epsilon(1e-12));
    CHECK(out.coarse.node_weight(g) == doctest::Approx(50.0).epsilon(1e-12));
  }
  CHECK(out.coarse.link_weight(0, 1) == doctest::Approx(10.0).epsilon(1e-12));
  CHECK(out.coarse.link_weight(0, 2) == doctest::Approx(10.0).epsilon(1e-12));
  CHECK(out.coarse.link_weight(1, 2) == doctest::Approx(10.0).epsilon(1e-12));
  CHECK(out.coarse.total_weight() == doctest::Approx(75.0).epsilon(1e-12));
}

TEST_CASE("hub fixture level-1 clustering overlaps in the hub label") {
  const Network net = test::make_network(test::hub_fixture_lines());
  const Hierarchy h = build_hierarchy(net);
  REQUIRE(h.level_count() >= 1);
  CHECK(h.level_clustering(0) == clusters({{9, 10}, {9, 20}, {9, 30}}));
  // A bottom-level node appears in at most K clusters of the level it split.
  std::size_t hub_memberships = 0;
  for (const auto& members : h.level_clustering(0).clusters)
    hub_memberships += std::count(members.begin(), members.end(), Label{9});
  CHECK(hub_memberships == 3);
}

TEST_CASE("all nodes propagated: no level is formed") {
  const Network net = test::make_network({{0, 0, 50}, {1, 1, 50}, {0, 1, 1}});
  const LevelOutcome out = advance_level(net, identity_expansions(2), 2);
  CHECK(!out.formed);
  const Hierarchy h = build_hierarchy(net);
  CHECK(h.empty());
}

TEST_CASE("two disjoint unit pairs coarsen without inter-links") {
  const Network net = test::make_network({{0, 1, 1}, {2, 3, 1}});
  const LevelOutcome out = advance_level(net, identity_expansions(4), 4);
  REQUIRE(out.formed);
  REQUIRE(out.coarse.node_count() == 2);
  CHECK(out.coarse.link_count() == 0);
  CHECK(out.coarse.self_weight(0) == doctest::Approx(1.0));
  CHECK(out.coarse.self_weight(1) == doctest::Approx(1.0));
}

TEST_CASE("single node with a self-loop yields an empty hierarchy") {
  const Network net = test::make_network({{7, 7, 5}});
  const Hierarchy h = build_hierarchy(net);
  CHECK(h.empty());
  CHECK(h.top_clustering().empty());
}

TEST_CASE("two triangles with a bridge: both triangles recovered exactly at the top") {
  const Network net = test::make_network(test::two_triangles_lines());
  const Hierarchy h = build_hierarchy(net);
  REQUIRE(h.level_count() == 2);
  CHECK(h.level_clustering(0) == clusters({{0, 1}, {4, 5}}));
  CHECK(h.top_clustering() == clusters({{0, 1, 2}, {3, 4, 5}}));

  const OracleResult best = best_partition_exhaustive(net);
  CHECK(h.top_clustering() == best.partition);
  CHECK(h.levels()[1].modularity == doctest::Approx(best.q).epsilon(1e-12));
  CHECK(best.q == doctest::Approx(5.0 / 14.0).epsilon(1e-12));
}

TEST_CASE("coarsening preserves modularity: level Q equals the projected clustering Q") {
  // For levels without splits the coarse singleton modularity must equal the
  // bottom-level modularity of the projected clustering.
  const Network net = test::make_network(test::two_triangles_lines());
  const LevelOutcome out = advance_level(net, identity_expansions(6), 6);
  REQUIRE(out.formed);
  std::vector<std::vector<Label>> projected = {{0, 1}, {4, 5}, {2}, {3}};
  CHECK(out.level.modularity ==
        doctest::Approx(test::reference_modularity(test::two_triangles_lines(), projected))
            .epsilon(1e-12));
}

TEST_CASE("split level verified against an explicitly built virtual network") {
  // Unit path 0-1-2-3-4: level one pairs the ends and carries the middle;
  // at level two the carried node ties between both pair-clusters and is
  // decomposed, yielding the overlap {0,1,2} / {2,3,4}.
  const Network net = test::make_network(
      {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}});
  const Hierarchy h = build_hierarchy(net);
  REQUIRE(h.level_count() == 2);
  Clustering expected;
  expected.clusters = {{0, 1, 2}, {2, 3, 4}};
  expected.canonicalize();
  CHECK(h.top_clustering() == expected);

  // Level-two input: pair clusters with self-weight 1 linked to the carried
  // middle node by weight 1 each. Splitting the middle halves its links and
  // adds no inter-fragment weight (its self-weight is zero).
  const std::vector<test::RawLine> virtual_net = {
      {0, 0, 1}, {1, 1, 1}, {0, 20, 0.5}, {0, 21, 0.5}, {1, 20, 0.5}, {1, 21, 0.5}};
  const double q_expected =
      test::reference_modularity(virtual_net, {{0, 20}, {1, 21}});
  CHECK(h.levels()[1].modularity == doctest::Approx(q_expected).epsilon(1e-12));
}

TEST_CASE("coarsening conserves the total weight at every level") {
  SplitMix64 rng(4711);
  std::vector<std::vector<test::RawLine>> fixtures = {test::hub_fixture_lines(),
                                                      test::two_triangles_lines()};
  for (int trial = 0; trial < 30; ++trial)
    fixtures.push_back(test::random_lines(rng, 3, 12, trial % 2 == 0));
  for (const auto& lines : fixtures) {
    const Network net = test::make_network(lines);
    Network current = net;
    auto expansions = identity_expansions(net.node_count());
    while (true) {
      const LevelOutcome out = advance_level(current, expansions, net.node_count());
      if (!out.formed) break;
      CHECK(out.coarse.total_weight() ==
            doctest::Approx(net.total_weight()).epsilon(1e-9));
      double degree_sum = 0.0;
      for (NodeId i = 0; i < out.coarse.node_count(); ++i)
        degree_sum += out.coarse.node_weight(i);
      CHECK(degree_sum == doctest::Approx(2.0 * net.total_weight()).epsilon(1e-9));
      current = out.coarse;
      expansions = out.expansions;
    }
  }
}

TEST_CASE("per-level modularity is non-decreasing and the level count bounded") {
  SplitMix64 rng(2718);
  for (int trial = 0; trial < 40; ++trial) {
    const auto lines = test::random_lines(rng, 3, 12, trial % 2 == 0);
    const Network net = test::make_network(lines);
    const Hierarchy h = build_hierarchy(net);
    CHECK(h.level_count() <= net.node_count());
    for (std::size_t l = 1; l < h.level_count(); ++l) {
      CHECK(h.levels()[l].modularity >= h.levels()[l - 1].modularity - 1e-9);
    }
  }
}

TEST_CASE("every level covers its input exactly once per membership share") {
  SplitMix64 rng(333);
  for (int trial = 0; trial < 40; ++trial) {
    const Network net = test::make_network(test::random_lines(rng, 3, 12));
    std::size_t n = net.node_count();
    Network current = net;
    auto expansions = identity_expansions(n);
    while (true) {
      const LevelOutcome out = advance_level(current, expansions, n);
      if (!out.formed) break;
      std::vector<int> whole_seen(current.node_count(), 0);
      for (const LevelCluster& c : out.level.clusters) {
        for (const ClusterMember& m : c.members) {
          if (!m.fragment) ++whole_seen[m.node];
        }
      }
      for (NodeId p : out.level.propagated) ++whole_seen[p];
      for (NodeId i = 0; i < current.node_count(); ++i) {
        const bool split_somewhere = whole_seen[i] == 0;
        if (!split_somewhere) CHECK(whole_seen[i] == 1);
      }
      current = out.coarse;
      expansions = out.expansions;
    }
  }
}

TEST_CASE("dense complete graph completes despite the worst-case tie structure") {
  // Every pair gain ties, so the candidate sets are maximal everywhere; the
  // run must still terminate quickly with the trivial single cluster.
  std::vector<test::RawLine> lines;
  for (Label i = 0; i < 64; ++i) {
    for (Label j = i + 1; j < 64; ++j) lines.push_back({i, j, 1.0});
  }
  const Network net = test::make_network(lines);
  const Hierarchy h = build_hierarchy(net);
  REQUIRE(!h.empty());
  CHECK(h.level_count() <= 64);
  const Clustering top = h.top_clustering();
  CHECK(top.size() == 1);
  CHECK(top.clusters[0].size() == 64);
}

TEST_CASE("clustering output is identical across shuffled serializations") {
  SplitMix64 rng(51);
  std::vector<std::vector<test::RawLine>> fixtures = {test::hub_fixture_lines(),
                                                      test::two_triangles_lines()};
  for (int trial = 0; trial < 10; ++trial)
    fixtures.push_back(test::random_lines(rng, 6, 12, trial % 2 == 0));
  for (const auto& lines : fixtures) {
    const Network net = test::make_network(lines);
    const Hierarchy reference = build_hierarchy(net);
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
      const Network reparsed = parse_network(serialize_shuffled(net, seed), false);
      const Hierarchy shuffled = build_hierarchy(reparsed);
      CHECK(shuffled.signature() == reference.signature());
    }
  }
}

TEST_CASE("hierarchy files: worked-example golden bytes and determinism") {
  const Network net = test::make_network(test::hub_fixture_lines());
  const Hierarchy h = build_hierarchy(net);

  const auto dir = std::filesystem::temp_directory_path() / "daoc_test_hier";
  std::filesystem::remove_all(dir);
  write_hierarchy(h, dir);

  // Level 1: hosts lead, the shared hub trails; lines sorted by cluster id.
  CHECK(read_file(dir / "level_001.cnl") == "10 9\n20 9\n30 9\n");
  const std::string manifest = read_file(dir / "manifest.txt");
  CHECK(manifest.find("levels ") == 0);
  CHECK(manifest.find("level 1 file level_001.cnl clusters 3") != std::string::npos);

  // Byte determinism across repeated serialization.
  const auto dir2 = std::filesystem::temp_directory_path() / "daoc_test_hier2";
  std::filesystem::remove_all(dir2);
  write_hierarchy(h, dir2);
  CHECK(read_file(dir / "manifest.txt") == read_file(dir2 / "manifest.txt"));
  for (std::size_t l = 1; l <= h.level_count(); ++l) {
    char name[32];
    std::snprintf(name, sizeof(name), "level_%03zu.cnl", l);
    CHECK(read_file(dir / name) == read_file(dir2 / name));
  }
  std::filesystem::remove_all(dir);
  std::filesystem::remove_all(dir2);
}

TEST_CASE("empty hierarchy writes a zero-level manifest") {
  const Network net = test::make_network({{7, 7, 5}});
  const Hierarchy h = build_hierarchy(net);
  const auto dir = std::filesystem::temp_directory_path() / "daoc_test_hier_empty";
  std::filesystem::remove_all(dir);
  write_hierarchy(h, dir);
  CHECK(read_file(dir / "manifest.txt") == "levels 0\n");
  std::filesystem::remove_all(dir);
}

TEST_CASE("propagated chain is emitted as a cluster at the top level only") {
  // The weak tail c propagates at level 1 and joins at level 2; a genuinely
  // never-clustered node must surface as a top-level singleton instead.
  const Network net = test::make_network({{0, 1, 2}, {1, 2, 1}});
  const Hierarchy h = build_hierarchy(net);
  REQUIRE(h.level_count() == 2);
  CHECK(h.level_clustering(0) == clusters({{0, 1}}));  // c not listed mid-hierarchy
  CHECK(h.top_clustering() == clusters({{0, 1, 2}}));

  // Two heavy self-loop nodes never cluster; the pair {0,1} does. The top
  // level must still cover everything.
  const Network mixed = test::make_network(
      {{0, 1, 5}, {2, 2, 50}, {3, 3, 50}, {1, 2, 1}, {2, 3, 1}, {0, 3, 1}});
  const Hierarchy hm = build_hierarchy(mixed);
  REQUIRE(!hm.empty());
  const Clustering top = hm.top_clustering();
  std::set<Label> all;
  for (const auto& c : top.clusters) all.insert(c.begin(), c.end());
  CHECK(all == std::set<Label>{0, 1, 2, 3});
}
