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

#include "generator.hpp"
#include "perturb.hpp"
#include "support.hpp"

using namespace daoc;

TEST_CASE("zero fraction returns an identical network") {
  const Network net = test::make_network(test::two_triangles_lines());
  CHECK(perturb(net, 0.0, 1) == net);
}

TEST_CASE("perturbation is deterministic per seed") {
  const PlantedNetwork planted = planted_partition(120, 4, 0.5, 0.02, 9);
  const Network a = perturb(planted.network, 0.10, 7);
  const Network b = perturb(planted.network, 0.10, 7);
  CHECK(a == b);
  const Network c = perturb(planted.network, 0.10, 8);
  CHECK(!(c == a));
}

TEST_CASE("perturbation removes the floor of the fraction and keeps degrees positive") {
  const PlantedNetwork planted = planted_partition(120, 4, 0.5, 0.02, 9);
  const std::size_t m0 = planted.network.link_count();
  const Network out = perturb(planted.network, 0.13, 3);
  CHECK(out.link_count() == m0 - static_cast<std::size_t>(0.13 * static_cast<double>(m0)));
  CHECK(out.node_count() == planted.network.node_count());
  for (NodeId i = 0; i < out.node_count(); ++i) CHECK(out.degree(i) >= 1);
  CHECK(out.total_weight() < planted.network.total_weight());
}

TEST_CASE("weights are never modified, only links disappear") {
  const Network net = test::make_network(
      {{0, 1, 2.5}, {1, 2, 1.25}, {2, 3, 4.0}, {3, 0, 8.0}, {0, 2, 0.5}});
  const Network out = perturb(net, 0.2, 5);  // removes exactly one link
  CHECK(out.link_count() == net.link_count() - 1);
  for (NodeId i = 0; i < out.node_count(); ++i) {
    for (const Arc& arc : out.neighbors(i)) {
      CHECK(arc.weight == net.link_weight(i, arc.dst));
    }
  }
}

TEST_CASE("star graph: leaf-disconnecting removals are rejected") {
  // Every link touches a degree-1 leaf, so nothing is removable.
  const Network star = test::make_network({{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, 1}});
  CHECK_THROWS_AS(perturb(star, 0.5, 1), Infeasible);
  try {
    perturb(star, 0.5, 1);
  } catch (const Infeasible& e) {
    CHECK(std::string(e.what()).find("achieved 0") != std::string::npos);
  }
  // A zero target is still fine.
  CHECK(perturb(star, 0.0, 1) == star);
}

TEST_CASE("invalid fractions are rejected") {
  const Network net = test::make_network(test::two_triangles_lines());
  CHECK_THROWS_AS(perturb(net, -0.1, 1), InvalidArgument);
  CHECK_THROWS_AS(perturb(net, 1.0, 1), InvalidArgument);
}

TEST_CASE("stability protocol on a small planted fixture") {
  const PlantedNetwork planted = planted_partition(120, 4, 0.5, 0.02, 11);
  const auto stages = run_stability_protocol(planted.network, 4, 31);
  REQUIRE(stages.size() == 9);  // baseline + 8 removal stages

  CHECK(stages[0].fraction == 0.0);
  CHECK(stages[8].fraction == doctest::Approx(0.15));
  for (std::size_t s = 1; s < stages.size(); ++s) {
    CHECK(stages[s].fraction == doctest::Approx(0.01 * static_cast<double>(2 * s - 1)));
    CHECK(stages[s].f1h_mean > 0.0);
    CHECK(stages[s].f1h_mean <= 1.0 + 1e-12);
  }
  // Deterministic engine: zero deviation across the shuffled reorderings.
  for (const ProtocolStage& s : stages) CHECK(s.f1h_std == 0.0);
  // The baseline stage compares the shuffles to the canonical clustering.
  CHECK(stages[0].f1h_mean == doctest::Approx(1.0));

  const std::string csv = protocol_csv(stages);
  CHECK(csv.rfind("stage,fraction,f1h_mean,f1h_std,runtime_ms\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 10);
}

TEST_CASE("middle level picks the floor of half the level count") {
  CHECK(middle_level(1) == 0);
  CHECK(middle_level(2) == 1);
  CHECK(middle_level(3) == 1);
  CHECK(middle_level(4) == 2);
  CHECK(middle_level(7) == 3);
}
