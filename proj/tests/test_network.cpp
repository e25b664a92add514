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

#include "network.hpp"
#include "prng.hpp"
#include "support.hpp"

using namespace daoc;

TEST_CASE("two unit edges: weights follow the symmetric-pair convention") {
  const Network net = parse_network("0 1\n1 2\n", /*directed=*/false);
  CHECK(net.node_count() == 3);
  CHECK(net.link_count() == 2);
  CHECK(net.total_weight() == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(net.node_weight(0) == doctest::Approx(1.0));
  CHECK(net.node_weight(1) == doctest::Approx(2.0));
  CHECK(net.pair_weight(0, 1) == doctest::Approx(2.0));
  CHECK(net.pair_weight(0, 2) == 0.0);
}

TEST_CASE("self-loop counts once in the pair weight and twice in the node weight") {
  const Network net = parse_network("7 7 5\n7 8 1\n", false);
  const NodeId seven = *net.find_label(7);
  CHECK(net.self_weight(seven) == doctest::Approx(5.0));
  CHECK(net.pair_weight(seven, seven) == doctest::Approx(5.0));
  CHECK(net.node_weight(seven) == doctest::Approx(11.0));
  CHECK(net.total_weight() == doctest::Approx(6.0));
}

TEST_CASE("hub fixture weights") {
  const Network net = test::make_network(test::hub_fixture_lines());
  const NodeId hub = *net.find_label(9);
  CHECK(net.node_weight(hub) == doctest::Approx(9.0 * 2 + 36.0));
  CHECK(net.node_weight(*net.find_label(10)) == doctest::Approx(10.0 * 2 + 12.0));
  CHECK(net.total_weight() == doctest::Approx(75.0));
}

TEST_CASE("sum of node weights is twice the total weight") {
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    const auto lines = test::random_lines(rng, 2, 12, false);
    const Network net = test::make_network(lines);
    double sum = 0.0;
    for (NodeId i = 0; i < net.node_count(); ++i) sum += net.node_weight(i);
    CHECK(sum == doctest::Approx(2.0 * net.total_weight()).epsilon(1e-9));
  }
}

TEST_CASE("duplicate arcs are weight-summed in both directions") {
  const Network net = parse_network("0 1 0.5\n1 0 0.5\n", false);
  CHECK(net.link_count() == 1);
  CHECK(net.pair_weight(0, 1) == doctest::Approx(2.0));  // 2 * (0.5 + 0.5)
}

TEST_CASE("directed arcs land in the symmetric aggregate at half weight") {
  const Network net = parse_network("0 1 3\n1 0 1\n", /*directed=*/true);
  CHECK(net.pair_weight(0, 1) == doctest::Approx(4.0));
  CHECK(net.node_weight(0) == doctest::Approx(2.0));
  CHECK(net.total_weight() == doctest::Approx(2.0));
}

TEST_CASE("directed reciprocal arcs equal the undirected single line") {
  const Network directed = parse_network("0 1 1\n1 0 1\n", /*directed=*/true);
  const Network undirected = parse_network("0 1 1\n", /*directed=*/false);
  CHECK(directed == undirected);
}

TEST_CASE("parsing any permutation of the same arcs yields deep-equal networks") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    auto lines = test::random_lines(rng);
    const Network reference = test::make_network(lines);
    for (int perm = 0; perm < 4; ++perm) {
      shuffle(lines, rng);
      CHECK(test::make_network(lines) == reference);
    }
  }
}

TEST_CASE("labels are preserved and remapped densely") {
  const Network net = parse_network("100 7\n7 4000000000\n", false);
  CHECK(net.node_count() == 3);
  CHECK(net.label(0) == 7);
  CHECK(net.label(1) == 100);
  CHECK(net.label(2) == 4000000000ULL);
  CHECK(*net.find_label(100) == 1);
  CHECK(!net.find_label(8).has_value());
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_AS(parse_network("0 x 1\n", false), ParseError);
  try {
    parse_network("0 1\n2 3 oops\n", false);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_network("0 1 -2\n", false), ParseError);
  CHECK_THROWS_AS(parse_network("0\n", false), ParseError);
  CHECK_THROWS_AS(parse_network("0 1 2 3\n", false), ParseError);
  CHECK_THROWS_AS(parse_network("", false), ParseError);
  CHECK_THROWS_AS(parse_network("# only comments\n", false), ParseError);
}

TEST_CASE("comments and a header line are accepted") {
  const Network net = parse_network("# fixture\nnodes: 2 edges: 1\n0 1 2.5\n", false);
  CHECK(net.node_count() == 2);
  CHECK(net.pair_weight(0, 1) == doctest::Approx(5.0));
}

TEST_CASE("unweighted parsing ignores weight tokens") {
  const Network net = parse_network("0 1 9\n", false, /*weighted=*/false);
  CHECK(net.pair_weight(0, 1) == doctest::Approx(2.0));
}

TEST_CASE("shuffled serialization round-trips to an equal network") {
  SplitMix64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const Network net = test::make_network(test::random_lines(rng, 2, 10, false));
    const std::string a = serialize_shuffled(net, 1);
    CHECK(a == serialize_shuffled(net, 1));  // seeded determinism
    const std::string b = serialize_shuffled(net, 2);
    CHECK(parse_network(a, false) == net);
    CHECK(parse_network(b, false) == net);
  }
}

TEST_CASE("different seeds reorder lines but not content") {
  const Network net = test::make_network(test::two_triangles_lines());
  const std::string a = serialize_shuffled(net, 1);
  const std::string b = serialize_shuffled(net, 2);
  CHECK(a != b);
  CHECK(parse_network(a, false) == parse_network(b, false));
}

TEST_CASE("canonical serialization round-trips") {
  const Network net = test::make_network(test::hub_fixture_lines());
  CHECK(parse_network(serialize_network(net), false) == net);
}

TEST_CASE("serialization round-trips weights that are not exactly representable") {
  const Network net = parse_network(
      "0 1 0.1\n1 2 0.3333333333333333\n2 3 1e-7\n3 4 12345.678901234567\n", false);
  CHECK(parse_network(serialize_network(net), false) == net);
  CHECK(parse_network(serialize_shuffled(net, 3), false) == net);
}

TEST_CASE("canonicalization is idempotent") {
  const Network net = test::make_network(test::hub_fixture_lines());
  // Rebuilding from the canonical serialization must be a fixed point.
  const Network once = parse_network(serialize_network(net), false);
  const Network twice = parse_network(serialize_network(once), false);
  CHECK(once == twice);
}
