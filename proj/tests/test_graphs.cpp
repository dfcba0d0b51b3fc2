// Copyright 2026 chromaq contributors
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

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "chromaq/graphs.hpp"

using namespace chromaq;

namespace {
const std::vector<std::pair<int, int>> kBowtieEdges = {
    {1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}};
}

TEST_CASE("validating labeled graphs") {
  Nuig bowtie = Nuig::from_graph(GenericGraph(5, kBowtieEdges));
  CHECK(bowtie.b() == std::vector<int>{1, 2, 1, 2});

  Nuig p4 = Nuig::from_graph(GenericGraph(4, {{1, 2}, {2, 3}, {3, 4}}));
  CHECK(p4.b() == std::vector<int>{1, 1, 1});

  try {
    Nuig::from_graph(GenericGraph(3, {{1, 3}}));
    FAIL("expected a violation");
  } catch (const NuigViolation& e) {
    CHECK(e.i == 1);
    CHECK(e.j == 2);
    CHECK(e.k == 3);
  }
}

TEST_CASE("adjacency from the b-sequence") {
  Nuig bowtie = Nuig::from_b(5, {1, 2, 1, 2});
  CHECK(bowtie.adjacent(1, 2));
  CHECK(bowtie.adjacent(3, 5));
  CHECK_FALSE(bowtie.adjacent(1, 4));
  CHECK_FALSE(bowtie.adjacent(2, 5));
  CHECK(bowtie.edge_count() == 6);
  CHECK(bowtie.edges() == kBowtieEdges);

  CHECK_THROWS_AS(Nuig::from_b(3, {0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Nuig::from_b(2, {2}), std::invalid_argument);
}

TEST_CASE("graph sums concatenate b-sequences") {
  Nuig k3 = make_complete(3);
  CHECK(graph_sum(k3, k3) == Nuig::from_b(5, {1, 2, 1, 2}));  // the bowtie
  CHECK(graph_sum(make_path(2), make_path(2)) == make_path(3));
  Nuig k64 = graph_sum(make_complete(6), make_complete(4));
  CHECK(k64.n() == 9);
  CHECK(k64 == make_kchain(KChainSpec({6, 4})));
}

TEST_CASE("graph sums glue edge sets at the cut vertex") {
  // E(g1 + g2) = E(g1) together with E(g2) shifted by n1 - 1.
  for (auto [g1, g2] : {std::pair{make_complete(3), make_path(3)},
                        std::pair{make_path(4), make_almost_complete(3)}}) {
    Nuig sum = graph_sum(g1, g2);
    std::vector<std::pair<int, int>> expected = g1.edges();
    for (auto [i, j] : g2.edges())
      expected.emplace_back(i + g1.n() - 1, j + g1.n() - 1);
    std::sort(expected.begin(), expected.end());
    CHECK(sum.edges() == expected);
  }
}

TEST_CASE("named families") {
  CHECK(make_path(6).b() == std::vector<int>{1, 1, 1, 1, 1});
  CHECK(make_complete(4).b() == std::vector<int>{1, 2, 3});
  CHECK(make_almost_complete(4).b() == std::vector<int>{1, 2, 2});
  CHECK(make_triangular_ladder(8).b() ==
        std::vector<int>{1, 2, 2, 2, 2, 2, 2});
  CHECK(make_kchain(KChainSpec({6, 6})).n() == 11);
  CHECK_THROWS_AS(make_almost_complete(2), std::invalid_argument);
  CHECK_THROWS_AS(KChainSpec({2}, {1}), std::invalid_argument);
  CHECK_THROWS_AS(KChainSpec({1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(KChainSpec({3, 3}, {1}), std::invalid_argument);

  // Families round-trip through edge lists.
  for (const Nuig& g :
       {make_path(6), make_complete(5), make_almost_complete(5),
        make_triangular_ladder(7), make_kchain(KChainSpec({3, 4}, {0, 1}))})
    CHECK(Nuig::from_graph(g.to_generic()) == g);
}

TEST_CASE("enumeration counts are Catalan numbers") {
  for (int n = 1; n <= 9; ++n) {
    long count = 0;
    for_each_nuig(n, [&](const Nuig&) { ++count; });
    CAPTURE(n);
    CHECK(count == static_cast<long>(catalan(n)));
  }
  long n3 = 0;
  for_each_nuig(3, [&](const Nuig&) { ++n3; });
  CHECK(n3 == 5);
}

TEST_CASE("enumeration is lexicographic and duplicate-free") {
  std::vector<std::vector<int>> seen;
  for_each_nuig(5, [&](const Nuig& g) { seen.push_back(g.b()); });
  for (std::size_t i = 1; i < seen.size(); ++i) CHECK(seen[i - 1] < seen[i]);
}

TEST_CASE("reversal") {
  Nuig bowtie = Nuig::from_b(5, {1, 2, 1, 2});
  CHECK(reverse_graph(bowtie) == bowtie);
  CHECK(reverse_graph(Nuig::from_b(4, {1, 1, 2})) ==
        Nuig::from_b(4, {1, 2, 1}));
  for (int n : {2, 5, 7}) CHECK(reverse_graph(make_path(n)) == make_path(n));
  // Involution property over all graphs at n = 6.
  for_each_nuig(6, [&](const Nuig& g) {
    CHECK(reverse_graph(reverse_graph(g)) == g);
  });
}

TEST_CASE("graph sum is associative on random triples") {
  std::mt19937 rng(42);
  std::vector<std::vector<Nuig>> pool(5);
  for (int n = 2; n <= 4; ++n)
    for_each_nuig(n, [&](const Nuig& g) {
      pool[static_cast<std::size_t>(n)].push_back(g);
    });
  std::uniform_int_distribution<int> size(2, 4);
  for (int trial = 0; trial < 50; ++trial) {
    auto pick = [&] {
      const auto& bucket = pool[static_cast<std::size_t>(size(rng))];
      std::uniform_int_distribution<std::size_t> at(0, bucket.size() - 1);
      return bucket[at(rng)];
    };
    Nuig a = pick(), b = pick(), c = pick();
    CHECK(graph_sum(graph_sum(a, b), c) == graph_sum(a, graph_sum(b, c)));
  }
}

TEST_CASE("edge-list and b-sequence I/O") {
  std::ostringstream out;
  write_edge_list(out, GenericGraph(5, kBowtieEdges));
  std::istringstream in(out.str());
  GenericGraph round = read_edge_list(in);
  CHECK(round.n == 5);
  CHECK(round.edges ==
        std::set<std::pair<int, int>>(kBowtieEdges.begin(),
                                      kBowtieEdges.end()));

  CHECK(parse_b_sequence("1,2,1,2") == Nuig::from_b(5, {1, 2, 1, 2}));
  CHECK(parse_b_sequence("") == Nuig::from_b(1, {}));
  CHECK(parse_b_sequence("-") == Nuig::from_b(1, {}));
  CHECK_THROWS_AS(parse_b_sequence("1,x"), std::exception);
  CHECK(Nuig::from_b(5, {1, 2, 1, 2}).b_string() == "1,2,1,2");
}
