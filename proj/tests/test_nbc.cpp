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

#include <set>

#include "chromaq/nbc.hpp"
#include "chromaq/oracle.hpp"
#include "support.hpp"

using namespace chromaq;

TEST_CASE("broken-circuit detection on a triangle") {
  GenericGraph k3(3, {{1, 2}, {1, 3}, {2, 3}});
  EdgeOrder lex = EdgeOrder::lex(k3);
  // The only cycle is {12,13,23} with maximal edge 23, so the broken
  // circuit is {12,13}: the tree on exactly those edges is not NBC, the
  // other two spanning trees are.
  CHECK_FALSE(is_nbc_tree(Subtree{{1, 2, 3}, {{1, 2}, {1, 3}}}, k3, lex));
  CHECK(is_nbc_tree(Subtree{{1, 2, 3}, {{1, 2}, {2, 3}}}, k3, lex));
  CHECK(is_nbc_tree(Subtree{{1, 2, 3}, {{1, 3}, {2, 3}}}, k3, lex));
  CHECK(is_nbc_tree(Subtree{{2}, {}}, k3, lex));
}

TEST_CASE("acyclic graphs have no broken circuits") {
  GenericGraph claw = testing::claw_graph();
  EdgeOrder lex = EdgeOrder::lex(claw);
  CHECK(is_nbc_tree(Subtree{{1, 3}, {{1, 3}}}, claw, lex));
  CHECK(is_nbc_tree(Subtree{{1, 2, 3, 4}, {{1, 3}, {2, 3}, {3, 4}}}, claw,
                    lex));
}

TEST_CASE("nbc expansion reproduces pinned values") {
  GenericGraph claw = testing::claw_graph();
  CHECK(nbc_e_expansion(claw, EdgeOrder::lex(claw)) ==
        testing::claw_expansion());

  GenericGraph empty(4, {});
  CHECK(nbc_e_expansion(empty, EdgeOrder::lex(empty)) ==
        ESym::term(Partition{1, 1, 1, 1}, QPoly::one()));

  // The bowtie at q = 1.
  GenericGraph bowtie = Nuig::from_b(5, {1, 2, 1, 2}).to_generic();
  ESym expected = testing::bowtie_expansion().at_q(1);
  CHECK(nbc_e_expansion(bowtie, EdgeOrder::lex(bowtie)) == expected);
}

TEST_CASE("order independence and oracle agreement on random graphs") {
  std::mt19937_64 rng(991);
  for (int n = 4; n <= 5; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      GenericGraph g = testing::random_connected_graph(n, rng);
      ESym base = nbc_e_expansion(g, EdgeOrder::lex(g));
      CHECK(base == chrom_sym_q1(g));
      for (std::uint64_t seed : {1u, 2u, 3u})
        CHECK(nbc_e_expansion(g, EdgeOrder::shuffled(g, seed)) == base);
    }
  }
}

TEST_CASE("lexicographic NBC trees are decreasing trees on an NUIG") {
  for (int n = 2; n <= 5; ++n)
    for_each_nuig(n, [&](const Nuig& g) {
      GenericGraph gg = g.to_generic();
      EdgeOrder lex = EdgeOrder::lex(gg);
      Adjacency adj(g);
      for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> subset;
        for (int v = 1; v <= n; ++v)
          if (mask & (1u << (v - 1))) subset.push_back(v);

        // Decreasing trees, as edge sets derived from parent maps.
        std::set<std::vector<std::pair<int, int>>> decreasing;
        std::map<int, int> parent;
        std::function<void(std::size_t)> rec = [&](std::size_t idx) {
          if (idx + 1 >= subset.size()) {
            std::vector<std::pair<int, int>> edges;
            for (auto [c, p] : parent) edges.emplace_back(std::min(c, p),
                                                          std::max(c, p));
            std::sort(edges.begin(), edges.end());
            decreasing.insert(edges);
            return;
          }
          int v = subset[idx];
          for (int u : subset)
            if (u > v && adj(v, u)) {
              parent[v] = u;
              rec(idx + 1);
              parent.erase(v);
            }
        };
        if (!subset.empty()) rec(0);

        std::set<std::vector<std::pair<int, int>>> nbc;
        for (const Subtree& t : detail::nbc_spanning_trees(subset, gg, lex)) {
          auto edges = t.edges;
          std::sort(edges.begin(), edges.end());
          nbc.insert(edges);
        }
        CAPTURE(g.b_string(), mask);
        CHECK(decreasing == nbc);
      }
    });
}

TEST_CASE("spanning-tree weights") {
  Nuig bowtie = Nuig::from_b(5, {1, 2, 1, 2});
  CHECK(s_all(bowtie) == q_int(2) * q_int(2));
  for (int n : {2, 4, 6}) CHECK(s_all(make_path(n)) == QPoly::one());

  // Two-tree splits of the bowtie with |V(T_2)| = 2: only {4,5} works,
  // with first-tree lists 123 and 132.
  CHECK(s_k(bowtie, 2) == q_int(2));
  CHECK(s_k(bowtie, 3) == q_int(2));
  CHECK(s_k(bowtie, 1) == QPoly(std::vector<Int>{1, 3, 2}));
  CHECK(s_k(bowtie, 4) == q_int(2));
  CHECK_THROWS_AS(s_k(bowtie, 5), std::invalid_argument);
}

TEST_CASE("two-part coefficients on the bowtie") {
  Nuig bowtie = Nuig::from_b(5, {1, 2, 1, 2});
  CHECK(two_part_coefficient(bowtie, 2) ==
        QPoly(std::vector<Int>{0, 0, 1, 2, 1}));
  CHECK(two_part_coefficient(bowtie, 1) ==
        QPoly(std::vector<Int>{0, 1, 3, 4, 3, 1}));
  CHECK_THROWS_AS(two_part_coefficient(bowtie, 3), std::invalid_argument);
  CHECK_THROWS_AS(two_part_coefficient(bowtie, 0), std::invalid_argument);
}

TEST_CASE("two-part coefficients match the forest-triple sum") {
  for (int n = 2; n <= 6; ++n)
    for_each_nuig(n, [&](const Nuig& g) {
      ESym x = x_forest_triples(g);
      for (int k = 1; 2 * k <= n; ++k) {
        Partition mu = k == n - k ? Partition{k, k} : Partition{n - k, k};
        CAPTURE(g.b_string(), k);
        CHECK(two_part_coefficient(g, k) == x.coeff(mu));
      }
    });
}

TEST_CASE("the halving rule at k = n/2") {
  // Both displayed terms coincide there; cross-check against the four-
  // vertex path, whose e_22 coefficient is q(1+q) by the closed form.
  Nuig p4 = make_path(4);
  CHECK(two_part_coefficient(p4, 2) == QPoly(std::vector<Int>{0, 1, 1}));
  CHECK(testing::path_closed_form(4).coeff(Partition{2, 2}) ==
        QPoly(std::vector<Int>{0, 1, 1}));
}
