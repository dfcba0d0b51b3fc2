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

// Golden values and generators shared by the test binaries.

#pragma once

#include <functional>
#include <random>
#include <vector>

#include "chromaq/esym.hpp"
#include "chromaq/graphs.hpp"
#include "chromaq/partitions.hpp"
#include "chromaq/qpoly.hpp"

namespace chromaq::testing {

/// X of the bowtie graph (b = 1,2,1,2):
/// (q^2+2q^3+q^4) e_32 + (q+3q^2+4q^3+3q^4+q^5) e_41
/// + (1+3q+4q^2+4q^3+4q^4+3q^5+q^6) e_5.
inline ESym bowtie_expansion() {
  ESym x;
  x.add_term(Partition{3, 2},
             QPoly(std::vector<Int>{0, 0, 1, 2, 1}));
  x.add_term(Partition{4, 1},
             QPoly(std::vector<Int>{0, 1, 3, 4, 3, 1}));
  x.add_term(Partition{5},
             QPoly(std::vector<Int>{1, 3, 4, 4, 4, 3, 1}));
  return x;
}

/// X of the six-vertex path:
/// q^2[2] e_222 + 2q^2[2] e_321 + q[3][2] e_33 + (q[2][3] + q[4]) e_42
/// + q[4] e_51 + [6] e_6.
inline ESym p6_expansion() {
  auto sh = [](const QPoly& p, int k) {
    return p.shifted(static_cast<std::size_t>(k));
  };
  ESym x;
  x.add_term(Partition{2, 2, 2}, sh(q_int(2), 2));
  x.add_term(Partition{3, 2, 1}, sh(q_int(2) * QPoly(2L), 2));
  x.add_term(Partition{3, 3}, sh(q_int(3) * q_int(2), 1));
  x.add_term(Partition{4, 2}, sh(q_int(2) * q_int(3), 1) + sh(q_int(4), 1));
  x.add_term(Partition{5, 1}, sh(q_int(4), 1));
  x.add_term(Partition{6}, q_int(6));
  return x;
}

/// X of the chain of two six-cliques (11 vertices):
/// [5]![5]!(q^5 e_65 + q^4[3] e_74 + q^3[5] e_83 + q^2[7] e_92
///          + q[9] e_{(10)1} + [11] e_{(11)}).
inline ESym k66_expansion() {
  auto sh = [](const QPoly& p, int k) {
    return p.shifted(static_cast<std::size_t>(k));
  };
  ESym x;
  x.add_term(Partition{6, 5}, sh(QPoly::one(), 5));
  x.add_term(Partition{7, 4}, sh(q_int(3), 4));
  x.add_term(Partition{8, 3}, sh(q_int(5), 3));
  x.add_term(Partition{9, 2}, sh(q_int(7), 2));
  x.add_term(Partition{10, 1}, sh(q_int(9), 1));
  x.add_term(Partition{11}, q_int(11));
  return x * (q_factorial(5) * q_factorial(5));
}

/// The claw (edges 13, 23, 34): X = e_211 - 2 e_22 + 5 e_31 + 4 e_4.
inline GenericGraph claw_graph() {
  return GenericGraph(4, {{1, 3}, {2, 3}, {3, 4}});
}

inline ESym claw_expansion() {
  ESym x;
  x.add_term(Partition{2, 1, 1}, QPoly(1L));
  x.add_term(Partition{2, 2}, QPoly(-2L));
  x.add_term(Partition{3, 1}, QPoly(5L));
  x.add_term(Partition{4}, QPoly(4L));
  return x;
}

/// Closed form for paths: sum over compositions alpha of n of
/// q^{m-1} [alpha_1]_q [alpha_2 - 1]_q ... [alpha_m - 1]_q e_{sort(alpha)}.
inline ESym path_closed_form(int n) {
  ESym x;
  for_each_composition(n, [&](const Composition& alpha) {
    QPoly term = q_int(alpha.parts.front());
    for (std::size_t i = 1; i < alpha.length(); ++i)
      term *= q_int(alpha.parts[i] - 1);
    x.add_term(sort_to_partition(alpha),
               term.shifted(alpha.length() - 1));
  });
  return x;
}

/// Uniform random connected graph on [n] (rejection sampling).
inline GenericGraph random_connected_graph(int n, std::mt19937_64& rng) {
  std::bernoulli_distribution flip(0.5);
  while (true) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (flip(rng)) edges.emplace_back(i, j);
    GenericGraph g(n, edges);
    // Connectivity.
    std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> stack = {1};
    seen[1] = 1;
    int count = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u = 1; u <= n; ++u)
        if (!seen[u] && g.adjacent(u, v)) {
          seen[u] = 1;
          ++count;
          stack.push_back(u);
        }
    }
    if (count == n) return g;
  }
}

}  // namespace chromaq::testing
