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

#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "chromaq/esym.hpp"
#include "chromaq/graphs.hpp"
#include "chromaq/limits.hpp"
#include "chromaq/qpoly.hpp"
#include "chromaq/symfunc.hpp"

namespace chromaq {

/// Ascents of a coloring, counted over edges: pairs {i,j} in E with i < j
/// and kappa(i) < kappa(j). (Counting over all vertex pairs instead would
/// contradict palindromicity around |E|/2, so the edge reading is the one
/// implemented throughout.)
inline int ascent_count(const Adjacency& adj, const std::vector<int>& kappa) {
  int n = adj.n();
  if (static_cast<int>(kappa.size()) != n)
    throw std::invalid_argument("ascent_count: coloring has wrong length");
  int total = 0;
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i)
      if (adj(i, j) && kappa[static_cast<std::size_t>(i - 1)] <
                           kappa[static_cast<std::size_t>(j - 1)])
        ++total;
  return total;
}

inline int ascent_count(const Nuig& g, const std::vector<int>& kappa) {
  return ascent_count(Adjacency(g), kappa);
}

inline int ascent_count(const GenericGraph& g, const std::vector<int>& kappa) {
  return ascent_count(Adjacency(g), kappa);
}

namespace detail {

/// Enumerate proper colorings kappa: [n] -> [n] and accumulate
/// q^{asc(kappa)} per color-content vector. Restriction to n colors loses
/// nothing for a degree-n symmetric function. Prunes on properness as each
/// vertex is colored; ascents are counted incrementally.
inline std::map<std::vector<int>, QPoly> proper_coloring_sums(
    const Adjacency& adj, bool track_q) {
  int n = adj.n();
  std::map<std::vector<int>, QPoly> acc;
  std::vector<int> color(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> content(static_cast<std::size_t>(n) + 1, 0);

  std::function<void(int, int)> rec = [&](int v, int asc) {
    if (v > n) {
      std::vector<int> key(content.begin() + 1, content.end());
      QPoly& slot = acc[key];
      slot += QPoly::monomial(static_cast<std::size_t>(track_q ? asc : 0));
      return;
    }
    for (int c = 1; c <= n; ++c) {
      bool proper = true;
      int new_ascents = 0;
      for (int u = 1; u < v; ++u) {
        if (!adj(u, v)) continue;
        int cu = color[static_cast<std::size_t>(u)];
        if (cu == c) {
          proper = false;
          break;
        }
        if (cu < c) ++new_ascents;
      }
      if (!proper) continue;
      color[static_cast<std::size_t>(v)] = c;
      ++content[static_cast<std::size_t>(c)];
      rec(v + 1, asc + new_ascents);
      --content[static_cast<std::size_t>(c)];
    }
    color[static_cast<std::size_t>(v)] = 0;
  };
  rec(1, 0);
  return acc;
}

/// Check that coefficients are constant on permutations of content, then
/// keep only the partition-shaped representatives.
inline std::map<Partition, QPoly> monomial_coefficients(
    const std::map<std::vector<int>, QPoly>& by_content) {
  std::map<Partition, QPoly> out;
  for (const auto& [content, poly] : by_content) {
    Partition shape = sort_to_partition(content);
    std::vector<int> canon = shape.parts();
    canon.resize(content.size(), 0);
    auto rep = by_content.find(canon);
    if (rep == by_content.end() || rep->second != poly)
      throw std::domain_error(
          "brute force: coloring sums are not symmetric in the variables");
    if (canon == content) out.emplace(shape, poly);
  }
  return out;
}

inline ESym x_brute_core(const Adjacency& adj, bool track_q, int limit) {
  if (adj.n() > limit)
    throw LimitError("brute force refuses n=" + std::to_string(adj.n()) +
                     " (limit " + std::to_string(limit) +
                     "; cost grows as n^n)");
  auto sums = proper_coloring_sums(adj, track_q);
  return m_to_e(monomial_coefficients(sums), adj.n());
}

}  // namespace detail

/// X_G(x;q) computed directly from the definition by enumerating proper
/// colorings. This is the ground-truth oracle every other route is tested
/// against, so it stays maximally simple.
inline ESym x_brute_force(const Nuig& g,
                          int limit = limits::kBruteForceVertices) {
  return detail::x_brute_core(Adjacency(g), /*track_q=*/true, limit);
}

/// X_G(x) = X_G(x;1) for an arbitrary graph; always symmetric.
inline ESym chrom_sym_q1(const GenericGraph& g,
                         int limit = limits::kBruteForceVertices) {
  return detail::x_brute_core(Adjacency(g), /*track_q=*/false, limit);
}

}  // namespace chromaq
