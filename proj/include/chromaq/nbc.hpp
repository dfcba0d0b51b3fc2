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

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chromaq/esym.hpp"
#include "chromaq/foresttriples.hpp"
#include "chromaq/graphs.hpp"
#include "chromaq/limits.hpp"
#include "chromaq/partitions.hpp"
#include "chromaq/qpoly.hpp"

namespace chromaq {

/// A total ordering of the edge set. The default is lexicographic on the
/// normalized (i < j) pairs; under that order on a natural unit interval
/// graph, NBC trees are precisely decreasing trees.
struct EdgeOrder {
  std::vector<std::pair<int, int>> by_rank;
  std::map<std::pair<int, int>, int> rank;  // 1-based

  static EdgeOrder from_sequence(std::vector<std::pair<int, int>> edges) {
    EdgeOrder out;
    out.by_rank = std::move(edges);
    for (std::size_t i = 0; i < out.by_rank.size(); ++i)
      out.rank[out.by_rank[i]] = static_cast<int>(i) + 1;
    if (out.rank.size() != out.by_rank.size())
      throw std::invalid_argument("EdgeOrder: duplicate edges");
    return out;
  }

  static EdgeOrder lex(const GenericGraph& g) {
    return from_sequence(
        std::vector<std::pair<int, int>>(g.edges.begin(), g.edges.end()));
  }

  static EdgeOrder shuffled(const GenericGraph& g, std::uint64_t seed) {
    std::vector<std::pair<int, int>> edges(g.edges.begin(), g.edges.end());
    std::mt19937_64 rng(seed);
    std::shuffle(edges.begin(), edges.end(), rng);
    return from_sequence(std::move(edges));
  }

  int rank_of(int i, int j) const {
    if (i > j) std::swap(i, j);
    auto it = rank.find({i, j});
    if (it == rank.end())
      throw std::invalid_argument("EdgeOrder: edge not in order");
    return it->second;
  }
};

/// Subtree of an arbitrary graph, as vertices plus tree edges.
struct Subtree {
  std::vector<int> vertices;                 // ascending
  std::vector<std::pair<int, int>> edges;    // normalized i < j
};

namespace detail {

/// Path between two tree vertices, returned as edges. The tree is tiny, so
/// a parent-pointer BFS suffices.
inline std::vector<std::pair<int, int>> tree_path(const Subtree& t, int u,
                                                  int v) {
  std::map<int, std::vector<int>> adj;
  for (auto [a, b] : t.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::map<int, int> parent;
  std::vector<int> queue = {u};
  parent[u] = u;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int x = queue[head];
    if (x == v) break;
    for (int y : adj[x])
      if (!parent.count(y)) {
        parent[y] = x;
        queue.push_back(y);
      }
  }
  if (!parent.count(v))
    throw std::invalid_argument("tree_path: vertices not connected in tree");
  std::vector<std::pair<int, int>> path;
  for (int x = v; x != u; x = parent[x])
    path.emplace_back(std::min(x, parent[x]), std::max(x, parent[x]));
  return path;
}

}  // namespace detail

/// No-broken-circuit test via fundamental cycles: for every non-tree edge
/// of G internal to the tree, some edge on the tree path between its
/// endpoints must exceed it in the order. (A broken circuit inside E(T) is
/// a cycle minus its maximal edge; the cycle through a non-tree edge is its
/// fundamental one, since tree paths are unique.)
inline bool is_nbc_tree(const Subtree& t, const GenericGraph& g,
                        const EdgeOrder& ord) {
  std::vector<int> vs = t.vertices;
  std::sort(vs.begin(), vs.end());
  for (auto [u, v] : g.edges) {
    if (!std::binary_search(vs.begin(), vs.end(), u) ||
        !std::binary_search(vs.begin(), vs.end(), v))
      continue;
    if (std::find(t.edges.begin(), t.edges.end(), std::make_pair(u, v)) !=
        t.edges.end())
      continue;
    int e_rank = ord.rank_of(u, v);
    bool dominated = false;
    for (auto [a, b] : detail::tree_path(t, u, v))
      if (ord.rank_of(a, b) > e_rank) {
        dominated = true;
        break;
      }
    if (!dominated) return false;
  }
  return true;
}

namespace detail {

/// All NBC spanning trees of the induced subgraph on the given vertices.
inline std::vector<Subtree> nbc_spanning_trees(const std::vector<int>& block,
                                               const GenericGraph& g,
                                               const EdgeOrder& ord) {
  std::vector<int> vs = block;
  std::sort(vs.begin(), vs.end());
  std::vector<Subtree> out;
  if (vs.size() == 1) {
    out.push_back(Subtree{vs, {}});
    return out;
  }
  std::vector<std::pair<int, int>> internal;
  for (auto [u, v] : g.edges)
    if (std::binary_search(vs.begin(), vs.end(), u) &&
        std::binary_search(vs.begin(), vs.end(), v))
      internal.push_back({u, v});
  std::size_t need = vs.size() - 1;
  if (internal.size() < need) return out;

  std::vector<std::pair<int, int>> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (chosen.size() == need) {
      // Acyclic + connected via union-find.
      std::map<int, int> root;
      for (int v : vs) root[v] = v;
      std::function<int(int)> find = [&](int x) {
        while (root[x] != x) x = root[x] = root[root[x]];
        return x;
      };
      for (auto [a, b] : chosen) {
        int ra = find(a), rb = find(b);
        if (ra == rb) return;
        root[ra] = rb;
      }
      Subtree t{vs, chosen};
      if (is_nbc_tree(t, g, ord)) out.push_back(std::move(t));
      return;
    }
    for (std::size_t i = from;
         i + (need - chosen.size()) <= internal.size(); ++i) {
      chosen.push_back(internal[i]);
      rec(i + 1);
      chosen.pop_back();
    }
  };
  rec(0);
  return out;
}

}  // namespace detail

/// The q = 1 signed expansion for an arbitrary graph: sum over NBC-forest
/// triples of sign(F) e_{type(F)}. The r choices contribute a factor of
/// alpha_1 per block. The value does not depend on the edge order.
inline ESym nbc_e_expansion(const GenericGraph& g, const EdgeOrder& ord,
                            int limit = limits::kForestTripleVertices) {
  int n = g.n;
  if (n > limit)
    throw LimitError("nbc expansion refuses n=" + std::to_string(n) +
                     " (limit " + std::to_string(limit) + ")");
  if (n == 0) return ESym::one();

  // Cache NBC spanning-tree counts per vertex subset.
  std::map<std::uint32_t, std::size_t> tree_count;
  auto count_for = [&](std::uint32_t mask) {
    auto it = tree_count.find(mask);
    if (it != tree_count.end()) return it->second;
    std::vector<int> block;
    for (int v = 1; v <= n; ++v)
      if (mask & (1u << (v - 1))) block.push_back(v);
    std::size_t c = detail::nbc_spanning_trees(block, g, ord).size();
    tree_count.emplace(mask, c);
    return c;
  };

  // Per block: sum over compositions of sign * alpha_1 on the multiset of
  // parts; accumulate over ordered set partitions weighted by tree counts.
  ESym acc;
  std::vector<int> parts;
  std::function<void(std::uint32_t, Int, int)> rec =
      [&](std::uint32_t remaining, Int trees, int sign) {
        if (remaining == 0) {
          std::vector<int> sorted_parts = parts;
          acc.add_term(sort_to_partition(std::move(sorted_parts)),
                       QPoly(sign > 0 ? trees : -trees));
          return;
        }
        std::uint32_t low = remaining & (~remaining + 1);
        std::uint32_t rest = remaining & ~low;
        std::uint32_t s = 0;
        while (true) {
          std::uint32_t block = s | low;
          std::size_t count = count_for(block);
          if (count > 0) {
            int size = 0;
            for (std::uint32_t b = block; b; b &= b - 1) ++size;
            for (const Composition& a : compositions_of(size)) {
              std::size_t before = parts.size();
              parts.insert(parts.end(), a.parts.begin(), a.parts.end());
              int block_sign = a.length() % 2 == 1 ? 1 : -1;
              rec(remaining & ~block,
                  trees * Int(count) * Int(a.parts.front()),
                  sign * block_sign);
              parts.resize(before);
            }
          }
          if (s == rest) break;
          s = (s - rest) & rest;
        }
      };
  rec(n >= 32 ? ~0u : ((1u << n) - 1), Int(1), 1);
  acc.set_declared_degree(n);
  return acc;
}

/// s(G) = [b_2]_q ... [b_n]_q: the q-count of decreasing spanning trees.
inline QPoly s_all(const Nuig& g) {
  QPoly out = QPoly::one();
  for (int j = 2; j <= g.n(); ++j) out *= q_int(g.smaller_neighbors(j));
  return out;
}

/// s_k(G): inversion-weighted count of two-tree decreasing forests with
/// vertex 1 in the first tree and |V(T_2)| = k.
inline QPoly s_k(const Nuig& g, int k) {
  int n = g.n();
  if (k < 1 || k > n - 1)
    throw std::invalid_argument("s_k: requires 1 <= k <= n-1");
  Adjacency adj(g);
  QPoly out;
  // Choose V(T_2) among {2..n}.
  std::vector<int> pick;
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(pick.size()) == k) {
      std::vector<int> rest;
      for (int v = 1; v <= n; ++v)
        if (!std::binary_search(pick.begin(), pick.end(), v))
          rest.push_back(v);
      for_each_tree_list(rest, adj, [&](const std::vector<int>& first) {
        for_each_tree_list(pick, adj, [&](const std::vector<int>& second) {
          std::vector<int> sigma = first;
          sigma.insert(sigma.end(), second.begin(), second.end());
          out += QPoly::monomial(
              static_cast<std::size_t>(g_inversions(sigma, adj)));
        });
      });
      return;
    }
    for (int v = from; v <= n; ++v) {
      pick.push_back(v);
      rec(v + 1);
      pick.pop_back();
    }
  };
  rec(2);
  return out;
}

/// Coefficient of e_{(n-k)k} in X_G(x;q), for 1 <= k <= n/2:
///   [n-k]_q([k]_q s_k(G) - s(G)) + [k]_q([n-k]_q s_{n-k}(G) - s(G));
/// at k = n/2 both terms coincide and the coefficient is one of them.
inline QPoly two_part_coefficient(const Nuig& g, int k) {
  int n = g.n();
  if (k < 1 || 2 * k > n)
    throw std::invalid_argument("two_part_coefficient: requires 1 <= k <= n/2");
  QPoly s = s_all(g);
  QPoly first = q_int(n - k) * (q_int(k) * s_k(g, k) - s);
  if (2 * k == n) return first;
  QPoly second = q_int(k) * (q_int(n - k) * s_k(g, n - k) - s);
  return first + second;
}

}  // namespace chromaq
