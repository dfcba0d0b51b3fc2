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
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chromaq/esym.hpp"
#include "chromaq/graphs.hpp"
#include "chromaq/limits.hpp"
#include "chromaq/partitions.hpp"
#include "chromaq/qpoly.hpp"

namespace chromaq {

struct TreeListError : std::invalid_argument {
  std::string condition;
  std::size_t index;
  TreeListError(std::string condition_, std::size_t index_)
      : std::invalid_argument("not a tree list: " + condition_ +
                              " condition violated at index " +
                              std::to_string(index_)),
        condition(std::move(condition_)),
        index(index_) {}
};

/// A decreasing subtree: every vertex except the largest has exactly one
/// larger neighbor, recorded as its parent.
class DecTree {
 public:
  static DecTree from_parent_map(std::vector<int> vertices,
                                 std::map<int, int> parent,
                                 const Adjacency& g) {
    std::sort(vertices.begin(), vertices.end());
    if (vertices.empty())
      throw std::invalid_argument("DecTree: empty vertex set");
    std::set<int> vset(vertices.begin(), vertices.end());
    if (vset.size() != vertices.size())
      throw std::invalid_argument("DecTree: duplicate vertices");
    int top = vertices.back();
    for (int v : vertices) {
      if (v == top) {
        if (parent.count(v))
          throw std::invalid_argument("DecTree: largest vertex has a parent");
        continue;
      }
      auto it = parent.find(v);
      if (it == parent.end())
        throw std::invalid_argument(
            "DecTree: vertex " + std::to_string(v) + " lacks a parent");
      int p = it->second;
      if (p <= v || !vset.count(p))
        throw std::invalid_argument("DecTree: parent of " + std::to_string(v) +
                                    " must be a larger tree vertex");
      if (!g(v, p))
        throw std::invalid_argument("DecTree: parent edge {" +
                                    std::to_string(v) + "," +
                                    std::to_string(p) + "} is not in G");
    }
    return DecTree(std::move(vertices), std::move(parent));
  }

  const std::vector<int>& vertices() const { return vertices_; }
  const std::map<int, int>& parent_map() const { return parent_; }
  int min_vertex() const { return vertices_.front(); }
  std::size_t size() const { return vertices_.size(); }

  /// Read the vertices starting from the smallest; at each step read the
  /// smallest unread vertex adjacent (in the tree) to a read vertex.
  std::vector<int> to_list() const {
    std::map<int, std::vector<int>> nbr;
    for (const auto& [child, par] : parent_) {
      nbr[child].push_back(par);
      nbr[par].push_back(child);
    }
    std::vector<int> out;
    std::set<int> frontier = {vertices_.front()};
    std::set<int> read;
    while (!frontier.empty()) {
      int v = *frontier.begin();
      frontier.erase(frontier.begin());
      out.push_back(v);
      read.insert(v);
      for (int u : nbr[v])
        if (!read.count(u)) frontier.insert(u);
    }
    if (out.size() != vertices_.size())
      throw std::logic_error("DecTree: disconnected parent map");
    return out;
  }

  friend bool operator==(const DecTree& a, const DecTree& b) {
    return a.vertices_ == b.vertices_ && a.parent_ == b.parent_;
  }
  friend bool operator!=(const DecTree& a, const DecTree& b) {
    return !(a == b);
  }

 private:
  DecTree(std::vector<int> vertices, std::map<int, int> parent)
      : vertices_(std::move(vertices)), parent_(std::move(parent)) {}

  std::vector<int> vertices_;  // ascending
  std::map<int, int> parent_;  // child -> unique larger neighbor
};

inline std::vector<int> tree_list_of(const DecTree& t) { return t.to_list(); }

/// Inverse of the reading map: validates the descent and LR-maxima
/// conditions against g, then recovers parents (the rightmost earlier
/// larger entry for non-LR-maxima; the next LR maximum otherwise).
inline DecTree tree_from_list(const std::vector<int>& sigma,
                              const Adjacency& g) {
  if (sigma.empty()) throw TreeListError("nonempty", 0);
  std::set<int> support(sigma.begin(), sigma.end());
  if (support.size() != sigma.size()) throw TreeListError("distinctness", 0);
  if (sigma.front() != *support.begin()) throw TreeListError("min-first", 0);

  // Descent condition.
  for (std::size_t i = 0; i + 1 < sigma.size(); ++i)
    if (sigma[i] > sigma[i + 1] && !g(sigma[i + 1], sigma[i]))
      throw TreeListError("descent", i);

  // LR maxima condition, collecting the maxima chain.
  std::vector<std::size_t> lr_pos;
  int running_max = -1;
  for (std::size_t j = 0; j < sigma.size(); ++j) {
    if (sigma[j] > running_max) {
      if (!lr_pos.empty() && !g(running_max, sigma[j]))
        throw TreeListError("LR-maxima", j);
      lr_pos.push_back(j);
      running_max = sigma[j];
    }
  }

  std::map<int, int> parent;
  std::set<std::size_t> lr_set(lr_pos.begin(), lr_pos.end());
  for (std::size_t j = 0; j < sigma.size(); ++j) {
    if (lr_set.count(j)) continue;
    for (std::size_t i = j; i-- > 0;) {
      if (sigma[i] > sigma[j]) {
        parent[sigma[j]] = sigma[i];
        break;
      }
    }
  }
  for (std::size_t i = 0; i + 1 < lr_pos.size(); ++i)
    parent[sigma[lr_pos[i]]] = sigma[lr_pos[i + 1]];

  return DecTree::from_parent_map(std::vector<int>(sigma.begin(), sigma.end()),
                                  std::move(parent), g);
}

/// Pairs (i,j) with i < j, sigma_i > sigma_j, and {sigma_j, sigma_i} an
/// edge of G.
inline int g_inversions(const std::vector<int>& sigma, const Adjacency& g) {
  int total = 0;
  for (std::size_t i = 0; i < sigma.size(); ++i)
    for (std::size_t j = i + 1; j < sigma.size(); ++j)
      if (sigma[i] > sigma[j] && g(sigma[j], sigma[i])) ++total;
  return total;
}

/// All tree lists supported on the given vertex set, in lexicographic
/// order. Both tree-list conditions are enforced incrementally, so every
/// emitted permutation is the reading word of a decreasing subtree.
inline void for_each_tree_list(
    const std::vector<int>& support, const Adjacency& g,
    const std::function<void(const std::vector<int>&)>& fn) {
  if (support.empty()) return;
  std::vector<int> sorted = support;
  std::sort(sorted.begin(), sorted.end());
  std::size_t h = sorted.size();
  std::vector<int> sigma = {sorted.front()};
  std::vector<bool> used(h, false);
  used[0] = true;

  std::function<void()> rec = [&]() {
    if (sigma.size() == h) {
      fn(sigma);
      return;
    }
    int last = sigma.back();
    int cur_max = *std::max_element(sigma.begin(), sigma.end());
    for (std::size_t idx = 0; idx < h; ++idx) {
      if (used[idx]) continue;
      int x = sorted[idx];
      if (x < last && !g(x, last)) continue;
      if (x > cur_max && !g(cur_max, x)) continue;
      used[idx] = true;
      sigma.push_back(x);
      rec();
      sigma.pop_back();
      used[idx] = false;
    }
  };
  rec();
}

/// (T, alpha, r) with |alpha| = |V(T)| and 1 <= r <= alpha_1.
struct TreeTriple {
  DecTree tree;
  Composition alpha;
  int r = 1;

  TreeTriple(DecTree tree_, Composition alpha_, int r_)
      : tree(std::move(tree_)), alpha(std::move(alpha_)), r(r_) {
    if (alpha.size() != static_cast<int>(tree.size()))
      throw std::invalid_argument("TreeTriple: |alpha| != |V(T)|");
    if (r < 1 || r > alpha.parts.front())
      throw std::invalid_argument("TreeTriple: r out of range [1, alpha_1]");
  }

  friend bool operator==(const TreeTriple& a, const TreeTriple& b) {
    return a.tree == b.tree && a.alpha == b.alpha && a.r == b.r;
  }
  friend bool operator!=(const TreeTriple& a, const TreeTriple& b) {
    return !(a == b);
  }
};

/// Sequence of tree triples whose trees partition [n], ordered by strictly
/// increasing minima.
struct ForestTriple {
  std::vector<TreeTriple> triples;

  friend bool operator==(const ForestTriple& a, const ForestTriple& b) {
    return a.triples == b.triples;
  }
  friend bool operator!=(const ForestTriple& a, const ForestTriple& b) {
    return !(a == b);
  }
};

inline std::vector<int> concatenated_list(const ForestTriple& f) {
  std::vector<int> out;
  for (const TreeTriple& t : f.triples) {
    std::vector<int> part = t.tree.to_list();
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

inline Partition type_of(const ForestTriple& f) {
  std::vector<int> parts;
  for (const TreeTriple& t : f.triples)
    parts.insert(parts.end(), t.alpha.parts.begin(), t.alpha.parts.end());
  return sort_to_partition(std::move(parts));
}

/// (-1)^{l(type) - m}.
inline int sign_of(const ForestTriple& f) {
  std::size_t parts = 0;
  for (const TreeTriple& t : f.triples) parts += t.alpha.length();
  return (parts - f.triples.size()) % 2 == 0 ? 1 : -1;
}

/// inv_G of the concatenated tree lists plus sum of (r_i - 1).
inline int weight_of(const ForestTriple& f, const Adjacency& g) {
  int w = g_inversions(concatenated_list(f), g);
  for (const TreeTriple& t : f.triples) w += t.r - 1;
  return w;
}

inline bool is_atom(const ForestTriple& f) {
  for (const TreeTriple& t : f.triples)
    if (t.alpha.length() >= 2) return false;
  return true;
}

inline bool is_simple(const ForestTriple& f) {
  return !f.triples.empty() && f.triples.front().r == 1;
}

/// Structural validation: trees partition [n], minima strictly increase.
inline void check_forest_triple(const ForestTriple& f, int n) {
  std::set<int> seen;
  int prev_min = 0;
  for (const TreeTriple& t : f.triples) {
    if (t.tree.min_vertex() <= prev_min)
      throw std::invalid_argument(
          "ForestTriple: minima must strictly increase");
    prev_min = t.tree.min_vertex();
    for (int v : t.tree.vertices()) {
      if (v < 1 || v > n || !seen.insert(v).second)
        throw std::invalid_argument("ForestTriple: not a partition of [n]");
    }
  }
  if (static_cast<int>(seen.size()) != n)
    throw std::invalid_argument("ForestTriple: not a partition of [n]");
}

namespace detail {

inline std::string render_sequence(const std::vector<int>& xs) {
  bool digits = true;
  for (int x : xs)
    if (x > 9) digits = false;
  std::ostringstream out;
  if (digits) {
    for (int x : xs) out << x;
  } else {
    out << "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) out << ",";
      out << xs[i];
    }
    out << "]";
  }
  return out.str();
}

}  // namespace detail

/// Renders as the tuples "(15632478, 72, 1)"; lists and compositions are
/// digit strings while entries stay single-digit.
inline std::string to_string(const ForestTriple& f) {
  std::ostringstream out;
  for (std::size_t i = 0; i < f.triples.size(); ++i) {
    const TreeTriple& t = f.triples[i];
    if (i) out << ", ";
    out << "(" << detail::render_sequence(t.tree.to_list()) << ", "
        << detail::render_sequence(t.alpha.parts) << ", " << t.r << ")";
  }
  return out.str();
}

namespace detail {

/// Tree lists per vertex subset, cached per enumeration run.
class TreeListCache {
 public:
  explicit TreeListCache(const Adjacency& g) : g_(g) {}

  const std::vector<std::vector<int>>& lists(std::uint32_t mask) {
    auto it = cache_.find(mask);
    if (it != cache_.end()) return it->second;
    std::vector<int> support;
    for (int v = 1; v <= g_.n(); ++v)
      if (mask & (1u << (v - 1))) support.push_back(v);
    std::vector<std::vector<int>> out;
    for_each_tree_list(support, g_,
               [&](const std::vector<int>& sigma) { out.push_back(sigma); });
    return cache_.emplace(mask, std::move(out)).first->second;
  }

 private:
  const Adjacency& g_;
  std::map<std::uint32_t, std::vector<std::vector<int>>> cache_;
};

/// Ordered set partitions of [n] into blocks carrying a chosen tree list
/// each; blocks are ordered by their minima. The visitor receives the
/// per-block tree lists.
inline void for_each_forest_skeleton(
    const Adjacency& g, TreeListCache& cache,
    const std::function<void(const std::vector<const std::vector<int>*>&)>&
        fn) {
  int n = g.n();
  std::uint32_t full = n >= 32 ? ~0u : ((1u << n) - 1);
  std::vector<const std::vector<int>*> chosen;

  std::function<void(std::uint32_t)> rec = [&](std::uint32_t remaining) {
    if (remaining == 0) {
      fn(chosen);
      return;
    }
    std::uint32_t low = remaining & (~remaining + 1);
    std::uint32_t rest = remaining & ~low;
    // Ascending submask walk over the vertices above the minimum.
    std::uint32_t s = 0;
    while (true) {
      std::uint32_t block = s | low;
      const auto& lists = cache.lists(block);
      for (const auto& sigma : lists) {
        chosen.push_back(&sigma);
        rec(remaining & ~block);
        chosen.pop_back();
      }
      if (s == rest) break;
      s = (s - rest) & rest;
    }
  };
  rec(full);
}

}  // namespace detail

/// Every forest triple of g exactly once: ordered set partitions (blocks by
/// minima), then per-block tree lists in lexicographic order, then
/// compositions, then r. The visited object is reused between calls.
inline void for_each_forest_triple(
    const Nuig& g, const std::function<void(const ForestTriple&)>& fn,
    const Partition* type_filter = nullptr,
    int limit = limits::kForestTripleVertices) {
  int n = g.n();
  if (n > limit)
    throw LimitError("forest-triple enumeration refuses n=" +
                     std::to_string(n) + " (limit " + std::to_string(limit) +
                     ")");
  Adjacency adj(g);
  detail::TreeListCache cache(adj);

  std::vector<std::vector<Composition>> comps(static_cast<std::size_t>(n) + 1);
  for (int s = 1; s <= n; ++s) comps[static_cast<std::size_t>(s)] =
      compositions_of(s);

  detail::for_each_forest_skeleton(adj, cache, [&](const auto& lists) {
    std::size_t m = lists.size();
    std::vector<DecTree> trees;
    trees.reserve(m);
    for (const auto* sigma : lists) trees.push_back(tree_from_list(*sigma, adj));

    // Walk composition assignments, then r assignments.
    std::vector<const Composition*> alpha(m, nullptr);
    std::function<void(std::size_t)> choose_alpha = [&](std::size_t b) {
      if (b == m) {
        if (type_filter) {
          std::vector<int> parts;
          for (const auto* a : alpha)
            parts.insert(parts.end(), a->parts.begin(), a->parts.end());
          if (sort_to_partition(std::move(parts)) != *type_filter) return;
        }
        ForestTriple f;
        f.triples.reserve(m);
        for (std::size_t i = 0; i < m; ++i)
          f.triples.emplace_back(trees[i], *alpha[i], 1);
        std::function<void(std::size_t)> choose_r = [&](std::size_t i) {
          if (i == m) {
            fn(f);
            return;
          }
          for (int r = 1; r <= f.triples[i].alpha.parts.front(); ++r) {
            f.triples[i].r = r;
            choose_r(i + 1);
          }
          f.triples[i].r = 1;
        };
        choose_r(0);
        return;
      }
      for (const Composition& a :
           comps[static_cast<std::size_t>(lists[b]->size())]) {
        alpha[b] = &a;
        choose_alpha(b + 1);
      }
    };
    choose_alpha(0);
  });
}

/// The signed expansion: X_G(x;q) as the sum over forest triples of
/// sign(F) q^{weight(F)} e_{type(F)}. The r choices of each block
/// contribute the geometric factor [alpha_1]_q and are summed in closed
/// form; everything else is literal enumeration.
inline ESym x_forest_triples(const Nuig& g,
                             int limit = limits::kForestTripleVertices) {
  int n = g.n();
  if (n > limit)
    throw LimitError("forest-triple sum refuses n=" + std::to_string(n) +
                     " (limit " + std::to_string(limit) + ")");
  Adjacency adj(g);
  detail::TreeListCache cache(adj);

  std::vector<std::vector<Composition>> comps(static_cast<std::size_t>(n) + 1);
  for (int s = 1; s <= n; ++s) comps[static_cast<std::size_t>(s)] =
      compositions_of(s);
  std::vector<std::vector<QPoly>> alpha1_factor(static_cast<std::size_t>(n) + 1);
  for (int s = 1; s <= n; ++s)
    for (const Composition& a : comps[static_cast<std::size_t>(s)])
      alpha1_factor[static_cast<std::size_t>(s)].push_back(
          q_int(a.parts.front()));

  ESym acc;
  detail::for_each_forest_skeleton(adj, cache, [&](const auto& lists) {
    std::vector<int> sigma;
    for (const auto* part : lists)
      sigma.insert(sigma.end(), part->begin(), part->end());
    int inv = g_inversions(sigma, adj);
    std::size_t m = lists.size();

    std::vector<int> parts;
    QPoly base = QPoly::monomial(static_cast<std::size_t>(inv));
    std::function<void(std::size_t, int, const QPoly&)> rec =
        [&](std::size_t b, int sign, const QPoly& coeff) {
          if (b == m) {
            acc.add_term(sort_to_partition(parts),
                         sign > 0 ? coeff : -coeff);
            return;
          }
          std::size_t s = lists[b]->size();
          const auto& cs = comps[s];
          for (std::size_t ci = 0; ci < cs.size(); ++ci) {
            const Composition& a = cs[ci];
            std::size_t before = parts.size();
            parts.insert(parts.end(), a.parts.begin(), a.parts.end());
            int block_sign = a.length() % 2 == 1 ? 1 : -1;
            rec(b + 1, sign * block_sign, coeff * alpha1_factor[s][ci]);
            parts.resize(before);
          }
        };
    rec(0, 1, base);
  });
  acc.set_declared_degree(n);
  return acc;
}

/// Dual-route check: the left side enumerates tree lists supported on A
/// weighted by q^{inv_G}; the right side is the product of [b_i(A)]_q over
/// non-minimal i in A. The caller asserts equality.
inline std::pair<QPoly, QPoly> tree_list_product_sides(
    const Nuig& g, const std::vector<int>& a_set) {
  if (a_set.empty())
    throw std::invalid_argument("tree_list_product_sides: empty subset");
  Adjacency adj(g);
  QPoly lhs;
  for_each_tree_list(a_set, adj, [&](const std::vector<int>& sigma) {
    lhs += QPoly::monomial(static_cast<std::size_t>(g_inversions(sigma, adj)));
  });
  std::vector<int> sorted = a_set;
  std::sort(sorted.begin(), sorted.end());
  QPoly rhs = QPoly::one();
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    int b = 0;
    for (std::size_t j = 0; j < i; ++j)
      if (adj(sorted[j], sorted[i])) ++b;
    rhs *= q_int(b);
  }
  return {lhs, rhs};
}

// ---------------------------------------------------------------------------
// Rearrangement maps on permutations and tree triples.

/// Rank (1-based) of the first entry within the sorted support.
inline int indstart(const std::vector<int>& sigma) {
  if (sigma.empty()) throw std::invalid_argument("indstart: empty permutation");
  int r = 1;
  for (int x : sigma)
    if (x < sigma.front()) ++r;
  return r;
}

namespace detail {

inline void swap_values(std::vector<int>& sigma, int u, int v) {
  auto iu = std::find(sigma.begin(), sigma.end(), u);
  auto iv = std::find(sigma.begin(), sigma.end(), v);
  std::iter_swap(iu, iv);
}

}  // namespace detail

/// Applies w_1 w_2 ... w_{r-1} (rightmost first), where w_i transposes the
/// entries a_i and a_{i+1} of the sorted support; the result starts with
/// the minimum element.
inline std::vector<int> startmin(std::vector<int> sigma) {
  std::vector<int> sorted = sigma;
  std::sort(sorted.begin(), sorted.end());
  int r = indstart(sigma);
  for (int i = r - 1; i >= 1; --i)
    detail::swap_values(sigma, sorted[static_cast<std::size_t>(i - 1)],
                        sorted[static_cast<std::size_t>(i)]);
  return sigma;
}

/// Inverse rearrangement: applies w_{r-1} ... w_2 w_1 to a permutation that
/// starts with its minimum; the result starts with the r-th smallest entry.
inline std::vector<int> startr(std::vector<int> sigma, int r) {
  if (sigma.empty()) throw std::invalid_argument("startr: empty permutation");
  if (indstart(sigma) != 1)
    throw std::invalid_argument("startr: input must start with its minimum");
  if (r < 1 || r > static_cast<int>(sigma.size()))
    throw std::invalid_argument("startr: r out of range");
  std::vector<int> sorted = sigma;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 1; i <= r - 1; ++i)
    detail::swap_values(sigma, sorted[static_cast<std::size_t>(i - 1)],
                        sorted[static_cast<std::size_t>(i)]);
  return sigma;
}

namespace detail {

inline void require_clique(const std::vector<int>& vs, const Adjacency& g,
                           const char* who) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!g(vs[i], vs[j]))
        throw std::invalid_argument(std::string(who) +
                                    ": vertices must be pairwise adjacent");
}

/// inv_G(list(T)) = inv_G(list(S1) list(S2)) + (r2 - 1); holds whenever the
/// rearranged entries are pairwise adjacent. Violations are bugs.
inline void check_break_weight(const std::vector<int>& whole,
                               const std::vector<int>& head,
                               const std::vector<int>& tail_canonical, int r2,
                               const Adjacency& g) {
  std::vector<int> joined = head;
  joined.insert(joined.end(), tail_canonical.begin(), tail_canonical.end());
  if (g_inversions(whole, g) != g_inversions(joined, g) + (r2 - 1))
    throw std::logic_error("easy break/join: weight identity violated");
}

}  // namespace detail

/// Split a breakable tree triple on a clique into head and tail; the tail
/// is rearranged to start with its minimum and the lost inversions are
/// stored in r2.
inline std::pair<TreeTriple, TreeTriple> easy_break(const TreeTriple& t,
                                                    const Adjacency& g) {
  if (t.alpha.length() < 2)
    throw std::invalid_argument("easy_break: triple is not breakable");
  std::vector<int> sigma = t.tree.to_list();
  detail::require_clique(sigma, g, "easy_break");
  int last_part = t.alpha.parts.back();
  std::size_t head_len = sigma.size() - static_cast<std::size_t>(last_part);
  std::vector<int> head(sigma.begin(), sigma.begin() + head_len);
  std::vector<int> tail(sigma.begin() + head_len, sigma.end());
  int r2 = indstart(tail);
  std::vector<int> tail_min = startmin(tail);
  detail::check_break_weight(sigma, head, tail_min, r2, g);

  Composition head_alpha(std::vector<int>(t.alpha.parts.begin(),
                                          t.alpha.parts.end() - 1));
  TreeTriple s1(tree_from_list(head, g), head_alpha, t.r);
  TreeTriple s2(tree_from_list(tail_min, g), Composition({last_part}), r2);
  return {std::move(s1), std::move(s2)};
}

/// Inverse of easy_break: append the tail rearranged to start with its
/// r2-th smallest entry.
inline TreeTriple easy_join(const TreeTriple& s1, const TreeTriple& s2,
                            const Adjacency& g) {
  if (s2.alpha.length() != 1)
    throw std::invalid_argument("easy_join: second composition must have one part");
  if (s1.tree.min_vertex() >= s2.tree.min_vertex())
    throw std::invalid_argument("easy_join: minima out of order");
  std::vector<int> head = s1.tree.to_list();
  std::vector<int> tail = s2.tree.to_list();
  std::vector<int> all = head;
  all.insert(all.end(), tail.begin(), tail.end());
  detail::require_clique(all, g, "easy_join");

  std::vector<int> tail_r = startr(tail, s2.r);
  std::vector<int> joined = head;
  joined.insert(joined.end(), tail_r.begin(), tail_r.end());
  detail::check_break_weight(joined, head, tail, s2.r, g);

  std::vector<int> alpha = s1.alpha.parts;
  alpha.push_back(s2.alpha.parts.front());
  return TreeTriple(tree_from_list(joined, g), Composition(std::move(alpha)),
                    s1.r);
}

// ---------------------------------------------------------------------------
// Sign-reversing involutions for paths and complete graphs.

inline bool is_path_graph(const Nuig& g) {
  for (int b : g.b())
    if (b != 1) return false;
  return true;
}

inline bool is_complete_graph(const Nuig& g) {
  for (int j = 2; j <= g.n(); ++j)
    if (g.smaller_neighbors(j) != j - 1) return false;
  return true;
}

/// The involution for paths: scan tree triples right to left for the first
/// breakable one (split off its last composition part, r = 1) or the first
/// joinable one (composition length one, r = 1, join to its predecessor).
/// Fixed points have all compositions of length one and r_i >= 2 for
/// i >= 2.
inline ForestTriple path_involution(const ForestTriple& f, const Nuig& g) {
  if (!is_path_graph(g))
    throw std::invalid_argument("path_involution: graph is not a path");
  check_forest_triple(f, g.n());
  Adjacency adj(g);

  std::size_t m = f.triples.size();
  for (std::size_t j = m; j-- > 0;) {
    const TreeTriple& t = f.triples[j];
    if (t.alpha.length() >= 2) {
      // Break: the tree is the interval [lo, hi]; split off the last part.
      int hi = t.tree.vertices().back();
      int last_part = t.alpha.parts.back();
      std::vector<int> head_list, tail_list;
      for (int v : t.tree.vertices())
        (v <= hi - last_part ? head_list : tail_list).push_back(v);
      Composition head_alpha(std::vector<int>(t.alpha.parts.begin(),
                                              t.alpha.parts.end() - 1));
      ForestTriple out = f;
      out.triples[j] = TreeTriple(tree_from_list(head_list, adj), head_alpha,
                                  t.r);
      out.triples.insert(
          out.triples.begin() + static_cast<std::ptrdiff_t>(j) + 1,
          TreeTriple(tree_from_list(tail_list, adj),
                     Composition({last_part}), 1));
      return out;
    }
    if (j >= 1 && t.alpha.length() == 1 && t.r == 1) {
      // Join to the previous tree triple.
      const TreeTriple& prev = f.triples[j - 1];
      std::vector<int> joined_list = prev.tree.to_list();
      std::vector<int> tail_list = t.tree.to_list();
      joined_list.insert(joined_list.end(), tail_list.begin(),
                         tail_list.end());
      std::vector<int> alpha = prev.alpha.parts;
      alpha.push_back(t.alpha.parts.front());
      ForestTriple out = f;
      out.triples[j - 1] = TreeTriple(tree_from_list(joined_list, adj),
                                      Composition(std::move(alpha)), prev.r);
      out.triples.erase(out.triples.begin() + static_cast<std::ptrdiff_t>(j));
      return out;
    }
  }
  return f;
}

/// The involution for complete graphs, on simple forest triples: break the
/// last triple if breakable, otherwise join the last two; single-triple
/// atoms are the fixed points.
inline ForestTriple complete_involution(const ForestTriple& f, const Nuig& g) {
  if (!is_complete_graph(g))
    throw std::invalid_argument("complete_involution: graph is not complete");
  check_forest_triple(f, g.n());
  if (!is_simple(f))
    throw std::invalid_argument("complete_involution: requires r_1 = 1");
  Adjacency adj(g);

  std::size_t m = f.triples.size();
  const TreeTriple& last = f.triples[m - 1];
  if (last.alpha.length() >= 2) {
    auto [s1, s2] = easy_break(last, adj);
    ForestTriple out = f;
    out.triples[m - 1] = std::move(s1);
    out.triples.push_back(std::move(s2));
    return out;
  }
  if (m >= 2) {
    TreeTriple joined = easy_join(f.triples[m - 2], last, adj);
    ForestTriple out = f;
    out.triples.pop_back();
    out.triples[m - 2] = std::move(joined);
    return out;
  }
  return f;
}

// ---------------------------------------------------------------------------
// Restriction of a simple forest triple past a cut vertex.

inline bool is_cut_vertex(const Nuig& g, int a) {
  if (a <= 1 || a >= g.n()) return false;
  for (int j = a + 1; j <= g.n(); ++j)
    if (j - g.smaller_neighbors(j) < a) return false;
  return true;
}

/// The induced graph on {a, ..., n}, relabeled to start at 1. For a cut
/// vertex the b-sequence is simply the tail.
inline Nuig upper_part(const Nuig& g, int a) {
  if (!is_cut_vertex(g, a))
    throw std::invalid_argument("upper_part: a is not a cut vertex");
  std::vector<int> b(g.b().begin() + (a - 1), g.b().end());
  return Nuig::from_b(g.n() - a + 1, std::move(b));
}

/// seg_{[a]}: the index of the composition part of the triple containing a
/// that straddles its last vertex in [a], plus the composition lengths of
/// every other triple present in [a].
inline int segment_count(const ForestTriple& f, int a, const Nuig& g) {
  check_forest_triple(f, g.n());
  if (!is_cut_vertex(g, a))
    throw std::invalid_argument("segment_count: a is not a cut vertex");
  std::size_t i = 0;
  for (; i < f.triples.size(); ++i) {
    const auto& vs = f.triples[i].tree.vertices();
    if (std::find(vs.begin(), vs.end(), a) != vs.end()) break;
  }
  const TreeTriple& ti = f.triples[i];
  int k = 0;
  for (int v : ti.tree.vertices())
    if (v <= a) ++k;
  int prefix = 0;
  int seg_i = 0;
  for (std::size_t idx = 0; idx < ti.alpha.length(); ++idx) {
    prefix += ti.alpha.parts[idx];
    if (k <= prefix) {
      seg_i = static_cast<int>(idx) + 1;
      break;
    }
  }
  int total = seg_i;
  for (std::size_t t = 0; t < f.triples.size(); ++t) {
    if (t == i) continue;
    const auto& vs = f.triples[t].tree.vertices();
    bool present = vs.front() <= a;
    if (present) total += static_cast<int>(f.triples[t].alpha.length());
  }
  return total;
}

/// F|>=a: truncate the triple containing a to its entries above a (with a
/// itself leading), keep the triples entirely above a, and shift all labels
/// down by a-1. The result is a simple forest triple of the upper part.
inline ForestTriple restrict_above(const ForestTriple& f, int a,
                                   const Nuig& g) {
  check_forest_triple(f, g.n());
  if (!is_simple(f))
    throw std::invalid_argument("restrict_above: requires a simple forest triple");
  if (!is_cut_vertex(g, a))
    throw std::invalid_argument("restrict_above: a is not a cut vertex");
  Nuig upper = upper_part(g, a);
  Adjacency upper_adj(upper);

  std::size_t i = 0;
  for (; i < f.triples.size(); ++i) {
    const auto& vs = f.triples[i].tree.vertices();
    if (std::find(vs.begin(), vs.end(), a) != vs.end()) break;
  }
  const TreeTriple& ti = f.triples[i];
  std::vector<int> sigma = ti.tree.to_list();
  int k = 0;
  for (int v : ti.tree.vertices())
    if (v <= a) ++k;
  int prefix = 0;
  std::size_t j = 0;
  for (; j < ti.alpha.length(); ++j) {
    prefix += ti.alpha.parts[j];
    if (k <= prefix) break;
  }

  // Tree list of the truncated triple: a followed by the entries after the
  // first k (all above a, by the cut-vertex splitting of tree lists).
  std::vector<int> trunc = {a};
  for (std::size_t t = static_cast<std::size_t>(k); t < sigma.size(); ++t)
    trunc.push_back(sigma[t]);
  std::vector<int> alpha = {prefix - k + 1};
  for (std::size_t t = j + 1; t < ti.alpha.length(); ++t)
    alpha.push_back(ti.alpha.parts[t]);

  std::size_t i_prime = i;
  for (std::size_t t = i + 1; t < f.triples.size(); ++t)
    if (f.triples[t].tree.vertices().front() <= a) i_prime = t;

  auto shifted = [&](const std::vector<int>& list) {
    std::vector<int> out;
    out.reserve(list.size());
    for (int v : list) out.push_back(v - (a - 1));
    return out;
  };

  ForestTriple out;
  out.triples.emplace_back(tree_from_list(shifted(trunc), upper_adj),
                           Composition(std::move(alpha)), 1);
  for (std::size_t t = i_prime + 1; t < f.triples.size(); ++t)
    out.triples.emplace_back(
        tree_from_list(shifted(f.triples[t].tree.to_list()), upper_adj),
        f.triples[t].alpha, f.triples[t].r);
  return out;
}

}  // namespace chromaq
