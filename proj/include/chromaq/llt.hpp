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

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "chromaq/esym.hpp"
#include "chromaq/graphs.hpp"
#include "chromaq/limits.hpp"
#include "chromaq/partitions.hpp"
#include "chromaq/qpoly.hpp"
#include "chromaq/symfunc.hpp"

namespace chromaq {

/// Edge subsets are bitmasks over the lexicographically sorted edge list of
/// the graph (the order returned by Nuig::edges()).
using EdgeMask = std::uint32_t;

namespace detail {

/// For each vertex, the (edge index, smaller endpoint) pairs of its
/// downward edges.
inline std::vector<std::vector<std::pair<int, int>>> downward_edges(
    const Nuig& g) {
  std::vector<std::vector<std::pair<int, int>>> down(
      static_cast<std::size_t>(g.n()) + 1);
  auto edges = g.edges();
  for (std::size_t idx = 0; idx < edges.size(); ++idx)
    down[static_cast<std::size_t>(edges[idx].second)].emplace_back(
        static_cast<int>(idx), edges[idx].first);
  return down;
}

/// Lowest reachable vertices for every vertex under theta, by one pass in
/// increasing vertex order: a decreasing path from u starts with a downward
/// theta-edge, so lrv(u) = min(u, lrv over theta-down-neighbors).
inline std::vector<int> lrv_all(
    const std::vector<std::vector<std::pair<int, int>>>& down, int n,
    EdgeMask theta) {
  std::vector<int> lrv(static_cast<std::size_t>(n) + 1);
  for (int u = 1; u <= n; ++u) {
    int r = u;
    for (auto [idx, w] : down[static_cast<std::size_t>(u)])
      if (theta & (EdgeMask{1} << idx)) r = std::min(r, lrv[static_cast<std::size_t>(w)]);
    lrv[static_cast<std::size_t>(u)] = r;
  }
  return lrv;
}

}  // namespace detail

/// Smallest vertex reachable from u by a decreasing path in ([n], theta).
inline int lowest_reachable_vertex(const Nuig& g, EdgeMask theta, int u) {
  if (u < 1 || u > g.n())
    throw std::invalid_argument("lowest_reachable_vertex: vertex out of range");
  auto down = detail::downward_edges(g);
  return detail::lrv_all(down, g.n(), theta)[static_cast<std::size_t>(u)];
}

/// Sizes of the lowest-reachable-vertex equivalence classes, as a partition
/// of n.
inline Partition lrv_partition(const Nuig& g, EdgeMask theta) {
  auto down = detail::downward_edges(g);
  auto lrv = detail::lrv_all(down, g.n(), theta);
  std::map<int, int> class_size;
  for (int u = 1; u <= g.n(); ++u) ++class_size[lrv[static_cast<std::size_t>(u)]];
  std::vector<int> sizes;
  for (const auto& [root, size] : class_size) sizes.push_back(size);
  return sort_to_partition(std::move(sizes));
}

namespace detail {

/// Tally of theta-subset counts per (lrv partition, |theta|).
inline std::map<Partition, std::vector<Int>> subset_tally(const Nuig& g,
                                                          int edge_limit) {
  int m = g.edge_count();
  if (m > edge_limit)
    throw LimitError("edge-subset expansion refuses |E|=" + std::to_string(m) +
                     " (limit " + std::to_string(edge_limit) + ")");
  auto down = downward_edges(g);
  int n = g.n();
  std::map<Partition, std::vector<Int>> tally;
  for (EdgeMask theta = 0;; ++theta) {
    Partition lambda = [&] {
      auto lrv = lrv_all(down, n, theta);
      std::map<int, int> class_size;
      for (int u = 1; u <= n; ++u) ++class_size[lrv[static_cast<std::size_t>(u)]];
      std::vector<int> sizes;
      for (const auto& [root, size] : class_size) sizes.push_back(size);
      return sort_to_partition(std::move(sizes));
    }();
    int weight = 0;
    for (EdgeMask t = theta; t; t &= t - 1) ++weight;
    // Connectivity lower bound: each non-minimal vertex of a block needs a
    // downward theta-edge inside the block.
    if (weight < n - static_cast<int>(lambda.length()))
      throw std::logic_error("llt: |theta| < n - l(lambda(theta))");
    auto& slot = tally[lambda];
    if (slot.empty()) slot.assign(static_cast<std::size_t>(m) + 1, Int(0));
    ++slot[static_cast<std::size_t>(weight)];
    if (theta == (m == 0 ? 0 : ((EdgeMask{1} << m) - 1))) break;
  }
  return tally;
}

}  // namespace detail

/// LLT_G(x;q+1) = sum over theta of q^{|theta|} e_{lambda(theta)}.
inline ESym llt_shifted(const Nuig& g, int edge_limit = limits::kLltEdges) {
  ESym out;
  for (const auto& [lambda, counts] : detail::subset_tally(g, edge_limit)) {
    QPoly c;
    for (std::size_t t = 0; t < counts.size(); ++t)
      if (counts[t] != 0) c += QPoly::monomial(t, counts[t]);
    out.add_term(lambda, std::move(c));
  }
  out.set_declared_degree(g.n());
  return out;
}

/// X_G(x;q) through the plethysm route: substitute q -> q-1 into the
/// shifted expansion and push (q-1)x through each e-factor, which
/// contributes e_k[(q-1)x]/(q-1) per part. The residual exponent
/// |theta| - (n - l(lambda(theta))) is nonnegative for every theta.
inline ESym x_from_llt(const Nuig& g, int edge_limit = limits::kLltEdges) {
  int n = g.n();
  auto tally = detail::subset_tally(g, edge_limit);

  int m = g.edge_count();
  std::vector<QPoly> qm1_power(static_cast<std::size_t>(m) + 1);
  qm1_power[0] = QPoly::one();
  QPoly qm1(std::vector<Int>{Int(-1), Int(1)});
  for (std::size_t k = 1; k < qm1_power.size(); ++k)
    qm1_power[k] = qm1_power[k - 1] * qm1;

  std::map<int, ESym> pleth_cache;
  ESym out;
  for (const auto& [lambda, counts] : tally) {
    QPoly scalar;
    int base = n - static_cast<int>(lambda.length());
    for (std::size_t t = 0; t < counts.size(); ++t) {
      if (counts[t] == 0) continue;
      int d = static_cast<int>(t) - base;
      if (d < 0) throw std::logic_error("x_from_llt: negative (q-1) exponent");
      scalar += qm1_power[static_cast<std::size_t>(d)] * QPoly(counts[t]);
    }
    ESym product = ESym::one();
    for (int part : lambda.parts()) {
      auto it = pleth_cache.find(part);
      if (it == pleth_cache.end())
        it = pleth_cache.emplace(part, e_pleth_qm1(part)).first;
      product *= it->second;
    }
    out += product * scalar;
  }
  out.set_declared_degree(n);
  return out;
}

}  // namespace chromaq
