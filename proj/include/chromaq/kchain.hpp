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
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "chromaq/esym.hpp"
#include "chromaq/foresttriples.hpp"
#include "chromaq/graphs.hpp"
#include "chromaq/limits.hpp"
#include "chromaq/partitions.hpp"
#include "chromaq/qpoly.hpp"

namespace chromaq {

/// c_0 = 1, c_t = gamma_1 + ... + gamma_t - t + 1; the interior entries are
/// the glue vertices of the chain and c_l = n.
inline std::vector<int> cut_vertices(const KChainSpec& spec) {
  std::vector<int> out = {1};
  int acc = 1;
  for (int part : spec.gamma) {
    acc += part - 1;
    out.push_back(acc);
  }
  return out;
}

/// Membership in the fixed-point set of the chain's nice involution:
/// the forest triple is an atom and, for each clique t with T the triple
/// containing c_t,
///   (C1) at most one other triple meets the vertex interval
///        [c_{t-1}, c_t],
///   (C2) if c_{t-1} is not in T, then r(T) >= gamma_t - epsilon_t,
///   (C3) if c_{t-1} is in T, then T has at least gamma_t vertices
///        >= c_{t-1}.
inline bool is_kchain_fixed(const ForestTriple& f, const KChainSpec& spec) {
  if (!is_atom(f)) return false;
  std::vector<int> cuts = cut_vertices(spec);
  for (std::size_t t = 1; t < cuts.size(); ++t) {
    int lo = cuts[t - 1];
    int hi = cuts[t];
    std::size_t holder = f.triples.size();
    for (std::size_t i = 0; i < f.triples.size(); ++i) {
      const auto& vs = f.triples[i].tree.vertices();
      if (std::binary_search(vs.begin(), vs.end(), hi)) {
        holder = i;
        break;
      }
    }
    const TreeTriple& triple = f.triples[holder];
    int others = 0;
    for (std::size_t i = 0; i < f.triples.size(); ++i) {
      if (i == holder) continue;
      for (int v : f.triples[i].tree.vertices())
        if (v >= lo && v <= hi) {
          ++others;
          break;
        }
    }
    if (others > 1) return false;

    const auto& vs = triple.tree.vertices();
    bool has_lo = std::binary_search(vs.begin(), vs.end(), lo);
    int gamma_t = spec.gamma[t - 1];
    int eps_t = spec.epsilon[t - 1];
    if (!has_lo) {
      if (triple.r < gamma_t - eps_t) return false;
    } else {
      int above = 0;
      for (int v : vs)
        if (v >= lo) ++above;
      if (above < gamma_t) return false;
    }
  }
  return true;
}

/// X as the weighted sum over the fixed-point set, by filtering the generic
/// forest-triple stream. Correctness over speed: the explicit formula is
/// the fast path, and their equality is the aggregate stand-in for the
/// cancellation argument.
inline ESym kchain_fixed_sum(const KChainSpec& spec,
                             int limit = limits::kForestTripleVertices) {
  Nuig g = make_kchain(spec);
  Adjacency adj(g);
  ESym out;
  for_each_forest_triple(
      g,
      [&](const ForestTriple& f) {
        if (!is_kchain_fixed(f, spec)) return;
        out.add_term(type_of(f),
                     QPoly::monomial(static_cast<std::size_t>(weight_of(f, adj))));
      },
      nullptr, limit);
  out.set_declared_degree(g.n());
  return out;
}

/// The index set of the explicit formula: weak compositions
/// alpha_1..alpha_{l+1} of |gamma| - l + 1 with alpha_1 >= 1 where each
/// position i >= 2 sits on one side of the dichotomy
///   alpha_i <  gamma_{i-1}-eps_{i-1}-1  and  suffix_i < G_i, or
///   alpha_i >= gamma_{i-1}-eps_{i-1}    and  suffix_i >= G_i,
/// with suffix_i = alpha_i + ... + alpha_{l+1} and
/// G_i = gamma_i + ... + gamma_l - (l - i).
inline void for_each_alpha_index(
    const KChainSpec& spec,
    const std::function<void(const WeakComposition&)>& fn) {
  int l = static_cast<int>(spec.length());
  int total = 0;
  for (int part : spec.gamma) total += part;
  total -= l - 1;  // |gamma| - l + 1

  std::vector<int> gamma_suffix(static_cast<std::size_t>(l) + 2, 0);
  for (int i = l; i >= 1; --i)
    gamma_suffix[static_cast<std::size_t>(i)] =
        gamma_suffix[static_cast<std::size_t>(i) + 1] +
        spec.gamma[static_cast<std::size_t>(i - 1)];

  std::vector<int> alpha(static_cast<std::size_t>(l) + 1, 0);
  std::function<void(int, int)> rec = [&](int i, int prefix) {
    int suffix = total - prefix;  // alpha_i + ... + alpha_{l+1}
    if (i == l + 2) {
      fn(WeakComposition(alpha));
      return;
    }
    if (i == 1) {
      for (int v = 1; v <= suffix; ++v) {
        alpha[0] = v;
        rec(2, v);
      }
      return;
    }
    int cap = spec.gamma[static_cast<std::size_t>(i - 2)] -
              spec.epsilon[static_cast<std::size_t>(i - 2)];
    int g_i = gamma_suffix[static_cast<std::size_t>(i)] - (l - i);
    int lo, hi;
    if (suffix < g_i) {
      lo = 0;
      hi = std::min(cap - 2, suffix);
    } else {
      lo = cap;
      hi = suffix;
    }
    // The last position must absorb the whole remaining suffix.
    if (i == l + 1) {
      if (suffix >= lo && suffix <= hi) {
        alpha[static_cast<std::size_t>(i - 1)] = suffix;
        rec(i + 1, prefix + suffix);
      }
      return;
    }
    for (int v = lo; v <= hi; ++v) {
      alpha[static_cast<std::size_t>(i - 1)] = v;
      rec(i + 1, prefix + v);
    }
  };
  rec(1, 0);
}

inline std::vector<WeakComposition> alpha_indices(const KChainSpec& spec) {
  std::vector<WeakComposition> out;
  for_each_alpha_index(spec, [&](const WeakComposition& a) { out.push_back(a); });
  return out;
}

/// The closed form
///   X = [gamma_1-2]_q! ... [gamma_l-2]_q! * sum over alpha of
///       [alpha_1]_q prod_{i=2}^{l+1} q^{m_i} [|alpha_i -
///       (gamma_{i-1}-1-eps_{i-1})|]_q e_{sort(alpha)},
/// with m_i = min(alpha_i, gamma_{i-1}-1-eps_{i-1}).
inline ESym kchain_explicit_formula(const KChainSpec& spec) {
  int l = static_cast<int>(spec.length());
  QPoly prefactor = QPoly::one();
  for (int part : spec.gamma) prefactor *= q_factorial(part - 2);

  ESym out;
  for_each_alpha_index(spec, [&](const WeakComposition& alpha) {
    QPoly term = q_int(alpha.parts[0]);
    for (int i = 2; i <= l + 1; ++i) {
      int a_i = alpha.parts[static_cast<std::size_t>(i - 1)];
      int pivot = spec.gamma[static_cast<std::size_t>(i - 2)] - 1 -
                  spec.epsilon[static_cast<std::size_t>(i - 2)];
      int m_i = std::min(a_i, pivot);
      term *= q_int(std::abs(a_i - pivot)).shifted(static_cast<std::size_t>(m_i));
    }
    out.add_term(sort_to_partition(alpha), std::move(term));
  });
  out *= prefactor;
  out.set_declared_degree(spec.vertex_count());
  return out;
}

/// Two cliques of sizes a and b glued at one vertex (n = a+b-1):
///   X = [a-1]_q! [b-1]_q! sum_{k=max(a,b)}^{n} q^{n-k} [2k-n]_q e_{k,n-k}.
inline ESym two_clique_formula(int a, int b) {
  if (a < 2 || b < 2)
    throw std::invalid_argument("two_clique_formula: requires a, b >= 2");
  int n = a + b - 1;
  QPoly prefactor = q_factorial(a - 1) * q_factorial(b - 1);
  ESym out;
  for (int k = std::max(a, b); k <= n; ++k) {
    QPoly c = q_int(2 * k - n).shifted(static_cast<std::size_t>(n - k));
    out.add_term(sort_to_partition(std::vector<int>{k, n - k}), std::move(c));
  }
  out *= prefactor;
  out.set_declared_degree(n);
  return out;
}

struct CoefficientVerdict {
  Partition mu;
  bool nonnegative = false;
  bool palindromic = false;
  bool unimodal = false;
  bool log_concave = false;
};

struct PositivityReport {
  std::vector<CoefficientVerdict> coefficients;  // partitions lex descending
  bool e_positive = true;
  bool palindromic = true;  // around |E|/2
  bool e_unimodal = true;
  bool e_log_concave = true;
};

/// Per-coefficient shape verdicts; palindromicity is tested around the
/// center |E|/2 (twice_center = edge count).
inline PositivityReport analyze_positivity(const ESym& e, long edge_count) {
  PositivityReport report;
  for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
    CoefficientVerdict v;
    v.mu = it->first;
    v.nonnegative = is_nonnegative(it->second);
    v.palindromic = is_palindromic(it->second, edge_count);
    v.unimodal = is_unimodal(it->second);
    v.log_concave = is_log_concave(it->second);
    report.e_positive &= v.nonnegative;
    report.palindromic &= v.palindromic;
    report.e_unimodal &= v.unimodal;
    report.e_log_concave &= v.log_concave;
    report.coefficients.push_back(std::move(v));
  }
  return report;
}

}  // namespace chromaq
