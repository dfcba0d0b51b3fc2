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

#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "chromaq/foresttriples.hpp"
#include "chromaq/graphs.hpp"
#include "chromaq/kchain.hpp"
#include "chromaq/oracle.hpp"
#include "chromaq/partitions.hpp"
#include "chromaq/qpoly.hpp"

namespace chromaq {

struct SuiteReport {
  std::string suite;
  long checks = 0;
  long failures = 0;
  std::string first_counterexample;

  bool passed() const { return failures == 0; }

  void record(bool ok, const std::function<std::string()>& describe) {
    ++checks;
    if (!ok) {
      if (failures == 0) first_counterexample = describe();
      ++failures;
    }
  }
};

namespace detail {

inline bool path_fixed_shape(const ForestTriple& f) {
  for (std::size_t i = 0; i < f.triples.size(); ++i) {
    if (f.triples[i].alpha.length() != 1) return false;
    if (i >= 1 && f.triples[i].r < 2) return false;
  }
  return true;
}

template <typename Involution>
inline void check_involution_properties(const ForestTriple& f,
                                        const Involution& phi,
                                        const Adjacency& adj,
                                        bool fixed_expected,
                                        SuiteReport& report) {
  ForestTriple image = phi(f);
  auto describe = [&] { return to_string(f) + " -> " + to_string(image); };
  report.record(phi(image) == f, describe);
  bool fixed = image == f;
  report.record(fixed == fixed_expected, describe);
  if (!fixed) {
    report.record(sign_of(image) == -sign_of(f), describe);
    report.record(type_of(image) == type_of(f), describe);
    report.record(weight_of(image, adj) == weight_of(f, adj), describe);
    report.record(image.triples.front().alpha.parts.front() ==
                      f.triples.front().alpha.parts.front(),
                  describe);
  }
}

}  // namespace detail

/// Exhaustive involution checks: the path involution over all forest
/// triples of P_m (m <= path_max) and the complete-graph involution over
/// all simple forest triples of K_m (m <= complete_max). Checks the
/// involution law, sign reversal off fixed points, preservation of type,
/// weight and the first part of the first composition, and both directions
/// of the fixed-point characterizations.
inline SuiteReport verify_involutions(int path_max, int complete_max) {
  SuiteReport report;
  report.suite = "involutions";

  for (int m = 1; m <= path_max; ++m) {
    Nuig g = make_path(m);
    Adjacency adj(g);
    auto phi = [&](const ForestTriple& f) { return path_involution(f, g); };
    for_each_forest_triple(g, [&](const ForestTriple& f) {
      detail::check_involution_properties(f, phi, adj,
                                          detail::path_fixed_shape(f), report);
    });
  }

  for (int m = 1; m <= complete_max; ++m) {
    Nuig g = make_complete(m);
    Adjacency adj(g);
    auto phi = [&](const ForestTriple& f) {
      return complete_involution(f, g);
    };
    for_each_forest_triple(g, [&](const ForestTriple& f) {
      if (!is_simple(f)) return;
      bool fixed_expected = f.triples.size() == 1 && is_atom(f);
      detail::check_involution_properties(f, phi, adj, fixed_expected, report);
    });
  }
  return report;
}

/// Tree-list bijection and product identity, over every natural unit
/// interval graph with at most max_n vertices and every nonempty vertex
/// subset: list-of and tree-from-list invert each other in both
/// directions, and the inversion-weighted tree-list sum over a subset A
/// factorizes as the product of [b_i(A)]_q.
inline SuiteReport verify_treelist(int max_n) {
  SuiteReport report;
  report.suite = "treelist";
  for (int n = 1; n <= max_n; ++n) {
    for_each_nuig(n, [&](const Nuig& g) {
      Adjacency adj(g);
      for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> subset;
        for (int v = 1; v <= n; ++v)
          if (mask & (1u << (v - 1))) subset.push_back(v);

        // Lists round-trip through trees.
        long list_count = 0;
        for_each_tree_list(subset, adj, [&](const std::vector<int>& sigma) {
          ++list_count;
          DecTree t = tree_from_list(sigma, adj);
          report.record(t.to_list() == sigma, [&] {
            return "b=" + g.b_string() + " list " +
                   detail::render_sequence(sigma);
          });
        });

        // Trees round-trip through lists: enumerate parent assignments.
        long tree_count = 0;
        std::map<int, int> parent;
        std::function<void(std::size_t)> rec = [&](std::size_t idx) {
          if (idx + 1 >= subset.size()) {  // all but the largest assigned
            ++tree_count;
            DecTree t = DecTree::from_parent_map(subset, parent, adj);
            std::vector<int> sigma = t.to_list();
            report.record(tree_from_list(sigma, adj) == t, [&] {
              return "b=" + g.b_string() + " tree list " +
                     detail::render_sequence(sigma);
            });
            return;
          }
          int v = subset[idx];
          for (int u : subset) {
            if (u > v && adj(v, u)) {
              parent[v] = u;
              rec(idx + 1);
              parent.erase(v);
            }
          }
        };
        rec(0);
        report.record(list_count == tree_count, [&] {
          return "b=" + g.b_string() + " subset size " +
                 std::to_string(subset.size()) + ": " +
                 std::to_string(list_count) + " lists vs " +
                 std::to_string(tree_count) + " trees";
        });

        // Product identity.
        auto [lhs, rhs] = tree_list_product_sides(g, subset);
        report.record(lhs == rhs, [&] {
          return "b=" + g.b_string() + " subset mask " + std::to_string(mask) +
                 ": " + lhs.to_string() + " vs " + rhs.to_string();
        });
      }
    });
  }
  return report;
}

/// Enumerate the chain shapes with parts in {2,3,4}, at most max_n vertices
/// and every valid epsilon; visits each spec once.
inline void for_each_small_kchain_spec(
    int max_n, const std::function<void(const KChainSpec&)>& fn) {
  std::vector<int> gamma;
  std::function<void()> rec_eps;
  std::function<void()> rec = [&]() {
    if (!gamma.empty()) {
      int n = 1;
      for (int part : gamma) n += part - 1;
      if (n > max_n) return;
      // All valid epsilon vectors for this gamma.
      std::vector<int> eps(gamma.size(), 0);
      std::function<void(std::size_t)> eps_rec = [&](std::size_t t) {
        if (t == gamma.size()) {
          fn(KChainSpec(gamma, eps));
          return;
        }
        eps[t] = 0;
        eps_rec(t + 1);
        if (gamma[t] >= 3) {
          eps[t] = 1;
          eps_rec(t + 1);
          eps[t] = 0;
        }
      };
      eps_rec(0);
    }
    for (int part = 2; part <= 4; ++part) {
      int n = 1;
      for (int g : gamma) n += g - 1;
      if (n + part - 1 > max_n) continue;
      gamma.push_back(part);
      rec();
      gamma.pop_back();
    }
  };
  rec();
}

/// Cross-validates the K-chain pipeline: explicit formula = fixed-point sum
/// = brute force for every chain with parts in {2,3,4} and at most max_n
/// vertices, all valid epsilon vectors.
inline SuiteReport verify_kchain(int max_n) {
  SuiteReport report;
  report.suite = "kchain";
  for_each_small_kchain_spec(max_n, [&](const KChainSpec& spec) {
    Nuig g = make_kchain(spec);
    ESym explicit_form = kchain_explicit_formula(spec);
    ESym fixed = kchain_fixed_sum(spec);
    ESym brute = x_brute_force(g);
    auto describe = [&] {
      std::ostringstream out;
      out << "gamma=";
      for (int x : spec.gamma) out << x;
      out << " eps=";
      for (int x : spec.epsilon) out << x;
      return out.str();
    };
    report.record(explicit_form == fixed, describe);
    report.record(fixed == brute, describe);
  });
  return report;
}

}  // namespace chromaq
