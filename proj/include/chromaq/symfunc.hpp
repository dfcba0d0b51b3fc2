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
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "chromaq/esym.hpp"
#include "chromaq/partitions.hpp"
#include "chromaq/qpoly.hpp"

namespace chromaq {

/// p_n = sum over compositions alpha of n of (-1)^{n-l(alpha)} alpha_1
/// e_{sort(alpha)}.
inline ESym p_to_e(int n) {
  if (n < 1) throw std::invalid_argument("p_to_e: requires n >= 1");
  ESym out;
  for_each_composition(n, [&](const Composition& alpha) {
    int sign = ((n - static_cast<int>(alpha.length())) % 2 == 0) ? 1 : -1;
    out.add_term(sort_to_partition(alpha), QPoly(Int(sign * alpha.parts[0])));
  });
  out.set_declared_degree(n);
  return out;
}

/// h_n = sum over compositions alpha of n of (-1)^{n-l(alpha)}
/// e_{sort(alpha)}; h_0 is the empty-partition term 1.
inline ESym h_to_e(int n) {
  if (n < 0) throw std::invalid_argument("h_to_e: requires n >= 0");
  ESym out;
  for_each_composition(n, [&](const Composition& alpha) {
    int sign = ((n - static_cast<int>(alpha.length())) % 2 == 0) ? 1 : -1;
    out.add_term(sort_to_partition(alpha), QPoly(Int(sign)));
  });
  out.set_declared_degree(n);
  return out;
}

/// e_n[(q-1)x]/(q-1) = sum over compositions alpha of n of
/// (-1)^{l(alpha)-1} [alpha_1]_q e_{sort(alpha)}.
inline ESym e_pleth_qm1(int n) {
  if (n < 1) throw std::invalid_argument("e_pleth_qm1: requires n >= 1");
  ESym out;
  for_each_composition(n, [&](const Composition& alpha) {
    QPoly c = q_int(alpha.parts[0]);
    if (alpha.length() % 2 == 0) c = -c;
    out.add_term(sort_to_partition(alpha), c);
  });
  out.set_declared_degree(n);
  return out;
}

namespace detail {

/// Number of 0/1 matrices with the given row sums and column sums; this is
/// the coefficient of m_{cols} in e_{rows}. Memoized on (rows left, sorted
/// residual columns).
inline Int count_01_matrices(const std::vector<int>& rows,
                             std::vector<int> cols) {
  std::sort(cols.begin(), cols.end(), std::greater<int>());
  while (!cols.empty() && cols.back() == 0) cols.pop_back();

  static std::map<std::pair<std::vector<int>, std::vector<int>>, Int> cache;
  static std::mutex cache_mutex;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find({rows, cols});
    if (it != cache.end()) return it->second;
  }

  Int result;
  if (rows.empty()) {
    result = cols.empty() ? 1 : 0;
  } else {
    int want = rows[0];
    std::vector<int> rest(rows.begin() + 1, rows.end());
    result = 0;
    // Choose which columns receive a 1 in the first row.
    std::vector<int> picked;
    std::function<void(std::size_t, int)> choose = [&](std::size_t from,
                                                       int left) {
      if (left == 0) {
        std::vector<int> next = cols;
        for (int idx : picked) --next[static_cast<std::size_t>(idx)];
        result += count_01_matrices(rest, std::move(next));
        return;
      }
      if (from + static_cast<std::size_t>(left) > cols.size()) return;
      picked.push_back(static_cast<int>(from));
      choose(from + 1, left - 1);
      picked.pop_back();
      choose(from + 1, left);
    };
    if (want <= static_cast<int>(cols.size())) choose(0, want);
  }

  std::lock_guard<std::mutex> lock(cache_mutex);
  cache.emplace(std::make_pair(rows, cols), result);
  return result;
}

}  // namespace detail

/// Coefficient of m_lambda in e_mu.
inline Int e_to_m_entry(const Partition& mu, const Partition& lambda) {
  return detail::count_01_matrices(mu.parts(), lambda.parts());
}

/// Full monomial expansion of a degree-n ESym value.
inline std::map<Partition, QPoly> monomial_expansion(const ESym& e, int n) {
  std::map<Partition, QPoly> out;
  for (const Partition& lambda : partitions_of(n)) {
    QPoly c;
    for (const auto& [mu, coeff] : e.terms()) {
      Int m = e_to_m_entry(mu, lambda);
      if (m != 0) c += coeff * QPoly(m);
    }
    if (!c.is_zero()) out.emplace(lambda, std::move(c));
  }
  return out;
}

/// Invert the e -> m transition. The matrix pairs e_mu with m_{mu'} and is
/// unitriangular when partitions are processed along a linear extension of
/// dominance order; lexicographically decreasing order is one such
/// extension. A nonzero residue signals a non-symmetric input and is a
/// hard error.
inline ESym m_to_e(const std::map<Partition, QPoly>& m_coeffs, int n) {
  std::map<Partition, QPoly> residual;
  for (const auto& [lambda, c] : m_coeffs) {
    if (lambda.size() != n)
      throw std::invalid_argument("m_to_e: key is not a partition of n");
    if (!c.is_zero()) residual.emplace(lambda, c);
  }

  std::vector<Partition> order = partitions_of(n);  // lex decreasing
  ESym out;
  for (const Partition& lambda : order) {
    auto it = residual.find(lambda);
    if (it == residual.end() || it->second.is_zero()) continue;
    QPoly c = it->second;
    Partition e_index = lambda.conjugate();
    out.add_term(e_index, c);
    for (const Partition& nu : order) {
      Int entry = e_to_m_entry(e_index, nu);
      if (entry == 0) continue;
      residual[nu] -= c * QPoly(entry);
    }
  }
  for (const auto& [lambda, c] : residual) {
    if (!c.is_zero())
      throw std::domain_error("m_to_e: input is not in the image of a "
                              "symmetric function (nonzero residue at m" +
                              lambda.to_string() + ")");
  }
  out.set_declared_degree(n);
  return out;
}

inline Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

/// Evaluate at x = (1,...,1) with k ones: e_j(1^k) = C(k,j).
inline QPoly evaluate_ones(const ESym& e, int k) {
  QPoly out;
  for (const auto& [mu, c] : e.terms()) {
    Int prod = 1;
    for (int part : mu.parts()) prod *= binomial(k, part);
    if (prod != 0) out += c * QPoly(prod);
  }
  return out;
}

}  // namespace chromaq
