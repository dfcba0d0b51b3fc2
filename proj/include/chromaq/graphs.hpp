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
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chromaq {

/// Arbitrary simple graph on vertices 1..n.
struct GenericGraph {
  int n = 0;
  std::set<std::pair<int, int>> edges;  // normalized i < j

  GenericGraph() = default;
  GenericGraph(int n_, std::vector<std::pair<int, int>> edge_list) : n(n_) {
    if (n < 0) throw std::invalid_argument("GenericGraph: negative n");
    for (auto [i, j] : edge_list) {
      if (i == j) throw std::invalid_argument("GenericGraph: loop edge");
      if (i > j) std::swap(i, j);
      if (i < 1 || j > n)
        throw std::invalid_argument("GenericGraph: vertex out of range");
      edges.emplace(i, j);
    }
  }

  bool adjacent(int i, int j) const {
    if (i > j) std::swap(i, j);
    return edges.count({i, j}) > 0;
  }

  std::size_t edge_count() const { return edges.size(); }
};

struct NuigViolation : std::invalid_argument {
  int i, j, k;
  NuigViolation(int i_, int j_, int k_)
      : std::invalid_argument("not a natural unit interval graph: edge {" +
                              std::to_string(i_) + "," + std::to_string(k_) +
                              "} requires edges {" + std::to_string(i_) + "," +
                              std::to_string(j_) + "} and {" +
                              std::to_string(j_) + "," + std::to_string(k_) +
                              "} (triple " + std::to_string(i_) + "," +
                              std::to_string(j_) + "," + std::to_string(k_) +
                              ")"),
        i(i_), j(j_), k(k_) {}
};

/// Natural unit interval graph on vertices 1..n, stored canonically as the
/// smaller-neighbor-count sequence b_2..b_n: {i,j} with i < j is an edge
/// iff i >= j - b_j. Validity means 0 <= b_j <= j-1 and j - b_j weakly
/// increasing, which is the interval condition on neighborhoods.
class Nuig {
 public:
  static Nuig from_b(int n, std::vector<int> b) {
    if (n < 1) throw std::invalid_argument("Nuig: requires n >= 1");
    if (static_cast<int>(b.size()) != n - 1)
      throw std::invalid_argument("Nuig: b must have n-1 entries (b_2..b_n)");
    for (int j = 2; j <= n; ++j) {
      int bj = b[static_cast<std::size_t>(j - 2)];
      if (bj < 0 || bj > j - 1)
        throw std::invalid_argument("Nuig: b_" + std::to_string(j) +
                                    " out of range [0," + std::to_string(j - 1) +
                                    "]");
      if (j > 2) {
        int prev = b[static_cast<std::size_t>(j - 3)];
        if (j - bj < (j - 1) - prev)
          throw std::invalid_argument(
              "Nuig: j - b_j must weakly increase (violated at j=" +
              std::to_string(j) + ")");
      }
    }
    return Nuig(n, std::move(b));
  }

  /// Validate an arbitrary labeled graph against the interval condition and
  /// return its canonical b-sequence. Reports the first violating triple.
  static Nuig from_graph(const GenericGraph& g) {
    for (int j = 2; j < g.n; ++j)
      for (int i = 1; i < j; ++i)
        for (int k = j + 1; k <= g.n; ++k)
          if (g.adjacent(i, k) && (!g.adjacent(i, j) || !g.adjacent(j, k)))
            throw NuigViolation(i, j, k);
    std::vector<int> b(static_cast<std::size_t>(g.n - 1), 0);
    for (auto [i, j] : g.edges) ++b[static_cast<std::size_t>(j - 2)];
    Nuig out = from_b(g.n, std::move(b));
    // The b-sequence must reconstruct the input edge set exactly.
    if (out.edges() != std::vector<std::pair<int, int>>(g.edges.begin(),
                                                        g.edges.end()))
      throw std::invalid_argument(
          "Nuig: edge set does not round-trip through b-sequence");
    return out;
  }

  int n() const { return n_; }
  const std::vector<int>& b() const { return b_; }

  /// Number of smaller neighbors of vertex j (b_1 = 0).
  int smaller_neighbors(int j) const {
    return j <= 1 ? 0 : b_[static_cast<std::size_t>(j - 2)];
  }

  bool adjacent(int i, int j) const {
    if (i == j) return false;
    if (i > j) std::swap(i, j);
    return i >= j - smaller_neighbors(j);
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int j = 2; j <= n_; ++j)
      for (int i = j - smaller_neighbors(j); i < j; ++i) out.emplace_back(i, j);
    std::sort(out.begin(), out.end());
    return out;
  }

  int edge_count() const {
    int total = 0;
    for (int x : b_) total += x;
    return total;
  }

  GenericGraph to_generic() const { return GenericGraph(n_, edges()); }

  friend bool operator==(const Nuig& a, const Nuig& b) {
    return a.n_ == b.n_ && a.b_ == b.b_;
  }
  friend bool operator!=(const Nuig& a, const Nuig& b) { return !(a == b); }

  /// "1,2,1,2" (empty string for the single-vertex graph).
  std::string b_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < b_.size(); ++i) {
      if (i) out << ",";
      out << b_[i];
    }
    return out.str();
  }

 private:
  Nuig(int n, std::vector<int> b) : n_(n), b_(std::move(b)) {}

  int n_;
  std::vector<int> b_;
};

/// Flat adjacency lookup shared by the enumeration-heavy algorithms.
class Adjacency {
 public:
  explicit Adjacency(const Nuig& g) : n_(g.n()), bits_(size(), 0) {
    for (auto [i, j] : g.edges()) set(i, j);
  }
  explicit Adjacency(const GenericGraph& g) : n_(g.n), bits_(size(), 0) {
    for (auto [i, j] : g.edges) set(i, j);
  }

  int n() const { return n_; }
  bool operator()(int i, int j) const {
    return i != j && bits_[index(i, j)] != 0;
  }

 private:
  std::size_t size() const {
    return static_cast<std::size_t>(n_ + 1) * static_cast<std::size_t>(n_ + 1);
  }
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_ + 1) +
           static_cast<std::size_t>(j);
  }
  void set(int i, int j) { bits_[index(i, j)] = bits_[index(j, i)] = 1; }

  int n_;
  std::vector<std::uint8_t> bits_;
};

/// Glue vertex n1 of g1 to vertex 1 of g2. In b-sequence form this is
/// concatenation.
inline Nuig graph_sum(const Nuig& g1, const Nuig& g2) {
  std::vector<int> b = g1.b();
  b.insert(b.end(), g2.b().begin(), g2.b().end());
  return Nuig::from_b(g1.n() + g2.n() - 1, std::move(b));
}

inline Nuig make_path(int n) {
  return Nuig::from_b(n, std::vector<int>(static_cast<std::size_t>(n - 1), 1));
}

inline Nuig make_complete(int n) {
  std::vector<int> b;
  for (int j = 2; j <= n; ++j) b.push_back(j - 1);
  return Nuig::from_b(n, std::move(b));
}

/// K_a with the edge {1,a} removed. Requires a >= 3: removing the edge from
/// K_2 would disconnect the graph.
inline Nuig make_almost_complete(int a) {
  if (a < 3)
    throw std::invalid_argument("make_almost_complete: requires a >= 3");
  std::vector<int> b;
  for (int j = 2; j < a; ++j) b.push_back(j - 1);
  b.push_back(a - 2);
  return Nuig::from_b(a, std::move(b));
}

/// Triangular ladder P_{n,2}: each vertex j is joined to j-1 and j-2.
inline Nuig make_triangular_ladder(int n) {
  std::vector<int> b;
  for (int j = 2; j <= n; ++j) b.push_back(std::min(2, j - 1));
  return Nuig::from_b(n, std::move(b));
}

/// Chain of cliques K_{gamma_1}^{eps_1} + ... + K_{gamma_l}^{eps_l}, glued
/// at single vertices. eps_t = 1 marks an almost-complete summand (edge
/// {1,gamma_t} removed), which requires gamma_t >= 3.
struct KChainSpec {
  std::vector<int> gamma;
  std::vector<int> epsilon;

  KChainSpec(std::vector<int> gamma_, std::vector<int> epsilon_)
      : gamma(std::move(gamma_)), epsilon(std::move(epsilon_)) {
    if (gamma.empty()) throw std::invalid_argument("KChainSpec: empty gamma");
    if (epsilon.size() != gamma.size())
      throw std::invalid_argument("KChainSpec: gamma/epsilon length mismatch");
    for (std::size_t t = 0; t < gamma.size(); ++t) {
      if (gamma[t] < 2)
        throw std::invalid_argument("KChainSpec: gamma parts must be >= 2");
      if (epsilon[t] != 0 && epsilon[t] != 1)
        throw std::invalid_argument("KChainSpec: epsilon entries must be 0/1");
      if (epsilon[t] == 1 && gamma[t] < 3)
        throw std::invalid_argument(
            "KChainSpec: epsilon=1 requires gamma >= 3");
    }
  }

  explicit KChainSpec(std::vector<int> gamma_)
      : KChainSpec(gamma_, std::vector<int>(gamma_.size(), 0)) {}

  std::size_t length() const { return gamma.size(); }

  int vertex_count() const {
    int total = 1;
    for (int g : gamma) total += g - 1;
    return total;
  }
};

inline Nuig make_kchain(const KChainSpec& spec) {
  Nuig acc = spec.epsilon[0] ? make_almost_complete(spec.gamma[0])
                             : make_complete(spec.gamma[0]);
  for (std::size_t t = 1; t < spec.gamma.size(); ++t) {
    Nuig next = spec.epsilon[t] ? make_almost_complete(spec.gamma[t])
                                : make_complete(spec.gamma[t]);
    acc = graph_sum(acc, next);
  }
  return acc;
}

/// Relabel i -> n+1-i and revalidate.
inline Nuig reverse_graph(const Nuig& g) {
  int n = g.n();
  std::vector<std::pair<int, int>> edges;
  for (auto [i, j] : g.edges()) edges.emplace_back(n + 1 - j, n + 1 - i);
  return Nuig::from_graph(GenericGraph(n, std::move(edges)));
}

/// Every valid b-sequence exactly once, in lexicographic order. The number
/// of graphs on n vertices is the n-th Catalan number.
inline void for_each_nuig(int n, const std::function<void(const Nuig&)>& fn) {
  if (n < 1) throw std::invalid_argument("for_each_nuig: requires n >= 1");
  std::vector<int> b(static_cast<std::size_t>(n - 1), 0);
  std::function<void(int)> rec = [&](int j) {
    if (j > n) {
      fn(Nuig::from_b(n, b));
      return;
    }
    int cap = j == 2 ? 1 : b[static_cast<std::size_t>(j - 3)] + 1;
    cap = std::min(cap, j - 1);
    for (int v = 0; v <= cap; ++v) {
      b[static_cast<std::size_t>(j - 2)] = v;
      rec(j + 1);
    }
  };
  rec(2);
}

inline std::uint64_t catalan(int n) {
  std::uint64_t c = 1;
  for (int k = 0; k < n; ++k)
    c = c * 2 * static_cast<std::uint64_t>(2 * k + 1) /
        static_cast<std::uint64_t>(k + 2);
  return c;
}

/// Edge-list format: first line "n", then one "i j" pair per line, 1-based.
inline GenericGraph read_edge_list(std::istream& in) {
  int n;
  if (!(in >> n)) throw std::invalid_argument("edge list: missing vertex count");
  std::vector<std::pair<int, int>> edges;
  int i, j;
  while (in >> i >> j) edges.emplace_back(i, j);
  return GenericGraph(n, std::move(edges));
}

inline void write_edge_list(std::ostream& out, const GenericGraph& g) {
  out << g.n << "\n";
  for (auto [i, j] : g.edges) out << i << " " << j << "\n";
}

/// b-sequence format: comma-separated "b2,...,bn"; "-" or the empty string
/// denotes the single-vertex graph.
inline Nuig parse_b_sequence(const std::string& text) {
  std::vector<int> b;
  if (!text.empty() && text != "-") {
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
      std::size_t pos = 0;
      int v = std::stoi(item, &pos);
      if (pos != item.size())
        throw std::invalid_argument("b-sequence: bad entry '" + item + "'");
      b.push_back(v);
    }
  }
  int n = static_cast<int>(b.size()) + 1;
  return Nuig::from_b(n, std::move(b));
}

}  // namespace chromaq
