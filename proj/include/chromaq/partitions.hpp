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
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace chromaq {

/// Weakly decreasing sequence of positive integers. The empty partition is
/// allowed (it indexes the constant term e_{} = 1).
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1)
        throw std::invalid_argument("Partition: parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("Partition: parts must weakly decrease");
    }
  }

  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  int size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
  }

  Partition conjugate() const {
    if (parts_.empty()) return Partition();
    std::vector<int> out(static_cast<std::size_t>(parts_[0]));
    for (int p : parts_)
      for (int i = 0; i < p; ++i) ++out[static_cast<std::size_t>(i)];
    return Partition(std::move(out));
  }

  /// "[3,2,2]"; "[]" for the empty partition.
  std::string to_string() const {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out << ",";
      out << parts_[i];
    }
    out << "]";
    return out.str();
  }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts_ == b.parts_;
  }
  friend bool operator!=(const Partition& a, const Partition& b) {
    return !(a == b);
  }
  /// Lexicographic order; used for deterministic iteration of ESym terms.
  friend bool operator<(const Partition& a, const Partition& b) {
    return a.parts_ < b.parts_;
  }

 private:
  std::vector<int> parts_;
};

/// mu is dominated by nu: prefix sums of mu never exceed those of nu.
/// Meaningful for partitions of the same size.
inline bool dominated_by(const Partition& mu, const Partition& nu) {
  int su = 0, sv = 0;
  std::size_t len = std::max(mu.length(), nu.length());
  for (std::size_t i = 0; i < len; ++i) {
    su += i < mu.length() ? mu.parts()[i] : 0;
    sv += i < nu.length() ? nu.parts()[i] : 0;
    if (su > sv) return false;
  }
  return true;
}

/// Sequence of positive integers.
struct Composition {
  std::vector<int> parts;

  Composition() = default;
  explicit Composition(std::vector<int> p) : parts(std::move(p)) {
    for (int x : parts)
      if (x < 1)
        throw std::invalid_argument("Composition: parts must be positive");
  }
  Composition(std::initializer_list<int> p)
      : Composition(std::vector<int>(p)) {}

  int size() const { return std::accumulate(parts.begin(), parts.end(), 0); }
  std::size_t length() const { return parts.size(); }

  friend bool operator==(const Composition& a, const Composition& b) {
    return a.parts == b.parts;
  }
  friend bool operator!=(const Composition& a, const Composition& b) {
    return !(a == b);
  }
};

/// Sequence of nonnegative integers; the length is part of the identity.
struct WeakComposition {
  std::vector<int> parts;

  WeakComposition() = default;
  explicit WeakComposition(std::vector<int> p) : parts(std::move(p)) {
    for (int x : parts)
      if (x < 0)
        throw std::invalid_argument("WeakComposition: parts must be >= 0");
  }
  WeakComposition(std::initializer_list<int> p)
      : WeakComposition(std::vector<int>(p)) {}

  int size() const { return std::accumulate(parts.begin(), parts.end(), 0); }
  std::size_t length() const { return parts.size(); }

  friend bool operator==(const WeakComposition& a, const WeakComposition& b) {
    return a.parts == b.parts;
  }
};

/// Sort decreasingly and drop zero parts (the e_0 = 1 convention).
inline Partition sort_to_partition(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (int p : parts)
    if (p < 0) throw std::invalid_argument("sort_to_partition: negative part");
  return Partition(std::move(parts));
}

inline Partition sort_to_partition(const Composition& c) {
  return sort_to_partition(c.parts);
}

inline Partition sort_to_partition(const WeakComposition& c) {
  return sort_to_partition(c.parts);
}

/// Compositions of n, lexicographic by first part descending:
/// (n), (n-1,1), ..., (1,1,...,1). Stops early if fn returns false.
inline void for_each_composition(int n,
                                 const std::function<void(const Composition&)>& fn) {
  if (n == 0) {
    fn(Composition{});
    return;
  }
  std::vector<int> parts;
  std::function<void(int)> rec = [&](int rest) {
    if (rest == 0) {
      fn(Composition(parts));
      return;
    }
    for (int first = rest; first >= 1; --first) {
      parts.push_back(first);
      rec(rest - first);
      parts.pop_back();
    }
  };
  rec(n);
}

inline std::vector<Composition> compositions_of(int n) {
  std::vector<Composition> out;
  for_each_composition(n, [&](const Composition& c) { out.push_back(c); });
  return out;
}

/// Partitions of n in lexicographically decreasing order, starting at (n).
inline void for_each_partition(int n,
                               const std::function<void(const Partition&)>& fn) {
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int rest, int maxPart) {
    if (rest == 0) {
      fn(Partition(parts));
      return;
    }
    for (int p = std::min(rest, maxPart); p >= 1; --p) {
      parts.push_back(p);
      rec(rest - p, p);
      parts.pop_back();
    }
  };
  rec(n, n);
}

inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
  return out;
}

}  // namespace chromaq
