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
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "chromaq/partitions.hpp"
#include "chromaq/qpoly.hpp"

namespace chromaq {

/// A symmetric function written in the elementary basis: a finite map from
/// partitions to QPoly coefficients. Canonical form stores no zero
/// coefficients. An optional declared homogeneous degree travels with the
/// value; it is metadata and does not affect equality.
class ESym {
 public:
  ESym() = default;

  static ESym term(Partition mu, QPoly coeff) {
    ESym e;
    e.add_term(std::move(mu), std::move(coeff));
    return e;
  }

  /// The constant 1 = e_{} (empty partition).
  static ESym one() { return term(Partition{}, QPoly::one()); }

  void add_term(Partition mu, QPoly coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(mu), std::move(coeff));
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  const std::map<Partition, QPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  const QPoly& coeff(const Partition& mu) const {
    static const QPoly kZero;
    auto it = terms_.find(mu);
    return it == terms_.end() ? kZero : it->second;
  }

  std::optional<int> declared_degree() const { return degree_; }
  void set_declared_degree(int n) { degree_ = n; }

  ESym& operator+=(const ESym& rhs) {
    for (const auto& [mu, c] : rhs.terms_) add_term(mu, c);
    merge_degree(rhs.degree_);
    return *this;
  }

  friend ESym operator+(ESym lhs, const ESym& rhs) { return lhs += rhs; }

  ESym operator-() const {
    ESym out;
    for (const auto& [mu, c] : terms_) out.terms_.emplace(mu, -c);
    out.degree_ = degree_;
    return out;
  }

  ESym& operator-=(const ESym& rhs) { return *this += -rhs; }
  friend ESym operator-(ESym lhs, const ESym& rhs) { return lhs -= rhs; }

  /// Scale every coefficient.
  friend ESym operator*(const ESym& lhs, const QPoly& p) {
    ESym out;
    if (p.is_zero()) {
      out.degree_ = lhs.degree_;
      return out;
    }
    for (const auto& [mu, c] : lhs.terms_) out.terms_.emplace(mu, c * p);
    out.degree_ = lhs.degree_;
    return out;
  }

  /// e is multiplicative: e_mu e_nu = e_{sort(mu nu)}, so the product
  /// merges key multisets and multiplies coefficients.
  friend ESym operator*(const ESym& lhs, const ESym& rhs) {
    ESym out;
    for (const auto& [mu, cm] : lhs.terms_) {
      for (const auto& [nu, cn] : rhs.terms_) {
        std::vector<int> merged = mu.parts();
        merged.insert(merged.end(), nu.parts().begin(), nu.parts().end());
        out.add_term(sort_to_partition(std::move(merged)), cm * cn);
      }
    }
    if (lhs.degree_ && rhs.degree_) out.degree_ = *lhs.degree_ + *rhs.degree_;
    return out;
  }

  ESym& operator*=(const ESym& rhs) { return *this = *this * rhs; }
  ESym& operator*=(const QPoly& p) { return *this = *this * p; }

  /// Substitute a numeric value for q in every coefficient.
  ESym at_q(const Int& q) const {
    ESym out;
    for (const auto& [mu, c] : terms_) out.add_term(mu, QPoly(c.evaluate(q)));
    out.degree_ = degree_;
    return out;
  }

  /// Equality compares terms only; declared degree is metadata.
  friend bool operator==(const ESym& a, const ESym& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const ESym& a, const ESym& b) { return !(a == b); }

  /// Partitions in lexicographically descending order, e.g.
  /// "(1 + q)*e[2] + q*e[1,1]".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!first) out << " + ";
      first = false;
      out << "(" << it->second.to_string() << ")*e" << it->first.to_string();
    }
    return out.str();
  }

 private:
  void merge_degree(const std::optional<int>& other) {
    if (!(degree_ && other && *degree_ == *other)) degree_.reset();
  }

  std::map<Partition, QPoly> terms_;
  std::optional<int> degree_;
};

}  // namespace chromaq
