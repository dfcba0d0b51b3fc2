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

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chromaq {

using Int = boost::multiprecision::cpp_int;

/// Polynomial in one variable q with arbitrary-precision integer
/// coefficients. Stored densely: coeffs_[k] is the coefficient of q^k.
/// Canonical form: the top coefficient is nonzero; the zero polynomial
/// is the empty vector and has no degree.
class QPoly {
 public:
  QPoly() = default;

  explicit QPoly(Int constant) {
    if (constant != 0) coeffs_.push_back(std::move(constant));
  }

  explicit QPoly(long constant) : QPoly(Int(constant)) {}

  explicit QPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }

  static QPoly monomial(std::size_t power, Int coeff = Int(1)) {
    if (coeff == 0) return QPoly();
    std::vector<Int> c(power + 1);
    c[power] = std::move(coeff);
    return QPoly(std::move(c));
  }

  static QPoly zero() { return QPoly(); }
  static QPoly one() { return QPoly(Int(1)); }

  bool is_zero() const { return coeffs_.empty(); }

  /// No value for the zero polynomial.
  std::optional<std::size_t> degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }

  /// Coefficient of q^k; indices outside the stored range read as 0.
  const Int& coeff(std::size_t k) const {
    static const Int kZero = 0;
    return k < coeffs_.size() ? coeffs_[k] : kZero;
  }

  const std::vector<Int>& coeffs() const { return coeffs_; }

  QPoly& operator+=(const QPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k)
      coeffs_[k] += rhs.coeffs_[k];
    trim();
    return *this;
  }

  QPoly& operator-=(const QPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k)
      coeffs_[k] -= rhs.coeffs_[k];
    trim();
    return *this;
  }

  friend QPoly operator+(QPoly lhs, const QPoly& rhs) { return lhs += rhs; }
  friend QPoly operator-(QPoly lhs, const QPoly& rhs) { return lhs -= rhs; }

  QPoly operator-() const {
    QPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend QPoly operator*(const QPoly& lhs, const QPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return QPoly();
    std::vector<Int> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
      if (lhs.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
        out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return QPoly(std::move(out));
  }

  QPoly& operator*=(const QPoly& rhs) { return *this = *this * rhs; }

  /// Multiply by q^power.
  QPoly shifted(std::size_t power) const {
    if (is_zero() || power == 0) return *this;
    std::vector<Int> out(coeffs_.size() + power);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) out[k + power] = coeffs_[k];
    return QPoly(std::move(out));
  }

  /// Exact division; a nonzero remainder always signals a bug upstream,
  /// so it is a hard error rather than a recoverable condition.
  QPoly div_exact(const QPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("QPoly: division by zero");
    if (is_zero()) return QPoly();
    if (coeffs_.size() < divisor.coeffs_.size())
      throw std::domain_error("QPoly: inexact division (degree)");
    std::vector<Int> rem = coeffs_;
    std::vector<Int> quot(coeffs_.size() - divisor.coeffs_.size() + 1);
    const Int& lead = divisor.coeffs_.back();
    for (std::size_t k = quot.size(); k-- > 0;) {
      Int& top = rem[k + divisor.coeffs_.size() - 1];
      if (top == 0) continue;
      if (top % lead != 0)
        throw std::domain_error("QPoly: inexact division (leading coefficient)");
      quot[k] = top / lead;
      for (std::size_t j = 0; j < divisor.coeffs_.size(); ++j)
        rem[k + j] -= quot[k] * divisor.coeffs_[j];
    }
    for (const Int& c : rem)
      if (c != 0) throw std::domain_error("QPoly: inexact division (remainder)");
    return QPoly(std::move(quot));
  }

  Int evaluate(const Int& q) const {
    Int acc = 0;
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * q + coeffs_[k];
    return acc;
  }

  friend bool operator==(const QPoly& a, const QPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }
  friend bool operator<(const QPoly& a, const QPoly& b) {
    return a.coeffs_ < b.coeffs_;
  }

  /// Ascending powers with explicit coefficients, e.g. "1 + 2*q + q^2".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      const Int& c = coeffs_[k];
      if (c == 0) continue;
      Int a = c < 0 ? Int(-c) : c;
      if (first) {
        if (c < 0) out << "-";
        first = false;
      } else {
        out << (c < 0 ? " - " : " + ");
      }
      if (k == 0) {
        out << a.str();
      } else {
        if (a != 1) out << a.str() << "*";
        out << "q";
        if (k > 1) out << "^" << k;
      }
    }
    return out.str();
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Int> coeffs_;
};

/// [k]_q = 1 + q + ... + q^{k-1}; the empty sum when k = 0.
inline QPoly q_int(int k) {
  if (k < 0) throw std::invalid_argument("q_int: negative argument");
  return QPoly(std::vector<Int>(static_cast<std::size_t>(k), Int(1)));
}

/// [n]_q! = [n]_q [n-1]_q ... [1]_q; the empty product when n = 0.
inline QPoly q_factorial(int n) {
  if (n < 0) throw std::invalid_argument("q_factorial: negative argument");
  QPoly acc = QPoly::one();
  for (int k = 2; k <= n; ++k) acc *= q_int(k);
  return acc;
}

/// Gaussian binomial [n]_q! / ([k]_q! [n-k]_q!), by exact division.
inline QPoly q_binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n)
    throw std::invalid_argument("q_binomial: requires 0 <= k <= n");
  return q_factorial(n).div_exact(q_factorial(k) * q_factorial(n - k));
}

/// True iff coefficient of q^k equals coefficient of q^{twice_center - k}
/// for all k. The doubled center represents half-integer centers exactly.
/// The zero polynomial is palindromic around any center.
inline bool is_palindromic(const QPoly& p, long twice_center) {
  if (p.is_zero()) return true;
  long top = static_cast<long>(*p.degree());
  // Pairs with both indices outside [0, top] are 0 == 0, so checking the
  // stored range covers every reflection.
  for (long k = 0; k <= top; ++k) {
    long m = twice_center - k;
    Int mirror =
        (m >= 0 && m <= top) ? p.coeff(static_cast<std::size_t>(m)) : Int(0);
    if (p.coeff(static_cast<std::size_t>(k)) != mirror) return false;
  }
  return true;
}

/// Coefficients weakly rise then weakly fall.
inline bool is_unimodal(const QPoly& p) {
  const auto& c = p.coeffs();
  std::size_t k = 1;
  for (; k < c.size() && c[k - 1] <= c[k]; ++k) {
  }
  for (; k < c.size(); ++k)
    if (c[k - 1] < c[k]) return false;
  return true;
}

/// a_k^2 >= a_{k-1} a_{k+1} for every internal index.
inline bool is_log_concave(const QPoly& p) {
  const auto& c = p.coeffs();
  for (std::size_t k = 1; k + 1 < c.size(); ++k)
    if (c[k] * c[k] < c[k - 1] * c[k + 1]) return false;
  return true;
}

inline bool is_nonnegative(const QPoly& p) {
  for (const Int& c : p.coeffs())
    if (c < 0) return false;
  return true;
}

}  // namespace chromaq
