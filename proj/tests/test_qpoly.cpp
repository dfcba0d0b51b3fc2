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

#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <random>
#include <vector>

#include "chromaq/qpoly.hpp"

using namespace chromaq;

namespace {

QPoly P(std::vector<long> coeffs) {
  std::vector<Int> c(coeffs.begin(), coeffs.end());
  return QPoly(std::move(c));
}

// Independent multiply oracle: plain convolution, no canonicalization
// shortcuts.
QPoly naive_mul(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly();
  std::vector<Int> out(*a.degree() + *b.degree() + 1, Int(0));
  for (std::size_t i = 0; i <= *a.degree(); ++i)
    for (std::size_t j = 0; j <= *b.degree(); ++j)
      out[i + j] += a.coeff(i) * b.coeff(j);
  return QPoly(std::move(out));
}

// Pascal-recurrence oracle for the Gaussian binomial:
// C(n,k)_q = q^k C(n-1,k)_q + C(n-1,k-1)_q.
QPoly q_binomial_pascal(int n, int k) {
  if (k < 0 || k > n) return QPoly();
  std::vector<std::vector<QPoly>> table(
      static_cast<std::size_t>(n) + 1,
      std::vector<QPoly>(static_cast<std::size_t>(k) + 1));
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= std::min(i, k); ++j) {
      if (j == 0 || j == i) {
        table[i][j] = QPoly::one();
      } else {
        table[i][j] =
            table[i - 1][j].shifted(static_cast<std::size_t>(j)) +
            table[i - 1][j - 1];
      }
    }
  }
  return table[n][k];
}

// Subset-sum oracle: sum of q^{#{(i,j): i > j, i not in S, j in S}} over
// k-subsets S of [n].
QPoly q_binomial_subsets(int n, int k) {
  QPoly total;
  std::vector<int> in(static_cast<std::size_t>(n) + 1, 0);
  std::function<void(int, int)> rec = [&](int v, int left) {
    if (left == 0) {
      int crossings = 0;
      for (int i = 2; i <= n; ++i)
        if (!in[i])
          for (int j = 1; j < i; ++j)
            if (in[j]) ++crossings;
      total += QPoly::monomial(static_cast<std::size_t>(crossings));
      return;
    }
    if (v > n) return;
    in[v] = 1;
    rec(v + 1, left - 1);
    in[v] = 0;
    rec(v + 1, left);
  };
  rec(1, k);
  return total;
}

QPoly random_poly(std::mt19937& rng, int max_deg, int max_abs) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<int> coeff(-max_abs, max_abs);
  std::vector<Int> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = coeff(rng);
  return QPoly(std::move(c));
}

}  // namespace

TEST_CASE("q-integers") {
  CHECK(q_int(0) == QPoly::zero());
  CHECK(q_int(1) == QPoly::one());
  CHECK(q_int(3) == P({1, 1, 1}));
}

TEST_CASE("q-factorials against the convolution oracle") {
  CHECK(q_factorial(0) == QPoly::one());
  CHECK(q_factorial(2) == P({1, 1}));
  CHECK(naive_mul(q_int(2), q_int(3)) == P({1, 2, 2, 1}));
  CHECK(q_factorial(3) == P({1, 2, 2, 1}));
}

TEST_CASE("q-binomials") {
  CHECK(q_binomial(5, 0) == QPoly::one());
  CHECK(q_binomial_subsets(4, 2) == P({1, 1, 2, 1, 1}));
  CHECK(q_binomial(4, 2) == P({1, 1, 2, 1, 1}));
  CHECK(q_binomial(3, 1) == q_int(3));
  CHECK_THROWS_AS(q_binomial(3, 4), std::invalid_argument);
}

TEST_CASE("q-binomial symmetry and recurrence agreement") {
  for (int n = 0; n <= 12; ++n)
    for (int k = 0; k <= n; ++k) {
      CAPTURE(n, k);
      CHECK(q_binomial(n, k) == q_binomial(n, n - k));
      CHECK(q_binomial(n, k) == q_binomial_pascal(n, k));
    }
}

TEST_CASE("q-binomial subset identity") {
  for (int n = 0; n <= 8; ++n)
    for (int k = 0; k <= n; ++k) {
      CAPTURE(n, k);
      CHECK(q_binomial_subsets(n, k) == q_binomial(n, k));
    }
}

TEST_CASE("ring laws on random polynomials") {
  std::mt19937 rng(20260810);
  for (int trial = 0; trial < 200; ++trial) {
    QPoly a = random_poly(rng, 6, 9);
    QPoly b = random_poly(rng, 6, 9);
    QPoly c = random_poly(rng, 6, 9);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == naive_mul(a, b));
    if (!b.is_zero()) CHECK((a * b).div_exact(b) == a);
  }
}

TEST_CASE("exact division faults on nonzero remainder") {
  CHECK_THROWS_AS(P({1, 1, 1}).div_exact(P({1, 1})), std::domain_error);
  CHECK(P({0, 0, 1}).div_exact(P({0, 1})) == P({0, 1}));
  CHECK(QPoly::zero().div_exact(P({1, 1})) == QPoly::zero());
  CHECK_THROWS_AS(P({1}).div_exact(QPoly::zero()), std::domain_error);
}

TEST_CASE("palindromicity") {
  // The e_5 coefficient of the bowtie expansion, center |E|/2 = 3.
  QPoly bowtie_e5 = P({1, 3, 4, 4, 4, 3, 1});
  CHECK(is_palindromic(bowtie_e5, 6));
  CHECK(is_palindromic(P({1}), 0));
  CHECK_FALSE(is_palindromic(P({1, 1}), 0));
  CHECK(is_palindromic(P({1, 1}), 1));
  CHECK(is_palindromic(P({0, 1}), 2));  // q, center 1
  CHECK_FALSE(is_palindromic(P({0, 1}), 1));
  CHECK(is_palindromic(QPoly::zero(), 5));
}

TEST_CASE("unimodality") {
  CHECK(is_unimodal(P({1, 3, 1})));
  CHECK_FALSE(is_unimodal(P({2, 1, 3})));
  CHECK(is_unimodal(P({0, 1, 3, 4, 3, 1})));
  CHECK(is_unimodal(QPoly::zero()));
}

TEST_CASE("log-concavity") {
  CHECK(is_log_concave(P({1, 2, 1})));
  CHECK_FALSE(is_log_concave(P({1, 1, 0, 1})));
  CHECK(is_log_concave(P({1, 3, 4, 4, 4, 3, 1})));
  CHECK(is_log_concave(QPoly::zero()));
}

TEST_CASE("log-concave positive implies unimodal") {
  // The implication needs contiguous support: with a gap of two zeros the
  // pairwise inequalities hold vacuously (e.g. 3 + q^3 is "log-concave"
  // but not unimodal). Coefficient polynomials here always have positive
  // contiguous support, so generate those.
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> shift(0, 3);
  std::uniform_int_distribution<int> len(1, 8);
  std::uniform_int_distribution<int> coeff(1, 6);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Int> c(static_cast<std::size_t>(shift(rng)), Int(0));
    int width = len(rng);
    for (int i = 0; i < width; ++i) c.emplace_back(coeff(rng));
    QPoly p{std::move(c)};
    if (is_log_concave(p)) {
      CAPTURE(p.to_string());
      CHECK(is_unimodal(p));
    }
  }
}

TEST_CASE("degree and rendering") {
  CHECK_FALSE(QPoly::zero().degree().has_value());
  CHECK(*P({0, 0, 5}).degree() == 2);
  CHECK(P({1, 2, 1}).to_string() == "1 + 2*q + q^2");
  CHECK(P({0, 1}).to_string() == "q");
  CHECK(P({-2, 0, 3}).to_string() == "-2 + 3*q^2");
  CHECK(QPoly::zero().to_string() == "0");
  CHECK(P({1, -1}).to_string() == "1 - q");
}

TEST_CASE("evaluation") {
  CHECK(q_factorial(4).evaluate(1) == 24);
  CHECK(P({1, 2, 1}).evaluate(-1) == 0);
  CHECK(QPoly::zero().evaluate(7) == 0);
}
