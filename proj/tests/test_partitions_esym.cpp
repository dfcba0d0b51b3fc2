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

#include "chromaq/esym.hpp"
#include "chromaq/partitions.hpp"
#include "chromaq/qpoly.hpp"

using namespace chromaq;

TEST_CASE("sorting compositions into partitions") {
  CHECK(sort_to_partition(std::vector<int>{2, 3, 2}) == Partition{3, 2, 2});
  CHECK(sort_to_partition(std::vector<int>{4, 0, 1}) == Partition{4, 1});
  // Concatenation of (2,2) and (2), as in the type of a forest triple.
  CHECK(sort_to_partition(std::vector<int>{2, 2, 2}) == Partition{2, 2, 2});
  CHECK(sort_to_partition(std::vector<int>{0, 0}) == Partition{});
}

TEST_CASE("partition basics") {
  CHECK(Partition{3, 2, 2}.size() == 7);
  CHECK(Partition{}.size() == 0);
  CHECK(Partition{3, 1}.conjugate() == Partition{2, 1, 1});
  CHECK(Partition{4}.conjugate() == Partition{1, 1, 1, 1});
  CHECK(Partition{}.conjugate() == Partition{});
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);

  CHECK(dominated_by(Partition{2, 2}, Partition{3, 1}));
  CHECK_FALSE(dominated_by(Partition{3, 1}, Partition{2, 2}));
  CHECK(dominated_by(Partition{2, 1, 1}, Partition{2, 1, 1}));
}

TEST_CASE("composition and partition enumeration") {
  CHECK(compositions_of(0).size() == 1);
  CHECK(compositions_of(4).size() == 8);
  auto comps = compositions_of(3);
  REQUIRE(comps.size() == 4);
  // Lexicographic by first part descending.
  CHECK(comps[0] == Composition{3});
  CHECK(comps[1] == Composition{2, 1});
  CHECK(comps[2] == Composition{1, 2});
  CHECK(comps[3] == Composition{1, 1, 1});

  auto parts = partitions_of(4);
  REQUIRE(parts.size() == 5);
  CHECK(parts.front() == Partition{4});
  CHECK(parts.back() == Partition{1, 1, 1, 1});
  // Lexicographically decreasing is a linear extension of dominance.
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      CHECK_FALSE((dominated_by(parts[i], parts[j]) && parts[i] != parts[j]));
}

TEST_CASE("e-basis term merging") {
  ESym a = ESym::term(Partition{2}, QPoly::one());
  CHECK((a * a) == ESym::term(Partition{2, 2}, QPoly::one()));

  ESym scaled = ESym::term(Partition{5}, QPoly::one()) * q_int(5);
  CHECK(scaled.coeff(Partition{5}) == q_int(5));

  ESym sum = ESym::term(Partition{3, 2}, QPoly::monomial(1)) +
             ESym::term(Partition{3, 2}, -QPoly::monomial(1));
  CHECK(sum.is_zero());
}

TEST_CASE("e-basis product merges key multisets") {
  ESym a = ESym::term(Partition{3, 1}, q_int(2));
  ESym b = ESym::term(Partition{2}, QPoly::monomial(1));
  ESym prod = a * b;
  REQUIRE(prod.terms().size() == 1);
  CHECK(prod.coeff(Partition{3, 2, 1}) == q_int(2) * QPoly::monomial(1));
}

TEST_CASE("declared degrees add under multiplication") {
  ESym a = ESym::term(Partition{2}, QPoly::one());
  a.set_declared_degree(2);
  ESym b = ESym::term(Partition{3}, QPoly::one());
  b.set_declared_degree(3);
  CHECK((a * b).declared_degree() == 5);
  ESym c = ESym::term(Partition{1}, QPoly::one());  // no declared degree
  CHECK_FALSE((a * c).declared_degree().has_value());
}

TEST_CASE("rendering is sorted by partition, descending") {
  ESym x = ESym::term(Partition{3, 2}, QPoly::monomial(2)) +
           ESym::term(Partition{5}, QPoly::one()) +
           ESym::term(Partition{4, 1}, QPoly::monomial(1));
  CHECK(x.to_string() == "(1)*e[5] + (q)*e[4,1] + (q^2)*e[3,2]");
  CHECK(ESym().to_string() == "0");
  CHECK(ESym::one().to_string() == "(1)*e[]");
}
