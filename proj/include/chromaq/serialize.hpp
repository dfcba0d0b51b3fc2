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

#include <json.hpp>

#include <stdexcept>
#include <string>

#include "chromaq/esym.hpp"
#include "chromaq/graphs.hpp"
#include "chromaq/partitions.hpp"
#include "chromaq/qpoly.hpp"

namespace chromaq {

using Json = nlohmann::json;

/// QPoly renders as an array of decimal-string coefficients, index =
/// exponent; the zero polynomial is the empty array.
inline Json to_json(const QPoly& p) {
  Json arr = Json::array();
  for (const Int& c : p.coeffs()) arr.push_back(c.str());
  return arr;
}

inline QPoly qpoly_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("QPoly JSON: expected array");
  std::vector<Int> coeffs;
  for (const auto& item : j) {
    if (item.is_string())
      coeffs.emplace_back(item.get<std::string>());
    else if (item.is_number_integer())
      coeffs.emplace_back(item.get<long long>());
    else
      throw std::invalid_argument("QPoly JSON: expected decimal strings");
  }
  return QPoly(std::move(coeffs));
}

/// ESym renders as an array of {partition, coeff} objects, partitions in
/// lexicographically descending order. This is the canonical form every
/// cross-method comparison uses.
inline Json to_json(const ESym& e) {
  Json arr = Json::array();
  for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
    Json term;
    term["partition"] = it->first.parts();
    term["coeff"] = to_json(it->second);
    arr.push_back(std::move(term));
  }
  return arr;
}

inline ESym esym_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("ESym JSON: expected array");
  ESym out;
  for (const auto& term : j) {
    Partition mu(term.at("partition").get<std::vector<int>>());
    out.add_term(std::move(mu), qpoly_from_json(term.at("coeff")));
  }
  return out;
}

inline std::string canonical_json(const ESym& e) { return to_json(e).dump(); }

inline Json to_json(const Nuig& g) {
  Json j;
  j["n"] = g.n();
  j["b"] = g.b();
  return j;
}

inline Json to_json(const GenericGraph& g) {
  Json j;
  j["n"] = g.n;
  Json edges = Json::array();
  for (auto [a, b] : g.edges) edges.push_back(Json::array({a, b}));
  j["edges"] = std::move(edges);
  return j;
}

}  // namespace chromaq
