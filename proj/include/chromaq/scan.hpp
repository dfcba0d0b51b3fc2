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

#include <atomic>
#include <string>
#include <thread>
#include <vector>

#include "chromaq/foresttriples.hpp"
#include "chromaq/graphs.hpp"
#include "chromaq/kchain.hpp"
#include "chromaq/llt.hpp"

namespace chromaq {

namespace exit_codes {
inline constexpr int kOk = 0;
inline constexpr int kUsage = 2;
inline constexpr int kInvariantViolation = 3;
inline constexpr int kConjectureCounterexample = 4;
}  // namespace exit_codes

struct GraphScanResult {
  std::string b;  // b-sequence of the graph
  int edge_count = 0;
  std::string method;
  bool e_positive = false;
  bool palindromic = false;
  bool e_unimodal = false;
  bool e_log_concave = false;
};

struct ScanReport {
  int n = 0;
  std::vector<GraphScanResult> graphs;  // enumeration order
  long positivity_violations = 0;
  long palindromicity_violations = 0;  // always a bug: this property is proven
  long unimodality_violations = 0;
  long log_concavity_violations = 0;
};

/// Fold one graph verdict into the report tallies.
inline void scan_tally(ScanReport& report, const GraphScanResult& r) {
  if (!r.e_positive) ++report.positivity_violations;
  if (!r.palindromic) ++report.palindromicity_violations;
  if (!r.e_unimodal) ++report.unimodality_violations;
  if (!r.e_log_concave) ++report.log_concavity_violations;
}

/// Palindromicity is proven for this graph class, so its failure is an
/// invariant violation; the positivity, unimodality and log-concavity
/// verdicts are conjecture-level and map to the dedicated exit code so
/// scans can be scripted.
inline int scan_exit_code(const ScanReport& report) {
  if (report.palindromicity_violations > 0)
    return exit_codes::kInvariantViolation;
  if (report.positivity_violations > 0 || report.unimodality_violations > 0 ||
      report.log_concavity_violations > 0)
    return exit_codes::kConjectureCounterexample;
  return exit_codes::kOk;
}

/// Verdicts for one graph. The method is the cheaper of the two exact
/// routes at this size: the edge-subset expansion for sparse graphs, the
/// forest-triple sum for dense ones.
inline GraphScanResult scan_graph(const Nuig& g) {
  GraphScanResult result;
  result.b = g.b_string();
  result.edge_count = g.edge_count();
  ESym x;
  if (g.edge_count() <= 18) {
    result.method = "llt";
    x = x_from_llt(g);
  } else {
    result.method = "forest";
    x = x_forest_triples(g);
  }
  PositivityReport report = analyze_positivity(x, g.edge_count());
  result.e_positive = report.e_positive;
  result.palindromic = report.palindromic;
  result.e_unimodal = report.e_unimodal;
  result.e_log_concave = report.e_log_concave;
  return result;
}

/// Scan every natural unit interval graph on n vertices. Graphs are
/// processed by a small worker pool but results are reduced in enumeration
/// order, so the report is identical for every job count.
inline ScanReport scan_nuigs(int n, int jobs = 1) {
  std::vector<Nuig> graphs;
  for_each_nuig(n, [&](const Nuig& g) { graphs.push_back(g); });

  std::vector<GraphScanResult> results(graphs.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < graphs.size(); ++i)
      results[i] = scan_graph(graphs[i]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w)
      pool.emplace_back([&] {
        while (true) {
          std::size_t i = next.fetch_add(1);
          if (i >= graphs.size()) return;
          results[i] = scan_graph(graphs[i]);
        }
      });
    for (auto& t : pool) t.join();
  }

  ScanReport report;
  report.n = n;
  for (const GraphScanResult& r : results) {
    scan_tally(report, r);
    report.graphs.push_back(r);
  }
  return report;
}

}  // namespace chromaq
