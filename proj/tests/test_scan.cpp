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

#include "chromaq/scan.hpp"

using namespace chromaq;

namespace {
bool same(const GraphScanResult& a, const GraphScanResult& b) {
  return a.b == b.b && a.edge_count == b.edge_count && a.method == b.method &&
         a.e_positive == b.e_positive && a.palindromic == b.palindromic &&
         a.e_unimodal == b.e_unimodal && a.e_log_concave == b.e_log_concave;
}
}  // namespace

TEST_CASE("scans are clean on small sizes") {
  for (int n = 1; n <= 5; ++n) {
    ScanReport report = scan_nuigs(n);
    CHECK(report.graphs.size() == catalan(n));
    CHECK(report.positivity_violations == 0);
    CHECK(report.palindromicity_violations == 0);
    CHECK(report.unimodality_violations == 0);
    CHECK(report.log_concavity_violations == 0);
    CHECK(scan_exit_code(report) == exit_codes::kOk);
  }
}

TEST_CASE("results are reduced in enumeration order for any job count") {
  ScanReport sequential = scan_nuigs(6, 1);
  ScanReport parallel = scan_nuigs(6, 4);
  REQUIRE(sequential.graphs.size() == parallel.graphs.size());
  for (std::size_t i = 0; i < sequential.graphs.size(); ++i)
    CHECK(same(sequential.graphs[i], parallel.graphs[i]));
  CHECK(sequential.log_concavity_violations ==
        parallel.log_concavity_violations);
}

TEST_CASE("exit codes distinguish theorems from conjectures") {
  ScanReport clean;
  CHECK(scan_exit_code(clean) == exit_codes::kOk);

  GraphScanResult conjecture_bad;
  conjecture_bad.e_positive = true;
  conjecture_bad.palindromic = true;
  conjecture_bad.e_unimodal = true;
  conjecture_bad.e_log_concave = false;
  ScanReport conjecture;
  scan_tally(conjecture, conjecture_bad);
  CHECK(scan_exit_code(conjecture) == exit_codes::kConjectureCounterexample);

  GraphScanResult theorem_bad = conjecture_bad;
  theorem_bad.e_log_concave = true;
  theorem_bad.palindromic = false;
  ScanReport theorem;
  scan_tally(theorem, theorem_bad);
  CHECK(scan_exit_code(theorem) == exit_codes::kInvariantViolation);
}

TEST_CASE("per-graph verdicts") {
  GraphScanResult bowtie = scan_graph(Nuig::from_b(5, {1, 2, 1, 2}));
  CHECK(bowtie.edge_count == 6);
  CHECK(bowtie.e_positive);
  CHECK(bowtie.palindromic);
  CHECK(bowtie.e_unimodal);
  CHECK(bowtie.e_log_concave);
  CHECK(bowtie.method == "llt");
}
