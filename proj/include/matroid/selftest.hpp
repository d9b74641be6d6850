// Copyright 2026 The Authors.
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

#include <cstdint>
#include <string>
#include <vector>

namespace matroid {

struct SelftestOptions {
  /// Ground-size ceiling for generated instances; 0 runs nothing (vacuous
  /// pass, all suites report zero checks).
  int max_elements = 7;
  /// Trial count for the main randomized suite; the heavier suites scale
  /// it down by fixed divisors.
  int trials = 500;
  std::uint64_t seed = 0;
  /// Swaps in a deliberately broken oracle and expects the axiom scan to
  /// flag it; the resulting failure proves the harness can fail.
  bool inject_fault = false;
};

struct SuiteResult {
  std::string name;
  int checks = 0;
  int failures = 0;
  std::string first_failure;  // empty when clean
};

struct SelftestReport {
  SelftestOptions options;
  std::vector<SuiteResult> suites;

  int total_failures() const {
    int n = 0;
    for (const SuiteResult& s : suites) n += s.failures;
    return n;
  }
  bool passed() const { return total_failures() == 0; }
};

/// Cross-checks the algorithmic layer against exhaustive enumeration on
/// randomized small instances: oracle agreements (existence, tightness,
/// augment dichotomy, axiom scans), synthesis-vs-existence agreement, the
/// tight-set lattice, and the three-member reduction. Deterministic for
/// fixed options.
SelftestReport run_selftest(const SelftestOptions& options = {});

}  // namespace matroid
