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

#include <optional>
#include <vector>

#include "matroid/family.hpp"

namespace matroid {

/// Exhaustive reference procedures. They trade exponential time for being
/// simple enough to trust outright, and refuse inputs beyond the budget
/// rather than silently taking forever.
struct EnumerationBudget {
  int max_elements = 8;
  int max_members = 4;
  /// Cap for operations that walk the full subset lattice per subset.
  int max_lattice_elements = 7;
};

void check_budget(const MatroidFamily& f, const EnumerationBudget& b,
                  bool lattice_heavy = false);

/// Lowest-index-first witness via dynamic programming over element subsets,
/// or nullopt when none exists.
std::optional<SetList> brute_find_covering(const MatroidFamily& f,
                                           const EnumerationBudget& b = {});
std::optional<SetList> brute_find_packing(const MatroidFamily& f,
                                          const EnumerationBudget& b = {});
std::optional<SetList> brute_find_partitioning(const MatroidFamily& f,
                                               const EnumerationBudget& b = {});

/// Every valid assignment, by literal enumeration of all part tuples. Only
/// for tiny grounds: the budget is checked against members * elements.
std::vector<SetList> brute_enumerate_assignments(const MatroidFamily& f,
                                                 AssignmentMode mode,
                                                 const EnumerationBudget& b =
                                                     {});

/// A set is tight when its restriction is coverable and every covering of
/// the restriction uses only spanning parts. Decided here by a subset DP
/// that tracks whether some part fell short of spanning, independently of
/// any rank arithmetic.
bool brute_is_tight(const MatroidFamily& f, const ElementSet& x,
                    const EnumerationBudget& b = {});

/// Union of all tight sets. Requires the family to be coverable.
ElementSet brute_largest_tight_set(const MatroidFamily& f,
                                   const EnumerationBudget& b = {});

std::vector<ElementSet> brute_all_tight_sets(const MatroidFamily& f,
                                             const EnumerationBudget& b = {});

/// A set W is a cowave when contracting everything else onto W leaves a
/// coverable family. The contraction test is rebuilt here from scratch
/// (fixed-base lifting) instead of reusing the minor oracle.
bool brute_is_cowave(const MatroidFamily& f, const ElementSet& w,
                     const EnumerationBudget& b = {});

/// Union of all cowaves disjoint from `avoid`.
ElementSet brute_largest_cowave_avoiding(const MatroidFamily& f,
                                         const ElementSet& avoid,
                                         const EnumerationBudget& b = {});

}  // namespace matroid
