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

#include <doctest.h>

#include <algorithm>
#include <vector>

#include "matroid/brute_force.hpp"
#include "matroid/errors.hpp"
#include "matroid/family.hpp"
#include "matroid/generator.hpp"

#include "test_support.hpp"

using matroid::AssignmentMode;
using matroid::ElementSet;
using matroid::MatroidFamily;
using matroid::SetList;
using testutil::ground;
using testutil::pick;

TEST_CASE("coverings of two rank-one members on two elements") {
  auto g = ground({"a", "b"});
  MatroidFamily f = testutil::uniform_pair(g, 1, 1);

  auto coverings =
      matroid::brute_enumerate_assignments(f, AssignmentMode::kCovering);
  REQUIRE(coverings.size() == 2);
  SetList first = {pick(g, {"a"}), pick(g, {"b"})};
  SetList second = {pick(g, {"b"}), pick(g, {"a"})};
  CHECK(std::count(coverings.begin(), coverings.end(), first) == 1);
  CHECK(std::count(coverings.begin(), coverings.end(), second) == 1);

  auto found = matroid::brute_find_covering(f);
  REQUIRE(found.has_value());
  CHECK(matroid::is_covering(f, *found));
}

TEST_CASE("packing edge cases") {
  auto g = ground({"a"});
  MatroidFamily two_free(
      {matroid::make_free(g), matroid::make_free(g)});
  CHECK_FALSE(matroid::brute_find_packing(two_free).has_value());

  MatroidFamily one_zero({matroid::make_zero(g)});
  auto packing = matroid::brute_find_packing(one_zero);
  REQUIRE(packing.has_value());
  CHECK((*packing)[0].empty());

  // No partitioning for the zero member: "a" stays uncovered.
  CHECK_FALSE(matroid::brute_find_partitioning(one_zero).has_value());
}

TEST_CASE("empty ground") {
  // A family over no elements is covered, packed and partitioned by empty
  // parts alone.
  auto g = ground({});
  MatroidFamily f({matroid::make_free(g), matroid::make_free(g)});
  auto coverings =
      matroid::brute_enumerate_assignments(f, AssignmentMode::kCovering);
  REQUIRE(coverings.size() == 1);
  CHECK((*coverings.begin())[0].empty());
  CHECK(matroid::brute_find_partitioning(f).has_value());
}

TEST_CASE("tight sets by enumeration") {
  auto g = ground({"a", "b"});

  MatroidFamily both_tight = testutil::uniform_pair(g, 1, 1);
  CHECK(matroid::brute_is_tight(both_tight, g->full_set()));
  CHECK(matroid::brute_is_tight(both_tight, g->empty_set()));
  CHECK_FALSE(matroid::brute_is_tight(both_tight, pick(g, {"a"})));
  CHECK(matroid::brute_largest_tight_set(both_tight) == g->full_set());

  MatroidFamily loose(
      {matroid::make_uniform(g, 1), matroid::make_free(g)});
  CHECK_FALSE(matroid::brute_is_tight(loose, g->full_set()));
  CHECK_FALSE(matroid::brute_is_tight(loose, pick(g, {"a"})));
  CHECK(matroid::brute_largest_tight_set(loose) == g->empty_set());
  auto all = matroid::brute_all_tight_sets(loose);
  REQUIRE(all.size() == 1);
  CHECK(all[0].empty());
}

TEST_CASE("searches agree with literal enumeration") {
  matroid::GeneratorOptions options;
  options.max_elements = 4;
  options.max_members = 3;
  matroid::InstanceGenerator gen(20260818, options);
  matroid::EnumerationBudget budget;
  for (int trial = 0; trial < 40; ++trial) {
    MatroidFamily f = gen.next_family();
    if (f.ground_size() * f.size() > 12) continue;
    CAPTURE(trial);
    for (AssignmentMode mode :
         {AssignmentMode::kCovering, AssignmentMode::kPacking,
          AssignmentMode::kPartitioning}) {
      auto all = matroid::brute_enumerate_assignments(f, mode, budget);
      std::optional<SetList> found;
      switch (mode) {
        case AssignmentMode::kCovering:
          found = matroid::brute_find_covering(f, budget);
          break;
        case AssignmentMode::kPacking:
          found = matroid::brute_find_packing(f, budget);
          break;
        case AssignmentMode::kPartitioning:
          found = matroid::brute_find_partitioning(f, budget);
          break;
      }
      CHECK(found.has_value() == !all.empty());
      if (found.has_value()) {
        CHECK(matroid::assignment_violation(f, {mode, *found}).empty());
      }
    }
  }
}

TEST_CASE("budget is enforced") {
  auto g = ground({"a", "b", "c", "d", "e", "f", "g", "h", "i"});
  MatroidFamily f({matroid::make_free(g)});
  CHECK_THROWS_AS(matroid::brute_find_covering(f), matroid::BudgetError);
  matroid::EnumerationBudget raised;
  raised.max_elements = 9;
  CHECK(matroid::brute_find_covering(f, raised).has_value());
}
