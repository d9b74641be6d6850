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

#include <string>
#include <vector>

#include "matroid/brute_force.hpp"
#include "matroid/errors.hpp"
#include "matroid/family.hpp"
#include "matroid/feasible.hpp"
#include "matroid/generator.hpp"

#include "test_support.hpp"

using matroid::ElementSet;
using matroid::FeasibleFamily;
using matroid::MatroidFamily;
using matroid::SetList;
using testutil::ground;
using testutil::pick;

namespace {

// Every extension step must refine the commitment without breaking either
// feasibility direction.
void check_refines(const FeasibleFamily& before, const FeasibleFamily& after) {
  for (int i = 0; i < before.family().size(); ++i) {
    CHECK(before.independents()[i].subset_of(after.independents()[i]));
    CHECK(after.spannings()[i].subset_of(before.spannings()[i]));
    CHECK(after.independents()[i].subset_of(after.spannings()[i]));
  }
  CHECK(matroid::covering_feasible(after).feasible());
  CHECK(matroid::packing_feasible(after).feasible());
}

MatroidFamily rank21_family() {
  auto g = ground({"a", "b", "c"});
  return MatroidFamily(
      {matroid::make_uniform(g, 2), matroid::make_uniform(g, 1)});
}

}  // namespace

TEST_CASE("feasible family validation") {
  auto g = ground({"a", "b"});
  MatroidFamily f = testutil::uniform_pair(g, 1, 1);

  FeasibleFamily trivial = matroid::trivial_feasible_family(f);
  CHECK(trivial.covered().empty());
  CHECK(trivial.independents()[0].empty());
  CHECK(trivial.spannings()[0] == g->full_set());

  // A claimed set outside its allowed set is rejected.
  CHECK_THROWS_AS(
      FeasibleFamily::make(f, {pick(g, {"a"}), g->empty_set()},
                           {pick(g, {"b"}), g->full_set()}),
      matroid::InputError);
  // Overlapping claims are rejected.
  CHECK_THROWS_AS(
      FeasibleFamily::make(f, {pick(g, {"a"}), pick(g, {"a"})},
                           {g->full_set(), g->full_set()}),
      matroid::InputError);
  // Allowed sets must jointly reach every element.
  CHECK_THROWS_AS(
      FeasibleFamily::make(f, {g->empty_set(), g->empty_set()},
                           {pick(g, {"a"}), pick(g, {"a"})}),
      matroid::InputError);
}

TEST_CASE("quotient of a partial commitment") {
  MatroidFamily f = rank21_family();
  const auto& g = f.ground();
  FeasibleFamily ff = FeasibleFamily::make(
      f, {g.set_of({"a"}), g.empty_set()}, {g.full_set(), g.full_set()});

  MatroidFamily q = matroid::quotient_family(ff);
  CHECK(q.ground().ids() == std::vector<std::string>{"b", "c"});
  // Member 0 contracted through {a} keeps rank one on the rest.
  CHECK(q.member(0).full_rank() == 1);
  CHECK(q.member(1).full_rank() == 1);
}

TEST_CASE("covering feasibility matches plain covering on trivial input") {
  matroid::GeneratorOptions options;
  options.max_elements = 5;
  options.max_members = 3;
  matroid::InstanceGenerator gen(31337, options);
  for (int trial = 0; trial < 30; ++trial) {
    MatroidFamily f = gen.next_family();
    CAPTURE(trial);
    auto out = matroid::covering_feasible(matroid::trivial_feasible_family(f));
    CHECK(out.feasible() == matroid::brute_find_covering(f).has_value());
    if (out.feasible()) {
      CHECK(matroid::is_covering(f, *out.covering));
    } else {
      CHECK(out.witness.has_value());
    }
  }
}

TEST_CASE("hat system layout") {
  auto g = ground({"a", "b"});
  MatroidFamily f = testutil::uniform_pair(g, 1, 1);
  matroid::HatSystem hat =
      matroid::make_hat(matroid::trivial_feasible_family(f));

  CHECK(hat.slots == 3);
  CHECK(hat.family.size() == 3);
  CHECK(hat.family.ground().ids() ==
        std::vector<std::string>{"a@0", "a@1", "a@2", "b@0", "b@1", "b@2"});
  CHECK(hat.index(1, 2) == 5);
  CHECK(hat.project(5) == 1);
  CHECK(hat.slot_of(5) == 2);

  // Packings of the original correspond to coverings of the hat family.
  CHECK(matroid::covering_feasible(hat.feasible).feasible() ==
        matroid::brute_find_packing(f).has_value());
}

TEST_CASE("packing feasibility routes agree") {
  matroid::GeneratorOptions options;
  options.max_elements = 4;
  options.max_members = 3;
  matroid::InstanceGenerator gen(424242, options);
  for (int trial = 0; trial < 25; ++trial) {
    MatroidFamily f = gen.next_family();
    CAPTURE(trial);
    FeasibleFamily ff = matroid::trivial_feasible_family(f);
    auto direct = matroid::packing_feasible(ff);
    auto hatted = matroid::packing_feasible_via_hat(ff);
    bool exists = matroid::brute_find_packing(f).has_value();
    CHECK(direct.feasible() == exists);
    CHECK(hatted.feasible() == exists);
    if (exists) {
      CHECK(matroid::is_packing(f, *direct.packing));
      CHECK(matroid::is_packing(f, *hatted.packing));
    } else {
      CHECK(direct.witness.has_value());
    }
  }
}

TEST_CASE("two-member dual shortcut") {
  auto g = ground({"a", "b", "c"});
  MatroidFamily f = testutil::uniform_pair(g, 1, 1);
  FeasibleFamily ff = matroid::trivial_feasible_family(f);
  FeasibleFamily dual = matroid::dual_feasible_family(ff);

  // Duals of rank-one uniforms on three elements have rank two.
  CHECK(dual.family().member(0).full_rank() == 2);
  CHECK(dual.family().member(1).full_rank() == 2);
  CHECK(dual.independents()[0].empty());
  CHECK(dual.spannings()[0] == g->full_set());

  // Dual coverings decode to primal packings.
  auto out = matroid::packing_feasible(ff);
  REQUIRE(out.feasible());
  CHECK(matroid::is_packing(f, *out.packing));
}

TEST_CASE("eliminating the largest tight set") {
  MatroidFamily f = rank21_family();
  const auto& g = f.ground();
  FeasibleFamily ff = matroid::trivial_feasible_family(f);
  FeasibleFamily done = matroid::eliminate_largest_tight(ff);

  // The whole ground is tight (ranks 2 + 1 fill all three elements), so
  // elimination claims everything at once.
  CHECK(done.independents()[0] == g.set_of({"a", "b"}));
  CHECK(done.independents()[1] == g.set_of({"c"}));
  CHECK(done.covered() == g.full_set());
  check_refines(ff, done);
}

TEST_CASE("covering an element") {
  MatroidFamily f = rank21_family();
  const auto& g = f.ground();
  FeasibleFamily ff = matroid::trivial_feasible_family(f);
  FeasibleFamily claimed = matroid::cover_element(ff, g.index_of("b"));
  CHECK(claimed.covered().contains(g.index_of("b")));
  check_refines(ff, claimed);
}

TEST_CASE("spanning an element from a chosen part") {
  MatroidFamily f = rank21_family();
  const auto& g = f.ground();
  FeasibleFamily ff = matroid::trivial_feasible_family(f);

  FeasibleFamily spanned = matroid::span_element(ff, g.index_of("a"), 0);
  // Member 0 must reach "a" without claiming it: its claim becomes the
  // complementary base.
  CHECK(spanned.independents()[0] == g.set_of({"b", "c"}));
  CHECK_FALSE(spanned.independents()[0].contains(g.index_of("a")));
  CHECK(f.member(0).span(spanned.independents()[0])
            .contains(g.index_of("a")));
  // Allowed sets never change under this operation.
  for (int i = 0; i < f.size(); ++i) {
    CHECK(spanned.spannings()[i] == ff.spannings()[i]);
  }
  check_refines(ff, spanned);

  // Passing a compatible packing gives the same commitment.
  auto packing = matroid::packing_feasible(ff);
  REQUIRE(packing.feasible());
  FeasibleFamily hinted =
      matroid::span_element(ff, g.index_of("a"), 0, *packing.packing);
  CHECK(hinted.independents() == spanned.independents());
  CHECK(hinted.spannings() == spanned.spannings());
}

TEST_CASE("cospanning an element from a chosen part") {
  MatroidFamily f = rank21_family();
  const auto& g = f.ground();
  FeasibleFamily ff = matroid::trivial_feasible_family(f);

  FeasibleFamily shrunk = matroid::cospan_element(ff, g.index_of("a"), 1);
  // Claims never change under this operation.
  CHECK(shrunk.independents() == ff.independents());
  // What member 1 gave up spans "a" in its dual.
  ElementSet surrendered = g.full_set() - shrunk.spannings()[1];
  matroid::MatroidPtr dual1 = matroid::make_dual(f.member_ptr(1));
  CHECK(dual1->span(surrendered).contains(g.index_of("a")));
  check_refines(ff, shrunk);
}

TEST_CASE("normalizing against claims") {
  MatroidFamily f = rank21_family();
  const auto& g = f.ground();
  FeasibleFamily ff = FeasibleFamily::make(
      f, {g.set_of({"a"}), g.empty_set()}, {g.full_set(), g.full_set()});
  FeasibleFamily norm = matroid::normalize(ff);
  // Member 1 loses "a": member 0 already claims it.
  CHECK_FALSE(norm.spannings()[1].contains(g.index_of("a")));
  CHECK(norm.spannings()[0] == g.full_set());
  check_refines(ff, norm);
}
