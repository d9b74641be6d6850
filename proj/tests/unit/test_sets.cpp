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

#include <vector>

#include "matroid/errors.hpp"
#include "matroid/sets.hpp"

#include "test_support.hpp"

using matroid::Element;
using matroid::ElementSet;
using matroid::GroundSet;
using matroid::InputError;

TEST_CASE("element set basics") {
  ElementSet s(5);
  CHECK(s.empty());
  CHECK(s.size() == 0);
  s.insert(1).insert(3);
  CHECK(s.size() == 2);
  CHECK(s.contains(1));
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(0));
  CHECK(s.elements() == std::vector<Element>{1, 3});
  CHECK(s.first() == 1);

  ElementSet t = s.with(0).without(3);
  CHECK(t.elements() == std::vector<Element>{0, 1});
  CHECK(s.elements() == std::vector<Element>{1, 3});  // `with` copies

  s.erase(1);
  CHECK(s.elements() == std::vector<Element>{3});
}

TEST_CASE("element set algebra") {
  ElementSet a = ElementSet::of(6, {0, 1, 2});
  ElementSet b = ElementSet::of(6, {2, 3});
  CHECK((a | b).elements() == std::vector<Element>{0, 1, 2, 3});
  CHECK((a & b).elements() == std::vector<Element>{2});
  CHECK((a - b).elements() == std::vector<Element>{0, 1});
  CHECK((a ^ b).elements() == std::vector<Element>{0, 1, 3});
  CHECK(a != b);
  CHECK(a == ElementSet::of(6, {2, 1, 0}));

  CHECK((a & b).subset_of(a));
  CHECK((a & b).subset_of(b));
  CHECK_FALSE(a.subset_of(b));
  CHECK((a - b).disjoint_from(b));
  CHECK_FALSE(a.disjoint_from(b));

  CHECK(ElementSet::full_set(6).size() == 6);
  CHECK(ElementSet::single(6, 4).elements() == std::vector<Element>{4});
}

TEST_CASE("element set beyond one word") {
  const int n = 130;
  ElementSet s(n);
  s.insert(0).insert(63).insert(64).insert(129);
  CHECK(s.size() == 4);
  CHECK(s.elements() == std::vector<Element>{0, 63, 64, 129});
  CHECK(s.first() == 0);

  ElementSet t(n);
  t.insert(64).insert(100);
  CHECK((s & t).elements() == std::vector<Element>{64});
  CHECK((s | t).size() == 5);
  CHECK(t.subset_of(s | t));
  CHECK(ElementSet::full_set(n).size() == n);
  CHECK((ElementSet::full_set(n) - s).size() == n - 4);

  ElementSet u = s;
  u.erase(64);
  CHECK_FALSE(u.contains(64));
  CHECK(u.contains(129));
  CHECK(u != s);
  CHECK(u.hash() != s.hash());  // not guaranteed in general, but true here
}

TEST_CASE("ground set lookups") {
  auto g = testutil::ground({"a", "b", "c"});
  CHECK(g->size() == 3);
  CHECK(g->id_of(1) == "b");
  CHECK(g->index_of("c") == 2);
  CHECK(g->has("a"));
  CHECK_FALSE(g->has("z"));

  ElementSet s = g->set_of({"c", "a"});
  CHECK(s.elements() == std::vector<Element>{0, 2});
  CHECK(g->ids_of(s) == std::vector<std::string>{"a", "c"});
  CHECK(g->empty_set().empty());
  CHECK(g->full_set().size() == 3);
  CHECK(g->same_as(*testutil::ground({"a", "b", "c"})));
  CHECK_FALSE(g->same_as(*testutil::ground({"a", "c", "b"})));
}

TEST_CASE("ground set rejects bad input") {
  CHECK_THROWS_AS(GroundSet({"a", "a"}), InputError);
  auto g = testutil::ground({"a", "b"});
  CHECK_THROWS_AS(g->index_of("nope"), InputError);
  CHECK_THROWS_AS((void)g->id_of(5), InputError);
  CHECK_THROWS_AS(g->ids_of(ElementSet(7)), InputError);
}
