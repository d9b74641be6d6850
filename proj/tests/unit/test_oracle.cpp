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

#include "matroid/errors.hpp"
#include "matroid/oracle.hpp"
#include "matroid/sets.hpp"

#include "test_support.hpp"

using matroid::Element;
using matroid::ElementSet;
using matroid::InputError;
using matroid::MatroidPtr;
using testutil::ground;
using testutil::pick;

TEST_CASE("uniform matroid ranks") {
  auto g = ground({"a", "b", "c", "d"});
  MatroidPtr m = matroid::make_uniform(g, 2);
  CHECK(m->full_rank() == 2);
  CHECK(m->is_independent(pick(g, {"a", "b"})));
  CHECK_FALSE(m->is_independent(pick(g, {"a", "b", "c"})));
  CHECK(m->rank(pick(g, {"a", "b", "c"})) == 2);
  CHECK(m->rank(pick(g, {"a"})) == 1);
  CHECK(m->is_base(pick(g, {"b", "d"})));
  CHECK_FALSE(m->is_base(pick(g, {"b"})));
  CHECK(m->is_spanning(pick(g, {"a", "b", "c"})));
  CHECK(m->span(pick(g, {"a", "b"})) == g->full_set());
  CHECK(m->span(pick(g, {"a"})) == pick(g, {"a"}));
  CHECK_FALSE(m->is_loop(0));
  CHECK_THROWS_AS(matroid::make_uniform(g, -1), InputError);
  CHECK_THROWS_AS(matroid::make_uniform(g, 5), InputError);
}

TEST_CASE("free and zero matroids") {
  auto g = ground({"a", "b"});
  MatroidPtr fr = matroid::make_free(g);
  MatroidPtr ze = matroid::make_zero(g);
  CHECK(fr->full_rank() == 2);
  CHECK(fr->is_base(g->full_set()));
  CHECK(ze->full_rank() == 0);
  CHECK(ze->is_base(g->empty_set()));
  CHECK(ze->is_loop(0));
  CHECK(ze->is_spanning(g->empty_set()));
  CHECK(ze->span(g->empty_set()) == g->full_set());
}

TEST_CASE("graphic matroid agrees with a union-find cycle check") {
  testutil::Graph k4 = testutil::k4();
  MatroidPtr m = k4.matroid();
  CHECK(m->full_rank() == 3);
  for (unsigned mask = 0; mask < 64; ++mask) {
    ElementSet s(6);
    for (int e = 0; e < 6; ++e) {
      if (mask & (1u << e)) s.insert(e);
    }
    CAPTURE(mask);
    CHECK(m->is_independent(s) == testutil::acyclic(k4, s));
  }
}

TEST_CASE("graphic matroid circuits and minors") {
  testutil::Graph k4 = testutil::k4();
  auto g = k4.edges;
  MatroidPtr m = k4.matroid();

  // The fundamental circuit of e13 through the path tree e12,e23,e34 is the
  // triangle on v1,v2,v3.
  ElementSet tree = pick(g, {"e12", "e23", "e34"});
  CHECK(m->is_base(tree));
  ElementSet circuit = m->fundamental_circuit(g->index_of("e13"), tree);
  CHECK(circuit == pick(g, {"e12", "e13", "e23"}));

  // Contracting e12 merges v1 and v2, so e13 and e23 become parallel.
  MatroidPtr contracted =
      matroid::make_minor(m, pick(g, {"e12"}), g->empty_set());
  CHECK(contracted->ground().size() == 5);
  ElementSet parallel = contracted->ground().set_of({"e13", "e23"});
  CHECK_FALSE(contracted->is_independent(parallel));
  CHECK(contracted->full_rank() == 2);

  // Deleting an edge leaves the rest untouched.
  MatroidPtr deleted =
      matroid::make_minor(m, g->empty_set(), pick(g, {"e34"}));
  CHECK(deleted->full_rank() == 3);
  CHECK(deleted->is_independent(deleted->ground().set_of({"e13", "e23"})));

  // Loops: an edge with equal endpoints is never independent.
  testutil::Graph looped = k4;
  looped.endpoints[5] = {"v3", "v3"};
  MatroidPtr lm = looped.matroid();
  CHECK(lm->is_loop(g->index_of("e34")));
  CHECK(lm->full_rank() == 3);
}

TEST_CASE("graphic matroid rejects unknown endpoints") {
  auto g = ground({"x"});
  CHECK_THROWS_AS(
      matroid::make_graphic(g, {"v1"}, {{"v1", "v9"}}), InputError);
}

TEST_CASE("partition matroid capacities") {
  auto g = ground({"a", "b", "c", "d"});
  MatroidPtr m = matroid::make_partition(
      g, {{pick(g, {"a", "b", "c"}), 2}, {pick(g, {"d"}), 0}});
  CHECK(m->full_rank() == 2);
  CHECK(m->is_independent(pick(g, {"a", "c"})));
  CHECK_FALSE(m->is_independent(pick(g, {"a", "b", "c"})));
  CHECK(m->is_loop(g->index_of("d")));
  CHECK(m->rank(g->full_set()) == 2);

  // Elements outside every block are unconstrained.
  MatroidPtr loose = matroid::make_partition(g, {{pick(g, {"a", "b"}), 1}});
  CHECK(loose->full_rank() == 3);
  CHECK(loose->is_independent(pick(g, {"a", "c", "d"})));

  CHECK_THROWS_AS(
      matroid::make_partition(
          g, {{pick(g, {"a", "b"}), 1}, {pick(g, {"b", "c"}), 1}}),
      InputError);
}

TEST_CASE("binary linear matroid") {
  auto g = ground({"a", "b", "c", "z"});
  // a = (1,0), b = (0,1), c = (1,1), z = 0.
  MatroidPtr m = matroid::make_linear_gf2(g, {0b01, 0b10, 0b11, 0b00});
  CHECK(m->full_rank() == 2);
  CHECK(m->is_independent(pick(g, {"a", "b"})));
  CHECK(m->is_independent(pick(g, {"a", "c"})));
  CHECK_FALSE(m->is_independent(pick(g, {"a", "b", "c"})));
  CHECK(m->is_loop(g->index_of("z")));
  CHECK(m->span(pick(g, {"a"})) == pick(g, {"a", "z"}));
}

TEST_CASE("dual matroid") {
  testutil::Graph k4 = testutil::k4();
  auto g = k4.edges;
  MatroidPtr m = k4.matroid();
  MatroidPtr dual = matroid::make_dual(m);
  CHECK(dual->full_rank() == 3);

  // Complements of bases are exactly the dual bases.
  for (unsigned mask = 0; mask < 64; ++mask) {
    ElementSet s(6);
    for (int e = 0; e < 6; ++e) {
      if (mask & (1u << e)) s.insert(e);
    }
    CAPTURE(mask);
    CHECK(dual->is_base(s) == m->is_base(g->full_set() - s));
    // Rank of the dual via the complement formula.
    int expected =
        s.size() + m->rank(g->full_set() - s) - m->full_rank();
    CHECK(dual->rank(s) == expected);
  }

  MatroidPtr dd = matroid::make_dual(dual);
  for (unsigned mask = 0; mask < 64; ++mask) {
    ElementSet s(6);
    for (int e = 0; e < 6; ++e) {
      if (mask & (1u << e)) s.insert(e);
    }
    CHECK(dd->is_independent(s) == m->is_independent(s));
  }
}

TEST_CASE("minor base choice does not change the oracle") {
  // Rank of a minor is independent of which base of the contracted set the
  // implementation fixes; spot-check against the rank identity
  // r_{M/C}(X) = r(X | C) - r(C).
  testutil::Graph k4 = testutil::k4();
  auto g = k4.edges;
  MatroidPtr m = k4.matroid();
  ElementSet contract = pick(g, {"e12", "e34"});
  MatroidPtr minor = matroid::make_minor(m, contract, pick(g, {"e24"}));
  const auto& mg = minor->ground();
  CHECK(mg.size() == 3);
  for (unsigned mask = 0; mask < 8; ++mask) {
    ElementSet s(3);
    ElementSet lifted(6);
    for (int e = 0; e < 3; ++e) {
      if (mask & (1u << e)) {
        s.insert(e);
        lifted.insert(g->index_of(mg.id_of(e)));
      }
    }
    CHECK(minor->rank(s) == m->rank(lifted | contract) - m->rank(contract));
  }
}

TEST_CASE("restriction and contraction shorthands") {
  auto g = ground({"a", "b", "c"});
  MatroidPtr m = matroid::make_uniform(g, 2);
  MatroidPtr res = matroid::make_restriction(m, pick(g, {"a", "c"}));
  CHECK(res->ground().ids() == std::vector<std::string>{"a", "c"});
  CHECK(res->full_rank() == 2);
  MatroidPtr con = matroid::make_contraction_onto(m, pick(g, {"a", "c"}));
  CHECK(con->full_rank() == 1);
}

TEST_CASE("direct sum") {
  auto left = ground({"a", "b"});
  auto right = ground({"c"});
  MatroidPtr sum = matroid::make_direct_sum(
      {matroid::make_uniform(left, 1), matroid::make_free(right)});
  const auto& g = sum->ground();
  CHECK(g.ids() == std::vector<std::string>{"a", "b", "c"});
  CHECK(sum->full_rank() == 2);
  CHECK(sum->is_independent(g.set_of({"a", "c"})));
  CHECK_FALSE(sum->is_independent(g.set_of({"a", "b"})));
  CHECK_THROWS_AS(matroid::make_direct_sum(
                      {matroid::make_free(left), matroid::make_free(left)}),
                  InputError);
}

TEST_CASE("looped wrapper") {
  auto g = ground({"a", "b", "c"});
  MatroidPtr m = matroid::make_looped(matroid::make_free(g), pick(g, {"b"}));
  CHECK(m->is_loop(1));
  CHECK(m->full_rank() == 2);
  CHECK(m->is_independent(pick(g, {"a", "c"})));
  CHECK_FALSE(m->is_independent(pick(g, {"a", "b"})));
}

TEST_CASE("parallel clone") {
  auto g = ground({"a", "b"});
  MatroidPtr m = matroid::make_parallel_clone(matroid::make_free(g), 0, "a2");
  const auto& cg = m->ground();
  CHECK(cg.ids() == std::vector<std::string>{"a", "b", "a2"});
  CHECK_FALSE(m->is_independent(cg.set_of({"a", "a2"})));
  CHECK(m->is_independent(cg.set_of({"b", "a2"})));
  CHECK(m->full_rank() == 2);

  MatroidPtr looped_clone = matroid::make_parallel_clone(
      matroid::make_zero(g), 0, "a2");
  CHECK(looped_clone->is_loop(2));
}

TEST_CASE("isomorphic copy") {
  auto g = ground({"a", "b", "c"});
  auto h = ground({"x", "y", "z"});
  MatroidPtr m = matroid::make_uniform(g, 2);
  MatroidPtr iso = matroid::make_isomorph(m, h, {2, 0, 1});
  CHECK(iso->full_rank() == 2);
  CHECK(iso->is_independent(h->set_of({"x", "y"})));
  CHECK_FALSE(iso->is_independent(h->full_set()));
}

TEST_CASE("derived queries") {
  auto g = ground({"a", "b", "c", "d"});
  MatroidPtr m = matroid::make_uniform(g, 2);
  ElementSet base = m->extend_to_base_within(pick(g, {"b"}), g->full_set());
  CHECK(m->is_base(base));
  CHECK(pick(g, {"b"}).subset_of(base));

  ElementSet constrained =
      m->extend_to_base_within(g->empty_set(), pick(g, {"c", "d"}));
  CHECK(constrained == pick(g, {"c", "d"}));

  CHECK_THROWS_AS(m->fundamental_circuit(0, pick(g, {"b"})),
                  matroid::PreconditionError);
}

TEST_CASE("axiom scan across factories") {
  auto g = ground({"a", "b", "c", "d", "e"});
  std::vector<MatroidPtr> zoo = {
      matroid::make_uniform(g, 2),
      matroid::make_free(g),
      matroid::make_zero(g),
      matroid::make_partition(g, {{pick(g, {"a", "b", "c"}), 2},
                                  {pick(g, {"d", "e"}), 1}}),
      matroid::make_linear_gf2(g, {0b001, 0b010, 0b011, 0b100, 0b000}),
      matroid::make_dual(matroid::make_uniform(g, 2)),
      matroid::make_looped(matroid::make_uniform(g, 3), pick(g, {"e"})),
  };
  testutil::Graph k4 = testutil::k4();
  zoo.push_back(k4.matroid());
  zoo.push_back(matroid::make_dual(k4.matroid()));
  zoo.push_back(matroid::make_minor(k4.matroid(), pick(k4.edges, {"e12"}),
                                    pick(k4.edges, {"e34"})));
  for (const MatroidPtr& m : zoo) {
    CAPTURE(m->describe());
    CHECK(testutil::axiom_violation(*m) == "");
  }
}
