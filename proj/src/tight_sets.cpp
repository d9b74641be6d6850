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

#include "matroid/tight_sets.hpp"

#include <unordered_map>
#include <utility>

#include "matroid/errors.hpp"

namespace matroid {

std::optional<TightCertificate> tight_certificate(const MatroidFamily& f,
                                                  const ElementSet& x) {
  detail::require(x.universe() == f.ground_size(),
                  "tight_certificate: set over a foreign universe");
  std::vector<int> ranks;
  ranks.reserve(f.size());
  int rank_sum = 0;
  for (int i = 0; i < f.size(); ++i) {
    ranks.push_back(f.member(i).rank(x));
    rank_sum += ranks.back();
  }
  if (rank_sum != x.size()) return std::nullopt;

  MatroidFamily restricted = restrict_family(f, x);
  CoveringOutcome cov = find_covering(restricted);
  if (!cov.coverable()) return std::nullopt;
  return TightCertificate{
      x, map_sets(restricted.ground(), *cov.covering, f.ground()),
      std::move(ranks)};
}

TightCertificate largest_tight_set(const MatroidFamily& f,
                                   const SetList& covering) {
  std::string v = covering_violation(f, covering);
  detail::require(v.empty(), "largest_tight_set: invalid covering: " + v);

  ElementSet members_of_some_tight_set = f.ground().empty_set();
  for (Element x = 0; x < f.ground_size(); ++x) {
    // x lies in a tight set exactly when a parallel copy of x cannot be
    // absorbed into the covering.
    std::string clone_id = f.ground().id_of(x) + "*";
    while (f.ground().has(clone_id)) clone_id += "*";
    std::vector<MatroidPtr> cloned;
    cloned.reserve(f.size());
    for (int i = 0; i < f.size(); ++i) {
      cloned.push_back(make_parallel_clone(f.member_ptr(i), x, clone_id));
    }
    MatroidFamily clone_family(std::move(cloned), f.roles());
    SetList lifted = map_sets(f.ground(), covering, clone_family.ground());
    Element clone = clone_family.ground().index_of(clone_id);
    if (!augment(clone_family, lifted, clone).augmented()) {
      members_of_some_tight_set.insert(x);
    }
  }

  std::optional<TightCertificate> cert =
      tight_certificate(f, members_of_some_tight_set);
  detail::ensure(cert.has_value(),
                 "largest_tight_set: collected elements are not tight");
  return *cert;
}

bool is_cowave(const MatroidFamily& f, const ElementSet& w) {
  detail::require(w.universe() == f.ground_size(),
                  "is_cowave: set over a foreign universe");
  return find_covering(contract_family_onto(f, w)).coverable();
}

namespace {

/// Memoized search for the union of all cowaves disjoint from an avoid set.
///
/// The working set starts at everything allowed and shrinks to whatever the
/// avoid set can reach in the exchange digraph of a covering of the working
/// set. Once the reach stabilizes while no member node is reachable, the
/// discarded elements form exactly the largest cowave: the stabilized core
/// is spanned by its covering parts in every member, which pins every
/// covering of a larger candidate, while rank gluing across the discarded
/// layers assembles an explicit covering of their contraction. When either
/// a coverability failure or a reachable member node interrupts that
/// argument, a small certificate set is extracted instead, and no cowave
/// can swallow the certificate whole — so the search branches on which
/// certificate element to avoid next and unites the results.
class CowaveSearch {
 public:
  explicit CowaveSearch(const MatroidFamily& f) : f_(f) {}

  ElementSet run(const ElementSet& avoid) {
    auto it = memo_.find(avoid);
    if (it != memo_.end()) return it->second;
    ElementSet result = compute(avoid);
    memo_.emplace(avoid, result);
    return result;
  }

 private:
  ElementSet compute(const ElementSet& avoid) {
    ElementSet x = f_.ground().full_set() - avoid;
    ElementSet discarded = f_.ground().empty_set();
    for (;;) {
      MatroidFamily on_x = restrict_family(f_, x);
      CoveringOutcome cov = find_covering(on_x);
      if (!cov.coverable()) {
        ElementSet bad =
            map_set(on_x.ground(), cov.witness->x, f_.ground())
                .with(f_.ground().index_of(
                    on_x.ground().id_of(cov.witness->element)));
        return branch(avoid, bad);
      }

      MatroidFamily active = restrict_family(f_, x | avoid);
      SetList parts = map_sets(on_x.ground(), *cov.covering, active.ground());
      ElementSet sources = map_set(f_.ground(), avoid, active.ground());
      ReachProbe probe = exchange_reach(active, parts, sources);

      if (probe.sink_reachable) {
        // The whole allowed set is the only candidate left standing.
        ElementSet whole = f_.ground().full_set() - avoid;
        MatroidFamily contracted = contract_family_onto(f_, whole);
        CoveringOutcome direct = find_covering(contracted);
        if (direct.coverable()) return whole;
        ElementSet bad =
            map_set(contracted.ground(), direct.witness->x, f_.ground())
                .with(f_.ground().index_of(
                    contracted.ground().id_of(direct.witness->element)));
        return branch(avoid, bad);
      }

      ElementSet reached_x =
          map_set(active.ground(), probe.reachable, f_.ground()) & x;
      if (reached_x == x) return discarded;
      discarded = discarded | (x - reached_x);
      x = reached_x;
    }
  }

  ElementSet branch(const ElementSet& avoid, const ElementSet& bad) {
    detail::ensure(!bad.empty() && bad.disjoint_from(avoid),
                   "cowave search produced an unusable certificate");
    ElementSet u = f_.ground().empty_set();
    for (Element t : bad.elements()) u = u | run(avoid.with(t));
    return u;
  }

  const MatroidFamily& f_;
  std::unordered_map<ElementSet, ElementSet, ElementSetHash> memo_;
};

}  // namespace

ElementSet largest_cowave_avoiding(const MatroidFamily& f,
                                   const ElementSet& avoid) {
  detail::require(avoid.universe() == f.ground_size(),
                  "largest_cowave_avoiding: set over a foreign universe");
  CowaveSearch search(f);
  ElementSet w = search.run(avoid);
  detail::ensure(w.disjoint_from(avoid),
                 "cowave search failed to avoid the avoid set");
  detail::ensure(is_cowave(f, w), "cowave search returned a non-cowave");
  return w;
}

OneMoreCoverOutcome one_more_cover(const MatroidFamily& f, Element e) {
  detail::require(e >= 0 && e < f.ground_size(),
                  "one_more_cover: element outside the ground");
  CoveringOutcome direct = find_covering(f);
  if (direct.coverable()) return {std::move(direct.covering), std::nullopt};

  ElementSet rest = f.ground().full_set().without(e);
  detail::require(find_covering(restrict_family(f, rest)).coverable(),
                  "one_more_cover: the ground minus the element must be "
                  "coverable");

  ElementSet w = largest_cowave_avoiding(f, ElementSet::single(
                                                f.ground_size(), e));
  ElementSet x = rest - w;
  std::optional<TightCertificate> cert = tight_certificate(f, x);
  detail::ensure(cert.has_value(),
                 "one_more_cover: cowave complement is not tight");
  for (int i = 0; i < f.size(); ++i) {
    detail::ensure(f.member(i).rank(x.with(e)) == cert->ranks[i],
                   "one_more_cover: member " + std::to_string(i) +
                       " does not span the element from the tight set");
  }
  return {std::nullopt, std::move(cert)};
}

NeverInCoverOutcome never_in_cover(const MatroidFamily& f, Element e, int j) {
  detail::require(e >= 0 && e < f.ground_size(),
                  "never_in_cover: element outside the ground");
  detail::require(j >= 0 && j < f.size(),
                  "never_in_cover: member index out of range");
  CoveringOutcome forced = find_covering_forcing(f, e, j);
  if (forced.coverable()) return {std::move(forced.covering), std::nullopt};

  // Rerun the placement failure through the tight-set machinery: with e a
  // loop outside member j, uncoverability yields a tight obstruction that
  // transfers verbatim to the unmodified family away from e.
  std::vector<MatroidPtr> members;
  members.reserve(f.size());
  ElementSet loop = ElementSet::single(f.ground_size(), e);
  for (int i = 0; i < f.size(); ++i) {
    members.push_back(i == j ? f.member_ptr(i)
                             : make_looped(f.member_ptr(i), loop));
  }
  MatroidFamily forced_family(std::move(members), f.roles());
  OneMoreCoverOutcome omc = one_more_cover(forced_family, e);
  detail::ensure(!omc.coverable(),
                 "never_in_cover: forced family flipped to coverable");

  std::optional<TightCertificate> cert =
      tight_certificate(f, omc.obstruction->x);
  detail::ensure(cert.has_value(),
                 "never_in_cover: obstruction lost tightness in the "
                 "original family");
  detail::ensure(!cert->x.contains(e),
                 "never_in_cover: obstruction contains the element");
  detail::ensure(f.member(j).rank(cert->x.with(e)) == cert->ranks[j],
                 "never_in_cover: member does not span the element from "
                 "the obstruction");
  return {std::nullopt, std::move(cert)};
}

ExtendThroughTightOutcome extend_covering_through_tight(
    const MatroidFamily& f, const TightCertificate& cert) {
  std::optional<TightCertificate> checked = tight_certificate(f, cert.x);
  detail::require(checked.has_value(),
                  "extend_covering_through_tight: set is not tight");
  SetList inside = cert.covering;
  detail::require(static_cast<int>(inside.size()) == f.size() &&
                      pairwise_disjoint(inside) &&
                      union_of(inside, f.ground_size()) == cert.x,
                  "extend_covering_through_tight: parts do not cover the "
                  "tight set");
  for (int i = 0; i < f.size(); ++i) {
    detail::require(f.member(i).is_independent(inside[i]),
                    "extend_covering_through_tight: dependent part");
  }

  ElementSet outside = f.ground().full_set() - cert.x;
  MatroidFamily through = contract_family_onto(f, outside);
  CoveringOutcome cov = find_covering(through);
  if (!cov.coverable()) {
    DualWitness lifted{
        map_set(through.ground(), cov.witness->x, f.ground()),
        f.ground().index_of(through.ground().id_of(cov.witness->element))};
    return {std::nullopt, lifted};
  }

  SetList glued = inside;
  SetList outer = map_sets(through.ground(), *cov.covering, f.ground());
  for (int i = 0; i < f.size(); ++i) glued[i] = glued[i] | outer[i];
  detail::ensure(covering_violation(f, glued).empty(),
                 "extend_covering_through_tight: glued parts are not a "
                 "covering");
  return {std::move(glued), std::nullopt};
}

}  // namespace matroid
