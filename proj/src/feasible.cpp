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

#include "matroid/feasible.hpp"

#include <memory>
#include <string>
#include <utility>

#include "matroid/errors.hpp"
#include "matroid/union_augment.hpp"

namespace matroid {

namespace {

std::string member_tag(int i) { return "member " + std::to_string(i); }

MatroidRole flipped(MatroidRole r) {
  return r == MatroidRole::kFinitary ? MatroidRole::kCofinitary
                                     : MatroidRole::kFinitary;
}

// Parent-side claimed/allowed bounds for a full-family assignment.
void ensure_within_bounds(const FeasibleFamily& ff, const SetList& parts,
                          const std::string& what) {
  for (int i = 0; i < ff.family().size(); ++i) {
    detail::ensure(ff.independents()[i].subset_of(parts[i]),
                   what + ": part drops a claimed element");
    detail::ensure(parts[i].subset_of(ff.spannings()[i]),
                   what + ": part leaves its allowed set");
  }
}

bool spans_in_member(const Matroid& m, const ElementSet& independent,
                     Element e) {
  return independent.contains(e) || !m.is_independent(independent.with(e));
}

}  // namespace

FeasibleFamily FeasibleFamily::make(MatroidFamily family, SetList independents,
                                    SetList spannings) {
  const int k = family.size();
  const int n = family.ground_size();
  detail::require_input(static_cast<int>(independents.size()) == k &&
                            static_cast<int>(spannings.size()) == k,
                        "feasible family: one claimed and one allowed set per "
                        "member required");
  for (int i = 0; i < k; ++i) {
    detail::require_input(independents[i].universe() == n &&
                              spannings[i].universe() == n,
                          "feasible family: " + member_tag(i) +
                              " carries sets over a different ground");
    detail::require_input(independents[i].subset_of(spannings[i]),
                          "feasible family: " + member_tag(i) +
                              "'s claimed set leaves its allowed set");
    detail::require_input(family.member(i).is_independent(independents[i]),
                          "feasible family: " + member_tag(i) +
                              " claims a dependent set");
    detail::require_input(family.member(i).is_spanning(spannings[i]),
                          "feasible family: " + member_tag(i) +
                              "'s allowed set does not span");
  }
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      detail::require_input(independents[i].disjoint_from(independents[j]),
                            "feasible family: members " + std::to_string(i) +
                                " and " + std::to_string(j) +
                                " claim overlapping sets");
  ElementSet allowed_union = union_of(spannings, n);
  detail::require_input(allowed_union == family.ground().full_set(),
                        "feasible family: allowed sets leave elements "
                        "unassigned");
  ElementSet covered = union_of(independents, n);
  return FeasibleFamily(std::move(family), std::move(independents),
                        std::move(spannings), std::move(covered));
}

FeasibleFamily trivial_feasible_family(const MatroidFamily& f) {
  SetList none(f.size(), f.ground().empty_set());
  SetList all(f.size(), f.ground().full_set());
  return FeasibleFamily::make(f, std::move(none), std::move(all));
}

MatroidFamily quotient_family(const FeasibleFamily& ff) {
  const MatroidFamily& f = ff.family();
  const GroundSet& g = f.ground();
  ElementSet keep = g.full_set() - ff.covered();
  GroundSetPtr child = make_ground(g.ids_of(keep));
  std::vector<MatroidPtr> members;
  members.reserve(f.size());
  for (int i = 0; i < f.size(); ++i) {
    MatroidPtr m = make_minor(f.member_ptr(i), ff.independents()[i],
                              ff.covered() - ff.independents()[i], child);
    ElementSet allowed = map_set(g, ff.spannings()[i] & keep, *child);
    ElementSet loops = child->full_set() - allowed;
    if (!loops.empty()) m = make_looped(std::move(m), loops);
    members.push_back(std::move(m));
  }
  return MatroidFamily(std::move(members), f.roles());
}

CoveringFeasibleOutcome covering_feasible(const FeasibleFamily& ff) {
  MatroidFamily q = quotient_family(ff);
  CoveringOutcome c = find_covering(q);
  CoveringFeasibleOutcome out;
  out.quotient_ground = q.ground_ptr();
  if (!c.coverable()) {
    out.witness = c.witness;
    return out;
  }
  SetList lifted = map_sets(q.ground(), *c.covering, ff.family().ground());
  SetList full(ff.family().size(),
               ElementSet(ff.family().ground_size()));
  for (int i = 0; i < ff.family().size(); ++i)
    full[i] = ff.independents()[i] | lifted[i];
  detail::ensure(covering_violation(ff.family(), full).empty(),
                 "quotient covering did not lift to a family covering");
  ensure_within_bounds(ff, full, "lifted covering");
  out.covering = std::move(full);
  out.quotient_parts = std::move(*c.covering);
  return out;
}

namespace {

// One member's slice of the hat ground: sets naming what that member gives
// up. Independent iff the set stays in its slice and the complement of its
// projection still spans the underlying member.
class HatSliceOracle final : public Matroid {
 public:
  HatSliceOracle(GroundSetPtr hat_ground, MatroidPtr inner, int member,
                 int slots)
      : Matroid(std::move(hat_ground)),
        inner_(std::move(inner)),
        member_(member),
        slots_(slots) {}

  std::string describe() const override {
    return "hat-slice(" + std::to_string(member_) + ", " +
           inner_->describe() + ")";
  }

 protected:
  bool independent(const ElementSet& s) const override {
    ElementSet given_up(inner_->ground_size());
    for (Element hat : s.elements()) {
      if (hat % slots_ != member_) return false;
      given_up.insert(hat / slots_);
    }
    return inner_->is_spanning(inner_->ground().full_set() - given_up);
  }

 private:
  MatroidPtr inner_;
  int member_;
  int slots_;
};

}  // namespace

HatSystem make_hat(const FeasibleFamily& ff) {
  const MatroidFamily& f = ff.family();
  const GroundSet& g = f.ground();
  const int k = f.size();
  const int slots = k + 1;
  std::vector<std::string> ids;
  ids.reserve(static_cast<std::size_t>(g.size()) * slots);
  for (int e = 0; e < g.size(); ++e)
    for (int s = 0; s < slots; ++s)
      ids.push_back(g.ids()[e] + "@" + std::to_string(s));
  GroundSetPtr hg = make_ground(ids);

  std::vector<MatroidPtr> members;
  std::vector<MatroidRole> roles;
  for (int i = 0; i < k; ++i) {
    members.push_back(
        std::make_shared<HatSliceOracle>(hg, f.member_ptr(i), i, slots));
    roles.push_back(flipped(f.role(i)));
  }
  std::vector<std::pair<ElementSet, int>> blocks;
  blocks.reserve(g.size());
  for (int e = 0; e < g.size(); ++e) {
    ElementSet block(hg->size());
    for (int s = 0; s < k; ++s) block.insert(e * slots + s);
    blocks.emplace_back(std::move(block), 1);
  }
  members.push_back(make_partition(hg, std::move(blocks)));
  roles.push_back(MatroidRole::kFinitary);
  MatroidFamily hat_family(std::move(members), std::move(roles));

  SetList claimed(k + 1, hg->empty_set());
  SetList allowed(k + 1, hg->empty_set());
  for (int i = 0; i < k; ++i) {
    for (Element e : (g.full_set() - ff.spannings()[i]).elements())
      claimed[i].insert(e * slots + i);
    for (Element e : (g.full_set() - ff.independents()[i]).elements())
      allowed[i].insert(e * slots + i);
  }
  allowed[k] = hg->full_set();
  FeasibleFamily hat_feasible =
      FeasibleFamily::make(hat_family, std::move(claimed), std::move(allowed));
  return HatSystem{std::move(hat_family), std::move(hat_feasible), slots};
}

FeasibleFamily dual_feasible_family(const FeasibleFamily& ff) {
  const MatroidFamily& f = ff.family();
  std::vector<MatroidPtr> duals;
  std::vector<MatroidRole> roles;
  duals.reserve(f.size());
  for (int i = 0; i < f.size(); ++i) {
    duals.push_back(make_dual(f.member_ptr(i)));
    roles.push_back(flipped(f.role(i)));
  }
  ElementSet full = f.ground().full_set();
  SetList claimed, allowed;
  for (int i = 0; i < f.size(); ++i) {
    claimed.push_back(full - ff.spannings()[i]);
    allowed.push_back(full - ff.independents()[i]);
  }
  return FeasibleFamily::make(MatroidFamily(std::move(duals), std::move(roles)),
                              std::move(claimed), std::move(allowed));
}

PackingFeasibleOutcome packing_feasible_via_hat(const FeasibleFamily& ff) {
  HatSystem hat = make_hat(ff);
  CoveringFeasibleOutcome c = covering_feasible(hat.feasible);
  PackingFeasibleOutcome out;
  out.witness_ground = c.quotient_ground;
  if (!c.feasible()) {
    out.witness = c.witness;
    return out;
  }
  const MatroidFamily& f = ff.family();
  const int k = f.size();
  SetList packing(k, ElementSet(f.ground_size()));
  for (int i = 0; i < k; ++i) {
    ElementSet given_up(f.ground_size());
    for (Element hat_e : (*c.covering)[i].elements()) {
      detail::ensure(hat.slot_of(hat_e) == i,
                     "hat covering strayed outside its slice");
      given_up.insert(hat.project(hat_e));
    }
    packing[i] = f.ground().full_set() - given_up;
  }
  detail::ensure(packing_violation(f, packing).empty(),
                 "hat covering did not decode to a packing");
  ensure_within_bounds(ff, packing, "decoded packing");
  out.packing = std::move(packing);
  return out;
}

PackingFeasibleOutcome packing_feasible(const FeasibleFamily& ff) {
  if (ff.family().size() != 2) return packing_feasible_via_hat(ff);
  FeasibleFamily dual = dual_feasible_family(ff);
  CoveringFeasibleOutcome c = covering_feasible(dual);
  if (c.feasible()) {
    const MatroidFamily& f = ff.family();
    ElementSet full = f.ground().full_set();
    SetList packing;
    for (int i = 0; i < 2; ++i) packing.push_back(full - (*c.covering)[i]);
    detail::ensure(packing_violation(f, packing).empty(),
                   "dual covering did not decode to a packing");
    ensure_within_bounds(ff, packing, "decoded packing");
    PackingFeasibleOutcome out;
    out.packing = std::move(packing);
    return out;
  }
  // Infeasible: certify through the hat encoding, which must agree.
  PackingFeasibleOutcome out = packing_feasible_via_hat(ff);
  detail::ensure(!out.feasible(),
                 "two-member packing shortcut disagrees with the hat "
                 "encoding");
  return out;
}

FeasibleFamily normalize(const FeasibleFamily& ff) {
  SetList allowed = ff.spannings();
  for (int i = 0; i < ff.family().size(); ++i)
    allowed[i] = allowed[i] - (ff.covered() - ff.independents()[i]);
  return ff.with_sets(ff.independents(), std::move(allowed));
}

FeasibleFamily eliminate_tight_set(const FeasibleFamily& ff,
                                   const TightCertificate& quotient_cert) {
  MatroidFamily q = quotient_family(ff);
  const int k = q.size();
  detail::require(quotient_cert.x.universe() == q.ground_size(),
                  "eliminate_tight_set: certificate from another quotient");
  detail::require(static_cast<int>(quotient_cert.covering.size()) == k,
                  "eliminate_tight_set: certificate part count mismatch");
  detail::require(is_tight(q, quotient_cert.x),
                  "eliminate_tight_set: set is not tight in the quotient");
  ElementSet seen(q.ground_size());
  for (int i = 0; i < k; ++i) {
    const ElementSet& part = quotient_cert.covering[i];
    detail::require(part.universe() == q.ground_size() &&
                        part.subset_of(quotient_cert.x) &&
                        part.disjoint_from(seen),
                    "eliminate_tight_set: certificate parts malformed");
    detail::require(q.member(i).is_independent(part),
                    "eliminate_tight_set: certificate part dependent");
    seen = seen | part;
  }
  detail::require(seen == quotient_cert.x,
                  "eliminate_tight_set: certificate parts miss the set");

  SetList lifted =
      map_sets(q.ground(), quotient_cert.covering, ff.family().ground());
  SetList claimed = ff.independents();
  for (int i = 0; i < k; ++i) claimed[i] = claimed[i] | lifted[i];
  return ff.with_sets(std::move(claimed), ff.spannings());
}

FeasibleFamily eliminate_largest_tight(const FeasibleFamily& ff) {
  MatroidFamily q = quotient_family(ff);
  CoveringOutcome c = find_covering(q);
  detail::require(c.coverable(),
                  "eliminate_largest_tight requires a coverable quotient");
  TightCertificate largest = largest_tight_set(q, *c.covering);
  if (largest.x.empty()) return ff;
  FeasibleFamily next = eliminate_tight_set(ff, largest);

  MatroidFamily q2 = quotient_family(next);
  CoveringOutcome c2 = find_covering(q2);
  detail::ensure(c2.coverable(),
                 "eliminating a tight set broke quotient coverability");
  detail::ensure(largest_tight_set(q2, *c2.covering).x.empty(),
                 "a nonempty tight set survived elimination");
  return next;
}

FeasibleFamily cover_element(const FeasibleFamily& ff, Element e) {
  const MatroidFamily& f = ff.family();
  detail::require(e >= 0 && e < f.ground_size(),
                  "cover_element: element out of range");
  if (ff.covered().contains(e)) return ff;

  FeasibleFamily cur = eliminate_largest_tight(ff);
  PackingFeasibleOutcome p = packing_feasible(cur);
  detail::require(p.feasible(),
                  "cover_element requires a packing-feasible commitment");

  SetList bases(f.size(), ElementSet(f.ground_size()));
  for (int i = 0; i < f.size(); ++i)
    bases[i] = f.member(i).extend_to_base_within(cur.independents()[i],
                                                 (*p.packing)[i]);

  int host = -1;
  for (int i = 0; i < f.size() && host < 0; ++i)
    if (bases[i].contains(e)) host = i;

  if (host < 0) {
    // Least member whose quotient keeps e usable, then a base exchange to
    // show the claim still extends to a base inside its allowed set.
    int j = -1;
    for (int i = 0; i < f.size() && j < 0; ++i)
      if (cur.spannings()[i].contains(e) &&
          f.member(i).is_independent(cur.independents()[i].with(e)))
        j = i;
    detail::ensure(j >= 0,
                   "cover_element: element is a loop in every quotient "
                   "member after elimination");
    ElementSet circuit = f.member(j).fundamental_circuit(e, bases[j]);
    Element swap_out = -1;
    for (Element c : circuit.elements())
      if (c != e && !cur.independents()[j].contains(c)) {
        swap_out = c;
        break;
      }
    detail::ensure(swap_out >= 0,
                   "cover_element: no exchange partner outside the claimed "
                   "set");
    host = j;
  }

  SetList claimed = cur.independents();
  claimed[host].insert(e);
  FeasibleFamily next = cur.with_sets(std::move(claimed), cur.spannings());
  detail::ensure(covering_feasible(next).feasible(),
                 "cover_element lost covering-feasibility");
  detail::ensure(packing_feasible(next).feasible(),
                 "cover_element lost packing-feasibility");
  return next;
}

FeasibleFamily span_element(const FeasibleFamily& ff, Element e, int j) {
  const MatroidFamily& f = ff.family();
  detail::require(j >= 0 && j < f.size(), "span_element: member out of range");
  detail::require(e >= 0 && e < f.ground_size(),
                  "span_element: element out of range");
  if (spans_in_member(f.member(j), ff.independents()[j], e)) return ff;
  PackingFeasibleOutcome p = packing_feasible(ff);
  detail::require(p.feasible(),
                  "span_element requires a packing-feasible commitment");
  return span_element(ff, e, j, *p.packing);
}

FeasibleFamily span_element(const FeasibleFamily& ff, Element e, int j,
                            const SetList& compatible_packing) {
  const MatroidFamily& f0 = ff.family();
  detail::require(j >= 0 && j < f0.size(),
                  "span_element: member out of range");
  detail::require(e >= 0 && e < f0.ground_size(),
                  "span_element: element out of range");
  const Matroid& mj = f0.member(j);

  FeasibleFamily cur = ff;
  if (spans_in_member(mj, cur.independents()[j], e)) return cur;

  detail::require(packing_violation(f0, compatible_packing).empty(),
                  "span_element: supplied packing invalid");
  for (int i = 0; i < f0.size(); ++i)
    detail::require(ff.independents()[i].subset_of(compatible_packing[i]) &&
                        compatible_packing[i].subset_of(ff.spannings()[i]),
                    "span_element: supplied packing incompatible");

  // Candidates: a circuit of e through a base inside member j's packing
  // part. Claiming all of them would make the claim span e; the descent
  // claims them one by one, or learns a tight set that spans some of them
  // for free.
  ElementSet base_j =
      mj.extend_to_base_within(cur.independents()[j], compatible_packing[j]);
  ElementSet candidates(f0.ground_size());
  if (base_j.contains(e)) {
    candidates.insert(e);
  } else {
    candidates =
        mj.fundamental_circuit(e, base_j).without(e) - cur.independents()[j];
  }

  MatroidFamily q = quotient_family(cur);
  CoveringOutcome qc = find_covering(q);
  detail::require(qc.coverable(),
                  "span_element requires a covering-feasible commitment");
  SetList parts = *qc.covering;

  while (!candidates.empty()) {
    if (spans_in_member(mj, cur.independents()[j], e)) break;
    Element cand = candidates.first();
    Element qcand = q.ground().index_of(f0.ground().ids()[cand]);

    int owner = -1;
    for (int i = 0; i < q.size() && owner < 0; ++i)
      if (parts[i].contains(qcand)) owner = i;
    detail::ensure(owner >= 0, "quotient covering lost an element");

    bool placed = owner == j;
    if (!placed) {
      // One augment decides whether the covering can reroute cand into
      // part j: every other member treats cand as a loop.
      MatroidFamily forced = q;
      ElementSet only_cand = ElementSet::single(q.ground_size(), qcand);
      for (int l = 0; l < q.size(); ++l)
        if (l != j)
          forced = forced.with_member(
              l, make_looped(forced.member_ptr(l), only_cand));
      SetList stripped = parts;
      stripped[owner].erase(qcand);
      AugmentOutcome a = augment(forced, stripped, qcand);
      if (a.augmented()) {
        parts = std::move(*a.parts);
        detail::ensure(parts[j].contains(qcand),
                       "forced augment placed the element elsewhere");
        placed = true;
      }
    }

    if (placed) {
      SetList claimed = cur.independents();
      claimed[j].insert(cand);
      cur = cur.with_sets(std::move(claimed), cur.spannings());
      candidates.erase(cand);
      MatroidFamily q2 = quotient_family(cur);
      parts[j].erase(qcand);
      parts = map_sets(q.ground(), parts, q2.ground());
      q = std::move(q2);
      continue;
    }

    // cand cannot reach part j: a tight set spans it there. Claim the
    // tight set; everything of the candidate circuit it spans comes along
    // for free, so the candidate set provably shrinks.
    NeverInCoverOutcome block = never_in_cover(q, qcand, j);
    detail::ensure(!block.placeable(),
                   "augment probe disagrees with from-scratch placement");
    const TightCertificate& tx = *block.obstruction;
    ElementSet x_parent = map_set(q.ground(), tx.x, f0.ground());

    cur = eliminate_tight_set(cur, tx);
    ExtendThroughTightOutcome ext = extend_covering_through_tight(q, tx);
    detail::ensure(ext.extended(),
                   "tight set of a coverable quotient failed to extend");
    MatroidFamily q2 = quotient_family(cur);
    SetList glued = *ext.covering;
    for (int i = 0; i < q.size(); ++i) glued[i] = glued[i] - tx.x;
    parts = map_sets(q.ground(), glued, q2.ground());
    q = std::move(q2);

    ElementSet remaining = candidates - x_parent;
    ElementSet next_candidates(f0.ground_size());
    ElementSet probe = cur.independents()[j];
    for (Element c : remaining.elements()) {
      if (!probe.contains(c) && mj.is_independent(probe.with(c))) {
        probe.insert(c);
        next_candidates.insert(c);
      }
    }
    detail::ensure(next_candidates.size() < candidates.size(),
                   "tight-set elimination failed to shrink the candidate "
                   "set");
    candidates = next_candidates;
  }

  detail::ensure(spans_in_member(mj, cur.independents()[j], e),
                 "span_element finished without spanning its element");
  return cur;
}

FeasibleFamily cospan_element(const FeasibleFamily& ff, Element e, int j) {
  const MatroidFamily& f0 = ff.family();
  detail::require(j >= 0 && j < f0.size(),
                  "cospan_element: member out of range");
  detail::require(e >= 0 && e < f0.ground_size(),
                  "cospan_element: element out of range");
  const ElementSet full = f0.ground().full_set();
  MatroidPtr dual_j = make_dual(f0.member_ptr(j));

  auto cospanned = [&](const FeasibleFamily& c) {
    // The complement of the allowed set is independent in the dual, so
    // spanning reduces to one dependence probe.
    return spans_in_member(*dual_j, full - c.spannings()[j], e);
  };
  if (cospanned(ff)) return ff;

  CoveringFeasibleOutcome cov = covering_feasible(ff);
  detail::require(cov.feasible(),
                  "cospan_element requires a covering-feasible commitment");

  FeasibleFamily out = ff;
  if (f0.size() == 2) {
    FeasibleFamily dual = dual_feasible_family(ff);
    // A compatible covering complements into a compatible dual packing.
    SetList hint;
    for (int i = 0; i < 2; ++i) hint.push_back(full - (*cov.covering)[i]);
    FeasibleFamily after = span_element(dual, e, j, hint);
    SetList allowed;
    for (int i = 0; i < 2; ++i)
      allowed.push_back(full - after.independents()[i]);
    for (int i = 0; i < 2; ++i)
      detail::ensure(after.spannings()[i] == full - ff.independents()[i],
                     "dual descent touched an allowed set");
    out = ff.with_sets(ff.independents(), std::move(allowed));
  } else {
    HatSystem hat = make_hat(ff);
    const int k = f0.size();
    const GroundSet& hg = hat.family.ground();
    // A compatible covering encodes as a compatible hat packing: each slice
    // gives up the complement of its part, the transversal takes the rest.
    SetList hint(k + 1, hg.empty_set());
    ElementSet taken(hg.size());
    for (int i = 0; i < k; ++i) {
      for (Element el : (full - (*cov.covering)[i]).elements())
        hint[i].insert(hat.index(el, i));
      taken = taken | hint[i];
    }
    hint[k] = hg.full_set() - taken;
    FeasibleFamily after = span_element(hat.feasible, hat.index(e, j), j, hint);
    SetList allowed = ff.spannings();
    for (int i = 0; i < k; ++i) {
      ElementSet given_up(f0.ground_size());
      for (Element h : after.independents()[i].elements()) {
        detail::ensure(hat.slot_of(h) == i,
                       "hat descent strayed outside its slice");
        given_up.insert(hat.project(h));
      }
      allowed[i] = full - given_up;
    }
    out = ff.with_sets(ff.independents(), std::move(allowed));
  }

  detail::ensure(cospanned(out),
                 "cospan_element finished without cospanning its element");
  return out;
}

}  // namespace matroid
