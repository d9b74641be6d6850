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

#include "matroid/tight_sets.hpp"

namespace matroid {

/// A partial commitment towards a base partitioning: per member, a set
/// already claimed (independent, pairwise disjoint across members) and a
/// set still allowed (spanning, jointly exhausting the ground set), with
/// claimed inside allowed. Coverings and packings are "compatible" with the
/// commitment when every part contains its claimed set and stays inside its
/// allowed set.
class FeasibleFamily {
 public:
  static FeasibleFamily make(MatroidFamily family, SetList independents,
                             SetList spannings);

  const MatroidFamily& family() const { return family_; }
  const SetList& independents() const { return independents_; }
  const SetList& spannings() const { return spannings_; }
  /// Union of the claimed sets.
  const ElementSet& covered() const { return covered_; }

  FeasibleFamily with_sets(SetList independents, SetList spannings) const {
    return make(family_, std::move(independents), std::move(spannings));
  }

 private:
  FeasibleFamily(MatroidFamily family, SetList independents,
                 SetList spannings, ElementSet covered)
      : family_(std::move(family)),
        independents_(std::move(independents)),
        spannings_(std::move(spannings)),
        covered_(std::move(covered)) {}

  MatroidFamily family_;
  SetList independents_;
  SetList spannings_;
  ElementSet covered_;
};

/// The loosest commitment: nothing claimed, everything allowed.
FeasibleFamily trivial_feasible_family(const MatroidFamily& f);

/// The family the remaining choices live in: each member contracted through
/// its claimed set, restricted away from all other claimed sets, and with
/// everything outside its allowed set declared a loop. Compatible coverings
/// of the commitment correspond exactly to coverings of this quotient.
MatroidFamily quotient_family(const FeasibleFamily& ff);

struct CoveringFeasibleOutcome {
  std::optional<SetList> covering;        // full family, claimed ⊆ part ⊆ allowed
  std::optional<SetList> quotient_parts;  // covering minus claimed, on the quotient
  std::optional<DualWitness> witness;     // over the quotient ground
  GroundSetPtr quotient_ground;

  bool feasible() const { return covering.has_value(); }
};

CoveringFeasibleOutcome covering_feasible(const FeasibleFamily& ff);

/// One slot per member plus one spare, for every element. Slice member i
/// accepts sets T inside slice i whose projection leaves a spanning
/// complement in member i (so T names what part i gives up); the last
/// member is a transversal matroid letting at most one slot per element
/// escape its slice (so parts stay disjoint after decoding).
struct HatSystem {
  MatroidFamily family;
  FeasibleFamily feasible;
  int slots = 0;  // member count + 1

  Element index(Element e, int slot) const { return e * slots + slot; }
  Element project(Element hat) const { return hat / slots; }
  int slot_of(Element hat) const { return hat % slots; }
};

HatSystem make_hat(const FeasibleFamily& ff);

/// Complements both set lists and dualizes both matroids; for two members
/// this swaps the roles of coverings and packings exactly.
FeasibleFamily dual_feasible_family(const FeasibleFamily& ff);

struct PackingFeasibleOutcome {
  std::optional<SetList> packing;      // claimed ⊆ part ⊆ allowed, spanning
  std::optional<DualWitness> witness;  // over `witness_ground`
  GroundSetPtr witness_ground;         // hat-quotient ground

  bool feasible() const { return packing.has_value(); }
};

/// Routed through the two-member shortcut when possible; the absence
/// certificate always comes from the hat encoding.
PackingFeasibleOutcome packing_feasible(const FeasibleFamily& ff);
PackingFeasibleOutcome packing_feasible_via_hat(const FeasibleFamily& ff);

/// Shrinks every allowed set by the other members' claimed sets. Valid
/// whenever a compatible packing exists.
FeasibleFamily normalize(const FeasibleFamily& ff);

/// Claims a tight set of the quotient: every member absorbs its part of
/// the tight set's covering. Preserves compatibility in both directions.
FeasibleFamily eliminate_tight_set(const FeasibleFamily& ff,
                                   const TightCertificate& quotient_cert);

/// Eliminates the largest tight set of the quotient, after which the
/// quotient has no nonempty tight set at all.
FeasibleFamily eliminate_largest_tight(const FeasibleFamily& ff);

/// Ensures `e` is claimed by some member, eliminating first so that a
/// member with room for `e` provably exists.
FeasibleFamily cover_element(const FeasibleFamily& ff, Element e);

/// Grows member j's claimed set until it spans `e` in member j. Other
/// members' claims may grow along the way; allowed sets never change.
/// Callers already holding a compatible packing can pass it to skip the
/// packing-feasibility computation.
FeasibleFamily span_element(const FeasibleFamily& ff, Element e, int j);
FeasibleFamily span_element(const FeasibleFamily& ff, Element e, int j,
                            const SetList& compatible_packing);

/// Dual of span_element: shrinks allowed sets until the complement of
/// member j's allowed set spans `e` in the dual of member j. Claims never
/// change. Uses the two-member shortcut or the hat encoding.
FeasibleFamily cospan_element(const FeasibleFamily& ff, Element e, int j);

}  // namespace matroid
