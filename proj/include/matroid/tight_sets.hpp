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

#include "matroid/union_augment.hpp"

namespace matroid {

/// A set is tight when its restriction is coverable and the member ranks of
/// the set add up to exactly its size — so every covering is forced to use
/// a base of the restriction in every part.
struct TightCertificate {
  ElementSet x;
  /// Disjoint parts, independent per member, with union x. The rank bound
  /// makes each part automatically span x inside its member.
  SetList covering;
  std::vector<int> ranks;  // member ranks of x; sums to |x|
};

/// Certificate or nullopt (not tight). Parts live in the family universe.
std::optional<TightCertificate> tight_certificate(const MatroidFamily& f,
                                                  const ElementSet& x);

inline bool is_tight(const MatroidFamily& f, const ElementSet& x) {
  return tight_certificate(f, x).has_value();
}

/// Union of all tight sets. Decides membership per element by probing
/// whether a parallel copy of the element still fits into the covering.
/// Requires a coverable family; pass its covering.
TightCertificate largest_tight_set(const MatroidFamily& f,
                                   const SetList& covering);

/// A set W is a cowave when contracting everything outside W onto W leaves
/// a coverable family.
bool is_cowave(const MatroidFamily& f, const ElementSet& w);

/// Union of all cowaves disjoint from `avoid`. Works by shrinking a working
/// set to the part reachable from `avoid` in exchange digraphs, splitting
/// on small exclusion certificates whenever coverability gets in the way.
ElementSet largest_cowave_avoiding(const MatroidFamily& f,
                                   const ElementSet& avoid);

/// For a family whose ground minus `e` is coverable: either a covering of
/// the whole family, or a tight set avoiding `e` that every member spans
/// `e` from — the reason no covering can absorb `e`.
struct OneMoreCoverOutcome {
  std::optional<SetList> covering;
  std::optional<TightCertificate> obstruction;  // e in every member's span

  bool coverable() const { return covering.has_value(); }
};

OneMoreCoverOutcome one_more_cover(const MatroidFamily& f, Element e);

/// Decides whether some covering places `e` in part `j`. If none does,
/// produces a tight set X avoiding `e` with `e` in member j's span of X:
/// part j's trace on X is then always a base of X, leaving no room for `e`.
struct NeverInCoverOutcome {
  std::optional<SetList> covering_with_placement;  // e in part j
  std::optional<TightCertificate> obstruction;     // e in span_j(X)

  bool placeable() const { return covering_with_placement.has_value(); }
};

NeverInCoverOutcome never_in_cover(const MatroidFamily& f, Element e, int j);

/// Extends a tight set's covering to the whole ground: covers the rest in
/// the contraction through the tight set and glues. Fails with the
/// contraction's witness when the remainder is not coverable there (which
/// makes the whole family uncoverable).
struct ExtendThroughTightOutcome {
  std::optional<SetList> covering;        // of the full family
  std::optional<DualWitness> witness;     // in the contraction through x

  bool extended() const { return covering.has_value(); }
};

ExtendThroughTightOutcome extend_covering_through_tight(
    const MatroidFamily& f, const TightCertificate& cert);

}  // namespace matroid
