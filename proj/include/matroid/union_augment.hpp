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
#include <string>
#include <vector>

#include "matroid/family.hpp"

namespace matroid {

/// Certificate that no covering exists: a set whose member ranks sum to
/// exactly its size, together with an element outside it that every member
/// spans from it. Any covering would have to fit |x|+1 elements into parts
/// whose traces on x + element have total rank |x|.
struct DualWitness {
  ElementSet x;
  Element element = -1;
};

/// True iff the witness inequalities actually hold for this family.
bool dual_witness_valid(const MatroidFamily& f, const DualWitness& w);
std::string describe_dual_witness(const MatroidFamily& f,
                                  const DualWitness& w);

/// Outcome of trying to absorb one element into a partial covering: either
/// enlarged parts whose union gained exactly that element, or a witness
/// explaining why no covering of the enlarged union exists.
struct AugmentOutcome {
  std::optional<SetList> parts;
  std::optional<DualWitness> witness;

  bool augmented() const { return parts.has_value(); }
};

/// The exchange digraph for disjoint independent parts: element x has an
/// arc into member node i when part i accepts x outright, and otherwise
/// arcs into the members of the circuit x closes in part i. Augmenting
/// paths are shortest, lexicographically least.
AugmentOutcome augment(const MatroidFamily& f, const SetList& parts,
                       Element e);

struct CoveringOutcome {
  std::optional<SetList> covering;
  std::optional<DualWitness> witness;

  bool coverable() const { return covering.has_value(); }
};

/// Builds a covering element by element in canonical order, or stops at the
/// first element whose absorption fails and returns that witness.
CoveringOutcome find_covering(const MatroidFamily& f);

/// Like find_covering, but only coverings placing `e` in part `j` count:
/// every other member treats `e` as a loop. A witness here certifies that
/// no covering of `f` puts `e` in part `j`.
CoveringOutcome find_covering_forcing(const MatroidFamily& f, Element e,
                                      int j);

/// Forward reachability over the exchange digraph of `parts`, started from
/// every source at once.
struct ReachProbe {
  ElementSet reachable;  // includes the sources
  bool sink_reachable = false;
};

ReachProbe exchange_reach(const MatroidFamily& f, const SetList& parts,
                          const ElementSet& sources);

}  // namespace matroid
