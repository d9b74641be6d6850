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

#include "matroid/feasible.hpp"

namespace matroid {

enum class AbsenceKind { kNoCovering, kNoPacking };

/// Why no base partitioning exists: a witness against coverings (over the
/// family ground) or against packings (over the hat-quotient ground of the
/// loosest commitment).
struct PartitionAbsence {
  AbsenceKind kind = AbsenceKind::kNoCovering;
  DualWitness witness;
  GroundSetPtr ground;
};

struct PartitionOutcome {
  std::optional<SetList> partition;  // disjoint bases exhausting the ground
  std::optional<PartitionAbsence> absence;

  bool partitioned() const { return partition.has_value(); }
};

struct SynthesisOptions {
  /// Solve the three-member transform instead and translate the result
  /// back; certificates are still produced against the original family.
  bool use_reduction = false;
};

/// Builds a base partitioning element by element: claim the element, make
/// the finitary claims span it, make the cofinitary allowed-set complements
/// span it dually, then prune allowed sets. Requires both a covering and a
/// packing to exist and certifies whichever is missing otherwise.
PartitionOutcome synthesize_partition(const MatroidFamily& f,
                                      const SynthesisOptions& options = {});

/// On a finite ground, once a covering and a packing both exist, rank
/// counting makes any packing by bases a partitioning already. Independent
/// of the incremental synthesis; used to cross-check it.
std::optional<SetList> finite_shortcut_partition(const MatroidFamily& f);

struct CoincidenceReport {
  int coverings = 0;
  int packings = 0;
  int partitionings = 0;
};

/// Test oracle for the coincidence behind `finite_shortcut_partition`:
/// requires both a covering and a packing to exist, then enumerates every
/// assignment and checks that coverings, packings and partitionings are
/// the same collection. Counts are returned for the caller to report.
CoincidenceReport finite_coincidence_check(const MatroidFamily& f);

/// Equivalent three-member instance on one slot per (element, member)
/// pair, laid out member-major. Member 0 sums copies of the finitary
/// members on their slots (loops elsewhere), member 1 does the same for
/// the cofinitary members, and member 2 allows all but one slot per
/// element, so the slot left out names the member that element joins.
struct ReducedInstance {
  MatroidFamily original;
  MatroidFamily reduced;

  Element slot(Element e, int member) const {
    return member * original.ground_size() + e;
  }
  Element element_of(Element s) const { return s % original.ground_size(); }
  int member_of(Element s) const { return s / original.ground_size(); }

  /// Coverings and partitionings translate by the same rule: the claimed
  /// slot of each element goes to member 0 or 1 by role, the rest to 2.
  SetList covering_to_reduced(const SetList& parts) const;
  SetList covering_from_reduced(const SetList& parts) const;
  SetList packing_to_reduced(const SetList& parts) const;
  SetList packing_from_reduced(const SetList& parts) const;
};

ReducedInstance reduce_to_three(const MatroidFamily& f);

}  // namespace matroid
