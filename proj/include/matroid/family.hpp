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

#include <string>
#include <vector>

#include "matroid/oracle.hpp"
#include "matroid/sets.hpp"

namespace matroid {

/// Finitary members contribute bases through independent sets that grow to
/// spanning; cofinitary members through spanning sets that shrink to
/// independent. On a finite ground the distinction only steers which
/// extension operations the partitioner applies.
enum class MatroidRole { kFinitary, kCofinitary };

/// A nonempty list of matroids over one shared ground set, each tagged with
/// a role. Index order is part of the family's identity: every algorithm
/// breaks ties by the lowest member index.
class MatroidFamily {
 public:
  explicit MatroidFamily(std::vector<MatroidPtr> members,
                         std::vector<MatroidRole> roles = {});

  int size() const { return static_cast<int>(members_.size()); }
  const GroundSet& ground() const { return *ground_; }
  const GroundSetPtr& ground_ptr() const { return ground_; }
  int ground_size() const { return ground_->size(); }
  const Matroid& member(int i) const { return *members_[i]; }
  const MatroidPtr& member_ptr(int i) const { return members_[i]; }
  const std::vector<MatroidPtr>& members() const { return members_; }
  MatroidRole role(int i) const { return roles_[i]; }
  const std::vector<MatroidRole>& roles() const { return roles_; }

  /// Same family with member `i` swapped out (roles preserved).
  MatroidFamily with_member(int i, MatroidPtr replacement) const;

 private:
  GroundSetPtr ground_;
  std::vector<MatroidPtr> members_;
  std::vector<MatroidRole> roles_;
};

/// One subset per member, in member order.
using SetList = std::vector<ElementSet>;

bool pairwise_disjoint(const SetList& parts);
ElementSet union_of(const SetList& parts, int universe);

enum class AssignmentMode { kCovering, kPacking, kPartitioning };

/// A covering partitions the ground set into independent parts; a packing
/// is a list of disjoint spanning parts; a partitioning is both at once
/// (disjoint bases exhausting the ground set).
struct Assignment {
  AssignmentMode mode;
  SetList parts;
};

/// Empty string iff valid; otherwise a one-line description of the first
/// violated requirement.
std::string covering_violation(const MatroidFamily& f, const SetList& parts);
std::string packing_violation(const MatroidFamily& f, const SetList& parts);
std::string partitioning_violation(const MatroidFamily& f,
                                   const SetList& parts);
std::string assignment_violation(const MatroidFamily& f, const Assignment& a);

inline bool is_covering(const MatroidFamily& f, const SetList& parts) {
  return covering_violation(f, parts).empty();
}
inline bool is_packing(const MatroidFamily& f, const SetList& parts) {
  return packing_violation(f, parts).empty();
}
inline bool is_partitioning(const MatroidFamily& f, const SetList& parts) {
  return partitioning_violation(f, parts).empty();
}

/// Every member restricted to `keep`, over one shared child ground that
/// preserves the inherited element order.
MatroidFamily restrict_family(const MatroidFamily& f, const ElementSet& keep);

/// Every member contracted onto `keep` (the complement is contracted away),
/// over one shared child ground.
MatroidFamily contract_family_onto(const MatroidFamily& f,
                                   const ElementSet& keep);

/// Maps a set through matching ids from one ground into another. Ids of
/// `s` absent from `target` are dropped when `partial` is true and rejected
/// otherwise.
ElementSet map_set(const GroundSet& source, const ElementSet& s,
                   const GroundSet& target, bool partial = false);

SetList map_sets(const GroundSet& source, const SetList& sets,
                 const GroundSet& target, bool partial = false);

}  // namespace matroid
