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

#include "matroid/partitioner.hpp"

#include <string>
#include <utility>
#include <vector>

#include "matroid/brute_force.hpp"
#include "matroid/errors.hpp"
#include "matroid/union_augment.hpp"

namespace matroid {

namespace {

bool spans_in_member(const Matroid& m, const ElementSet& independent,
                     Element e) {
  return independent.contains(e) || !m.is_independent(independent.with(e));
}

// e spanned dually from the complement of the allowed set.
bool cospans_element(const MatroidFamily& f, const FeasibleFamily& state,
                     int j, Element e) {
  ElementSet t = f.ground().full_set() - state.spannings()[j];
  return spans_in_member(*make_dual(f.member_ptr(j)), t, e);
}

}  // namespace

PartitionOutcome synthesize_partition(const MatroidFamily& f,
                                      const SynthesisOptions& options) {
  PartitionOutcome out;

  if (options.use_reduction) {
    ReducedInstance red = reduce_to_three(f);
    PartitionOutcome sub = synthesize_partition(red.reduced, {});
    if (sub.partitioned()) {
      SetList parts = red.covering_from_reduced(*sub.partition);
      detail::ensure(partitioning_violation(f, parts).empty(),
                     "reduced partitioning did not translate back");
      out.partition = std::move(parts);
      return out;
    }
    // Unsolvable: certify against the original family directly.
    CoveringOutcome cov = find_covering(f);
    if (!cov.coverable()) {
      out.absence = PartitionAbsence{AbsenceKind::kNoCovering, *cov.witness,
                                     f.ground_ptr()};
      return out;
    }
    PackingFeasibleOutcome pk = packing_feasible(trivial_feasible_family(f));
    detail::ensure(!pk.feasible(),
                   "three-member transform unsolvable although both "
                   "existence gates pass");
    out.absence = PartitionAbsence{AbsenceKind::kNoPacking, *pk.witness,
                                   pk.witness_ground};
    return out;
  }

  CoveringOutcome cov = find_covering(f);
  if (!cov.coverable()) {
    out.absence = PartitionAbsence{AbsenceKind::kNoCovering, *cov.witness,
                                   f.ground_ptr()};
    return out;
  }
  PackingFeasibleOutcome pk = packing_feasible(trivial_feasible_family(f));
  if (!pk.feasible()) {
    out.absence = PartitionAbsence{AbsenceKind::kNoPacking, *pk.witness,
                                   pk.witness_ground};
    return out;
  }

  FeasibleFamily state = trivial_feasible_family(f);
  // Compatible packing for the current state, recomputed only when the
  // state actually moves.
  std::optional<SetList> packing = std::move(pk.packing);
  auto changed = [](const FeasibleFamily& a, const FeasibleFamily& b) {
    return a.independents() != b.independents() ||
           a.spannings() != b.spannings();
  };
  auto step = [&](FeasibleFamily next) {
    if (changed(state, next)) packing.reset();
    state = std::move(next);
  };

  for (Element e = 0; e < f.ground_size(); ++e) {
    const SetList claims_before = state.independents();
    const SetList allowed_before = state.spannings();
    step(cover_element(state, e));
    detail::ensure(state.covered().contains(e),
                   "synthesis left an element unclaimed");
    for (int j = 0; j < f.size(); ++j) {
      if (f.role(j) != MatroidRole::kFinitary) continue;
      if (spans_in_member(f.member(j), state.independents()[j], e)) continue;
      if (!packing) {
        PackingFeasibleOutcome p = packing_feasible(state);
        detail::ensure(p.feasible(), "synthesis state lost its packing");
        packing = std::move(p.packing);
      }
      step(span_element(state, e, j, *packing));
    }
    for (int j = 0; j < f.size(); ++j) {
      if (f.role(j) != MatroidRole::kCofinitary) continue;
      step(cospan_element(state, e, j));
    }
    {
      FeasibleFamily next = normalize(state);
      // Pruning allowed sets never invalidates a compatible packing:
      // parts already avoid each other's claims.
      state = std::move(next);
    }
    for (int j = 0; j < f.size(); ++j) {
      if (f.role(j) == MatroidRole::kFinitary)
        detail::ensure(
            spans_in_member(f.member(j), state.independents()[j], e),
            "claimed sets stopped spanning a finished element");
      else
        detail::ensure(cospans_element(f, state, j, e),
                       "allowed-set complements stopped spanning a finished "
                       "element dually");
    }
    for (int i = 0; i < f.size(); ++i)
      for (int j = 0; j < f.size(); ++j)
        if (i != j)
          detail::ensure(
              state.spannings()[i].disjoint_from(state.independents()[j]),
              "allowed sets still meet other members' claims after pruning");
    // No decision is ever revoked: claims only grow, allowed sets only
    // shrink.
    for (int i = 0; i < f.size(); ++i) {
      detail::ensure(claims_before[i].subset_of(state.independents()[i]),
                     "a claimed element was dropped");
      detail::ensure(state.spannings()[i].subset_of(allowed_before[i]),
                     "an excluded element was re-admitted");
    }
  }

  SetList parts = state.independents();
  for (int i = 0; i < f.size(); ++i)
    detail::ensure(state.spannings()[i] == parts[i],
                   "allowed sets did not close onto the claims");
  detail::ensure(partitioning_violation(f, parts).empty(),
                 "synthesis did not end in a base partitioning");
  out.partition = std::move(parts);
  return out;
}

std::optional<SetList> finite_shortcut_partition(const MatroidFamily& f) {
  CoveringOutcome cov = find_covering(f);
  if (!cov.coverable()) return std::nullopt;
  PackingFeasibleOutcome pk = packing_feasible(trivial_feasible_family(f));
  if (!pk.feasible()) return std::nullopt;
  SetList parts(f.size(), f.ground().empty_set());
  for (int i = 0; i < f.size(); ++i)
    parts[i] = f.member(i).extend_to_base_within(f.ground().empty_set(),
                                                 (*pk.packing)[i]);
  detail::ensure(partitioning_violation(f, parts).empty(),
                 "trimming a packing to bases missed a partitioning although "
                 "a covering exists");
  return parts;
}

SetList ReducedInstance::covering_to_reduced(const SetList& parts) const {
  detail::require(covering_violation(original, parts).empty(),
                  "covering_to_reduced: not a covering of the original");
  const int k = original.size();
  SetList out(3, reduced.ground().empty_set());
  for (Element e = 0; e < original.ground_size(); ++e) {
    int owner = -1;
    for (int i = 0; i < k && owner < 0; ++i)
      if (parts[i].contains(e)) owner = i;
    detail::ensure(owner >= 0, "covering misses an element");
    for (int i = 0; i < k; ++i) {
      if (i == owner)
        out[original.role(i) == MatroidRole::kFinitary ? 0 : 1].insert(
            slot(e, i));
      else
        out[2].insert(slot(e, i));
    }
  }
  detail::ensure(covering_violation(reduced, out).empty(),
                 "translated covering invalid");
  return out;
}

SetList ReducedInstance::covering_from_reduced(const SetList& parts) const {
  detail::require(covering_violation(reduced, parts).empty(),
                  "covering_from_reduced: not a covering of the transform");
  const int k = original.size();
  ElementSet claimed_slots = parts[0] | parts[1];
  SetList out(k, original.ground().empty_set());
  for (Element e = 0; e < original.ground_size(); ++e) {
    int owner = -1;
    for (int i = 0; i < k && owner < 0; ++i)
      if (claimed_slots.contains(slot(e, i))) owner = i;
    detail::ensure(owner >= 0,
                   "no member claims the element in the transform");
    out[owner].insert(e);
  }
  detail::ensure(covering_violation(original, out).empty(),
                 "translated covering invalid");
  return out;
}

SetList ReducedInstance::packing_to_reduced(const SetList& parts) const {
  detail::require(packing_violation(original, parts).empty(),
                  "packing_to_reduced: not a packing of the original");
  const int k = original.size();
  SetList out(3, reduced.ground().empty_set());
  for (Element e = 0; e < original.ground_size(); ++e) {
    int owner = -1;
    for (int i = 0; i < k && owner < 0; ++i)
      if (parts[i].contains(e)) owner = i;
    for (int i = 0; i < k; ++i) {
      if (parts[i].contains(e))
        out[original.role(i) == MatroidRole::kFinitary ? 0 : 1].insert(
            slot(e, i));
      if (i != (owner < 0 ? 0 : owner)) out[2].insert(slot(e, i));
    }
  }
  detail::ensure(packing_violation(reduced, out).empty(),
                 "translated packing invalid");
  return out;
}

SetList ReducedInstance::packing_from_reduced(const SetList& parts) const {
  detail::require(packing_violation(reduced, parts).empty(),
                  "packing_from_reduced: not a packing of the transform");
  const int k = original.size();
  SetList out(k, original.ground().empty_set());
  for (int i = 0; i < k; ++i) {
    const ElementSet& bucket =
        parts[original.role(i) == MatroidRole::kFinitary ? 0 : 1];
    for (Element e = 0; e < original.ground_size(); ++e)
      if (bucket.contains(slot(e, i))) out[i].insert(e);
  }
  detail::ensure(packing_violation(original, out).empty(),
                 "translated packing invalid");
  return out;
}

ReducedInstance reduce_to_three(const MatroidFamily& f) {
  const GroundSet& g = f.ground();
  const int k = f.size();
  const int n = g.size();

  std::vector<std::string> ids;
  ids.reserve(static_cast<std::size_t>(n) * k);
  for (int i = 0; i < k; ++i)
    for (int e = 0; e < n; ++e)
      ids.push_back(g.ids()[e] + "#" + std::to_string(i));
  GroundSetPtr rg = make_ground(ids);

  // Members 0 and 1: per-slice copies by role, loops on the other slices.
  std::vector<Element> identity(n);
  for (int e = 0; e < n; ++e) identity[e] = e;
  auto sliced_sum = [&](MatroidRole wanted) {
    std::vector<MatroidPtr> slices;
    for (int i = 0; i < k; ++i) {
      std::vector<std::string> slice_ids(ids.begin() + i * n,
                                         ids.begin() + (i + 1) * n);
      GroundSetPtr sg = make_ground(slice_ids);
      if (f.role(i) == wanted)
        slices.push_back(make_isomorph(f.member_ptr(i), sg, identity));
      else
        slices.push_back(make_zero(sg));
    }
    return make_direct_sum(std::move(slices));
  };

  // Member 2: all but one slot per element.
  std::vector<std::pair<ElementSet, int>> blocks;
  blocks.reserve(n);
  for (int e = 0; e < n; ++e) {
    ElementSet block(rg->size());
    for (int i = 0; i < k; ++i) block.insert(i * n + e);
    blocks.emplace_back(std::move(block), k - 1);
  }

  std::vector<MatroidPtr> members;
  members.push_back(sliced_sum(MatroidRole::kFinitary));
  members.push_back(sliced_sum(MatroidRole::kCofinitary));
  members.push_back(make_partition(rg, std::move(blocks)));
  std::vector<MatroidRole> roles = {MatroidRole::kFinitary,
                                    MatroidRole::kCofinitary,
                                    MatroidRole::kCofinitary};
  return ReducedInstance{f, MatroidFamily(std::move(members),
                                          std::move(roles))};
}

CoincidenceReport finite_coincidence_check(const MatroidFamily& f) {
  EnumerationBudget budget;
  std::vector<SetList> coverings =
      brute_enumerate_assignments(f, AssignmentMode::kCovering, budget);
  std::vector<SetList> packings =
      brute_enumerate_assignments(f, AssignmentMode::kPacking, budget);
  detail::require(
      !coverings.empty() && !packings.empty(),
      "coincidence check needs a family with both a covering and a packing");
  std::vector<SetList> partitionings =
      brute_enumerate_assignments(f, AssignmentMode::kPartitioning, budget);
  for (const SetList& parts : coverings) {
    detail::ensure(partitioning_violation(f, parts).empty(),
                   "covering that is not a partitioning despite a packing: " +
                       partitioning_violation(f, parts));
  }
  for (const SetList& parts : packings) {
    detail::ensure(partitioning_violation(f, parts).empty(),
                   "packing that is not a partitioning despite a covering: " +
                       partitioning_violation(f, parts));
  }
  detail::ensure(coverings.size() == partitionings.size() &&
                     packings.size() == partitionings.size(),
                 "assignment counts diverge although each kind embeds in "
                 "the others");
  return CoincidenceReport{static_cast<int>(coverings.size()),
                           static_cast<int>(packings.size()),
                           static_cast<int>(partitionings.size())};
}

}  // namespace matroid
