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

#include "matroid/family.hpp"

#include <utility>

#include "matroid/errors.hpp"

namespace matroid {

MatroidFamily::MatroidFamily(std::vector<MatroidPtr> members,
                             std::vector<MatroidRole> roles)
    : members_(std::move(members)), roles_(std::move(roles)) {
  detail::require_input(!members_.empty(), "a family needs at least one member");
  for (const MatroidPtr& m : members_) {
    detail::require_input(m != nullptr, "null family member");
  }
  ground_ = members_[0]->ground_ptr();
  for (const MatroidPtr& m : members_) {
    detail::require_input(m->ground().same_as(*ground_),
                          "family members disagree on the ground set");
  }
  if (roles_.empty()) {
    roles_.assign(members_.size(), MatroidRole::kFinitary);
  }
  detail::require_input(roles_.size() == members_.size(),
                        "need one role per family member");
}

MatroidFamily MatroidFamily::with_member(int i, MatroidPtr replacement) const {
  detail::require(i >= 0 && i < size(), "member index out of range");
  std::vector<MatroidPtr> members = members_;
  members[i] = std::move(replacement);
  return MatroidFamily(std::move(members), roles_);
}

bool pairwise_disjoint(const SetList& parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      if (!parts[i].disjoint_from(parts[j])) return false;
    }
  }
  return true;
}

ElementSet union_of(const SetList& parts, int universe) {
  ElementSet u(universe);
  for (const ElementSet& p : parts) u = u | p;
  return u;
}

namespace {

std::string shared_violation(const MatroidFamily& f, const SetList& parts) {
  if (static_cast<int>(parts.size()) != f.size()) {
    return "expected " + std::to_string(f.size()) + " parts, got " +
           std::to_string(parts.size());
  }
  for (const ElementSet& p : parts) {
    if (p.universe() != f.ground_size()) {
      return "part over a foreign universe";
    }
  }
  if (!pairwise_disjoint(parts)) return "parts are not pairwise disjoint";
  return "";
}

}  // namespace

std::string covering_violation(const MatroidFamily& f, const SetList& parts) {
  std::string v = shared_violation(f, parts);
  if (!v.empty()) return v;
  for (int i = 0; i < f.size(); ++i) {
    if (!f.member(i).is_independent(parts[i])) {
      return "part " + std::to_string(i) + " is dependent in its member";
    }
  }
  if (union_of(parts, f.ground_size()) != f.ground().full_set()) {
    return "parts do not exhaust the ground set";
  }
  return "";
}

std::string packing_violation(const MatroidFamily& f, const SetList& parts) {
  std::string v = shared_violation(f, parts);
  if (!v.empty()) return v;
  for (int i = 0; i < f.size(); ++i) {
    if (!f.member(i).is_spanning(parts[i])) {
      return "part " + std::to_string(i) + " does not span its member";
    }
  }
  return "";
}

std::string partitioning_violation(const MatroidFamily& f,
                                   const SetList& parts) {
  std::string v = shared_violation(f, parts);
  if (!v.empty()) return v;
  for (int i = 0; i < f.size(); ++i) {
    if (!f.member(i).is_base(parts[i])) {
      return "part " + std::to_string(i) + " is not a base of its member";
    }
  }
  if (union_of(parts, f.ground_size()) != f.ground().full_set()) {
    return "parts do not exhaust the ground set";
  }
  return "";
}

std::string assignment_violation(const MatroidFamily& f, const Assignment& a) {
  switch (a.mode) {
    case AssignmentMode::kCovering:
      return covering_violation(f, a.parts);
    case AssignmentMode::kPacking:
      return packing_violation(f, a.parts);
    case AssignmentMode::kPartitioning:
      return partitioning_violation(f, a.parts);
  }
  return "unknown assignment mode";
}

namespace {

MatroidFamily minor_family(const MatroidFamily& f, const ElementSet& contract,
                           const ElementSet& del) {
  ElementSet keep = f.ground().full_set() - contract - del;
  std::vector<std::string> ids;
  ids.reserve(keep.size());
  for (Element e : keep.elements()) ids.push_back(f.ground().id_of(e));
  GroundSetPtr child = make_ground(std::move(ids));
  std::vector<MatroidPtr> members;
  members.reserve(f.size());
  for (int i = 0; i < f.size(); ++i) {
    members.push_back(make_minor(f.member_ptr(i), contract, del, child));
  }
  return MatroidFamily(std::move(members), f.roles());
}

}  // namespace

MatroidFamily restrict_family(const MatroidFamily& f, const ElementSet& keep) {
  return minor_family(f, f.ground().empty_set(),
                      f.ground().full_set() - keep);
}

MatroidFamily contract_family_onto(const MatroidFamily& f,
                                   const ElementSet& keep) {
  return minor_family(f, f.ground().full_set() - keep, f.ground().empty_set());
}

ElementSet map_set(const GroundSet& source, const ElementSet& s,
                   const GroundSet& target, bool partial) {
  ElementSet out(target.size());
  for (Element e : s.elements()) {
    const std::string& id = source.id_of(e);
    if (target.has(id)) {
      out.insert(target.index_of(id));
    } else {
      detail::require(partial, "element \"" + id +
                                   "\" has no image in the target ground");
    }
  }
  return out;
}

SetList map_sets(const GroundSet& source, const SetList& sets,
                 const GroundSet& target, bool partial) {
  SetList out;
  out.reserve(sets.size());
  for (const ElementSet& s : sets) {
    out.push_back(map_set(source, s, target, partial));
  }
  return out;
}

}  // namespace matroid
