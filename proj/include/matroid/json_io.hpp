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

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "matroid/family.hpp"
#include "matroid/union_augment.hpp"

namespace matroid {

/// Field order is preserved everywhere so serialized output is byte-stable.
using Json = nlohmann::ordered_json;

struct ParseOptions {
  /// Grounds above this size are rejected unless `allow_large` is set;
  /// beyond 64 elements set operations leave the packed fast path.
  int max_elements = 64;
  bool allow_large = false;
};

/// A parsed instance file. The member list may be empty; `family()` is
/// only available when it is not.
struct ParsedInstance {
  GroundSetPtr ground;
  std::vector<MatroidPtr> members;
  std::vector<MatroidRole> roles;
  std::vector<Json> matroid_jsons;  // original descriptions, role removed

  bool empty_family() const { return members.empty(); }
  MatroidFamily family() const {
    return MatroidFamily(members, roles);
  }
};

ParsedInstance parse_instance(const Json& j, const ParseOptions& o = {});
ParsedInstance load_instance(const std::string& path,
                             const ParseOptions& o = {});

/// One matroid object (field "type"); `ground` is its ground set.
MatroidPtr parse_matroid(const Json& j, GroundSetPtr ground);

Json set_to_json(const GroundSet& g, const ElementSet& s);
ElementSet set_from_json(const GroundSet& g, const Json& j);

std::string mode_name(AssignmentMode m);
AssignmentMode mode_from_name(const std::string& name);

Json assignment_to_json(const GroundSet& g, AssignmentMode mode,
                        const SetList& parts);
Assignment assignment_from_json(const GroundSet& g, const Json& j,
                                int expected_parts);

/// {"kind":"uncoverable"/"unpackable","X":[...],"element":"..."} — the
/// unpackable form carries slotted ids ("<element>@<member>") from the
/// one-slot-per-member encoding that packings reduce to.
Json witness_to_json(const std::string& kind, const GroundSet& g,
                     const DualWitness& w);

/// Renames element ids inside a matroid description; ids without a mapping
/// (a minor's contracted or deleted extras) are kept as written.
Json relabel_matroid_json(
    const Json& matroid,
    const std::function<std::string(const std::string&)>& rename);

/// Canonical serialization: two-space indent, trailing newline.
std::string to_stable_string(const Json& j);

}  // namespace matroid
