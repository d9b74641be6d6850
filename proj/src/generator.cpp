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

#include "matroid/generator.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "matroid/errors.hpp"

namespace matroid {

int InstanceGenerator::next_int(int lo, int hi) {
  detail::require(lo <= hi, "next_int: empty range");
  return std::uniform_int_distribution<int>(lo, hi)(rng_);
}

ElementSet InstanceGenerator::random_subset(const ElementSet& within) {
  ElementSet out(within.universe());
  for (Element e : within.elements())
    if (next_int(0, 1)) out.insert(e);
  return out;
}

SetList InstanceGenerator::random_disjoint_independent_parts(
    const MatroidFamily& f) {
  SetList parts(f.size(), f.ground().empty_set());
  std::vector<Element> order(f.ground_size());
  for (int e = 0; e < f.ground_size(); ++e) order[e] = e;
  std::shuffle(order.begin(), order.end(), rng_);
  for (Element e : order) {
    if (next_int(0, 2) == 0) continue;  // leave some elements unplaced
    int i = next_int(0, f.size() - 1);
    if (f.member(i).is_independent(parts[i].with(e))) parts[i].insert(e);
  }
  return parts;
}

MatroidPtr InstanceGenerator::base_matroid(GroundSetPtr ground) {
  const int n = ground->size();
  switch (next_int(0, 5)) {
    case 0:
      return make_uniform(ground, next_int(0, n));
    case 1:
      return make_free(ground);
    case 2: {
      // Random multigraph, self-loops allowed.
      int v = next_int(1, std::max(1, std::min(n + 1, 6)));
      std::vector<std::string> vertices;
      for (int i = 0; i < v; ++i) vertices.push_back("v" + std::to_string(i));
      std::vector<std::pair<std::string, std::string>> endpoints;
      for (int e = 0; e < n; ++e)
        endpoints.emplace_back(vertices[next_int(0, v - 1)],
                               vertices[next_int(0, v - 1)]);
      return make_graphic(ground, vertices, endpoints);
    }
    case 3: {
      // Random disjoint blocks with random capacities; the rest of the
      // ground stays unconstrained.
      std::vector<Element> order(n);
      for (int e = 0; e < n; ++e) order[e] = e;
      std::shuffle(order.begin(), order.end(), rng_);
      std::vector<std::pair<ElementSet, int>> blocks;
      std::size_t at = 0;
      int count = next_int(0, 3);
      for (int b = 0; b < count && at < order.size(); ++b) {
        int take = next_int(1, static_cast<int>(order.size() - at));
        ElementSet block(n);
        for (int t = 0; t < take; ++t) block.insert(order[at++]);
        blocks.emplace_back(std::move(block), next_int(0, take));
      }
      return make_partition(ground, std::move(blocks));
    }
    case 4: {
      std::uint64_t span = (n >= 6) ? 63 : ((std::uint64_t{1} << n) - 1);
      std::vector<std::uint64_t> columns;
      for (int e = 0; e < n; ++e) {
        std::uint64_t c =
            std::uniform_int_distribution<std::uint64_t>(0, span)(rng_);
        if (!columns.empty() && next_int(0, 4) == 0)
          c = columns[next_int(0, static_cast<int>(columns.size()) - 1)];
        columns.push_back(c);
      }
      return make_linear_gf2(ground, std::move(columns));
    }
    default:
      return make_zero(ground);
  }
}

MatroidPtr InstanceGenerator::next_matroid(GroundSetPtr ground) {
  const int n = ground->size();
  if (!options_.allow_wrappers || next_int(0, 2) != 0)
    return base_matroid(ground);
  switch (next_int(0, 3)) {
    case 0:
      return make_dual(base_matroid(ground));
    case 1: {
      ElementSet loops = random_subset(ground->full_set());
      return make_looped(base_matroid(ground), loops);
    }
    case 2: {
      // Minor of a matroid on an extended ground; the extras are split
      // between contraction and deletion.
      int extras = next_int(1, 2);
      std::vector<std::string> ids = ground->ids();
      for (int x = 0; x < extras; ++x)
        ids.push_back("_x" + std::to_string(x));
      GroundSetPtr wide = make_ground(ids);
      MatroidPtr inner = base_matroid(wide);
      ElementSet contract(wide->size()), del(wide->size());
      for (int x = 0; x < extras; ++x) {
        if (next_int(0, 1))
          contract.insert(n + x);
        else
          del.insert(n + x);
      }
      return make_minor(std::move(inner), contract, del, ground);
    }
    default: {
      // Direct sum of base matroids on consecutive chunks.
      std::vector<MatroidPtr> chunks;
      int at = 0;
      while (at < n) {
        int take = next_int(1, n - at);
        std::vector<std::string> chunk_ids(ground->ids().begin() + at,
                                           ground->ids().begin() + at + take);
        chunks.push_back(base_matroid(make_ground(chunk_ids)));
        at += take;
      }
      if (chunks.size() == 1) return chunks[0];
      return make_direct_sum(std::move(chunks));
    }
  }
}

MatroidFamily InstanceGenerator::next_family() {
  int n = next_int(options_.min_elements, options_.max_elements);
  int k = next_int(options_.min_members, options_.max_members);
  std::vector<std::string> ids;
  for (int e = 0; e < n; ++e)
    ids.push_back(e < 26 ? std::string(1, static_cast<char>('a' + e))
                         : "e" + std::to_string(e));
  GroundSetPtr ground = make_ground(ids);
  std::vector<MatroidPtr> members;
  std::vector<MatroidRole> roles;
  for (int i = 0; i < k; ++i) {
    members.push_back(next_matroid(ground));
    roles.push_back(next_int(0, 1) ? MatroidRole::kFinitary
                                   : MatroidRole::kCofinitary);
  }
  return MatroidFamily(std::move(members), std::move(roles));
}

}  // namespace matroid
