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

#include "matroid/union_augment.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "matroid/errors.hpp"

namespace matroid {

bool dual_witness_valid(const MatroidFamily& f, const DualWitness& w) {
  if (w.x.universe() != f.ground_size()) return false;
  if (w.element < 0 || w.element >= f.ground_size()) return false;
  if (w.x.contains(w.element)) return false;
  int rank_sum = 0;
  for (int i = 0; i < f.size(); ++i) {
    int r = f.member(i).rank(w.x);
    rank_sum += r;
    if (f.member(i).rank(w.x.with(w.element)) != r) return false;
  }
  return rank_sum == w.x.size();
}

std::string describe_dual_witness(const MatroidFamily& f,
                                  const DualWitness& w) {
  std::string out = "every member spans \"" +
                    f.ground().id_of(w.element) + "\" from {";
  bool first = true;
  for (const std::string& id : f.ground().ids_of(w.x)) {
    if (!first) out += ", ";
    out += id;
    first = false;
  }
  out += "}, whose member ranks sum to only " + std::to_string(w.x.size());
  return out;
}

namespace {

constexpr int kUnreached = std::numeric_limits<int>::max();

struct ExchangeDigraph {
  // out_elements[x]: ascending part elements y with x -> y;
  // sink_members[x]: ascending members whose part accepts x outright.
  std::vector<std::vector<Element>> out_elements;
  std::vector<std::vector<int>> sink_members;
  std::vector<std::vector<Element>> in_elements;
};

/// Arcs for every vertex that can take part in a walk from `e`: the new
/// element itself and everything currently covered by a part.
ExchangeDigraph build_digraph(const MatroidFamily& f, const SetList& parts,
                              const ElementSet& sources) {
  const int n = f.ground_size();
  ExchangeDigraph d;
  d.out_elements.resize(n);
  d.sink_members.resize(n);
  d.in_elements.resize(n);

  ElementSet active = union_of(parts, n) | sources;
  for (Element x : active.elements()) {
    for (int i = 0; i < f.size(); ++i) {
      if (parts[i].contains(x)) continue;
      if (f.member(i).is_independent(parts[i].with(x))) {
        d.sink_members[x].push_back(i);
      } else {
        ElementSet circuit = f.member(i).fundamental_circuit(x, parts[i]);
        for (Element y : circuit.without(x).elements()) {
          d.out_elements[x].push_back(y);
        }
      }
    }
    std::sort(d.out_elements[x].begin(), d.out_elements[x].end());
    d.out_elements[x].erase(
        std::unique(d.out_elements[x].begin(), d.out_elements[x].end()),
        d.out_elements[x].end());
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y : d.out_elements[x]) d.in_elements[y].push_back(x);
  }
  return d;
}

/// Shortest arc count from each vertex to any member node, by a backward
/// BFS that seeds every vertex owning a direct sink arc.
std::vector<int> distances_to_sink(const ExchangeDigraph& d) {
  std::vector<int> dist(d.out_elements.size(), kUnreached);
  std::deque<Element> queue;
  for (Element x = 0; x < static_cast<Element>(dist.size()); ++x) {
    if (!d.sink_members[x].empty()) {
      dist[x] = 1;
      queue.push_back(x);
    }
  }
  while (!queue.empty()) {
    Element y = queue.front();
    queue.pop_front();
    for (Element x : d.in_elements[y]) {
      if (dist[x] == kUnreached) {
        dist[x] = dist[y] + 1;
        queue.push_back(x);
      }
    }
  }
  return dist;
}

ElementSet forward_reachable(const ExchangeDigraph& d,
                             const ElementSet& sources) {
  ElementSet seen = sources;
  std::vector<Element> pending = sources.elements();
  std::deque<Element> queue(pending.begin(), pending.end());
  while (!queue.empty()) {
    Element x = queue.front();
    queue.pop_front();
    for (Element y : d.out_elements[x]) {
      if (!seen.contains(y)) {
        seen.insert(y);
        queue.push_back(y);
      }
    }
  }
  return seen;
}

void validate_parts_state(const MatroidFamily& f, const SetList& parts,
                          Element e) {
  detail::require(static_cast<int>(parts.size()) == f.size(),
                  "augment: need one part per member");
  for (const ElementSet& p : parts) {
    detail::require(p.universe() == f.ground_size(),
                    "augment: part over a foreign universe");
  }
  detail::require(pairwise_disjoint(parts), "augment: parts overlap");
  for (int i = 0; i < f.size(); ++i) {
    detail::require(f.member(i).is_independent(parts[i]),
                    "augment: part " + std::to_string(i) + " is dependent");
  }
  detail::require(e >= 0 && e < f.ground_size(),
                  "augment: element outside the ground");
  detail::require(!union_of(parts, f.ground_size()).contains(e),
                  "augment: element already covered");
}

}  // namespace

AugmentOutcome augment(const MatroidFamily& f, const SetList& parts,
                       Element e) {
  validate_parts_state(f, parts, e);
  const int n = f.ground_size();
  ElementSet source = ElementSet::single(n, e);
  ExchangeDigraph d = build_digraph(f, parts, source);
  std::vector<int> dist = distances_to_sink(d);

  if (dist[e] == kUnreached) {
    DualWitness w{forward_reachable(d, source).without(e), e};
    detail::ensure(dual_witness_valid(f, w),
                   "augment produced an invalid uncoverability witness");
    return {std::nullopt, w};
  }

  // Walk the lexicographically least among the shortest paths: at every
  // step take the smallest next vertex that still decreases the distance.
  std::vector<Element> path{e};
  while (dist[path.back()] > 1) {
    Element cur = path.back();
    Element next = -1;
    for (Element y : d.out_elements[cur]) {
      if (dist[y] == dist[cur] - 1) {
        next = y;
        break;
      }
    }
    detail::ensure(next >= 0, "augment: broken shortest-path structure");
    path.push_back(next);
  }
  detail::ensure(!d.sink_members[path.back()].empty(),
                 "augment: path end has no accepting member");
  int target = d.sink_members[path.back()].front();

  // Simultaneous exchange along the path: every covered vertex is replaced
  // in its part by its predecessor, and the path's last vertex joins the
  // accepting member. Shortest paths make these exchanges compatible.
  SetList next_parts = parts;
  for (std::size_t m = 1; m < path.size(); ++m) {
    int owner = -1;
    for (int i = 0; i < f.size(); ++i) {
      if (parts[i].contains(path[m])) {
        owner = i;
        break;
      }
    }
    detail::ensure(owner >= 0, "augment: path vertex not covered by a part");
    next_parts[owner].erase(path[m]);
    next_parts[owner].insert(path[m - 1]);
  }
  next_parts[target].insert(path.back());

  ElementSet expected = union_of(parts, n).with(e);
  detail::ensure(union_of(next_parts, n) == expected,
                 "augment: exchange changed the covered set");
  detail::ensure(pairwise_disjoint(next_parts),
                 "augment: exchange produced overlapping parts");
  for (int i = 0; i < f.size(); ++i) {
    detail::ensure(f.member(i).is_independent(next_parts[i]),
                   "augment: exchange broke independence of part " +
                       std::to_string(i));
  }
  return {next_parts, std::nullopt};
}

CoveringOutcome find_covering(const MatroidFamily& f) {
  SetList parts(f.size(), f.ground().empty_set());
  for (Element e = 0; e < f.ground_size(); ++e) {
    AugmentOutcome step = augment(f, parts, e);
    if (!step.augmented()) return {std::nullopt, step.witness};
    parts = std::move(*step.parts);
  }
  detail::ensure(covering_violation(f, parts).empty(),
                 "find_covering assembled an invalid covering");
  return {parts, std::nullopt};
}

ReachProbe exchange_reach(const MatroidFamily& f, const SetList& parts,
                          const ElementSet& sources) {
  detail::require(static_cast<int>(parts.size()) == f.size(),
                  "reach: need one part per member");
  detail::require(pairwise_disjoint(parts), "reach: parts overlap");
  for (int i = 0; i < f.size(); ++i) {
    detail::require(f.member(i).is_independent(parts[i]),
                    "reach: part " + std::to_string(i) + " is dependent");
  }
  ExchangeDigraph d = build_digraph(f, parts, sources);
  ReachProbe probe{forward_reachable(d, sources), false};
  for (Element x : probe.reachable.elements()) {
    if (!d.sink_members[x].empty()) {
      probe.sink_reachable = true;
      break;
    }
  }
  return probe;
}

CoveringOutcome find_covering_forcing(const MatroidFamily& f, Element e,
                                      int j) {
  detail::require(e >= 0 && e < f.ground_size(),
                  "forcing: element outside the ground");
  detail::require(j >= 0 && j < f.size(), "forcing: member index out of range");
  std::vector<MatroidPtr> members;
  members.reserve(f.size());
  ElementSet loop = ElementSet::single(f.ground_size(), e);
  for (int i = 0; i < f.size(); ++i) {
    members.push_back(i == j ? f.member_ptr(i)
                             : make_looped(f.member_ptr(i), loop));
  }
  MatroidFamily forced(std::move(members), f.roles());
  CoveringOutcome out = find_covering(forced);
  if (out.coverable()) {
    detail::ensure(out.covering->at(j).contains(e),
                   "forcing: covering failed to place the element");
    detail::ensure(covering_violation(f, *out.covering).empty(),
                   "forcing: covering invalid for the original family");
  }
  return out;
}

}  // namespace matroid
