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

#ifndef MATROIDKIT_ORACLE_HPP_
#define MATROIDKIT_ORACLE_HPP_

#include <atomic>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "matroid/sets.hpp"

namespace matroid {

/// Immutable matroid given by an independence oracle.  Every derived query
/// (rank, span, circuits, base extension) reduces to the independence
/// predicate and resolves ties in the canonical element order, so equal
/// inputs always produce equal outputs.  Instances are safe to share and to
/// query from several threads.
class Matroid {
 public:
  virtual ~Matroid() = default;

  const GroundSet& ground() const { return *ground_; }
  const GroundSetPtr& ground_ptr() const { return ground_; }
  int ground_size() const { return ground_->size(); }

  /// True iff `s` is independent.  Rejects sets over a foreign universe.
  bool is_independent(const ElementSet& s) const;

  /// Size of a maximal independent subset of `x`, grown greedily in
  /// canonical order.
  int rank(const ElementSet& x) const;

  /// rank of the full ground set (cached after first use).
  int full_rank() const;

  bool is_loop(Element e) const;
  bool is_spanning(const ElementSet& x) const;
  bool is_base(const ElementSet& x) const;

  /// All elements e with e in x or rank(x + e) == rank(x).
  ElementSet span(const ElementSet& x) const;

  /// The unique circuit inside I + e, for independent I with e outside I
  /// and I + e dependent; PreconditionError otherwise.
  ElementSet fundamental_circuit(Element e, const ElementSet& independent_set)
      const;

  /// Maximal independent subset of `x` containing `independent_subset`,
  /// grown greedily in canonical order.
  ElementSet extend_to_base_within(const ElementSet& independent_subset,
                                   const ElementSet& x) const;

  /// Short structural label for diagnostics, e.g. "dual(graphic)".
  virtual std::string describe() const = 0;

 protected:
  explicit Matroid(GroundSetPtr ground) : ground_(std::move(ground)) {}

  /// Kind-specific independence test; `s` is already validated.
  virtual bool independent(const ElementSet& s) const = 0;

 private:
  void check_subset(const ElementSet& s) const;

  GroundSetPtr ground_;
  mutable std::atomic<int> cached_full_rank_{-1};
};

using MatroidPtr = std::shared_ptr<const Matroid>;

/// Independent sets are those of size at most `rank`.
MatroidPtr make_uniform(GroundSetPtr ground, int rank);

/// Every subset independent.
MatroidPtr make_free(GroundSetPtr ground);

/// Only the empty set independent.
MatroidPtr make_zero(GroundSetPtr ground);

/// Forests of a multigraph.  `endpoints[e]` names the two (possibly equal)
/// endpoints of the edge carried by ground element e.
MatroidPtr make_graphic(
    GroundSetPtr ground, const std::vector<std::string>& vertices,
    const std::vector<std::pair<std::string, std::string>>& endpoints);

/// Sets meeting block b in at most `capacity[b]` elements.  Blocks must be
/// pairwise disjoint; elements outside every block are unconstrained.
MatroidPtr make_partition(GroundSetPtr ground,
                          std::vector<std::pair<ElementSet, int>> blocks);

/// Columns over GF(2); `columns[e]` holds the bits of element e's vector.
MatroidPtr make_linear_gf2(GroundSetPtr ground,
                           std::vector<std::uint64_t> columns);

/// Dual matroid: s independent iff the complement of s spans `inner`.
MatroidPtr make_dual(MatroidPtr inner);

/// Minor on ground E - contract - del.  The contraction is evaluated
/// through one base of `contract`, fixed greedily at construction, so
/// equal arguments give one identical oracle.  When `target_ground` is
/// supplied it must list exactly the surviving ids in inherited order.
MatroidPtr make_minor(MatroidPtr inner, const ElementSet& contract,
                      const ElementSet& del,
                      GroundSetPtr target_ground = nullptr);

/// Restriction to `keep` (= delete the rest).
MatroidPtr make_restriction(MatroidPtr inner, const ElementSet& keep,
                            GroundSetPtr target_ground = nullptr);

/// Contraction onto `keep` (= contract the rest).
MatroidPtr make_contraction_onto(MatroidPtr inner, const ElementSet& keep,
                                 GroundSetPtr target_ground = nullptr);

/// Direct sum; part grounds must be pairwise disjoint and concatenate, in
/// part order, to the combined ground.
MatroidPtr make_direct_sum(std::vector<MatroidPtr> parts);

/// Same matroid with the listed elements additionally declared loops.
MatroidPtr make_looped(MatroidPtr inner, const ElementSet& loops);

/// Adds a fresh element `clone_id` parallel to x: {x, clone} becomes a
/// circuit, except that a cloned loop yields another loop.  The clone is
/// appended after the inherited canonical order.
MatroidPtr make_parallel_clone(MatroidPtr inner, Element x,
                               const std::string& clone_id);

/// Isomorphic copy living on `target_ground`; `to_inner[e]` gives the inner
/// element carried by target element e.  Plumbing for constructions that
/// place copies of a matroid onto product grounds.
MatroidPtr make_isomorph(MatroidPtr inner, GroundSetPtr target_ground,
                         std::vector<Element> to_inner);

}  // namespace matroid

#endif  // MATROIDKIT_ORACLE_HPP_
