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

#include "matroid/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <utility>

#include "matroid/errors.hpp"

namespace matroid {

void Matroid::check_subset(const ElementSet& s) const {
  if (s.universe() != ground_->size()) {
    throw InputError("set universe " + std::to_string(s.universe()) +
                     " does not match ground of size " +
                     std::to_string(ground_->size()) + " of " + describe());
  }
}

bool Matroid::is_independent(const ElementSet& s) const {
  check_subset(s);
  return independent(s);
}

int Matroid::rank(const ElementSet& x) const {
  check_subset(x);
  ElementSet picked = ground_->empty_set();
  for (Element e : x.elements()) {
    picked.insert(e);
    if (!independent(picked)) picked.erase(e);
  }
  return picked.size();
}

int Matroid::full_rank() const {
  int cached = cached_full_rank_.load(std::memory_order_relaxed);
  if (cached >= 0) return cached;
  int r = rank(ground_->full_set());
  cached_full_rank_.store(r, std::memory_order_relaxed);
  return r;
}

bool Matroid::is_loop(Element e) const {
  return !is_independent(ElementSet::single(ground_->size(), e));
}

bool Matroid::is_spanning(const ElementSet& x) const {
  return rank(x) == full_rank();
}

bool Matroid::is_base(const ElementSet& x) const {
  return x.size() == full_rank() && is_independent(x);
}

ElementSet Matroid::span(const ElementSet& x) const {
  check_subset(x);
  // e lies in span(x) iff e is in x or base + e is dependent, for any one
  // maximal independent subset `base` of x.
  ElementSet base = extend_to_base_within(ground_->empty_set(), x);
  ElementSet result = x;
  for (Element e = 0; e < ground_->size(); ++e) {
    if (x.contains(e)) continue;
    if (!independent(base.with(e))) result.insert(e);
  }
  return result;
}

ElementSet Matroid::fundamental_circuit(Element e,
                                        const ElementSet& independent_set)
    const {
  check_subset(independent_set);
  detail::require(!independent_set.contains(e),
                  "fundamental_circuit: element already in the set");
  detail::require(independent(independent_set),
                  "fundamental_circuit: the given set is dependent");
  ElementSet c = independent_set.with(e);
  detail::require(!independent(c),
                  "fundamental_circuit: element is not spanned by the set");
  for (Element g : independent_set.elements()) {
    ElementSet smaller = c.without(g);
    if (!independent(smaller)) c = smaller;
  }
  return c;
}

ElementSet Matroid::extend_to_base_within(const ElementSet& independent_subset,
                                          const ElementSet& x) const {
  check_subset(independent_subset);
  check_subset(x);
  detail::require(independent_subset.subset_of(x),
                  "extend_to_base_within: seed not contained in the target");
  detail::require(independent(independent_subset),
                  "extend_to_base_within: seed is dependent");
  ElementSet picked = independent_subset;
  for (Element e : (x - independent_subset).elements()) {
    picked.insert(e);
    if (!independent(picked)) picked.erase(e);
  }
  return picked;
}

namespace {

class UniformMatroid final : public Matroid {
 public:
  UniformMatroid(GroundSetPtr ground, int rank, std::string label)
      : Matroid(std::move(ground)), rank_(rank), label_(std::move(label)) {
    detail::require_input(rank_ >= 0, "uniform matroid rank must be >= 0");
    detail::require_input(rank_ <= ground_size(),
                          "uniform matroid rank exceeds the ground size");
  }

  std::string describe() const override { return label_; }

 protected:
  bool independent(const ElementSet& s) const override {
    return s.size() <= rank_;
  }

 private:
  int rank_;
  std::string label_;
};

/// Path-halving union-find over a fixed vertex count.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  /// False iff both endpoints were already connected.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

class GraphicMatroid final : public Matroid {
 public:
  GraphicMatroid(GroundSetPtr ground, int vertex_count,
                 std::vector<std::pair<int, int>> endpoints)
      : Matroid(std::move(ground)),
        vertex_count_(vertex_count),
        endpoints_(std::move(endpoints)) {}

  std::string describe() const override { return "graphic"; }

 protected:
  bool independent(const ElementSet& s) const override {
    UnionFind uf(vertex_count_);
    for (Element e : s.elements()) {
      if (!uf.unite(endpoints_[e].first, endpoints_[e].second)) return false;
    }
    return true;
  }

 private:
  int vertex_count_;
  std::vector<std::pair<int, int>> endpoints_;
};

class PartitionMatroid final : public Matroid {
 public:
  PartitionMatroid(GroundSetPtr ground,
                   std::vector<std::pair<ElementSet, int>> blocks)
      : Matroid(std::move(ground)), blocks_(std::move(blocks)) {
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      detail::require_input(
          blocks_[i].first.universe() == this->ground().size(),
          "partition matroid block over a foreign universe");
      detail::require_input(blocks_[i].second >= 0,
                            "partition matroid capacity must be >= 0");
      for (std::size_t j = i + 1; j < blocks_.size(); ++j) {
        detail::require_input(blocks_[i].first.disjoint_from(blocks_[j].first),
                              "partition matroid blocks overlap");
      }
    }
  }

  std::string describe() const override { return "partition"; }

 protected:
  bool independent(const ElementSet& s) const override {
    for (const auto& [block, capacity] : blocks_) {
      if ((s & block).size() > capacity) return false;
    }
    return true;
  }

 private:
  std::vector<std::pair<ElementSet, int>> blocks_;
};

class LinearGf2Matroid final : public Matroid {
 public:
  LinearGf2Matroid(GroundSetPtr ground, std::vector<std::uint64_t> columns)
      : Matroid(std::move(ground)), columns_(std::move(columns)) {
    detail::require_input(
        static_cast<int>(columns_.size()) == this->ground().size(),
        "linear matroid needs one column per element");
  }

  std::string describe() const override { return "linear_gf2"; }

 protected:
  bool independent(const ElementSet& s) const override {
    std::vector<std::uint64_t> pivots;
    for (Element e : s.elements()) {
      std::uint64_t v = columns_[e];
      for (std::uint64_t p : pivots) {
        if (v == 0) break;
        std::uint64_t low_p = p & (~p + 1);
        if (v & low_p) v ^= p;
      }
      if (v == 0) return false;
      pivots.push_back(v);
      std::sort(pivots.begin(), pivots.end(),
                [](std::uint64_t a, std::uint64_t b) {
                  return (a & (~a + 1)) < (b & (~b + 1));
                });
    }
    return true;
  }

 private:
  std::vector<std::uint64_t> columns_;
};

class DualMatroid final : public Matroid {
 public:
  explicit DualMatroid(MatroidPtr inner)
      : Matroid(inner->ground_ptr()), inner_(std::move(inner)) {}

  std::string describe() const override {
    return "dual(" + inner_->describe() + ")";
  }

 protected:
  bool independent(const ElementSet& s) const override {
    return inner_->is_spanning(ground().full_set() - s);
  }

 private:
  MatroidPtr inner_;
};

GroundSetPtr derived_ground(const GroundSet& parent, const ElementSet& keep,
                            GroundSetPtr provided, const char* what) {
  std::vector<std::string> ids;
  ids.reserve(keep.size());
  for (Element e : keep.elements()) ids.push_back(parent.id_of(e));
  if (provided == nullptr) return make_ground(std::move(ids));
  detail::require_input(provided->ids() == ids,
                        std::string(what) +
                            ": supplied ground does not match the surviving "
                            "elements in inherited order");
  return provided;
}

class MinorMatroid final : public Matroid {
 public:
  MinorMatroid(MatroidPtr inner, const ElementSet& contract,
               const ElementSet& del, GroundSetPtr target)
      : Matroid(derived_ground(
            inner->ground(),
            inner->ground().full_set() - contract - del, target, "minor")),
        inner_(std::move(inner)),
        contract_base_(inner_->extend_to_base_within(
            ElementSet(inner_->ground_size()), contract)) {
    to_inner_.reserve(ground().size());
    for (const std::string& id : ground().ids()) {
      to_inner_.push_back(inner_->ground().index_of(id));
    }
  }

  std::string describe() const override {
    return "minor(" + inner_->describe() + ")";
  }

 protected:
  bool independent(const ElementSet& s) const override {
    ElementSet lifted = contract_base_;
    for (Element e : s.elements()) lifted.insert(to_inner_[e]);
    return inner_->is_independent(lifted);
  }

 private:
  MatroidPtr inner_;
  ElementSet contract_base_;
  std::vector<Element> to_inner_;
};

class DirectSumMatroid final : public Matroid {
 public:
  DirectSumMatroid(GroundSetPtr ground, std::vector<MatroidPtr> parts)
      : Matroid(std::move(ground)), parts_(std::move(parts)) {
    int offset = 0;
    for (const MatroidPtr& part : parts_) {
      offsets_.push_back(offset);
      offset += part->ground_size();
    }
    offsets_.push_back(offset);
  }

  std::string describe() const override {
    std::string out = "direct_sum(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i > 0) out += ", ";
      out += parts_[i]->describe();
    }
    return out + ")";
  }

 protected:
  bool independent(const ElementSet& s) const override {
    for (std::size_t p = 0; p < parts_.size(); ++p) {
      ElementSet slice(parts_[p]->ground_size());
      bool any = false;
      for (Element e : s.elements()) {
        if (e >= offsets_[p] && e < offsets_[p + 1]) {
          slice.insert(e - offsets_[p]);
          any = true;
        }
      }
      if (any && !parts_[p]->is_independent(slice)) return false;
    }
    return true;
  }

 private:
  std::vector<MatroidPtr> parts_;
  std::vector<int> offsets_;
};

class LoopedMatroid final : public Matroid {
 public:
  LoopedMatroid(MatroidPtr inner, const ElementSet& loops)
      : Matroid(inner->ground_ptr()), inner_(std::move(inner)), loops_(loops) {
    detail::require_input(loops_.universe() == ground().size(),
                          "declared loops over a foreign universe");
  }

  std::string describe() const override {
    return "looped(" + inner_->describe() + ")";
  }

 protected:
  bool independent(const ElementSet& s) const override {
    return s.disjoint_from(loops_) && inner_->is_independent(s);
  }

 private:
  MatroidPtr inner_;
  ElementSet loops_;
};

class ParallelCloneMatroid final : public Matroid {
 public:
  ParallelCloneMatroid(GroundSetPtr ground, MatroidPtr inner, Element x)
      : Matroid(std::move(ground)), inner_(std::move(inner)), x_(x) {}

  std::string describe() const override {
    return "parallel_clone(" + inner_->describe() + ")";
  }

 protected:
  bool independent(const ElementSet& s) const override {
    const int clone = inner_->ground_size();
    ElementSet projected(inner_->ground_size());
    for (Element e : s.elements()) {
      if (e != clone) projected.insert(e);
    }
    if (!s.contains(clone)) return inner_->is_independent(projected);
    // The clone behaves exactly like a second copy of x.
    if (projected.contains(x_)) return false;
    return inner_->is_independent(projected.with(x_));
  }

 private:
  MatroidPtr inner_;
  Element x_;
};

class IsomorphMatroid final : public Matroid {
 public:
  IsomorphMatroid(GroundSetPtr ground, MatroidPtr inner,
                  std::vector<Element> to_inner)
      : Matroid(std::move(ground)),
        inner_(std::move(inner)),
        to_inner_(std::move(to_inner)) {}

  std::string describe() const override {
    return "isomorph(" + inner_->describe() + ")";
  }

 protected:
  bool independent(const ElementSet& s) const override {
    ElementSet translated(inner_->ground_size());
    for (Element e : s.elements()) translated.insert(to_inner_[e]);
    return inner_->is_independent(translated);
  }

 private:
  MatroidPtr inner_;
  std::vector<Element> to_inner_;
};

}  // namespace

MatroidPtr make_uniform(GroundSetPtr ground, int rank) {
  return std::make_shared<UniformMatroid>(
      std::move(ground), rank, "uniform(" + std::to_string(rank) + ")");
}

MatroidPtr make_free(GroundSetPtr ground) {
  int n = ground->size();
  return std::make_shared<UniformMatroid>(std::move(ground), n, "free");
}

MatroidPtr make_zero(GroundSetPtr ground) {
  return std::make_shared<UniformMatroid>(std::move(ground), 0, "zero");
}

MatroidPtr make_graphic(
    GroundSetPtr ground, const std::vector<std::string>& vertices,
    const std::vector<std::pair<std::string, std::string>>& endpoints) {
  detail::require_input(
      static_cast<int>(endpoints.size()) == ground->size(),
      "graphic matroid needs endpoints for every element");
  std::unordered_map<std::string, int> vertex_index;
  for (const std::string& v : vertices) {
    auto [it, fresh] = vertex_index.emplace(v, vertex_index.size());
    (void)it;
    detail::require_input(fresh, "duplicate vertex \"" + v + "\"");
  }
  std::vector<std::pair<int, int>> resolved;
  resolved.reserve(endpoints.size());
  for (const auto& [u, v] : endpoints) {
    auto iu = vertex_index.find(u);
    auto iv = vertex_index.find(v);
    detail::require_input(iu != vertex_index.end(),
                          "unknown vertex \"" + u + "\"");
    detail::require_input(iv != vertex_index.end(),
                          "unknown vertex \"" + v + "\"");
    resolved.emplace_back(iu->second, iv->second);
  }
  return std::make_shared<GraphicMatroid>(std::move(ground),
                                          static_cast<int>(vertices.size()),
                                          std::move(resolved));
}

MatroidPtr make_partition(GroundSetPtr ground,
                          std::vector<std::pair<ElementSet, int>> blocks) {
  return std::make_shared<PartitionMatroid>(std::move(ground),
                                            std::move(blocks));
}

MatroidPtr make_linear_gf2(GroundSetPtr ground,
                           std::vector<std::uint64_t> columns) {
  return std::make_shared<LinearGf2Matroid>(std::move(ground),
                                            std::move(columns));
}

MatroidPtr make_dual(MatroidPtr inner) {
  return std::make_shared<DualMatroid>(std::move(inner));
}

MatroidPtr make_minor(MatroidPtr inner, const ElementSet& contract,
                      const ElementSet& del, GroundSetPtr target_ground) {
  detail::require_input(contract.universe() == inner->ground_size() &&
                            del.universe() == inner->ground_size(),
                        "minor: contract/delete over a foreign universe");
  detail::require_input(contract.disjoint_from(del),
                        "minor: contract and delete sets overlap");
  return std::make_shared<MinorMatroid>(std::move(inner), contract, del,
                                        std::move(target_ground));
}

MatroidPtr make_restriction(MatroidPtr inner, const ElementSet& keep,
                            GroundSetPtr target_ground) {
  ElementSet drop = inner->ground().full_set() - keep;
  return make_minor(std::move(inner), ElementSet(drop.universe()), drop,
                    std::move(target_ground));
}

MatroidPtr make_contraction_onto(MatroidPtr inner, const ElementSet& keep,
                                 GroundSetPtr target_ground) {
  ElementSet drop = inner->ground().full_set() - keep;
  return make_minor(std::move(inner), drop, ElementSet(drop.universe()),
                    std::move(target_ground));
}

MatroidPtr make_direct_sum(std::vector<MatroidPtr> parts) {
  std::vector<std::string> ids;
  for (const MatroidPtr& part : parts) {
    for (const std::string& id : part->ground().ids()) ids.push_back(id);
  }
  GroundSetPtr ground = make_ground(std::move(ids));  // rejects duplicates
  return std::make_shared<DirectSumMatroid>(std::move(ground),
                                            std::move(parts));
}

MatroidPtr make_looped(MatroidPtr inner, const ElementSet& loops) {
  return std::make_shared<LoopedMatroid>(std::move(inner), loops);
}

MatroidPtr make_parallel_clone(MatroidPtr inner, Element x,
                               const std::string& clone_id) {
  detail::require_input(x >= 0 && x < inner->ground_size(),
                        "parallel_clone: element outside the ground");
  detail::require_input(!inner->ground().has(clone_id),
                        "parallel_clone: clone id already present");
  std::vector<std::string> ids = inner->ground().ids();
  ids.push_back(clone_id);
  return std::make_shared<ParallelCloneMatroid>(make_ground(std::move(ids)),
                                                std::move(inner), x);
}

MatroidPtr make_isomorph(MatroidPtr inner, GroundSetPtr target_ground,
                         std::vector<Element> to_inner) {
  detail::require_input(
      static_cast<int>(to_inner.size()) == target_ground->size(),
      "isomorph: need one inner element per target element");
  for (Element e : to_inner) {
    detail::require_input(e >= 0 && e < inner->ground_size(),
                          "isomorph: mapped element outside the inner ground");
  }
  return std::make_shared<IsomorphMatroid>(std::move(target_ground),
                                           std::move(inner),
                                           std::move(to_inner));
}

}  // namespace matroid
