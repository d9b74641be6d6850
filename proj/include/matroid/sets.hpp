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

#ifndef MATROIDKIT_SETS_HPP_
#define MATROIDKIT_SETS_HPP_

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "matroid/errors.hpp"

namespace matroid {

/// Index of an element inside its GroundSet (0-based, canonical order).
using Element = int;

/// Subset of a fixed finite universe, stored as a bitset.  Universes of up
/// to 64 elements live in a single word; larger universes spill into a
/// heap-allocated tail, which is slower but behaves identically.
class ElementSet {
 public:
  ElementSet() : universe_(0), head_(0) {}

  explicit ElementSet(int universe) : universe_(universe), head_(0) {
    if (universe_ > 64) tail_.assign((universe_ - 1) / 64, 0);
  }

  static ElementSet empty_set(int universe) { return ElementSet(universe); }

  static ElementSet full_set(int universe) {
    ElementSet s(universe);
    for (int e = 0; e < universe; ++e) s.insert(e);
    return s;
  }

  static ElementSet single(int universe, Element e) {
    ElementSet s(universe);
    s.insert(e);
    return s;
  }

  static ElementSet of(int universe, const std::vector<Element>& elements) {
    ElementSet s(universe);
    for (Element e : elements) s.insert(e);
    return s;
  }

  int universe() const { return universe_; }

  bool contains(Element e) const {
    check_element(e);
    return (word(e / 64) >> (e % 64)) & 1u;
  }

  ElementSet& insert(Element e) {
    check_element(e);
    mutable_word(e / 64) |= std::uint64_t{1} << (e % 64);
    return *this;
  }

  ElementSet& erase(Element e) {
    check_element(e);
    mutable_word(e / 64) &= ~(std::uint64_t{1} << (e % 64));
    return *this;
  }

  ElementSet with(Element e) const {
    ElementSet s = *this;
    s.insert(e);
    return s;
  }

  ElementSet without(Element e) const {
    ElementSet s = *this;
    s.erase(e);
    return s;
  }

  int size() const {
    int n = __builtin_popcountll(head_);
    for (std::uint64_t w : tail_) n += __builtin_popcountll(w);
    return n;
  }

  bool empty() const {
    if (head_ != 0) return false;
    for (std::uint64_t w : tail_) {
      if (w != 0) return false;
    }
    return true;
  }

  /// Elements in ascending (canonical) order.
  std::vector<Element> elements() const {
    std::vector<Element> out;
    out.reserve(size());
    for (int wi = 0; wi < word_count(); ++wi) {
      std::uint64_t w = word(wi);
      while (w != 0) {
        int bit = __builtin_ctzll(w);
        out.push_back(wi * 64 + bit);
        w &= w - 1;
      }
    }
    return out;
  }

  /// Least element, or -1 if empty.
  Element first() const {
    for (int wi = 0; wi < word_count(); ++wi) {
      if (word(wi) != 0) return wi * 64 + __builtin_ctzll(word(wi));
    }
    return -1;
  }

  ElementSet operator|(const ElementSet& o) const {
    return combined(o, [](std::uint64_t a, std::uint64_t b) { return a | b; });
  }
  ElementSet operator&(const ElementSet& o) const {
    return combined(o, [](std::uint64_t a, std::uint64_t b) { return a & b; });
  }
  ElementSet operator-(const ElementSet& o) const {
    return combined(o, [](std::uint64_t a, std::uint64_t b) { return a & ~b; });
  }
  ElementSet operator^(const ElementSet& o) const {
    return combined(o, [](std::uint64_t a, std::uint64_t b) { return a ^ b; });
  }

  bool operator==(const ElementSet& o) const {
    return universe_ == o.universe_ && head_ == o.head_ && tail_ == o.tail_;
  }
  bool operator!=(const ElementSet& o) const { return !(*this == o); }

  bool subset_of(const ElementSet& o) const {
    check_same_universe(o);
    if ((head_ & ~o.head_) != 0) return false;
    for (std::size_t i = 0; i < tail_.size(); ++i) {
      if ((tail_[i] & ~o.tail_[i]) != 0) return false;
    }
    return true;
  }

  bool disjoint_from(const ElementSet& o) const {
    check_same_universe(o);
    if ((head_ & o.head_) != 0) return false;
    for (std::size_t i = 0; i < tail_.size(); ++i) {
      if ((tail_[i] & o.tail_[i]) != 0) return false;
    }
    return true;
  }

  std::size_t hash() const {
    std::size_t h = std::hash<std::uint64_t>{}(head_) + universe_;
    for (std::uint64_t w : tail_) {
      h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) +
           (h >> 2);
    }
    return h;
  }

 private:
  template <typename Op>
  ElementSet combined(const ElementSet& o, Op op) const {
    check_same_universe(o);
    ElementSet out(universe_);
    out.head_ = op(head_, o.head_);
    for (std::size_t i = 0; i < tail_.size(); ++i) {
      out.tail_[i] = op(tail_[i], o.tail_[i]);
    }
    return out;
  }

  int word_count() const { return 1 + static_cast<int>(tail_.size()); }

  std::uint64_t word(int i) const { return i == 0 ? head_ : tail_[i - 1]; }

  std::uint64_t& mutable_word(int i) { return i == 0 ? head_ : tail_[i - 1]; }

  void check_element(Element e) const {
    if (e < 0 || e >= universe_) {
      throw InputError("element index " + std::to_string(e) +
                       " outside universe of size " +
                       std::to_string(universe_));
    }
  }

  void check_same_universe(const ElementSet& o) const {
    if (universe_ != o.universe_) {
      throw InputError("element sets over different universes (" +
                       std::to_string(universe_) + " vs " +
                       std::to_string(o.universe_) + ")");
    }
  }

  int universe_;
  std::uint64_t head_;
  std::vector<std::uint64_t> tail_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

/// Ordered universe of named elements.  The listed order is the canonical
/// order used by every deterministic tie-break in the library.
class GroundSet {
 public:
  explicit GroundSet(std::vector<std::string> ids) : ids_(std::move(ids)) {
    for (std::size_t i = 0; i < ids_.size(); ++i) {
      auto [it, fresh] = index_.emplace(ids_[i], static_cast<Element>(i));
      (void)it;
      if (!fresh) throw InputError("duplicate element id \"" + ids_[i] + "\"");
    }
  }

  int size() const { return static_cast<int>(ids_.size()); }

  const std::vector<std::string>& ids() const { return ids_; }

  const std::string& id_of(Element e) const {
    if (e < 0 || e >= size()) {
      throw InputError("element index " + std::to_string(e) +
                       " outside ground of size " + std::to_string(size()));
    }
    return ids_[e];
  }

  bool has(const std::string& id) const { return index_.count(id) != 0; }

  Element index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw InputError("unknown element \"" + id + "\"");
    return it->second;
  }

  ElementSet empty_set() const { return ElementSet(size()); }
  ElementSet full_set() const { return ElementSet::full_set(size()); }

  ElementSet set_of(const std::vector<std::string>& ids) const {
    ElementSet s(size());
    for (const std::string& id : ids) s.insert(index_of(id));
    return s;
  }

  std::vector<std::string> ids_of(const ElementSet& s) const {
    if (s.universe() != size()) {
      throw InputError("element set universe does not match ground size");
    }
    std::vector<std::string> out;
    out.reserve(s.size());
    for (Element e : s.elements()) out.push_back(ids_[e]);
    return out;
  }

  bool same_as(const GroundSet& o) const { return ids_ == o.ids_; }

 private:
  std::vector<std::string> ids_;
  std::unordered_map<std::string, Element> index_;
};

using GroundSetPtr = std::shared_ptr<const GroundSet>;

inline GroundSetPtr make_ground(std::vector<std::string> ids) {
  return std::make_shared<const GroundSet>(std::move(ids));
}

}  // namespace matroid

#endif  // MATROIDKIT_SETS_HPP_
