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

#include "matroid/brute_force.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>

#include "matroid/errors.hpp"

namespace matroid {

namespace {

using Mask = std::uint32_t;

Mask to_mask(const ElementSet& s) {
  Mask m = 0;
  for (Element e : s.elements()) m |= Mask{1} << e;
  return m;
}

ElementSet from_mask(int universe, Mask m) {
  ElementSet s(universe);
  for (int e = 0; e < universe; ++e) {
    if (m & (Mask{1} << e)) s.insert(e);
  }
  return s;
}

/// Exhaustive truth table of one member: a single oracle call per subset,
/// with ranks derived by drop-one recursion instead of further oracle
/// traffic. Everything downstream runs on table lookups.
struct MemberTable {
  std::vector<char> indep;
  std::vector<std::int8_t> rank;
  int full_rank = 0;

  bool spanning(Mask s) const { return rank[s] == full_rank; }
  bool base(Mask s) const { return indep[s] && spanning(s); }
};

MemberTable member_table(const Matroid& m) {
  const int n = m.ground_size();
  const std::size_t masks = std::size_t{1} << n;
  MemberTable t;
  t.indep.resize(masks);
  t.rank.resize(masks);
  t.rank[0] = 0;
  for (std::size_t s = 0; s < masks; ++s) {
    t.indep[s] = m.is_independent(from_mask(n, static_cast<Mask>(s)));
    if (s == 0) continue;
    if (t.indep[s]) {
      t.rank[s] = static_cast<std::int8_t>(__builtin_popcountll(s));
    } else {
      std::int8_t best = 0;
      for (std::size_t rest = s; rest != 0; rest &= rest - 1) {
        std::size_t lowest = rest & (~rest + 1);
        best = std::max(best, t.rank[s & ~lowest]);
      }
      t.rank[s] = best;
    }
  }
  t.full_rank = t.rank[masks - 1];
  return t;
}

std::vector<MemberTable> family_tables(const MatroidFamily& f) {
  std::vector<MemberTable> tables;
  tables.reserve(f.size());
  for (int i = 0; i < f.size(); ++i) tables.push_back(member_table(f.member(i)));
  return tables;
}

/// DP over element subsets, one stage per member. `accepts(i, part)` gates
/// which parts member i may take; `final_ok(mask)` gates the union after
/// the last stage. Returns one witness tuple.
std::optional<SetList> assignment_dp(
    const MatroidFamily& f, const std::function<bool(int, Mask)>& accepts,
    const std::function<bool(Mask)>& final_ok) {
  const int n = f.ground_size();
  const int k = f.size();
  const Mask full = (n == 32) ? ~Mask{0} : ((Mask{1} << n) - 1);
  const std::size_t masks = std::size_t{1} << n;

  std::vector<std::vector<char>> reached(k + 1,
                                         std::vector<char>(masks, 0));
  std::vector<std::vector<Mask>> prev_mask(k, std::vector<Mask>(masks, 0));
  std::vector<std::vector<Mask>> part_taken(k, std::vector<Mask>(masks, 0));
  reached[0][0] = 1;

  for (int i = 0; i < k; ++i) {
    for (Mask m = 0;; ++m) {
      if (reached[i][m]) {
        const Mask comp = full & ~m;
        for (Mask s = 0;; s = (s - comp) & comp) {
          Mask nm = m | s;
          if (!reached[i + 1][nm] && accepts(i, s)) {
            reached[i + 1][nm] = 1;
            prev_mask[i][nm] = m;
            part_taken[i][nm] = s;
          }
          if (s == comp) break;
        }
      }
      if (m == full) break;
    }
  }

  Mask goal = full + 1;  // sentinel: full + 1 is never a valid mask value here
  bool found = false;
  for (Mask m = 0;; ++m) {
    if (reached[k][m] && final_ok(m)) {
      goal = m;
      found = true;
      break;
    }
    if (m == full) break;
  }
  if (!found) return std::nullopt;

  SetList parts(k, f.ground().empty_set());
  Mask cur = goal;
  for (int i = k - 1; i >= 0; --i) {
    parts[i] = from_mask(n, part_taken[i][cur]);
    cur = prev_mask[i][cur];
  }
  return parts;
}

}  // namespace

void check_budget(const MatroidFamily& f, const EnumerationBudget& b,
                  bool lattice_heavy) {
  int cap = lattice_heavy ? b.max_lattice_elements : b.max_elements;
  if (f.ground_size() > cap) {
    throw BudgetError("brute-force refused: " +
                      std::to_string(f.ground_size()) +
                      " elements exceed the budget of " + std::to_string(cap));
  }
  if (f.size() > b.max_members) {
    throw BudgetError("brute-force refused: " + std::to_string(f.size()) +
                      " members exceed the budget of " +
                      std::to_string(b.max_members));
  }
}

std::optional<SetList> brute_find_covering(const MatroidFamily& f,
                                           const EnumerationBudget& b) {
  check_budget(f, b);
  const int n = f.ground_size();
  const Mask full = (Mask{1} << n) - 1;
  std::vector<MemberTable> tables = family_tables(f);
  return assignment_dp(
      f, [&](int i, Mask s) { return tables[i].indep[s] != 0; },
      [&](Mask m) { return m == full; });
}

std::optional<SetList> brute_find_packing(const MatroidFamily& f,
                                          const EnumerationBudget& b) {
  check_budget(f, b);
  std::vector<MemberTable> tables = family_tables(f);
  return assignment_dp(
      f, [&](int i, Mask s) { return tables[i].spanning(s); },
      [&](Mask) { return true; });
}

std::optional<SetList> brute_find_partitioning(const MatroidFamily& f,
                                               const EnumerationBudget& b) {
  check_budget(f, b);
  const int n = f.ground_size();
  const Mask full = (Mask{1} << n) - 1;
  std::vector<MemberTable> tables = family_tables(f);
  return assignment_dp(
      f, [&](int i, Mask s) { return tables[i].base(s); },
      [&](Mask m) { return m == full; });
}

std::vector<SetList> brute_enumerate_assignments(const MatroidFamily& f,
                                                 AssignmentMode mode,
                                                 const EnumerationBudget& b) {
  check_budget(f, b);
  detail::require(f.ground_size() * f.size() <= 16,
                  "literal assignment enumeration is limited to "
                  "members*elements <= 16");
  const int n = f.ground_size();
  const int k = f.size();
  const Mask full = (Mask{1} << n) - 1;
  std::vector<SetList> out;
  std::vector<Mask> chosen(k, 0);

  std::vector<MemberTable> tables = family_tables(f);
  auto part_ok = [&](int i, Mask s) {
    switch (mode) {
      case AssignmentMode::kCovering:
        return tables[i].indep[s] != 0;
      case AssignmentMode::kPacking:
        return tables[i].spanning(s);
      case AssignmentMode::kPartitioning:
        return tables[i].base(s);
    }
    return false;
  };
  bool needs_full_union = mode != AssignmentMode::kPacking;

  std::function<void(int, Mask)> walk = [&](int i, Mask used) {
    if (i == k) {
      if (needs_full_union && used != full) return;
      SetList parts;
      parts.reserve(k);
      for (Mask m : chosen) parts.push_back(from_mask(n, m));
      out.push_back(std::move(parts));
      return;
    }
    const Mask comp = full & ~used;
    for (Mask s = 0;; s = (s - comp) & comp) {
      if (part_ok(i, s)) {
        chosen[i] = s;
        walk(i + 1, used | s);
      }
      if (s == comp) break;
    }
  };
  walk(0, 0);
  return out;
}

namespace {

bool tight_by_tables(const std::vector<MemberTable>& tables, int n, Mask goal) {
  const int k = static_cast<int>(tables.size());
  const std::size_t masks = std::size_t{1} << n;

  // Spanning inside the restriction to x means reaching rank(x) there; a
  // part p of x has rank(p) unchanged by the restriction.
  // reached[mask][dirty]: a prefix of members holds disjoint independent
  // parts with union `mask`, where dirty records that some part fell short
  // of spanning the restriction.
  std::vector<std::array<char, 2>> cur(masks, {0, 0});
  cur[0][0] = 1;
  for (int i = 0; i < k; ++i) {
    const std::int8_t restricted_rank = tables[i].rank[goal];
    std::vector<std::array<char, 2>> next(masks, {0, 0});
    for (Mask m = 0; m < masks; ++m) {
      for (int dirty = 0; dirty < 2; ++dirty) {
        if (!cur[m][dirty]) continue;
        const Mask comp = goal & ~m;
        for (Mask s = 0;; s = (s - comp) & comp) {
          if (tables[i].indep[s]) {
            int nd = dirty | (tables[i].rank[s] != restricted_rank);
            next[m | s][nd] = 1;
          }
          if (s == comp) break;
        }
      }
    }
    cur = std::move(next);
  }
  bool coverable = cur[goal][0] || cur[goal][1];
  bool some_dirty = cur[goal][1];
  return coverable && !some_dirty;
}

}  // namespace

bool brute_is_tight(const MatroidFamily& f, const ElementSet& x,
                    const EnumerationBudget& b) {
  check_budget(f, b);
  return tight_by_tables(family_tables(f), f.ground_size(), to_mask(x));
}

ElementSet brute_largest_tight_set(const MatroidFamily& f,
                                   const EnumerationBudget& b) {
  check_budget(f, b, /*lattice_heavy=*/true);
  detail::require(brute_find_covering(f, b).has_value(),
                  "largest tight set needs a coverable family");
  ElementSet acc = f.ground().empty_set();
  for (const ElementSet& t : brute_all_tight_sets(f, b)) acc = acc | t;
  detail::ensure(brute_is_tight(f, acc, b),
                 "union of tight sets failed the tightness check");
  return acc;
}

std::vector<ElementSet> brute_all_tight_sets(const MatroidFamily& f,
                                             const EnumerationBudget& b) {
  check_budget(f, b, /*lattice_heavy=*/true);
  const int n = f.ground_size();
  const Mask full = (Mask{1} << n) - 1;
  std::vector<MemberTable> tables = family_tables(f);
  std::vector<ElementSet> out;
  for (Mask m = 0;; ++m) {
    if (tight_by_tables(tables, n, m)) out.push_back(from_mask(n, m));
    if (m == full) break;
  }
  return out;
}

namespace {

/// Independence oracle defined by a callback; used to state contraction
/// independence directly, without going through the minor adapter.
class CallbackMatroid final : public Matroid {
 public:
  CallbackMatroid(GroundSetPtr ground,
                  std::function<bool(const ElementSet&)> fn)
      : Matroid(std::move(ground)), fn_(std::move(fn)) {}

  std::string describe() const override { return "callback"; }

 protected:
  bool independent(const ElementSet& s) const override { return fn_(s); }

 private:
  std::function<bool(const ElementSet&)> fn_;
};

}  // namespace

bool brute_is_cowave(const MatroidFamily& f, const ElementSet& w,
                     const EnumerationBudget& b) {
  check_budget(f, b);
  std::vector<std::string> ids;
  for (Element e : w.elements()) ids.push_back(f.ground().id_of(e));
  GroundSetPtr child = make_ground(std::move(ids));

  std::vector<Element> lift;
  for (Element e : w.elements()) lift.push_back(e);
  ElementSet rest = f.ground().full_set() - w;

  std::vector<MatroidPtr> members;
  for (int i = 0; i < f.size(); ++i) {
    const MatroidPtr inner = f.member_ptr(i);
    // S is independent in the contraction onto w iff S together with one
    // fixed base of the contracted-away part is independent in the member.
    ElementSet base = inner->extend_to_base_within(
        ElementSet(inner->ground_size()), rest);
    members.push_back(std::make_shared<CallbackMatroid>(
        child, [inner, base, lift](const ElementSet& s) {
          ElementSet lifted = base;
          for (Element e : s.elements()) lifted.insert(lift[e]);
          return inner->is_independent(lifted);
        }));
  }
  MatroidFamily contracted(std::move(members), f.roles());
  return brute_find_covering(contracted, b).has_value();
}

ElementSet brute_largest_cowave_avoiding(const MatroidFamily& f,
                                         const ElementSet& avoid,
                                         const EnumerationBudget& b) {
  check_budget(f, b, /*lattice_heavy=*/true);
  const int n = f.ground_size();
  const Mask allowed = to_mask(f.ground().full_set() - avoid);
  ElementSet acc = f.ground().empty_set();
  for (Mask m = allowed;; m = (m - 1) & allowed) {
    ElementSet w = from_mask(n, m);
    if (brute_is_cowave(f, w, b)) acc = acc | w;
    if (m == 0) break;
  }
  detail::ensure(brute_is_cowave(f, acc, b),
                 "union of cowaves failed the cowave check");
  return acc;
}

}  // namespace matroid
