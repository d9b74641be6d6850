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

#include "matroid/selftest.hpp"

#include <algorithm>
#include <optional>
#include <unordered_set>
#include <utility>

#include "matroid/brute_force.hpp"
#include "matroid/feasible.hpp"
#include "matroid/generator.hpp"
#include "matroid/partitioner.hpp"
#include "matroid/tight_sets.hpp"
#include "matroid/union_augment.hpp"

namespace matroid {
namespace {

std::string ok() { return std::string(); }

/// Counts checks and keeps the first failure text; a check passes by
/// returning an empty string and fails by returning a complaint or
/// throwing.
class SuiteRun {
 public:
  explicit SuiteRun(std::string name) { result_.name = std::move(name); }

  template <typename Fn>
  void check(const std::string& label, Fn&& fn) {
    ++result_.checks;
    std::string complaint;
    try {
      complaint = fn();
    } catch (const std::exception& e) {
      complaint = e.what();
    }
    if (complaint.empty()) return;
    ++result_.failures;
    if (result_.first_failure.empty()) {
      result_.first_failure = label + ": " + complaint;
    }
  }

  SuiteResult take() { return std::move(result_); }

 private:
  SuiteResult result_;
};

std::string describe_set(const GroundSet& g, const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  for (const std::string& id : g.ids_of(s)) {
    if (!first) out += ",";
    out += id;
    first = false;
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// Exhaustive axiom scan for one matroid on a tiny ground.

std::string axiom_complaint(const Matroid& m) {
  const int n = m.ground_size();
  if (n > 6) return ok();  // scan is quadratic in the subset count
  const int subsets = 1 << n;
  std::vector<ElementSet> sets;
  std::vector<char> indep(subsets);
  sets.reserve(subsets);
  for (int mask = 0; mask < subsets; ++mask) {
    ElementSet s(n);
    for (int e = 0; e < n; ++e) {
      if (mask & (1 << e)) s.insert(e);
    }
    indep[mask] = m.is_independent(s);
    sets.push_back(std::move(s));
  }
  if (!indep[0]) return "the empty set claims dependent";
  for (int mask = 0; mask < subsets; ++mask) {
    if (!indep[mask]) continue;
    for (int e = 0; e < n; ++e) {
      if ((mask & (1 << e)) && !indep[mask & ~(1 << e)]) {
        return "hereditary violated: " + describe_set(m.ground(), sets[mask]) +
               " independent but dropping " + m.ground().id_of(e) + " is not";
      }
    }
  }
  for (int a = 0; a < subsets; ++a) {
    if (!indep[a]) continue;
    for (int b = 0; b < subsets; ++b) {
      if (!indep[b] || __builtin_popcount(a) >= __builtin_popcount(b)) continue;
      bool extended = false;
      for (int e = 0; e < n && !extended; ++e) {
        if ((b & (1 << e)) && !(a & (1 << e)) && indep[a | (1 << e)]) {
          extended = true;
        }
      }
      if (!extended) {
        return "exchange violated between " +
               describe_set(m.ground(), sets[a]) + " and " +
               describe_set(m.ground(), sets[b]);
      }
    }
  }
  // Ranks must equal the largest independent subset size.
  std::vector<int> table_rank(subsets, 0);
  for (int mask = 1; mask < subsets; ++mask) {
    if (indep[mask]) {
      table_rank[mask] = __builtin_popcount(mask);
      continue;
    }
    for (int e = 0; e < n; ++e) {
      if (mask & (1 << e)) {
        table_rank[mask] =
            std::max(table_rank[mask], table_rank[mask & ~(1 << e)]);
      }
    }
  }
  for (int mask = 0; mask < subsets; ++mask) {
    if (m.rank(sets[mask]) != table_rank[mask]) {
      return "rank of " + describe_set(m.ground(), sets[mask]) +
             " disagrees with the subset table";
    }
  }
  return ok();
}

/// Deliberately broken: independence by size parity, which fails the
/// hereditary axiom on any ground with two or more elements.
class ParityOracle final : public Matroid {
 public:
  explicit ParityOracle(GroundSetPtr g) : Matroid(std::move(g)) {}
  std::string describe() const override { return "parity(broken)"; }

 protected:
  bool independent(const ElementSet& s) const override {
    return s.size() % 2 == 0;
  }
};

// ---------------------------------------------------------------------------
// Suite 1: algorithmic layer vs. enumeration layer, per random family.

SuiteResult run_oracle_agreements(const SelftestOptions& o) {
  SuiteRun suite("oracle-agreements");
  const int trials = o.max_elements > 0 ? o.trials : 0;
  GeneratorOptions gen_opts;
  gen_opts.max_elements = std::min(o.max_elements, 8);
  InstanceGenerator gen(o.seed + 1, gen_opts);

  for (int t = 0; t < trials; ++t) {
    MatroidFamily f = gen.next_family();
    const int n = f.ground_size();

    suite.check("covering-existence", [&] {
      CoveringOutcome alg = find_covering(f);
      bool ref = brute_find_covering(f).has_value();
      if (alg.coverable() != ref) {
        return std::string("search says ") +
               (alg.coverable() ? "coverable" : "uncoverable") +
               " but enumeration disagrees";
      }
      if (alg.coverable()) return covering_violation(f, *alg.covering);
      if (!dual_witness_valid(f, *alg.witness)) {
        return std::string("uncoverability witness fails its inequalities");
      }
      return ok();
    });

    suite.check("packing-existence", [&] {
      PackingFeasibleOutcome alg = packing_feasible(trivial_feasible_family(f));
      bool ref = brute_find_packing(f).has_value();
      if (alg.feasible() != ref) {
        return std::string("search says ") +
               (alg.feasible() ? "packable" : "unpackable") +
               " but enumeration disagrees";
      }
      if (alg.feasible()) return packing_violation(f, *alg.packing);
      return ok();
    });

    suite.check("tightness-agreement", [&] {
      ElementSet x = gen.random_subset(f.ground().full_set());
      bool alg = is_tight(f, x);
      bool ref = brute_is_tight(f, x);
      if (alg != ref) {
        return describe_set(f.ground(), x) + ": certificate search says " +
               (alg ? "tight" : "loose") + ", enumeration says " +
               (ref ? "tight" : "loose");
      }
      return ok();
    });

    suite.check("augment-dichotomy", [&] {
      SetList parts = gen.random_disjoint_independent_parts(f);
      ElementSet uncovered = f.ground().full_set() - union_of(parts, n);
      if (uncovered.empty()) return ok();
      std::vector<Element> choices = uncovered.elements();
      Element e = choices[gen.next_int(0, static_cast<int>(choices.size()) - 1)];

      AugmentOutcome out = augment(f, parts, e);
      ElementSet target = union_of(parts, n).with(e);
      bool ref = brute_find_covering(restrict_family(f, target)).has_value();
      if (out.augmented() != ref) {
        return std::string("augment says ") + (out.augmented() ? "yes" : "no") +
               " but enumeration of the target restriction disagrees";
      }
      if (out.augmented()) {
        if (!pairwise_disjoint(*out.parts)) {
          return std::string("augmented parts overlap");
        }
        for (int i = 0; i < f.size(); ++i) {
          if (!f.member(i).is_independent((*out.parts)[i])) {
            return "augmented part " + std::to_string(i) + " dependent";
          }
        }
        if (union_of(*out.parts, n) != target) {
          return std::string("augmented union is not the old union plus ") +
                 f.ground().id_of(e);
        }
      } else {
        if (!dual_witness_valid(f, *out.witness)) {
          return std::string("augment witness fails its inequalities");
        }
      }
      return ok();
    });

    suite.check("axiom-scan", [&] {
      return axiom_complaint(f.member(t % f.size()));
    });
  }

  if (o.inject_fault && trials > 0) {
    suite.check("injected-fault", [&] {
      MatroidPtr broken = std::make_shared<const ParityOracle>(
          make_ground({"f0", "f1", "f2"}));
      std::string complaint = axiom_complaint(*broken);
      if (complaint.empty()) {
        return std::string("broken oracle passed the axiom scan");
      }
      return "broken oracle rejected as intended (" + complaint + ")";
    });
  }
  return suite.take();
}

// ---------------------------------------------------------------------------
// Suite 2: synthesis agrees with assignment existence on random instances.

SuiteResult run_synthesis_agreement(const SelftestOptions& o) {
  SuiteRun suite("synthesis-agreement");
  const int trials = o.max_elements > 0 ? std::max(1, o.trials / 5) : 0;
  GeneratorOptions gen_opts;
  gen_opts.max_elements = std::min(o.max_elements, 8);
  InstanceGenerator gen(o.seed + 2, gen_opts);

  for (int t = 0; t < trials; ++t) {
    MatroidFamily f = gen.next_family();
    const bool cov = brute_find_covering(f).has_value();
    const bool pack = brute_find_packing(f).has_value();
    const bool part = brute_find_partitioning(f).has_value();

    suite.check("existence-coincidence", [&] {
      if (part != (cov && pack)) {
        return std::string("a partitioning exists iff a covering and a "
                           "packing do; enumeration disagrees");
      }
      return ok();
    });

    suite.check("synthesizer-agreement", [&] {
      PartitionOutcome out = synthesize_partition(f);
      if (out.partitioned() != (cov && pack)) {
        return std::string("synthesis says ") +
               (out.partitioned() ? "partitionable" : "not partitionable") +
               " but enumeration disagrees";
      }
      if (out.partitioned()) return partitioning_violation(f, *out.partition);
      if (out.absence->kind == AbsenceKind::kNoCovering) {
        if (cov) return std::string("absence blames coverings, which exist");
        if (!dual_witness_valid(f, out.absence->witness)) {
          return std::string("uncoverability witness fails its inequalities");
        }
      } else if (pack) {
        return std::string("absence blames packings, which exist");
      }
      return ok();
    });

    suite.check("role-invariance", [&] {
      std::vector<MatroidRole> roles = f.roles();
      int j = gen.next_int(0, f.size() - 1);
      roles[j] = roles[j] == MatroidRole::kFinitary ? MatroidRole::kCofinitary
                                                    : MatroidRole::kFinitary;
      MatroidFamily flipped(f.members(), roles);
      PartitionOutcome out = synthesize_partition(flipped);
      if (out.partitioned() != (cov && pack)) {
        return std::string("flipping member ") + std::to_string(j) +
               "'s role changed the outcome";
      }
      return ok();
    });

    if (cov && pack) {
      suite.check("shortcut-agreement", [&] {
        std::optional<SetList> shortcut = finite_shortcut_partition(f);
        if (!shortcut) {
          return std::string("base-trimmed packing missed a partitioning");
        }
        return partitioning_violation(f, *shortcut);
      });
      if (f.ground_size() * f.size() <= 16) {
        suite.check("assignment-coincidence", [&] {
          CoincidenceReport r = finite_coincidence_check(f);
          if (r.coverings != r.partitionings || r.packings != r.partitionings) {
            return std::string("assignment counts diverge");
          }
          return ok();
        });
      }
    }
  }
  return suite.take();
}

// ---------------------------------------------------------------------------
// Suite 3: tight-set lattice on coverable families.

SuiteResult run_lattice_check(const SelftestOptions& o) {
  SuiteRun suite("lattice-closure");
  const int trials = o.max_elements > 0 ? std::max(1, o.trials / 10) : 0;
  GeneratorOptions gen_opts;
  gen_opts.max_elements = std::min(o.max_elements, 7);
  gen_opts.max_members = 3;
  InstanceGenerator gen(o.seed + 3, gen_opts);

  for (int t = 0; t < trials; ++t) {
    MatroidFamily f = gen.next_family();
    CoveringOutcome cov = find_covering(f);
    if (!cov.coverable()) continue;  // the lattice lives under a covering
    std::vector<ElementSet> all = brute_all_tight_sets(f);

    suite.check("union-intersection-closure", [&] {
      std::unordered_set<ElementSet, ElementSetHash> tight(all.begin(),
                                                           all.end());
      for (const ElementSet& a : all) {
        for (const ElementSet& b : all) {
          if (!tight.count(a | b)) {
            return "union of tight sets " + describe_set(f.ground(), a) +
                   " and " + describe_set(f.ground(), b) + " is not tight";
          }
          if (!tight.count(a & b)) {
            return "intersection of tight sets " +
                   describe_set(f.ground(), a) + " and " +
                   describe_set(f.ground(), b) + " is not tight";
          }
        }
      }
      return ok();
    });

    suite.check("tight-membership-agreement", [&] {
      const int n = f.ground_size();
      for (int mask = 0; mask < (1 << n); ++mask) {
        ElementSet x(n);
        for (int e = 0; e < n; ++e) {
          if (mask & (1 << e)) x.insert(e);
        }
        if (is_tight(f, x) != brute_is_tight(f, x)) {
          return describe_set(f.ground(), x) +
                 ": tightness decisions disagree";
        }
      }
      return ok();
    });

    suite.check("largest-tight-agreement", [&] {
      TightCertificate largest = largest_tight_set(f, *cov.covering);
      ElementSet ref = brute_largest_tight_set(f);
      if (largest.x != ref) {
        return "largest tight set " + describe_set(f.ground(), largest.x) +
               " differs from enumerated union " + describe_set(f.ground(), ref);
      }
      return ok();
    });
  }
  return suite.take();
}

// ---------------------------------------------------------------------------
// Suite 4: three-member reduction preserves everything.

SuiteResult run_reduction_check(const SelftestOptions& o) {
  SuiteRun suite("reduction-equivalence");
  const int trials = o.max_elements > 0 ? std::max(1, o.trials / 20) : 0;
  GeneratorOptions gen_opts;
  gen_opts.max_elements = std::min(o.max_elements, 4);
  gen_opts.max_members = 3;
  InstanceGenerator gen(o.seed + 4, gen_opts);
  EnumerationBudget reduced_budget;
  reduced_budget.max_elements = 12;  // up to 4 elements times 3 members

  for (int t = 0; t < trials; ++t) {
    MatroidFamily f = gen.next_family();
    ReducedInstance red = reduce_to_three(f);

    std::optional<SetList> cov = brute_find_covering(f);
    std::optional<SetList> pack = brute_find_packing(f);
    std::optional<SetList> rcov = brute_find_covering(red.reduced,
                                                      reduced_budget);
    std::optional<SetList> rpack = brute_find_packing(red.reduced,
                                                      reduced_budget);

    suite.check("existence-preserved", [&] {
      if (cov.has_value() != rcov.has_value()) {
        return std::string("covering existence changed across the reduction");
      }
      if (pack.has_value() != rpack.has_value()) {
        return std::string("packing existence changed across the reduction");
      }
      bool part = brute_find_partitioning(f).has_value();
      bool rpart =
          brute_find_partitioning(red.reduced, reduced_budget).has_value();
      if (part != rpart) {
        return std::string(
            "partitioning existence changed across the reduction");
      }
      return ok();
    });

    suite.check("translations-verify", [&] {
      if (cov) {
        SetList fwd = red.covering_to_reduced(*cov);
        std::string v = covering_violation(red.reduced, fwd);
        if (!v.empty()) return "forward covering: " + v;
      }
      if (rcov) {
        SetList back = red.covering_from_reduced(*rcov);
        std::string v = covering_violation(f, back);
        if (!v.empty()) return "backward covering: " + v;
      }
      if (pack) {
        SetList fwd = red.packing_to_reduced(*pack);
        std::string v = packing_violation(red.reduced, fwd);
        if (!v.empty()) return "forward packing: " + v;
      }
      if (rpack) {
        SetList back = red.packing_from_reduced(*rpack);
        std::string v = packing_violation(f, back);
        if (!v.empty()) return "backward packing: " + v;
      }
      return ok();
    });

    suite.check("route-agreement", [&] {
      PartitionOutcome direct = synthesize_partition(f);
      SynthesisOptions via;
      via.use_reduction = true;
      PartitionOutcome routed = synthesize_partition(f, via);
      if (direct.partitioned() != routed.partitioned()) {
        return std::string("reduction route disagrees with direct synthesis");
      }
      if (routed.partitioned()) {
        return partitioning_violation(f, *routed.partition);
      }
      return ok();
    });
  }
  return suite.take();
}

}  // namespace

SelftestReport run_selftest(const SelftestOptions& options) {
  SelftestReport report;
  report.options = options;
  report.suites.push_back(run_oracle_agreements(options));
  report.suites.push_back(run_synthesis_agreement(options));
  report.suites.push_back(run_lattice_check(options));
  report.suites.push_back(run_reduction_check(options));
  return report;
}

}  // namespace matroid
