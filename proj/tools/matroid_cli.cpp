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

// matroidkit: check, synthesize and verify base partitionings of matroid
// families given as JSON instance files. Exit codes: 0 computed/true,
// 1 computed absent (a certificate is printed), 2 input error, 3 internal
// consistency failure.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "matroid/brute_force.hpp"
#include "matroid/errors.hpp"
#include "matroid/feasible.hpp"
#include "matroid/json_io.hpp"
#include "matroid/partitioner.hpp"
#include "matroid/selftest.hpp"
#include "matroid/tight_sets.hpp"
#include "matroid/union_augment.hpp"

namespace {

using matroid::Assignment;
using matroid::AssignmentMode;
using matroid::DualWitness;
using matroid::ElementSet;
using matroid::GroundSet;
using matroid::Json;
using matroid::MatroidFamily;
using matroid::ParsedInstance;
using matroid::ParseOptions;
using matroid::SetList;

void emit(const Json& j) { std::cout << matroid::to_stable_string(j); }

ParseOptions parse_options(bool allow_large) {
  ParseOptions o;
  o.allow_large = allow_large;
  return o;
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw matroid::InputError("cannot open file \"" + path + "\"");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw matroid::InputError(path + ": " + e.what());
  }
}

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> out;
  if (csv.empty()) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = csv.find(',', start);
    out.push_back(csv.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

// A family with no members covers exactly the empty ground and packs
// vacuously; the library keeps members nonempty, so those answers are
// spelled out here.
Json empty_family_uncoverable(const GroundSet& g) {
  return matroid::witness_to_json("uncoverable", g,
                                  DualWitness{g.empty_set(), 0});
}

int run_check(const std::string& path, bool allow_large) {
  ParsedInstance inst =
      matroid::load_instance(path, parse_options(allow_large));
  const GroundSet& g = *inst.ground;
  Json out = Json::object();

  if (inst.empty_family()) {
    bool coverable = g.size() == 0;
    out["covering"] = coverable;
    if (coverable) {
      out["covering_assignment"] =
          matroid::assignment_to_json(g, AssignmentMode::kCovering, {});
    } else {
      out["covering_certificate"] = empty_family_uncoverable(g);
    }
    out["packing"] = true;
    out["packing_assignment"] =
        matroid::assignment_to_json(g, AssignmentMode::kPacking, {});
    emit(out);
    return 0;
  }

  MatroidFamily f = inst.family();
  matroid::CoveringOutcome cov = matroid::find_covering(f);
  out["covering"] = cov.coverable();
  if (cov.coverable()) {
    matroid::detail::ensure(
        matroid::covering_violation(f, *cov.covering).empty(),
        "covering failed re-verification before printing");
    out["covering_assignment"] =
        matroid::assignment_to_json(g, AssignmentMode::kCovering,
                                    *cov.covering);
  } else {
    matroid::detail::ensure(matroid::dual_witness_valid(f, *cov.witness),
                            "uncoverability witness failed re-verification");
    out["covering_certificate"] =
        matroid::witness_to_json("uncoverable", g, *cov.witness);
  }

  matroid::PackingFeasibleOutcome pk =
      matroid::packing_feasible(matroid::trivial_feasible_family(f));
  out["packing"] = pk.feasible();
  if (pk.feasible()) {
    matroid::detail::ensure(matroid::packing_violation(f, *pk.packing).empty(),
                            "packing failed re-verification before printing");
    out["packing_assignment"] =
        matroid::assignment_to_json(g, AssignmentMode::kPacking, *pk.packing);
  } else {
    out["packing_certificate"] =
        matroid::witness_to_json("unpackable", *pk.witness_ground,
                                 *pk.witness);
  }
  emit(out);
  return 0;
}

int run_partition(const std::string& path, bool use_reduction,
                  bool allow_large) {
  ParsedInstance inst =
      matroid::load_instance(path, parse_options(allow_large));
  const GroundSet& g = *inst.ground;

  if (inst.empty_family()) {
    if (g.size() == 0) {
      emit(matroid::assignment_to_json(g, AssignmentMode::kPartitioning, {}));
      return 0;
    }
    emit(empty_family_uncoverable(g));
    return 1;
  }

  MatroidFamily f = inst.family();
  matroid::SynthesisOptions options;
  options.use_reduction = use_reduction;
  matroid::PartitionOutcome out = matroid::synthesize_partition(f, options);
  if (out.partitioned()) {
    matroid::detail::ensure(
        matroid::partitioning_violation(f, *out.partition).empty(),
        "partitioning failed re-verification before printing");
    emit(matroid::assignment_to_json(g, AssignmentMode::kPartitioning,
                                     *out.partition));
    return 0;
  }
  const matroid::PartitionAbsence& absence = *out.absence;
  if (absence.kind == matroid::AbsenceKind::kNoCovering) {
    matroid::detail::ensure(matroid::dual_witness_valid(f, absence.witness),
                            "uncoverability witness failed re-verification");
    emit(matroid::witness_to_json("uncoverable", g, absence.witness));
  } else {
    emit(matroid::witness_to_json("unpackable", *absence.ground,
                                  absence.witness));
  }
  return 1;
}

int run_tight(const std::string& path, bool largest,
              const std::optional<std::string>& subset_csv, bool allow_large) {
  ParsedInstance inst =
      matroid::load_instance(path, parse_options(allow_large));
  const GroundSet& g = *inst.ground;

  if (inst.empty_family()) {
    if (largest) {
      if (g.size() > 0) {
        emit(empty_family_uncoverable(g));
        return 1;
      }
      Json out = Json::object();
      out["largest_tight"] = Json::array();
      emit(out);
      return 0;
    }
    ElementSet x = g.set_of(split_csv(*subset_csv));
    Json out = Json::object();
    out["tight"] = x.empty();  // no members: only the empty set is coverable
    emit(out);
    return 0;
  }

  MatroidFamily f = inst.family();
  if (largest) {
    matroid::CoveringOutcome cov = matroid::find_covering(f);
    if (!cov.coverable()) {
      emit(matroid::witness_to_json("uncoverable", g, *cov.witness));
      return 1;
    }
    matroid::TightCertificate cert =
        matroid::largest_tight_set(f, *cov.covering);
    Json out = Json::object();
    out["largest_tight"] = matroid::set_to_json(g, cert.x);
    emit(out);
    return 0;
  }
  ElementSet x = g.set_of(split_csv(*subset_csv));
  Json out = Json::object();
  out["tight"] = matroid::is_tight(f, x);
  emit(out);
  return 0;
}

int run_reduce3(const std::string& path, bool allow_large) {
  ParsedInstance inst =
      matroid::load_instance(path, parse_options(allow_large));
  const GroundSet& g = *inst.ground;
  const int k = static_cast<int>(inst.members.size());

  Json out = Json::object();
  Json elements = Json::array();
  Json matroids = Json::array();

  if (inst.empty_family()) {
    Json zero_fin = Json::object();
    zero_fin["type"] = "zero";
    zero_fin["role"] = "finitary";
    Json zero_cofin = zero_fin;
    zero_cofin["role"] = "cofinitary";
    Json transversal = Json::object();
    transversal["type"] = "partition";
    transversal["blocks"] = Json::array();
    transversal["role"] = "cofinitary";
    matroids.push_back(zero_fin);
    matroids.push_back(zero_cofin);
    matroids.push_back(transversal);
    out["elements"] = elements;
    out["matroids"] = matroids;
    emit(out);
    return 0;
  }

  auto slice_id = [&](const std::string& id, int member) {
    return id + "#" + std::to_string(member);
  };
  {
    std::vector<std::string> seen;
    for (int i = 0; i < k; ++i) {
      for (const std::string& id : g.ids()) {
        seen.push_back(slice_id(id, i));
      }
    }
    std::vector<std::string> sorted = seen;
    std::sort(sorted.begin(), sorted.end());
    matroid::detail::require_input(
        std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
        "element ids clash after slicing; avoid '#' in element names");
    for (const std::string& id : seen) elements.push_back(id);
  }

  auto sliced_sum = [&](matroid::MatroidRole wanted) {
    Json sum = Json::object();
    sum["type"] = "direct_sum";
    Json parts = Json::array();
    for (int i = 0; i < k; ++i) {
      Json part = Json::object();
      Json ids = Json::array();
      for (const std::string& id : g.ids()) ids.push_back(slice_id(id, i));
      part["elements"] = std::move(ids);
      if (inst.roles[i] == wanted) {
        part["matroid"] = matroid::relabel_matroid_json(
            inst.matroid_jsons[i], [&](const std::string& id) {
              return g.has(id) ? slice_id(id, i) : id;
            });
      } else {
        Json zero = Json::object();
        zero["type"] = "zero";
        part["matroid"] = std::move(zero);
      }
      parts.push_back(std::move(part));
    }
    sum["parts"] = std::move(parts);
    return sum;
  };

  Json member0 = sliced_sum(matroid::MatroidRole::kFinitary);
  member0["role"] = "finitary";
  Json member1 = sliced_sum(matroid::MatroidRole::kCofinitary);
  member1["role"] = "cofinitary";

  Json member2 = Json::object();
  member2["type"] = "partition";
  Json blocks = Json::array();
  for (const std::string& id : g.ids()) {
    Json block = Json::object();
    Json ids = Json::array();
    for (int i = 0; i < k; ++i) ids.push_back(slice_id(id, i));
    block["elements"] = std::move(ids);
    block["capacity"] = k - 1;
    blocks.push_back(std::move(block));
  }
  member2["blocks"] = std::move(blocks);
  member2["role"] = "cofinitary";

  matroids.push_back(std::move(member0));
  matroids.push_back(std::move(member1));
  matroids.push_back(std::move(member2));
  out["elements"] = std::move(elements);
  out["matroids"] = std::move(matroids);

  // The emitted file must load back to the same instance the in-process
  // transform produces.
  ParseOptions reparse;
  reparse.allow_large = true;
  ParsedInstance back = matroid::parse_instance(out, reparse);
  matroid::ReducedInstance red = matroid::reduce_to_three(inst.family());
  matroid::detail::ensure(
      back.ground->same_as(red.reduced.ground()),
      "emitted reduction ground differs from the in-process transform");
  for (int i = 0; i < 3; ++i) {
    matroid::detail::ensure(
        back.members[static_cast<std::size_t>(i)]->full_rank() ==
            red.reduced.member(i).full_rank(),
        "emitted reduction member " + std::to_string(i) +
            " disagrees with the in-process transform on full rank");
  }
  emit(out);
  return 0;
}

int run_verify(const std::string& path, const std::string& assignment_path,
               const std::string& mode_name, bool allow_large) {
  ParsedInstance inst =
      matroid::load_instance(path, parse_options(allow_large));
  const GroundSet& g = *inst.ground;
  AssignmentMode mode = matroid::mode_from_name(mode_name);
  Json aj = load_json(assignment_path);

  std::string reason;
  if (inst.empty_family()) {
    Assignment a = matroid::assignment_from_json(g, aj, 0);
    if (a.mode != mode) {
      throw matroid::InputError("assignment file mode \"" +
                                matroid::mode_name(a.mode) +
                                "\" differs from --mode " + mode_name);
    }
    if (mode != AssignmentMode::kPacking && g.size() > 0) {
      reason = "no parts exist to cover the ground set";
    }
  } else {
    MatroidFamily f = inst.family();
    Assignment a = matroid::assignment_from_json(g, aj, f.size());
    if (a.mode != mode) {
      throw matroid::InputError("assignment file mode \"" +
                                matroid::mode_name(a.mode) +
                                "\" differs from --mode " + mode_name);
    }
    reason = matroid::assignment_violation(f, a);
  }

  Json out = Json::object();
  out["valid"] = reason.empty();
  if (!reason.empty()) out["reason"] = reason;
  emit(out);
  return reason.empty() ? 0 : 1;
}

int run_selftest(int max_elements, int trials, std::uint64_t seed,
                 bool inject_fault) {
  matroid::SelftestOptions options;
  options.max_elements = max_elements;
  options.trials = trials;
  options.seed = seed;
  options.inject_fault = inject_fault;
  matroid::SelftestReport report = matroid::run_selftest(options);

  Json out = Json::object();
  out["seed"] = seed;
  out["max_elements"] = max_elements;
  out["trials"] = trials;
  if (inject_fault) out["fault_injected"] = true;
  Json suites = Json::array();
  for (const matroid::SuiteResult& s : report.suites) {
    Json row = Json::object();
    row["name"] = s.name;
    row["checks"] = s.checks;
    row["failures"] = s.failures;
    if (!s.first_failure.empty()) row["first_failure"] = s.first_failure;
    suites.push_back(std::move(row));
  }
  out["suites"] = std::move(suites);
  out["failures"] = report.total_failures();
  out["pass"] = report.passed();
  emit(out);
  return report.passed() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matroidkit: base partitionings of matroid families, "
               "with machine-checkable certificates"};
  app.require_subcommand(1);

  std::string path;
  bool allow_large = false;
  bool use_reduction = false;
  bool largest = false;
  std::string subset_csv;
  std::string assignment_path;
  std::string mode_name;
  int max_elements = 7;
  int trials = 500;
  std::uint64_t seed = 0;
  bool inject_fault = false;

  auto add_file = [&](CLI::App* cmd) {
    cmd->add_option("file", path, "instance file (JSON)")->required();
    cmd->add_flag("--allow-large", allow_large,
                  "accept grounds larger than 64 elements");
  };

  CLI::App* check = app.add_subcommand(
      "check", "decide covering and packing existence for an instance");
  add_file(check);

  CLI::App* partition = app.add_subcommand(
      "partition", "synthesize a base partitioning or certify absence");
  add_file(partition);
  partition->add_flag("--use-reduction", use_reduction,
                      "route through the three-member transform");

  CLI::App* tight = app.add_subcommand(
      "tight", "tight-set queries against an instance");
  add_file(tight);
  CLI::Option* opt_largest =
      tight->add_flag("--largest", largest, "report the largest tight set");
  CLI::Option* opt_subset = tight->add_option(
      "--subset", subset_csv, "comma-separated elements to test for tightness");
  opt_largest->excludes(opt_subset);
  opt_subset->excludes(opt_largest);

  CLI::App* reduce3 = app.add_subcommand(
      "reduce3", "emit the equivalent three-member instance");
  add_file(reduce3);

  CLI::App* verify = app.add_subcommand(
      "verify", "validate an assignment file against an instance");
  add_file(verify);
  verify->add_option("--assignment", assignment_path,
                     "assignment file (JSON)")->required();
  verify->add_option("--mode", mode_name,
                     "covering, packing or partitioning")->required();

  CLI::App* selftest = app.add_subcommand(
      "selftest", "run the randomized cross-check suites");
  selftest->add_option("--max-elements", max_elements,
                       "ground-size ceiling for generated instances");
  selftest->add_option("--trials", trials, "trial count for the main suite");
  selftest->add_option("--seed", seed, "seed for instance generation");
  selftest->add_flag("--inject-fault", inject_fault,
                     "test hook: run a broken oracle through the axiom scan");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    if (dynamic_cast<const CLI::CallForHelp*>(&e) != nullptr ||
        dynamic_cast<const CLI::CallForAllHelp*>(&e) != nullptr) {
      return rc;
    }
    return 2;
  }

  try {
    if (*check) return run_check(path, allow_large);
    if (*partition) return run_partition(path, use_reduction, allow_large);
    if (*tight) {
      if (!largest && tight->count("--subset") == 0) {
        std::cerr << "error: tight needs --largest or --subset\n";
        return 2;
      }
      std::optional<std::string> subset;
      if (!largest) subset = subset_csv;
      return run_tight(path, largest, subset, allow_large);
    }
    if (*reduce3) return run_reduce3(path, allow_large);
    if (*verify) {
      return run_verify(path, assignment_path, mode_name, allow_large);
    }
    if (*selftest) {
      return run_selftest(max_elements, trials, seed, inject_fault);
    }
    std::cerr << "error: no command selected\n";
    return 2;
  } catch (const matroid::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const matroid::BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const matroid::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
