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

#include "matroid/json_io.hpp"

#include <fstream>
#include <utility>

#include "matroid/errors.hpp"
#include "matroid/oracle.hpp"

namespace matroid {
namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw InputError(where + ": " + what);
}

const Json& field(const Json& j, const char* name, const std::string& where) {
  auto it = j.find(name);
  if (it == j.end()) fail(where, std::string("missing field \"") + name + "\"");
  return *it;
}

void check_keys(const Json& j, const std::vector<std::string>& allowed,
                const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const std::string& a : allowed) {
      if (it.key() == a) {
        known = true;
        break;
      }
    }
    if (!known) fail(where, "unknown field \"" + it.key() + "\"");
  }
}

void expect_object(const Json& j, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
}

void expect_array(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
}

std::string expect_string(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

int expect_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<int>();
}

std::vector<std::string> string_list(const Json& j, const std::string& where) {
  expect_array(j, where);
  std::vector<std::string> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(expect_string(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

ElementSet set_at(const GroundSet& g, const Json& j, const std::string& where) {
  std::vector<std::string> ids = string_list(j, where);
  ElementSet s = g.empty_set();
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const std::string slot = where + "[" + std::to_string(i) + "]";
    if (!g.has(ids[i])) fail(slot, "unknown element \"" + ids[i] + "\"");
    Element e = g.index_of(ids[i]);
    if (s.contains(e)) fail(slot, "duplicate element \"" + ids[i] + "\"");
    s.insert(e);
  }
  return s;
}

GroundSetPtr ground_at(std::vector<std::string> ids, const std::string& where) {
  try {
    return make_ground(std::move(ids));
  } catch (const InputError& e) {
    fail(where, e.what());
  }
}

MatroidPtr parse_matroid_at(const Json& j, GroundSetPtr ground,
                            const std::string& where, bool allow_role);

// Runs a factory call and prefixes any complaint with the field path.
template <typename Fn>
MatroidPtr built(const std::string& where, Fn&& fn) {
  try {
    return fn();
  } catch (const InputError& e) {
    fail(where, e.what());
  }
}

MatroidPtr parse_graphic(const Json& j, GroundSetPtr ground,
                         const std::string& where) {
  std::vector<std::string> vertices =
      string_list(field(j, "vertices", where), where + ".vertices");
  const Json& edges = field(j, "edges", where);
  expect_object(edges, where + ".edges");
  for (auto it = edges.begin(); it != edges.end(); ++it) {
    if (!ground->has(it.key())) {
      fail(where + ".edges", "unknown element \"" + it.key() + "\"");
    }
  }
  std::vector<std::pair<std::string, std::string>> endpoints;
  endpoints.reserve(ground->size());
  for (const std::string& id : ground->ids()) {
    auto it = edges.find(id);
    if (it == edges.end()) {
      fail(where + ".edges", "missing edge for element \"" + id + "\"");
    }
    const std::string slot = where + ".edges[\"" + id + "\"]";
    expect_array(*it, slot);
    if (it->size() != 2) fail(slot, "expected two endpoint names");
    endpoints.emplace_back(expect_string((*it)[0], slot),
                           expect_string((*it)[1], slot));
  }
  return built(where,
               [&] { return make_graphic(ground, vertices, endpoints); });
}

MatroidPtr parse_partition(const Json& j, GroundSetPtr ground,
                           const std::string& where) {
  const Json& blocks = field(j, "blocks", where);
  expect_array(blocks, where + ".blocks");
  std::vector<std::pair<ElementSet, int>> parsed;
  parsed.reserve(blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const std::string slot = where + ".blocks[" + std::to_string(b) + "]";
    expect_object(blocks[b], slot);
    check_keys(blocks[b], {"elements", "capacity"}, slot);
    parsed.emplace_back(
        set_at(*ground, field(blocks[b], "elements", slot), slot + ".elements"),
        expect_int(field(blocks[b], "capacity", slot), slot + ".capacity"));
  }
  return built(where,
               [&] { return make_partition(ground, std::move(parsed)); });
}

MatroidPtr parse_linear_gf2(const Json& j, GroundSetPtr ground,
                            const std::string& where) {
  const Json& columns = field(j, "columns", where);
  expect_object(columns, where + ".columns");
  for (auto it = columns.begin(); it != columns.end(); ++it) {
    if (!ground->has(it.key())) {
      fail(where + ".columns", "unknown element \"" + it.key() + "\"");
    }
  }
  std::vector<std::uint64_t> parsed;
  parsed.reserve(ground->size());
  for (const std::string& id : ground->ids()) {
    auto it = columns.find(id);
    if (it == columns.end()) {
      fail(where + ".columns", "missing column for element \"" + id + "\"");
    }
    const std::string slot = where + ".columns[\"" + id + "\"]";
    expect_array(*it, slot);
    if (it->size() > 64) fail(slot, "at most 64 rows are supported");
    std::uint64_t column = 0;
    for (std::size_t row = 0; row < it->size(); ++row) {
      int bit = expect_int((*it)[row], slot);
      if (bit != 0 && bit != 1) fail(slot, "rows must be 0 or 1");
      column |= static_cast<std::uint64_t>(bit) << row;
    }
    parsed.push_back(column);
  }
  return built(where,
               [&] { return make_linear_gf2(ground, std::move(parsed)); });
}

MatroidPtr parse_minor(const Json& j, GroundSetPtr ground,
                       const std::string& where) {
  GroundSetPtr inner_ground =
      ground_at(string_list(field(j, "inner_elements", where),
                            where + ".inner_elements"),
                where + ".inner_elements");
  MatroidPtr inner =
      parse_matroid_at(field(j, "inner", where), inner_ground,
                       where + ".inner", /*allow_role=*/false);
  ElementSet contract =
      set_at(*inner_ground, field(j, "contract", where), where + ".contract");
  ElementSet del =
      set_at(*inner_ground, field(j, "delete", where), where + ".delete");
  return built(where,
               [&] { return make_minor(inner, contract, del, ground); });
}

MatroidPtr parse_direct_sum(const Json& j, GroundSetPtr ground,
                            const std::string& where) {
  const Json& parts = field(j, "parts", where);
  expect_array(parts, where + ".parts");
  std::vector<MatroidPtr> members;
  std::vector<std::string> concatenated;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const std::string slot = where + ".parts[" + std::to_string(p) + "]";
    expect_object(parts[p], slot);
    check_keys(parts[p], {"elements", "matroid"}, slot);
    std::vector<std::string> ids = string_list(
        field(parts[p], "elements", slot), slot + ".elements");
    concatenated.insert(concatenated.end(), ids.begin(), ids.end());
    GroundSetPtr part_ground = ground_at(std::move(ids), slot + ".elements");
    members.push_back(parse_matroid_at(field(parts[p], "matroid", slot),
                                       part_ground, slot + ".matroid",
                                       /*allow_role=*/false));
  }
  if (concatenated != ground->ids()) {
    fail(where + ".parts",
         "part element lists must concatenate to the enclosing element list");
  }
  return built(where, [&] { return make_direct_sum(std::move(members)); });
}

MatroidPtr parse_matroid_at(const Json& j, GroundSetPtr ground,
                            const std::string& where, bool allow_role) {
  expect_object(j, where);
  std::string type = expect_string(field(j, "type", where), where + ".type");
  std::vector<std::string> allowed = {"type"};
  if (allow_role) allowed.push_back("role");

  if (type == "uniform") {
    allowed.push_back("rank");
    check_keys(j, allowed, where);
    int rank = expect_int(field(j, "rank", where), where + ".rank");
    return built(where, [&] { return make_uniform(ground, rank); });
  }
  if (type == "free") {
    check_keys(j, allowed, where);
    return make_free(ground);
  }
  if (type == "zero") {
    check_keys(j, allowed, where);
    return make_zero(ground);
  }
  if (type == "graphic") {
    allowed.insert(allowed.end(), {"vertices", "edges"});
    check_keys(j, allowed, where);
    return parse_graphic(j, ground, where);
  }
  if (type == "partition") {
    allowed.push_back("blocks");
    check_keys(j, allowed, where);
    return parse_partition(j, ground, where);
  }
  if (type == "linear_gf2") {
    allowed.push_back("columns");
    check_keys(j, allowed, where);
    return parse_linear_gf2(j, ground, where);
  }
  if (type == "dual") {
    allowed.push_back("inner");
    check_keys(j, allowed, where);
    MatroidPtr inner = parse_matroid_at(field(j, "inner", where), ground,
                                        where + ".inner", false);
    return built(where, [&] { return make_dual(inner); });
  }
  if (type == "looped") {
    allowed.insert(allowed.end(), {"inner", "loops"});
    check_keys(j, allowed, where);
    MatroidPtr inner = parse_matroid_at(field(j, "inner", where), ground,
                                        where + ".inner", false);
    ElementSet loops =
        set_at(*ground, field(j, "loops", where), where + ".loops");
    return built(where, [&] { return make_looped(inner, loops); });
  }
  if (type == "minor") {
    allowed.insert(allowed.end(),
                   {"inner", "inner_elements", "contract", "delete"});
    check_keys(j, allowed, where);
    return parse_minor(j, ground, where);
  }
  if (type == "direct_sum") {
    allowed.push_back("parts");
    check_keys(j, allowed, where);
    return parse_direct_sum(j, ground, where);
  }
  fail(where + ".type", "unknown matroid type \"" + type + "\"");
}

}  // namespace

ParsedInstance parse_instance(const Json& j, const ParseOptions& o) {
  expect_object(j, "instance");
  check_keys(j, {"elements", "matroids"}, "instance");
  std::vector<std::string> elements =
      string_list(field(j, "elements", "instance"), "elements");
  if (!o.allow_large &&
      static_cast<int>(elements.size()) > o.max_elements) {
    fail("elements", "instance has " + std::to_string(elements.size()) +
                         " elements; the cap is " +
                         std::to_string(o.max_elements) +
                         " unless large grounds are enabled");
  }
  ParsedInstance out;
  out.ground = ground_at(std::move(elements), "elements");

  const Json& matroids = field(j, "matroids", "instance");
  expect_array(matroids, "matroids");
  for (std::size_t i = 0; i < matroids.size(); ++i) {
    const std::string where = "matroids[" + std::to_string(i) + "]";
    expect_object(matroids[i], where);
    MatroidRole role = MatroidRole::kFinitary;
    if (matroids[i].contains("role")) {
      std::string name =
          expect_string(matroids[i]["role"], where + ".role");
      if (name == "finitary") {
        role = MatroidRole::kFinitary;
      } else if (name == "cofinitary") {
        role = MatroidRole::kCofinitary;
      } else {
        fail(where + ".role", "expected \"finitary\" or \"cofinitary\"");
      }
    }
    out.members.push_back(
        parse_matroid_at(matroids[i], out.ground, where, /*allow_role=*/true));
    out.roles.push_back(role);
    Json clean = matroids[i];
    clean.erase("role");
    out.matroid_jsons.push_back(std::move(clean));
  }
  return out;
}

ParsedInstance load_instance(const std::string& path, const ParseOptions& o) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file \"" + path + "\"");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
  return parse_instance(j, o);
}

MatroidPtr parse_matroid(const Json& j, GroundSetPtr ground) {
  return parse_matroid_at(j, std::move(ground), "matroid",
                          /*allow_role=*/false);
}

Json set_to_json(const GroundSet& g, const ElementSet& s) {
  return Json(g.ids_of(s));
}

ElementSet set_from_json(const GroundSet& g, const Json& j) {
  return set_at(g, j, "set");
}

std::string mode_name(AssignmentMode m) {
  switch (m) {
    case AssignmentMode::kCovering:
      return "covering";
    case AssignmentMode::kPacking:
      return "packing";
    case AssignmentMode::kPartitioning:
      return "partitioning";
  }
  throw InternalError("unhandled assignment mode");
}

AssignmentMode mode_from_name(const std::string& name) {
  if (name == "covering") return AssignmentMode::kCovering;
  if (name == "packing") return AssignmentMode::kPacking;
  if (name == "partitioning") return AssignmentMode::kPartitioning;
  throw InputError("mode: expected \"covering\", \"packing\" or "
                   "\"partitioning\", got \"" +
                   name + "\"");
}

Json assignment_to_json(const GroundSet& g, AssignmentMode mode,
                        const SetList& parts) {
  Json out = Json::object();
  out["mode"] = mode_name(mode);
  Json part_list = Json::array();
  for (const ElementSet& p : parts) part_list.push_back(set_to_json(g, p));
  out["parts"] = std::move(part_list);
  return out;
}

Assignment assignment_from_json(const GroundSet& g, const Json& j,
                                int expected_parts) {
  expect_object(j, "assignment");
  check_keys(j, {"mode", "parts"}, "assignment");
  AssignmentMode mode = mode_from_name(
      expect_string(field(j, "mode", "assignment"), "assignment.mode"));
  const Json& parts = field(j, "parts", "assignment");
  expect_array(parts, "assignment.parts");
  if (expected_parts >= 0 &&
      static_cast<int>(parts.size()) != expected_parts) {
    fail("assignment.parts",
         "expected " + std::to_string(expected_parts) + " parts, got " +
             std::to_string(parts.size()));
  }
  SetList sets;
  sets.reserve(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    sets.push_back(set_at(
        g, parts[i], "assignment.parts[" + std::to_string(i) + "]"));
  }
  return Assignment{mode, std::move(sets)};
}

Json witness_to_json(const std::string& kind, const GroundSet& g,
                     const DualWitness& w) {
  detail::require(w.element >= 0, "witness carries no blocked element");
  Json out = Json::object();
  out["kind"] = kind;
  out["X"] = set_to_json(g, w.x);
  out["element"] = g.id_of(w.element);
  return out;
}

Json relabel_matroid_json(
    const Json& matroid,
    const std::function<std::string(const std::string&)>& rename) {
  if (!matroid.is_object() || !matroid.contains("type") ||
      !matroid["type"].is_string()) {
    throw InputError("relabel: not a matroid description");
  }
  const std::string type = matroid["type"].get<std::string>();
  Json out = matroid;

  auto rename_list = [&](Json& list) {
    for (Json& id : list) id = rename(id.get<std::string>());
  };
  auto rename_keys = [&](Json& object) {
    Json renamed = Json::object();
    for (auto it = object.begin(); it != object.end(); ++it) {
      renamed[rename(it.key())] = it.value();
    }
    object = std::move(renamed);
  };

  if (type == "uniform" || type == "free" || type == "zero") return out;
  if (type == "graphic") {
    rename_keys(out["edges"]);
    return out;
  }
  if (type == "partition") {
    for (Json& block : out["blocks"]) rename_list(block["elements"]);
    return out;
  }
  if (type == "linear_gf2") {
    rename_keys(out["columns"]);
    return out;
  }
  if (type == "dual") {
    out["inner"] = relabel_matroid_json(out["inner"], rename);
    return out;
  }
  if (type == "looped") {
    out["inner"] = relabel_matroid_json(out["inner"], rename);
    rename_list(out["loops"]);
    return out;
  }
  if (type == "minor") {
    out["inner"] = relabel_matroid_json(out["inner"], rename);
    rename_list(out["inner_elements"]);
    rename_list(out["contract"]);
    rename_list(out["delete"]);
    return out;
  }
  if (type == "direct_sum") {
    for (Json& part : out["parts"]) {
      rename_list(part["elements"]);
      part["matroid"] = relabel_matroid_json(part["matroid"], rename);
    }
    return out;
  }
  throw InputError("relabel: unknown matroid type \"" + type + "\"");
}

std::string to_stable_string(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace matroid
