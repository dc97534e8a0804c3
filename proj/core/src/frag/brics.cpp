// SPDX-License-Identifier: Apache-2.0

#include "fragx/frag/brics.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "fragx/errors.hpp"

namespace fragx::frag {

const char* builtin_brics_rules_json();  // generated translation unit

namespace {

using nlohmann::json;

std::vector<std::string> string_list(const json& j) {
  std::vector<std::string> out;
  for (const auto& v : j) out.push_back(v.get<std::string>());
  return out;
}

Environment parse_environment(const json& j) {
  Environment env;
  env.id = j.at("id").get<std::string>();
  env.elements = string_list(j.at("element"));
  env.aromatic = j.at("aromatic").get<bool>();
  if (j.contains("in_ring")) env.in_ring = j["in_ring"].get<bool>() ? 1 : 0;
  if (j.contains("min_degree")) env.min_degree = j["min_degree"].get<int>();
  if (j.contains("max_degree")) env.max_degree = j["max_degree"].get<int>();
  if (j.contains("only_single_bonds"))
    env.only_single_bonds = j["only_single_bonds"].get<bool>();
  if (j.contains("double_bond_to")) {
    env.double_bond_to = string_list(j["double_bond_to"].at("elements"));
    env.double_bond_min_count = j["double_bond_to"].at("min_count").get<int>();
  }
  if (j.contains("neighbors_subset"))
    env.neighbors_subset = string_list(j["neighbors_subset"]);
  if (j.contains("formal_charge")) {
    env.has_formal_charge = true;
    env.formal_charge = j["formal_charge"].get<int>();
  }
  if (j.contains("ring_neighbor_any"))
    env.ring_neighbor_any = string_list(j["ring_neighbor_any"]);
  if (j.contains("ring_neighbor_count")) {
    env.ring_neighbor_count_elements =
        string_list(j["ring_neighbor_count"].at("elements"));
    env.ring_neighbor_min_count =
        j["ring_neighbor_count"].at("min_count").get<int>();
  }
  if (j.contains("aromatic_neighbor_any"))
    env.aromatic_neighbor_any = string_list(j["aromatic_neighbor_any"]);
  if (j.contains("aromatic_neighbor_count")) {
    env.aromatic_neighbor_count_elements =
        string_list(j["aromatic_neighbor_count"].at("elements"));
    env.aromatic_neighbor_min_count =
        j["aromatic_neighbor_count"].at("min_count").get<int>();
  }
  if (j.contains("ring_carbonyl_neighbor"))
    env.ring_carbonyl_neighbor = j["ring_carbonyl_neighbor"].get<bool>() ? 1 : 0;
  return env;
}

bool contains(const std::vector<std::string>& list, const std::string& value) {
  return std::find(list.begin(), list.end(), value) != list.end();
}

}  // namespace

BricsRuleTable BricsRuleTable::from_json(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("cannot parse rule table JSON: ") + e.what());
  }
  BricsRuleTable table;
  try {
    for (const auto& env : j.at("environments"))
      table.environments_.push_back(parse_environment(env));
    for (const auto& p : j.at("pairs")) {
      CleavagePair pair;
      pair.a = p.at("a").get<std::string>();
      pair.b = p.at("b").get<std::string>();
      if (p.contains("order")) {
        std::string order = p["order"].get<std::string>();
        if (order == "single")
          pair.order = chem::BondOrder::Single;
        else if (order == "double")
          pair.order = chem::BondOrder::Double;
        else
          throw ConfigError("unsupported pair bond order: " + order);
      }
      table.environment(pair.a);  // validates the reference
      table.environment(pair.b);
      table.pairs_.push_back(std::move(pair));
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed rule table: ") + e.what());
  }
  return table;
}

BricsRuleTable BricsRuleTable::from_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open rule table file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return from_json(buffer.str());
}

const BricsRuleTable& BricsRuleTable::builtin() {
  static const BricsRuleTable table = from_json(builtin_brics_rules_json());
  return table;
}

const Environment& BricsRuleTable::environment(const std::string& id) const {
  for (const Environment& env : environments_) {
    if (env.id == id) return env;
  }
  throw ConfigError("rule table references unknown environment: " + id);
}

bool BricsRuleTable::matches(const Environment& env, const chem::MolGraph& g,
                             int atom) const {
  const chem::Atom& a = g.atoms[atom];
  if (!contains(env.elements, a.element)) return false;
  if (a.aromatic != env.aromatic) return false;
  if (env.in_ring == 0 && a.ring_member) return false;
  if (env.in_ring == 1 && !a.ring_member) return false;
  if (env.has_formal_charge && a.formal_charge != env.formal_charge)
    return false;

  int degree = chem::heavy_degree(g, atom);
  if (degree < env.min_degree || degree > env.max_degree) return false;

  int double_to = 0;
  int ring_any = 0, ring_count = 0;
  int arom_any = 0, arom_count = 0;
  bool ring_carbonyl = false;
  for (const chem::Bond& b : g.bonds) {
    int other = -1;
    if (b.a == atom) other = b.b;
    if (b.b == atom) other = b.a;
    if (other < 0) continue;
    const chem::Atom& o = g.atoms[other];
    if (env.only_single_bonds && b.order != chem::BondOrder::Single)
      return false;
    if (b.order == chem::BondOrder::Double &&
        contains(env.double_bond_to, o.element))
      ++double_to;
    if (!env.neighbors_subset.empty() && o.element != "H" &&
        !contains(env.neighbors_subset, o.element))
      return false;
    if (b.ring_member) {
      if (contains(env.ring_neighbor_any, o.element)) ++ring_any;
      if (contains(env.ring_neighbor_count_elements, o.element)) ++ring_count;
      if (o.element == "C") {
        // Carbonyl carbon in the same ring system.
        for (const chem::Bond& b2 : g.bonds) {
          if (b2.order != chem::BondOrder::Double) continue;
          int third = -1;
          if (b2.a == other) third = b2.b;
          if (b2.b == other) third = b2.a;
          if (third >= 0 && g.atoms[third].element == "O") ring_carbonyl = true;
        }
      }
    }
    if (b.order == chem::BondOrder::Aromatic) {
      if (contains(env.aromatic_neighbor_any, o.element)) ++arom_any;
      if (contains(env.aromatic_neighbor_count_elements, o.element))
        ++arom_count;
    }
  }
  if (double_to < env.double_bond_min_count) return false;
  if (!env.ring_neighbor_any.empty() && ring_any == 0) return false;
  if (ring_count < env.ring_neighbor_min_count) return false;
  if (!env.aromatic_neighbor_any.empty() && arom_any == 0) return false;
  if (arom_count < env.aromatic_neighbor_min_count) return false;
  if (env.ring_carbonyl_neighbor == 0 && ring_carbonyl) return false;
  if (env.ring_carbonyl_neighbor == 1 && !ring_carbonyl) return false;
  return true;
}

std::vector<CleavableBond> find_cleavable_bonds(const chem::MolGraph& g,
                                                const BricsRuleTable& table) {
  std::vector<CleavableBond> out;
  for (int bi = 0; bi < static_cast<int>(g.bonds.size()); ++bi) {
    const chem::Bond& bond = g.bonds[bi];
    if (bond.ring_member) continue;
    if (g.atoms[bond.a].element == "H" || g.atoms[bond.b].element == "H")
      continue;
    for (const CleavagePair& pair : table.pairs()) {
      if (bond.order != pair.order) continue;
      const Environment& ea = table.environment(pair.a);
      const Environment& eb = table.environment(pair.b);
      bool forward = table.matches(ea, g, bond.a) && table.matches(eb, g, bond.b);
      bool reverse = table.matches(ea, g, bond.b) && table.matches(eb, g, bond.a);
      if (forward || reverse) {
        out.push_back({bi, pair.a + "-" + pair.b});
        break;
      }
    }
  }
  return out;
}

}  // namespace fragx::frag
