// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "fragx/chem/mol.hpp"

namespace fragx::frag {

/// One endpoint environment of a cleavage rule, matched on element,
/// aromaticity, ring membership, degree and bond-order context.
struct Environment {
  std::string id;
  std::vector<std::string> elements;
  bool aromatic = false;
  int in_ring = -1;  // -1 any, 0 acyclic, 1 cyclic
  int min_degree = 0;
  int max_degree = 1 << 20;
  bool only_single_bonds = false;
  std::vector<std::string> double_bond_to;
  int double_bond_min_count = 0;
  std::vector<std::string> neighbors_subset;  // empty = unconstrained
  bool has_formal_charge = false;
  int formal_charge = 0;
  std::vector<std::string> ring_neighbor_any;
  std::vector<std::string> ring_neighbor_count_elements;
  int ring_neighbor_min_count = 0;
  std::vector<std::string> aromatic_neighbor_any;
  std::vector<std::string> aromatic_neighbor_count_elements;
  int aromatic_neighbor_min_count = 0;
  int ring_carbonyl_neighbor = -1;  // -1 any, 0 forbidden, 1 required
};

struct CleavagePair {
  std::string a;
  std::string b;
  chem::BondOrder order = chem::BondOrder::Single;
};

class BricsRuleTable {
public:
  /// Table shipped with the library (data/brics_rules.json).
  static const BricsRuleTable& builtin();
  static BricsRuleTable from_json(const std::string& json_text);
  static BricsRuleTable from_file(const std::string& path);

  const std::vector<Environment>& environments() const { return environments_; }
  const std::vector<CleavagePair>& pairs() const { return pairs_; }
  const Environment& environment(const std::string& id) const;

  bool matches(const Environment& env, const chem::MolGraph& g, int atom) const;

private:
  std::vector<Environment> environments_;
  std::vector<CleavagePair> pairs_;
};

struct CleavableBond {
  int bond_index = 0;
  /// Matched environment pair, e.g. "L8-L16".
  std::string brics_rule;
};

/// Every acyclic bond between heavy atoms whose endpoints match a rule pair
/// of the table (in either orientation) with the pair's bond order. Results
/// are ordered by bond index; each bond is reported once, with the first
/// matching pair in table order.
std::vector<CleavableBond> find_cleavable_bonds(const chem::MolGraph& g,
                                                const BricsRuleTable& table);

inline std::vector<CleavableBond> find_cleavable_bonds(const chem::MolGraph& g) {
  return find_cleavable_bonds(g, BricsRuleTable::builtin());
}

}  // namespace fragx::frag
