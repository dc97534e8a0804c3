// Test-side helpers: synthetic PDB records and an isomorphism-invariant
// molecule signature used by round-trip checks.
#pragma once

#include <algorithm>
#include <cstdio>
#include <string>
#include <tuple>
#include <vector>

#include "fragx/chem/mol.hpp"

namespace testsupport {

inline std::string pdb_atom_line(int serial, const char* name,
                                 const char* res_name, char chain, int seq,
                                 double x, double y, double z,
                                 const char* element = "",
                                 const char* record = "ATOM") {
  char buf[96];
  std::snprintf(buf, sizeof(buf),
                "%-6s%5d %-4s %-3s %c%4d    %8.3f%8.3f%8.3f%6.2f%6.2f          %2s",
                record, serial, name, res_name, chain, seq, x, y, z, 1.0, 0.0,
                element);
  return std::string(buf) + "\n";
}

using AtomSig = std::tuple<std::string, int, int, bool>;
using EdgeSig = std::tuple<AtomSig, AtomSig, int>;

struct MolSignature {
  std::vector<AtomSig> atoms;
  std::vector<EdgeSig> edges;
  bool operator==(const MolSignature&) const = default;
};

// Sorted (element, degree, charge, aromatic) multiset plus the edge multiset
// over endpoint signatures: invariant under graph isomorphism.
inline MolSignature signature(const fragx::chem::MolGraph& g) {
  MolSignature sig;
  std::vector<AtomSig> per_atom;
  for (int i = 0; i < static_cast<int>(g.atoms.size()); ++i) {
    per_atom.push_back({g.atoms[i].element, fragx::chem::heavy_degree(g, i),
                        g.atoms[i].formal_charge, g.atoms[i].aromatic});
  }
  sig.atoms = per_atom;
  std::sort(sig.atoms.begin(), sig.atoms.end());
  for (const auto& b : g.bonds) {
    AtomSig lo = per_atom[b.a], hi = per_atom[b.b];
    if (hi < lo) std::swap(lo, hi);
    sig.edges.push_back({lo, hi, static_cast<int>(b.order)});
  }
  std::sort(sig.edges.begin(), sig.edges.end());
  return sig;
}

}  // namespace testsupport
