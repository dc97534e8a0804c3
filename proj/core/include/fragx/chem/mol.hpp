// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fragx::chem {

enum class BondOrder : std::uint8_t { Single = 1, Double = 2, Triple = 3, Aromatic = 4 };

/// Numeric bond order used in valence arithmetic; aromatic counts as 1.5.
inline double bond_order_value(BondOrder order) {
  switch (order) {
    case BondOrder::Single: return 1.0;
    case BondOrder::Double: return 2.0;
    case BondOrder::Triple: return 3.0;
    case BondOrder::Aromatic: return 1.5;
  }
  return 0.0;
}

struct Atom {
  std::string element;
  int formal_charge = 0;
  /// Hydrogens written inside a bracket atom ([NH4+] has 4). Always 0 for
  /// atoms written without brackets.
  int explicit_h = 0;
  bool aromatic = false;
  bool ring_member = false;
  /// Written as a bracket atom. Bracket atoms carry exactly the hydrogens
  /// they declare; only unbracketed organic-subset atoms get valence-derived
  /// hydrogens.
  bool bracketed = false;
  std::optional<std::array<double, 3>> coords;
};

struct Bond {
  int a = 0;
  int b = 0;
  BondOrder order = BondOrder::Single;
  bool ring_member = false;
};

struct MolGraph {
  std::vector<Atom> atoms;
  std::vector<Bond> bonds;

  /// Neighbor atom indices per atom.
  std::vector<std::vector<int>> adjacency() const;
  /// Incident bond indices per atom.
  std::vector<std::vector<int>> incident_bonds() const;
};

/// Sum of bond orders at atom i (aromatic = 1.5).
double bond_order_sum(const MolGraph& g, int i);

/// Neighbors that are not hydrogen atoms.
int heavy_degree(const MolGraph& g, int i);

/// Hydrogens on atom i that are not graph nodes: the bracket-declared count
/// for bracket atoms, otherwise the count derived from the smallest
/// charge-adjusted default valence that accommodates the bond-order sum
/// (aromatic contributions rounded up), floored at 0.
int implicit_hydrogens(const MolGraph& g, int i);

/// Valence-derived hydrogens only; 0 for bracket atoms. This is the
/// "implicit valence" slot of the feature vector.
int valence_implicit_hydrogens(const MolGraph& g, int i);

/// Total hydrogens attached to atom i: implicit_hydrogens plus any explicit
/// H graph neighbors.
int attached_hydrogens(const MolGraph& g, int i);

/// Marks ring_member on atoms and bonds: a bond is in a ring iff it is not a
/// bridge, an atom iff it has an incident ring bond.
void annotate_rings(MolGraph& g);

}  // namespace fragx::chem
