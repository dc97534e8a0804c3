// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "fragx/chem/mol.hpp"
#include "fragx/chem/pdb.hpp"
#include "fragx/frag/fragmenter.hpp"

namespace fragx::feat {

/// Node feature width: element one-hot (44) | degree 0-10 (11) | implicit
/// valence 0-6 (7) | formal charge (1) | radical electrons (1) |
/// hybridization SP/SP2/SP3/SP3D/SP3D2 (5) | aromatic (1) | attached
/// hydrogens 0-3 (4).
inline constexpr int kFeatureDim = 74;

inline constexpr int kElementOffset = 0;
inline constexpr int kDegreeOffset = 44;
inline constexpr int kValenceOffset = 55;
inline constexpr int kChargeOffset = 62;
inline constexpr int kRadicalOffset = 63;
inline constexpr int kHybridizationOffset = 64;
inline constexpr int kAromaticOffset = 69;
inline constexpr int kAttachedHOffset = 70;

using AtomFeatureVector = std::array<float, kFeatureDim>;

/// Node features plus an undirected edge list; the unit fed to the graph
/// encoders. Edges carry no self-loops; layers add their own.
struct GraphSample {
  std::int64_t n = 0;
  std::vector<float> features;  // n * kFeatureDim, row-major
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
};

/// Features of atom i in the context of its parent molecule. Counts beyond
/// a one-hot block's range clamp to the top slot; elements outside the
/// 43-symbol table land in the unknown slot.
AtomFeatureVector featurize_mol_atom(const chem::MolGraph& g, int i);

/// Pocket atoms have no bond graph: degree is the spatial-neighbor count
/// within the edge threshold, the valence block mirrors that count, and
/// hybridization defaults to SP3.
AtomFeatureVector featurize_pocket_atom(std::string_view element,
                                        int spatial_degree);

/// Induced subgraph of a fragment, densely re-indexed in sorted parent-index
/// order. Features are computed in the parent molecule's context, so
/// attachment atoms keep the degree and hydrogen count of the intact drug.
/// Throws DataError on an empty fragment.
GraphSample fragment_graph(const chem::MolGraph& g, const frag::Fragment& f);

/// Spatial graph over pocket atoms: edges between pairs strictly closer than
/// threshold (Angstrom). Isolated nodes are allowed. Throws DataError when
/// atoms is empty.
GraphSample pocket_graph(const std::vector<chem::PdbAtom>& atoms,
                         double threshold = 5.0);

}  // namespace fragx::feat
