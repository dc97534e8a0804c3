// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>

#include "fragx/chem/mol.hpp"

namespace fragx::chem {

/// Parses a SMILES string (atoms, bonds, branches, ring closures up to %99,
/// bracket atoms with charge and hydrogen count). Stereo markers are read
/// and discarded, isotopes and atom classes ignored. A multi-component
/// input keeps only the largest component. Throws ParseError with the byte
/// offset of the offending token.
MolGraph parse_smiles(std::string_view smiles);

/// Emits a SMILES string that re-parses to a graph with the same atoms and
/// bonds (identity atom order is not preserved across components that were
/// dropped; for a parsed graph the order is the DFS order used here).
std::string write_smiles(const MolGraph& g);

}  // namespace fragx::chem
