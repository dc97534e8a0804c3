// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace fragx::chem {

struct PdbAtom {
  std::string element;
  std::string atom_name;
  std::string residue_name;
  int residue_seq = 0;
  char chain_id = ' ';
  std::array<double, 3> coords{};
};

struct ProteinStructure {
  std::vector<PdbAtom> atoms;
  std::string source_id;
};

/// Reads fixed-column ATOM records from PDB text. HETATM records and waters
/// are skipped, and only the first MODEL of a multi-model file is kept.
/// Throws DataError when no ATOM record survives, ParseError (with the
/// 1-based line number) on a malformed record.
ProteinStructure parse_pdb(std::string_view text, std::string source_id = "");

}  // namespace fragx::chem
