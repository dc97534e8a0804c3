// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <utility>
#include <vector>

#include "fragx/frag/brics.hpp"

namespace fragx::frag {

/// Connected union of building blocks, carried as parent-graph indices.
struct Fragment {
  std::vector<int> atom_indices;               // sorted parent atom indices
  std::vector<int> bond_indices;               // induced parent bond indices
  std::vector<std::pair<int, int>> attachment_points;  // (inside, outside)
  int block_count = 0;
};

/// Connected components after deleting the cleavable bonds. Every atom lands
/// in exactly one block; blocks are ordered by their smallest atom index and
/// their atom lists are sorted.
std::vector<std::vector<int>> building_blocks(
    const chem::MolGraph& g, const std::vector<CleavableBond>& cleavable);

/// All fragments formed by connected combinations of 1..max_blocks building
/// blocks (blocks adjacent iff joined by a cleaved bond), ordered
/// lexicographically by sorted atom indices. A molecule without cleavable
/// bonds yields exactly one fragment covering the whole molecule.
/// Throws ConfigError when max_blocks < 1.
std::vector<Fragment> enumerate_fragments(
    const chem::MolGraph& g, const std::vector<CleavableBond>& cleavable,
    int max_blocks);

/// Caps a fragment list at max_fragments, keeping larger block counts first
/// (ties broken lexicographically by atom indices) and returning the kept
/// fragments in lexicographic order.
std::vector<Fragment> select_fragments(std::vector<Fragment> fragments,
                                       int max_fragments);

}  // namespace fragx::frag
