// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <vector>

#include "fragx/chem/pdb.hpp"

namespace fragx::pocket {

struct PocketConfig {
  double grid = 1.0;     // grid spacing, Angstrom
  double pad = 4.0;      // padding around the protein bounding box
  double occl = 2.5;     // grid point is protein-occupied within this radius
  double range = 8.0;    // scan distance per axis direction
  double margin = 2.0;   // box expansion around a cluster; must be positive
  int min_buried = 5;    // of the 7 scan axes
  int min_cluster = 30;  // grid points
  int max_pockets = 16;
};

struct PocketBox {
  std::array<double, 3> min_corner{};
  std::array<double, 3> max_corner{};
  std::vector<int> atom_indices;  // protein atoms inside the box
  double score = 0.0;             // mean buriedness of the cluster
  int cluster_size = 0;           // grid points; 0 for the fallback box
};

/// Buriedness grid scan. A cubic grid covers the padded protein bounding
/// volume; empty grid points count how many of 7 scan axes (x, y, z, four
/// cube diagonals) see protein on both sides within range. Points with
/// buriedness >= min_buried cluster by 26-connectivity; clusters of at least
/// min_cluster points become boxes (cluster bounds + margin), ranked by
/// cluster size. When nothing qualifies, the whole-protein bounding box is
/// returned with score 0.
std::vector<PocketBox> find_pockets(const chem::ProteinStructure& protein,
                                    const PocketConfig& cfg = {});

/// Atoms whose coordinates lie inside [min_corner, max_corner], in input
/// order.
std::vector<chem::PdbAtom> pocket_atoms(const chem::ProteinStructure& protein,
                                        const PocketBox& box);

std::vector<int> atoms_in_box(const chem::ProteinStructure& protein,
                              const std::array<double, 3>& min_corner,
                              const std::array<double, 3>& max_corner);

}  // namespace fragx::pocket
