// SPDX-License-Identifier: Apache-2.0

#include "fragx/pocket/pocket.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "fragx/errors.hpp"

namespace fragx::pocket {

namespace {

struct Grid {
  std::array<double, 3> origin;
  double spacing;
  std::array<int, 3> dims;

  std::size_t size() const {
    return static_cast<std::size_t>(dims[0]) * dims[1] * dims[2];
  }
  std::size_t index(int x, int y, int z) const {
    return (static_cast<std::size_t>(x) * dims[1] + y) * dims[2] + z;
  }
  bool inside(int x, int y, int z) const {
    return x >= 0 && y >= 0 && z >= 0 && x < dims[0] && y < dims[1] &&
           z < dims[2];
  }
  std::array<double, 3> point(int x, int y, int z) const {
    return {origin[0] + x * spacing, origin[1] + y * spacing,
            origin[2] + z * spacing};
  }
};

// The 7 scan axes: grid axes plus the 4 body diagonals. An axis is blocked
// when protein occurs on both of its directions.
constexpr std::array<std::array<int, 3>, 7> kScanAxes = {{
    {1, 0, 0},
    {0, 1, 0},
    {0, 0, 1},
    {1, 1, 1},
    {1, 1, -1},
    {1, -1, 1},
    {-1, 1, 1},
}};

void validate(const PocketConfig& cfg) {
  if (cfg.grid <= 0 || cfg.pad < 0 || cfg.occl <= 0 || cfg.range <= 0 ||
      cfg.margin <= 0)
    throw ConfigError("pocket config: grid/occl/range/margin must be positive, pad non-negative");
  if (cfg.min_buried < 0 || cfg.min_buried > 7)
    throw ConfigError("pocket config: min_buried must lie in [0, 7]");
  if (cfg.min_cluster < 1 || cfg.max_pockets < 1)
    throw ConfigError("pocket config: min_cluster and max_pockets must be at least 1");
}

struct Cluster {
  std::vector<std::array<int, 3>> points;
  double buried_sum = 0.0;
};

}  // namespace

std::vector<int> atoms_in_box(const chem::ProteinStructure& protein,
                              const std::array<double, 3>& min_corner,
                              const std::array<double, 3>& max_corner) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(protein.atoms.size()); ++i) {
    const auto& c = protein.atoms[i].coords;
    bool inside = true;
    for (int d = 0; d < 3; ++d)
      inside = inside && c[d] >= min_corner[d] && c[d] <= max_corner[d];
    if (inside) out.push_back(i);
  }
  return out;
}

std::vector<chem::PdbAtom> pocket_atoms(const chem::ProteinStructure& protein,
                                        const PocketBox& box) {
  std::vector<chem::PdbAtom> out;
  for (int i : atoms_in_box(protein, box.min_corner, box.max_corner))
    out.push_back(protein.atoms[i]);
  return out;
}

std::vector<PocketBox> find_pockets(const chem::ProteinStructure& protein,
                                    const PocketConfig& cfg) {
  validate(cfg);
  if (protein.atoms.empty()) throw DataError("protein structure has no atoms");

  std::array<double, 3> lo{std::numeric_limits<double>::infinity(),
                           std::numeric_limits<double>::infinity(),
                           std::numeric_limits<double>::infinity()};
  std::array<double, 3> hi{-std::numeric_limits<double>::infinity(),
                           -std::numeric_limits<double>::infinity(),
                           -std::numeric_limits<double>::infinity()};
  for (const auto& atom : protein.atoms) {
    for (int d = 0; d < 3; ++d) {
      lo[d] = std::min(lo[d], atom.coords[d]);
      hi[d] = std::max(hi[d], atom.coords[d]);
    }
  }

  Grid grid;
  grid.spacing = cfg.grid;
  for (int d = 0; d < 3; ++d) {
    grid.origin[d] = lo[d] - cfg.pad;
    grid.dims[d] =
        static_cast<int>(std::floor((hi[d] + cfg.pad - grid.origin[d]) /
                                    cfg.grid)) +
        1;
  }

  // Occupancy: grid points within occl of any atom.
  std::vector<std::uint8_t> occupied(grid.size(), 0);
  const double occl2 = cfg.occl * cfg.occl;
  for (const auto& atom : protein.atoms) {
    std::array<int, 3> from, to;
    for (int d = 0; d < 3; ++d) {
      from[d] = std::max(
          0, static_cast<int>(
                 std::ceil((atom.coords[d] - cfg.occl - grid.origin[d]) /
                           cfg.grid)));
      to[d] = std::min(
          grid.dims[d] - 1,
          static_cast<int>(std::floor(
              (atom.coords[d] + cfg.occl - grid.origin[d]) / cfg.grid)));
    }
    for (int x = from[0]; x <= to[0]; ++x) {
      for (int y = from[1]; y <= to[1]; ++y) {
        for (int z = from[2]; z <= to[2]; ++z) {
          auto p = grid.point(x, y, z);
          double dist2 = 0.0;
          for (int d = 0; d < 3; ++d) {
            double diff = p[d] - atom.coords[d];
            dist2 += diff * diff;
          }
          if (dist2 <= occl2) occupied[grid.index(x, y, z)] = 1;
        }
      }
    }
  }

  // Buriedness of empty points.
  std::vector<std::uint8_t> buried(grid.size(), 0);
  for (int x = 0; x < grid.dims[0]; ++x) {
    for (int y = 0; y < grid.dims[1]; ++y) {
      for (int z = 0; z < grid.dims[2]; ++z) {
        if (occupied[grid.index(x, y, z)]) continue;
        int axes_blocked = 0;
        for (const auto& axis : kScanAxes) {
          double step_len = cfg.grid * std::sqrt(double(axis[0] * axis[0] +
                                                        axis[1] * axis[1] +
                                                        axis[2] * axis[2]));
          int max_steps = static_cast<int>(std::floor(cfg.range / step_len));
          bool blocked_both = true;
          for (int sign : {1, -1}) {
            bool hit = false;
            for (int s = 1; s <= max_steps && !hit; ++s) {
              int nx = x + sign * s * axis[0];
              int ny = y + sign * s * axis[1];
              int nz = z + sign * s * axis[2];
              if (!grid.inside(nx, ny, nz)) break;
              hit = occupied[grid.index(nx, ny, nz)] != 0;
            }
            if (!hit) {
              blocked_both = false;
              break;
            }
          }
          if (blocked_both) ++axes_blocked;
        }
        buried[grid.index(x, y, z)] = static_cast<std::uint8_t>(axes_blocked);
      }
    }
  }

  // Cluster pocket points (empty, buriedness >= threshold) by
  // 26-connectivity, scanning in index order for determinism.
  std::vector<std::uint8_t> visited(grid.size(), 0);
  std::vector<Cluster> clusters;
  for (int x = 0; x < grid.dims[0]; ++x) {
    for (int y = 0; y < grid.dims[1]; ++y) {
      for (int z = 0; z < grid.dims[2]; ++z) {
        std::size_t idx = grid.index(x, y, z);
        if (visited[idx] || occupied[idx] || buried[idx] < cfg.min_buried)
          continue;
        Cluster cluster;
        std::queue<std::array<int, 3>> queue;
        queue.push({x, y, z});
        visited[idx] = 1;
        while (!queue.empty()) {
          auto [cx, cy, cz] = queue.front();
          queue.pop();
          cluster.points.push_back({cx, cy, cz});
          cluster.buried_sum += buried[grid.index(cx, cy, cz)];
          for (int dx = -1; dx <= 1; ++dx) {
            for (int dy = -1; dy <= 1; ++dy) {
              for (int dz = -1; dz <= 1; ++dz) {
                if (dx == 0 && dy == 0 && dz == 0) continue;
                int nx = cx + dx, ny = cy + dy, nz = cz + dz;
                if (!grid.inside(nx, ny, nz)) continue;
                std::size_t nidx = grid.index(nx, ny, nz);
                if (visited[nidx] || occupied[nidx] ||
                    buried[nidx] < cfg.min_buried)
                  continue;
                visited[nidx] = 1;
                queue.push({nx, ny, nz});
              }
            }
          }
        }
        if (static_cast<int>(cluster.points.size()) >= cfg.min_cluster)
          clusters.push_back(std::move(cluster));
      }
    }
  }

  std::vector<PocketBox> pockets;
  for (const Cluster& cluster : clusters) {
    PocketBox box;
    for (int d = 0; d < 3; ++d) {
      box.min_corner[d] = std::numeric_limits<double>::infinity();
      box.max_corner[d] = -std::numeric_limits<double>::infinity();
    }
    for (const auto& pt : cluster.points) {
      auto p = grid.point(pt[0], pt[1], pt[2]);
      for (int d = 0; d < 3; ++d) {
        box.min_corner[d] = std::min(box.min_corner[d], p[d]);
        box.max_corner[d] = std::max(box.max_corner[d], p[d]);
      }
    }
    for (int d = 0; d < 3; ++d) {
      box.min_corner[d] -= cfg.margin;
      box.max_corner[d] += cfg.margin;
    }
    box.cluster_size = static_cast<int>(cluster.points.size());
    box.score = cluster.buried_sum / cluster.points.size();
    box.atom_indices = atoms_in_box(protein, box.min_corner, box.max_corner);
    pockets.push_back(std::move(box));
  }

  if (pockets.empty()) {
    PocketBox box;
    box.min_corner = lo;
    box.max_corner = hi;
    for (int d = 0; d < 3; ++d) {
      box.min_corner[d] -= cfg.margin;
      box.max_corner[d] += cfg.margin;
    }
    box.score = 0.0;
    box.cluster_size = 0;
    box.atom_indices = atoms_in_box(protein, box.min_corner, box.max_corner);
    return {box};
  }

  std::sort(pockets.begin(), pockets.end(),
            [](const PocketBox& a, const PocketBox& b) {
              if (a.cluster_size != b.cluster_size)
                return a.cluster_size > b.cluster_size;
              return a.min_corner < b.min_corner;
            });
  if (static_cast<int>(pockets.size()) > cfg.max_pockets)
    pockets.resize(cfg.max_pockets);
  return pockets;
}

}  // namespace fragx::pocket
