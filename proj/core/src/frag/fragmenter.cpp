// SPDX-License-Identifier: Apache-2.0

#include "fragx/frag/fragmenter.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "fragx/errors.hpp"

namespace fragx::frag {

std::vector<std::vector<int>> building_blocks(
    const chem::MolGraph& g, const std::vector<CleavableBond>& cleavable) {
  std::vector<bool> cut(g.bonds.size(), false);
  for (const CleavableBond& cb : cleavable) cut[cb.bond_index] = true;

  std::vector<std::vector<int>> adj(g.atoms.size());
  for (int bi = 0; bi < static_cast<int>(g.bonds.size()); ++bi) {
    if (cut[bi]) continue;
    adj[g.bonds[bi].a].push_back(g.bonds[bi].b);
    adj[g.bonds[bi].b].push_back(g.bonds[bi].a);
  }

  std::vector<std::vector<int>> blocks;
  std::vector<bool> seen(g.atoms.size(), false);
  for (int start = 0; start < static_cast<int>(g.atoms.size()); ++start) {
    if (seen[start]) continue;
    std::vector<int> block;
    std::queue<int> queue;
    queue.push(start);
    seen[start] = true;
    while (!queue.empty()) {
      int node = queue.front();
      queue.pop();
      block.push_back(node);
      for (int next : adj[node]) {
        if (!seen[next]) {
          seen[next] = true;
          queue.push(next);
        }
      }
    }
    std::sort(block.begin(), block.end());
    blocks.push_back(std::move(block));
  }
  return blocks;
}

namespace {

Fragment make_fragment(const chem::MolGraph& g,
                       const std::vector<std::vector<int>>& blocks,
                       const std::vector<int>& block_set) {
  Fragment frag;
  frag.block_count = static_cast<int>(block_set.size());
  for (int b : block_set) {
    frag.atom_indices.insert(frag.atom_indices.end(), blocks[b].begin(),
                             blocks[b].end());
  }
  std::sort(frag.atom_indices.begin(), frag.atom_indices.end());

  std::vector<bool> inside(g.atoms.size(), false);
  for (int a : frag.atom_indices) inside[a] = true;
  for (int bi = 0; bi < static_cast<int>(g.bonds.size()); ++bi) {
    const chem::Bond& bond = g.bonds[bi];
    bool a_in = inside[bond.a], b_in = inside[bond.b];
    if (a_in && b_in) {
      frag.bond_indices.push_back(bi);
    } else if (a_in) {
      frag.attachment_points.push_back({bond.a, bond.b});
    } else if (b_in) {
      frag.attachment_points.push_back({bond.b, bond.a});
    }
  }
  return frag;
}

}  // namespace

std::vector<Fragment> enumerate_fragments(
    const chem::MolGraph& g, const std::vector<CleavableBond>& cleavable,
    int max_blocks) {
  if (max_blocks < 1)
    throw ConfigError("max_blocks must be at least 1, got " +
                      std::to_string(max_blocks));

  auto blocks = building_blocks(g, cleavable);
  int n_blocks = static_cast<int>(blocks.size());

  // Block adjacency: blocks joined by a cleaved bond.
  std::vector<int> block_of(g.atoms.size(), -1);
  for (int b = 0; b < n_blocks; ++b) {
    for (int a : blocks[b]) block_of[a] = b;
  }
  std::vector<std::set<int>> block_adj(n_blocks);
  for (const CleavableBond& cb : cleavable) {
    const chem::Bond& bond = g.bonds[cb.bond_index];
    int ba = block_of[bond.a], bb = block_of[bond.b];
    if (ba != bb) {
      block_adj[ba].insert(bb);
      block_adj[bb].insert(ba);
    }
  }

  // Grow connected block sets breadth-first, deduplicating by sorted set.
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> frontier;
  for (int b = 0; b < n_blocks; ++b) {
    frontier.push_back({b});
    seen.insert({b});
  }
  std::vector<std::vector<int>> all_sets = frontier;
  for (int size = 2; size <= max_blocks; ++size) {
    std::vector<std::vector<int>> next;
    for (const auto& set : frontier) {
      for (int b : set) {
        for (int nb : block_adj[b]) {
          if (std::binary_search(set.begin(), set.end(), nb)) continue;
          std::vector<int> grown = set;
          grown.insert(std::upper_bound(grown.begin(), grown.end(), nb), nb);
          if (seen.insert(grown).second) next.push_back(grown);
        }
      }
    }
    all_sets.insert(all_sets.end(), next.begin(), next.end());
    frontier = std::move(next);
  }

  std::vector<Fragment> fragments;
  fragments.reserve(all_sets.size());
  for (const auto& set : all_sets)
    fragments.push_back(make_fragment(g, blocks, set));
  std::sort(fragments.begin(), fragments.end(),
            [](const Fragment& x, const Fragment& y) {
              return x.atom_indices < y.atom_indices;
            });
  return fragments;
}

std::vector<Fragment> select_fragments(std::vector<Fragment> fragments,
                                       int max_fragments) {
  if (max_fragments < 1)
    throw ConfigError("max_fragments must be at least 1, got " +
                      std::to_string(max_fragments));
  if (static_cast<int>(fragments.size()) <= max_fragments) return fragments;
  std::stable_sort(fragments.begin(), fragments.end(),
                   [](const Fragment& x, const Fragment& y) {
                     if (x.block_count != y.block_count)
                       return x.block_count > y.block_count;
                     return x.atom_indices < y.atom_indices;
                   });
  fragments.resize(max_fragments);
  std::sort(fragments.begin(), fragments.end(),
            [](const Fragment& x, const Fragment& y) {
              return x.atom_indices < y.atom_indices;
            });
  return fragments;
}

}  // namespace fragx::frag
