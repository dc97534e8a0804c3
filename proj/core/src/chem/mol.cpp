// SPDX-License-Identifier: Apache-2.0

#include "fragx/chem/mol.hpp"

#include <algorithm>
#include <cmath>
#include <stack>

#include "fragx/chem/elements.hpp"

namespace fragx::chem {

std::vector<std::vector<int>> MolGraph::adjacency() const {
  std::vector<std::vector<int>> adj(atoms.size());
  for (const Bond& b : bonds) {
    adj[b.a].push_back(b.b);
    adj[b.b].push_back(b.a);
  }
  return adj;
}

std::vector<std::vector<int>> MolGraph::incident_bonds() const {
  std::vector<std::vector<int>> inc(atoms.size());
  for (int bi = 0; bi < static_cast<int>(bonds.size()); ++bi) {
    inc[bonds[bi].a].push_back(bi);
    inc[bonds[bi].b].push_back(bi);
  }
  return inc;
}

double bond_order_sum(const MolGraph& g, int i) {
  double sum = 0.0;
  for (const Bond& b : g.bonds) {
    if (b.a == i || b.b == i) sum += bond_order_value(b.order);
  }
  return sum;
}

int heavy_degree(const MolGraph& g, int i) {
  int deg = 0;
  for (const Bond& b : g.bonds) {
    int other = -1;
    if (b.a == i) other = b.b;
    if (b.b == i) other = b.a;
    if (other >= 0 && g.atoms[other].element != "H") ++deg;
  }
  return deg;
}

int valence_implicit_hydrogens(const MolGraph& g, int i) {
  const Atom& atom = g.atoms[i];
  if (atom.bracketed) return 0;
  auto valences = default_valences(atom.element);
  if (valences.empty()) return 0;
  // Aromatic half-orders round up, so a fused aromatic carbon (order sum
  // 4.5) exceeds valence 4 and gets no hydrogen.
  int occupied = static_cast<int>(std::ceil(bond_order_sum(g, i) - 1e-9));
  occupied += atom.explicit_h;
  for (int v : valences) {
    int adjusted = charge_adjusted_valence(atom.element, v, atom.formal_charge);
    if (adjusted >= occupied) return adjusted - occupied;
  }
  return 0;
}

int implicit_hydrogens(const MolGraph& g, int i) {
  const Atom& atom = g.atoms[i];
  if (atom.bracketed) return atom.explicit_h;
  return atom.explicit_h + valence_implicit_hydrogens(g, i);
}

int attached_hydrogens(const MolGraph& g, int i) {
  int count = implicit_hydrogens(g, i);
  for (const Bond& b : g.bonds) {
    int other = -1;
    if (b.a == i) other = b.b;
    if (b.b == i) other = b.a;
    if (other >= 0 && g.atoms[other].element == "H") ++count;
  }
  return count;
}

namespace {

// Iterative bridge finding (Tarjan low-link). Non-bridge bonds lie on a
// cycle.
struct BridgeFinder {
  const MolGraph& g;
  std::vector<std::vector<std::pair<int, int>>> adj;  // (neighbor, bond idx)
  std::vector<int> disc, low;
  std::vector<bool> is_bridge;
  int timer = 0;

  explicit BridgeFinder(const MolGraph& graph) : g(graph) {
    adj.resize(g.atoms.size());
    for (int bi = 0; bi < static_cast<int>(g.bonds.size()); ++bi) {
      adj[g.bonds[bi].a].push_back({g.bonds[bi].b, bi});
      adj[g.bonds[bi].b].push_back({g.bonds[bi].a, bi});
    }
    disc.assign(g.atoms.size(), -1);
    low.assign(g.atoms.size(), -1);
    is_bridge.assign(g.bonds.size(), false);
  }

  void run() {
    struct Frame {
      int node;
      int parent_bond;
      std::size_t edge_pos;
    };
    for (int start = 0; start < static_cast<int>(g.atoms.size()); ++start) {
      if (disc[start] != -1) continue;
      std::stack<Frame> stack;
      disc[start] = low[start] = timer++;
      stack.push({start, -1, 0});
      while (!stack.empty()) {
        Frame& f = stack.top();
        if (f.edge_pos < adj[f.node].size()) {
          auto [next, bond] = adj[f.node][f.edge_pos++];
          if (bond == f.parent_bond) continue;
          if (disc[next] == -1) {
            disc[next] = low[next] = timer++;
            stack.push({next, bond, 0});
          } else {
            low[f.node] = std::min(low[f.node], disc[next]);
          }
        } else {
          int node = f.node;
          int parent_bond = f.parent_bond;
          stack.pop();
          if (!stack.empty()) {
            int parent = stack.top().node;
            low[parent] = std::min(low[parent], low[node]);
            if (low[node] > disc[parent]) is_bridge[parent_bond] = true;
          }
        }
      }
    }
  }
};

}  // namespace

void annotate_rings(MolGraph& g) {
  BridgeFinder finder(g);
  finder.run();
  for (Atom& a : g.atoms) a.ring_member = false;
  for (int bi = 0; bi < static_cast<int>(g.bonds.size()); ++bi) {
    bool ring = !finder.is_bridge[bi];
    g.bonds[bi].ring_member = ring;
    if (ring) {
      g.atoms[g.bonds[bi].a].ring_member = true;
      g.atoms[g.bonds[bi].b].ring_member = true;
    }
  }
}

}  // namespace fragx::chem
