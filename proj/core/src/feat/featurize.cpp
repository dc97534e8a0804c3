// SPDX-License-Identifier: Apache-2.0

#include "fragx/feat/featurize.hpp"

#include <algorithm>
#include <cmath>

#include "fragx/chem/elements.hpp"
#include "fragx/errors.hpp"

namespace fragx::feat {

namespace {

int clamp_slot(int value, int slots) {
  return std::clamp(value, 0, slots - 1);
}

void set_element(AtomFeatureVector& v, std::string_view element) {
  auto idx = chem::element_index(element);
  v[kElementOffset + (idx ? *idx : chem::kElementSlots - 1)] = 1.0f;
}

enum Hybridization { kSP = 0, kSP2 = 1, kSP3 = 2, kSP3D = 3, kSP3D2 = 4 };

}  // namespace

AtomFeatureVector featurize_mol_atom(const chem::MolGraph& g, int i) {
  const chem::Atom& atom = g.atoms[i];
  AtomFeatureVector v{};
  set_element(v, atom.element);

  int degree = chem::heavy_degree(g, i);
  v[kDegreeOffset + clamp_slot(degree, 11)] = 1.0f;

  int implicit = chem::valence_implicit_hydrogens(g, i);
  v[kValenceOffset + clamp_slot(implicit, 7)] = 1.0f;

  v[kChargeOffset] = static_cast<float>(atom.formal_charge);
  v[kRadicalOffset] = 0.0f;  // the parser never assigns radical electrons

  int doubles = 0, triples = 0;
  for (const chem::Bond& b : g.bonds) {
    if (b.a != i && b.b != i) continue;
    if (b.order == chem::BondOrder::Double) ++doubles;
    if (b.order == chem::BondOrder::Triple) ++triples;
  }
  int hydrogens = chem::attached_hydrogens(g, i);
  int connections = degree + hydrogens;
  Hybridization hyb;
  if (atom.aromatic) {
    hyb = kSP2;
  } else if (triples >= 1 || doubles >= 2) {
    hyb = kSP;
  } else if (doubles == 1) {
    hyb = kSP2;
  } else if (connections > 5) {
    hyb = kSP3D2;
  } else if (connections == 5) {
    hyb = kSP3D;
  } else {
    hyb = kSP3;
  }
  v[kHybridizationOffset + hyb] = 1.0f;

  v[kAromaticOffset] = atom.aromatic ? 1.0f : 0.0f;
  v[kAttachedHOffset + clamp_slot(hydrogens, 4)] = 1.0f;
  return v;
}

AtomFeatureVector featurize_pocket_atom(std::string_view element,
                                        int spatial_degree) {
  AtomFeatureVector v{};
  set_element(v, element);
  v[kDegreeOffset + clamp_slot(spatial_degree, 11)] = 1.0f;
  v[kValenceOffset + clamp_slot(spatial_degree, 7)] = 1.0f;
  v[kChargeOffset] = 0.0f;
  v[kRadicalOffset] = 0.0f;
  v[kHybridizationOffset + kSP3] = 1.0f;
  v[kAromaticOffset] = 0.0f;
  v[kAttachedHOffset + 0] = 1.0f;
  return v;
}

GraphSample fragment_graph(const chem::MolGraph& g, const frag::Fragment& f) {
  if (f.atom_indices.empty()) throw DataError("fragment has no atoms");
  GraphSample sample;
  sample.n = static_cast<std::int64_t>(f.atom_indices.size());
  sample.features.resize(sample.n * kFeatureDim);

  std::vector<int> local_of(g.atoms.size(), -1);
  for (int local = 0; local < sample.n; ++local) {
    int parent = f.atom_indices[local];
    local_of[parent] = local;
    AtomFeatureVector v = featurize_mol_atom(g, parent);
    std::copy(v.begin(), v.end(),
              sample.features.begin() + local * kFeatureDim);
  }
  for (int bi : f.bond_indices) {
    const chem::Bond& b = g.bonds[bi];
    sample.edges.push_back({static_cast<std::uint32_t>(local_of[b.a]),
                            static_cast<std::uint32_t>(local_of[b.b])});
  }
  return sample;
}

GraphSample pocket_graph(const std::vector<chem::PdbAtom>& atoms,
                         double threshold) {
  if (atoms.empty()) throw DataError("pocket selection has no atoms");
  const int n = static_cast<int>(atoms.size());
  const double thr2 = threshold * threshold;

  std::vector<int> degree(n, 0);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double dist2 = 0.0;
      for (int d = 0; d < 3; ++d) {
        double diff = atoms[i].coords[d] - atoms[j].coords[d];
        dist2 += diff * diff;
      }
      if (dist2 < thr2) {
        edges.push_back({static_cast<std::uint32_t>(i),
                         static_cast<std::uint32_t>(j)});
        ++degree[i];
        ++degree[j];
      }
    }
  }

  GraphSample sample;
  sample.n = n;
  sample.features.resize(static_cast<std::size_t>(n) * kFeatureDim);
  for (int i = 0; i < n; ++i) {
    AtomFeatureVector v = featurize_pocket_atom(atoms[i].element, degree[i]);
    std::copy(v.begin(), v.end(), sample.features.begin() + i * kFeatureDim);
  }
  sample.edges = std::move(edges);
  return sample;
}

}  // namespace fragx::feat
