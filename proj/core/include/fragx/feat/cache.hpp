// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "fragx/feat/featurize.hpp"

namespace fragx::feat {

struct CachedFragment {
  std::vector<std::uint32_t> parent_atoms;  // indices into the drug molecule
  GraphSample graph;
};

struct CachedPocket {
  std::array<double, 3> min_corner{};
  std::array<double, 3> max_corner{};
  double score = 0.0;
  GraphSample graph;
};

/// One labeled drug-protein pair, fully featurized.
struct InteractionSample {
  std::string drug_id;
  std::string protein_id;
  std::uint8_t label = 0;
  std::vector<CachedFragment> fragments;  // at least 1
  std::vector<CachedPocket> pockets;      // at least 1
};

struct SampleCache {
  std::uint64_t config_hash = 0;
  std::vector<InteractionSample> samples;
};

inline constexpr std::uint32_t kCacheVersion = 1;

/// Little-endian binary layout:
///   magic "FXDC", u32 version, u64 config_hash, u32 sample count, then per
///   sample: drug_id, protein_id (u32 length + bytes), u8 label, u32
///   fragment count, u32 pocket count, fragments, pockets. A fragment is
///   u32 parent-atom count + u32 indices followed by its graph; a pocket is
///   3+3 f64 corners + f64 score followed by its graph. A graph is u32 n,
///   n*74 f32 features, u32 edge count, u32 index pairs.
void write_cache(const std::string& path, const SampleCache& cache);

/// Throws DataError on a missing file, bad magic, or version mismatch.
SampleCache read_cache(const std::string& path);

}  // namespace fragx::feat
