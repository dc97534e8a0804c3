// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>

#include "fragx/pocket/pocket.hpp"

namespace fragx {

struct PreprocessConfig {
  int max_blocks = 4;
  int max_fragments = 32;
  double edge_threshold = 5.0;  // pocket graph edge cutoff, Angstrom
  double drop_limit = 0.10;     // preprocess fails above this drop fraction
  std::string brics_rules;      // optional path; empty = builtin table
  pocket::PocketConfig pocket;
};

struct ModelConfig {
  std::int64_t gnn_hidden = 64;
  std::int64_t embed_dim = 64;
  int heads = 4;
  int hops = 2;  // TAGCN hop count K
  int latents = 8;
  double dropout = 0.0;
};

struct TrainConfig {
  double lr = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
  int batch_size = 32;
  int epochs = 100;
  int patience = 10;
};

struct RunConfig {
  std::uint64_t seed = 42;
  PreprocessConfig preprocess;
  ModelConfig model;
  TrainConfig train;
};

/// Loads a config JSON file. Missing keys take their defaults; unknown keys
/// are rejected. Throws ConfigError on invalid values.
RunConfig load_config(const std::string& path);
RunConfig parse_config(const std::string& json_text);

/// Canonical JSON rendering (sorted keys) of the full config.
std::string config_to_json(const RunConfig& cfg);

/// FNV-1a hash of the canonical rendering of the preprocessing-relevant
/// subset (preprocess section only). Caches record this hash; training
/// verifies it.
std::uint64_t preprocess_config_hash(const RunConfig& cfg);

void validate_config(const RunConfig& cfg);

}  // namespace fragx
