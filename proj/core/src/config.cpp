// SPDX-License-Identifier: Apache-2.0

#include "fragx/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "fragx/errors.hpp"

namespace fragx {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& j, const std::set<std::string>& known,
                         const std::string& section) {
  for (const auto& [key, value] : j.items()) {
    if (!known.contains(key))
      throw ConfigError("unknown config key '" + section + key + "'");
  }
}

template <class T>
void read(const json& j, const char* key, T& out) {
  if (!j.contains(key)) return;
  try {
    out = j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError(std::string("config key '") + key + "' has wrong type");
  }
}

json pocket_to_json(const pocket::PocketConfig& p) {
  return json{{"grid", p.grid},
              {"pad", p.pad},
              {"occl", p.occl},
              {"range", p.range},
              {"margin", p.margin},
              {"min_buried", p.min_buried},
              {"min_cluster", p.min_cluster},
              {"max_pockets", p.max_pockets}};
}

json preprocess_to_json(const PreprocessConfig& p) {
  return json{{"max_blocks", p.max_blocks},
              {"max_fragments", p.max_fragments},
              {"edge_threshold", p.edge_threshold},
              {"drop_limit", p.drop_limit},
              {"brics_rules", p.brics_rules},
              {"pocket", pocket_to_json(p.pocket)}};
}

}  // namespace

RunConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("cannot parse config JSON: ") + e.what());
  }
  RunConfig cfg;
  reject_unknown_keys(j, {"seed", "preprocess", "model", "train"}, "");
  read(j, "seed", cfg.seed);

  if (j.contains("preprocess")) {
    const json& p = j["preprocess"];
    reject_unknown_keys(p,
                        {"max_blocks", "max_fragments", "edge_threshold",
                         "drop_limit", "brics_rules", "pocket"},
                        "preprocess.");
    read(p, "max_blocks", cfg.preprocess.max_blocks);
    read(p, "max_fragments", cfg.preprocess.max_fragments);
    read(p, "edge_threshold", cfg.preprocess.edge_threshold);
    read(p, "drop_limit", cfg.preprocess.drop_limit);
    read(p, "brics_rules", cfg.preprocess.brics_rules);
    if (p.contains("pocket")) {
      const json& pk = p["pocket"];
      reject_unknown_keys(pk,
                          {"grid", "pad", "occl", "range", "margin",
                           "min_buried", "min_cluster", "max_pockets"},
                          "preprocess.pocket.");
      read(pk, "grid", cfg.preprocess.pocket.grid);
      read(pk, "pad", cfg.preprocess.pocket.pad);
      read(pk, "occl", cfg.preprocess.pocket.occl);
      read(pk, "range", cfg.preprocess.pocket.range);
      read(pk, "margin", cfg.preprocess.pocket.margin);
      read(pk, "min_buried", cfg.preprocess.pocket.min_buried);
      read(pk, "min_cluster", cfg.preprocess.pocket.min_cluster);
      read(pk, "max_pockets", cfg.preprocess.pocket.max_pockets);
    }
  }

  if (j.contains("model")) {
    const json& m = j["model"];
    reject_unknown_keys(
        m, {"gnn_hidden", "embed_dim", "heads", "hops", "latents", "dropout"},
        "model.");
    read(m, "gnn_hidden", cfg.model.gnn_hidden);
    read(m, "embed_dim", cfg.model.embed_dim);
    read(m, "heads", cfg.model.heads);
    read(m, "hops", cfg.model.hops);
    read(m, "latents", cfg.model.latents);
    read(m, "dropout", cfg.model.dropout);
  }

  if (j.contains("train")) {
    const json& t = j["train"];
    reject_unknown_keys(t,
                        {"lr", "beta1", "beta2", "eps", "batch_size", "epochs",
                         "patience"},
                        "train.");
    read(t, "lr", cfg.train.lr);
    read(t, "beta1", cfg.train.beta1);
    read(t, "beta2", cfg.train.beta2);
    read(t, "eps", cfg.train.eps);
    read(t, "batch_size", cfg.train.batch_size);
    read(t, "epochs", cfg.train.epochs);
    read(t, "patience", cfg.train.patience);
  }

  validate_config(cfg);
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

void validate_config(const RunConfig& cfg) {
  if (cfg.preprocess.max_blocks < 1)
    throw ConfigError("preprocess.max_blocks must be at least 1");
  if (cfg.preprocess.max_fragments < 1)
    throw ConfigError("preprocess.max_fragments must be at least 1");
  if (cfg.preprocess.edge_threshold <= 0)
    throw ConfigError("preprocess.edge_threshold must be positive");
  if (cfg.preprocess.drop_limit < 0 || cfg.preprocess.drop_limit > 1)
    throw ConfigError("preprocess.drop_limit must lie in [0, 1]");
  const auto& p = cfg.preprocess.pocket;
  if (p.grid <= 0 || p.occl <= 0 || p.range <= 0 || p.margin <= 0 || p.pad < 0)
    throw ConfigError("preprocess.pocket: grid/occl/range/margin must be positive, pad non-negative");
  if (p.min_buried < 0 || p.min_buried > 7)
    throw ConfigError("preprocess.pocket.min_buried must lie in [0, 7]");
  if (p.min_cluster < 1 || p.max_pockets < 1)
    throw ConfigError("preprocess.pocket: min_cluster and max_pockets must be at least 1");
  if (cfg.model.gnn_hidden < 1 || cfg.model.embed_dim < 1)
    throw ConfigError("model dimensions must be positive");
  if (cfg.model.heads < 1 || cfg.model.embed_dim % cfg.model.heads != 0)
    throw ConfigError("model.embed_dim must be divisible by model.heads");
  if (cfg.model.hops < 1) throw ConfigError("model.hops must be at least 1");
  if (cfg.model.latents < 1)
    throw ConfigError("model.latents must be at least 1");
  if (cfg.model.dropout < 0 || cfg.model.dropout >= 1)
    throw ConfigError("model.dropout must lie in [0, 1)");
  if (cfg.train.lr <= 0) throw ConfigError("train.lr must be positive");
  if (cfg.train.batch_size < 1 || cfg.train.epochs < 1 || cfg.train.patience < 1)
    throw ConfigError("train: batch_size, epochs and patience must be at least 1");
}

std::string config_to_json(const RunConfig& cfg) {
  json j{{"seed", cfg.seed},
         {"preprocess", preprocess_to_json(cfg.preprocess)},
         {"model",
          json{{"gnn_hidden", cfg.model.gnn_hidden},
               {"embed_dim", cfg.model.embed_dim},
               {"heads", cfg.model.heads},
               {"hops", cfg.model.hops},
               {"latents", cfg.model.latents},
               {"dropout", cfg.model.dropout}}},
         {"train",
          json{{"lr", cfg.train.lr},
               {"beta1", cfg.train.beta1},
               {"beta2", cfg.train.beta2},
               {"eps", cfg.train.eps},
               {"batch_size", cfg.train.batch_size},
               {"epochs", cfg.train.epochs},
               {"patience", cfg.train.patience}}}};
  return j.dump(2);
}

std::uint64_t preprocess_config_hash(const RunConfig& cfg) {
  std::string canonical = preprocess_to_json(cfg.preprocess).dump();
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

}  // namespace fragx
