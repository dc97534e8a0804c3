// SPDX-License-Identifier: Apache-2.0

#include "fragx/feat/cache.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <limits>

#include "fragx/errors.hpp"

static_assert(std::endian::native == std::endian::little,
              "cache serialization assumes a little-endian host");

namespace fragx::feat {

namespace {

constexpr char kMagic[4] = {'F', 'X', 'D', 'C'};

template <class T>
void put(std::ostream& out, T value) {
  out.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

void put_string(std::ostream& out, const std::string& s) {
  put<std::uint32_t>(out, static_cast<std::uint32_t>(s.size()));
  out.write(s.data(), static_cast<std::streamsize>(s.size()));
}

void put_graph(std::ostream& out, const GraphSample& g) {
  put<std::uint32_t>(out, static_cast<std::uint32_t>(g.n));
  out.write(reinterpret_cast<const char*>(g.features.data()),
            static_cast<std::streamsize>(g.features.size() * sizeof(float)));
  put<std::uint32_t>(out, static_cast<std::uint32_t>(g.edges.size()));
  for (const auto& [a, b] : g.edges) {
    put<std::uint32_t>(out, a);
    put<std::uint32_t>(out, b);
  }
}

template <class T>
T get(std::istream& in) {
  T value{};
  in.read(reinterpret_cast<char*>(&value), sizeof(T));
  if (!in) throw DataError("sample cache truncated");
  return value;
}

std::string get_string(std::istream& in) {
  auto len = get<std::uint32_t>(in);
  std::string s(len, '\0');
  in.read(s.data(), len);
  if (!in) throw DataError("sample cache truncated");
  return s;
}

GraphSample get_graph(std::istream& in) {
  GraphSample g;
  g.n = get<std::uint32_t>(in);
  g.features.resize(static_cast<std::size_t>(g.n) * kFeatureDim);
  in.read(reinterpret_cast<char*>(g.features.data()),
          static_cast<std::streamsize>(g.features.size() * sizeof(float)));
  if (!in) throw DataError("sample cache truncated");
  auto edge_count = get<std::uint32_t>(in);
  g.edges.resize(edge_count);
  for (auto& [a, b] : g.edges) {
    a = get<std::uint32_t>(in);
    b = get<std::uint32_t>(in);
  }
  return g;
}

}  // namespace

void write_cache(const std::string& path, const SampleCache& cache) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot open cache file for writing: " + path);
  out.write(kMagic, sizeof(kMagic));
  put<std::uint32_t>(out, kCacheVersion);
  put<std::uint64_t>(out, cache.config_hash);
  put<std::uint32_t>(out, static_cast<std::uint32_t>(cache.samples.size()));
  for (const InteractionSample& s : cache.samples) {
    put_string(out, s.drug_id);
    put_string(out, s.protein_id);
    put<std::uint8_t>(out, s.label);
    put<std::uint32_t>(out, static_cast<std::uint32_t>(s.fragments.size()));
    put<std::uint32_t>(out, static_cast<std::uint32_t>(s.pockets.size()));
    for (const CachedFragment& f : s.fragments) {
      put<std::uint32_t>(out, static_cast<std::uint32_t>(f.parent_atoms.size()));
      for (std::uint32_t a : f.parent_atoms) put<std::uint32_t>(out, a);
      put_graph(out, f.graph);
    }
    for (const CachedPocket& p : s.pockets) {
      for (double v : p.min_corner) put<double>(out, v);
      for (double v : p.max_corner) put<double>(out, v);
      put<double>(out, p.score);
      put_graph(out, p.graph);
    }
  }
  if (!out) throw DataError("failed writing cache file: " + path);
}

SampleCache read_cache(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open cache file: " + path);
  char magic[4];
  in.read(magic, sizeof(magic));
  if (!in || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0)
    throw DataError("not a sample cache file: " + path);
  auto version = get<std::uint32_t>(in);
  if (version != kCacheVersion)
    throw DataError("sample cache version " + std::to_string(version) +
                    " is incompatible with expected version " +
                    std::to_string(kCacheVersion));
  SampleCache cache;
  cache.config_hash = get<std::uint64_t>(in);
  auto count = get<std::uint32_t>(in);
  cache.samples.resize(count);
  for (InteractionSample& s : cache.samples) {
    s.drug_id = get_string(in);
    s.protein_id = get_string(in);
    s.label = get<std::uint8_t>(in);
    auto frag_count = get<std::uint32_t>(in);
    auto pocket_count = get<std::uint32_t>(in);
    s.fragments.resize(frag_count);
    for (CachedFragment& f : s.fragments) {
      auto atom_count = get<std::uint32_t>(in);
      f.parent_atoms.resize(atom_count);
      for (auto& a : f.parent_atoms) a = get<std::uint32_t>(in);
      f.graph = get_graph(in);
    }
    s.pockets.resize(pocket_count);
    for (CachedPocket& p : s.pockets) {
      for (double& v : p.min_corner) v = get<double>(in);
      for (double& v : p.max_corner) v = get<double>(in);
      p.score = get<double>(in);
      p.graph = get_graph(in);
    }
  }
  return cache;
}

}  // namespace fragx::feat
