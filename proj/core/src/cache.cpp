#include "hanoi/cache.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <optional>

#include "hanoi/error.hpp"

namespace hanoi {

namespace {

constexpr char kMagic[4] = {'H', 'G', 'D', 'T'};

}  // namespace

std::vector<std::uint8_t> encode_distance_table(const DistanceTable& table) {
  const auto& params = table.params();
  if (params.disks() > 255) throw InvalidArgument("cache header cannot hold n > 255");
  const auto entries = table.entries();
  std::vector<std::uint8_t> out;
  out.reserve(kCacheHeaderSize + 2 * entries.size());
  out.insert(out.end(), std::begin(kMagic), std::end(kMagic));
  out.push_back(kCacheVersion);
  out.push_back(static_cast<std::uint8_t>(params.pegs()));
  out.push_back(static_cast<std::uint8_t>(params.disks()));
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(table.source_code() >> (8 * i)));
  for (Distance d : entries) {
    if (d == kUnreached) throw InvalidArgument("cache entry overflow: distance does not fit below 65535");
    out.push_back(static_cast<std::uint8_t>(d & 0xFF));
    out.push_back(static_cast<std::uint8_t>(d >> 8));
  }
  return out;
}

DistanceTable decode_distance_table(const std::vector<std::uint8_t>& bytes) {
  if (bytes.size() < kCacheHeaderSize) throw FormatError("distance cache truncated: header incomplete");
  if (!std::equal(std::begin(kMagic), std::end(kMagic), bytes.begin())) {
    throw FormatError("distance cache has bad magic");
  }
  if (bytes[4] != kCacheVersion) {
    throw FormatError("unsupported distance cache version " + std::to_string(bytes[4]));
  }
  std::optional<PuzzleParams> params;
  try {
    params.emplace(bytes[5], bytes[6]);
  } catch (const Error& e) {
    throw FormatError(std::string("distance cache header: ") + e.what());
  }
  Code source = 0;
  for (int i = 0; i < 8; ++i) source |= static_cast<Code>(bytes[7 + i]) << (8 * i);
  const std::uint64_t expected = kCacheHeaderSize + 2 * params->vertex_count();
  if (bytes.size() < expected) throw FormatError("distance cache truncated");
  if (bytes.size() > expected) throw FormatError("distance cache has trailing bytes");
  std::vector<Distance> dist(params->vertex_count());
  for (std::size_t i = 0; i < dist.size(); ++i) {
    const std::size_t at = kCacheHeaderSize + 2 * i;
    dist[i] = static_cast<Distance>(bytes[at] | (bytes[at + 1] << 8));
  }
  if (source >= params->vertex_count()) throw FormatError("distance cache source out of range");
  DistanceTable table(*params, source, std::move(dist));
  for (Code u = 0; u < params->vertex_count(); ++u) {
    codes::for_each_neighbor(*params, u, [&](Code w) {
      if (table[u] > table[w] + 1) throw FormatError("distance cache violates the BFS layer property");
    });
  }
  return table;
}

std::string cache_file_name(const PuzzleParams& params, Code source) {
  return "hgdt_" + std::to_string(params.pegs()) + "_" + std::to_string(params.disks()) + "_" +
         std::to_string(source) + ".bin";
}

std::filesystem::path save_distance_table(const DistanceTable& table, const std::filesystem::path& directory) {
  const auto bytes = encode_distance_table(table);
  std::error_code ec;
  std::filesystem::create_directories(directory, ec);
  if (ec) throw Error("cannot create cache directory " + directory.string() + ": " + ec.message());
  const auto path = directory / cache_file_name(table.params(), table.source_code());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  out.close();
  if (!out) throw Error("failed writing distance cache " + path.string());
  return path;
}

DistanceTable load_distance_table(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open distance cache " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return decode_distance_table(bytes);
}

}  // namespace hanoi
