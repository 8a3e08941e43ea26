#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "hanoi/metric.hpp"

namespace hanoi {

/// On-disk distance table, all integers little-endian:
///
///   offset  size  field
///   0       4     ASCII "HGDT"
///   4       1     version (1)
///   5       1     k
///   6       1     n
///   7       8     source packed code
///   15      2*N   N = k^n unsigned 16-bit distances in code order
inline constexpr std::uint8_t kCacheVersion = 1;
inline constexpr std::size_t kCacheHeaderSize = 15;

std::vector<std::uint8_t> encode_distance_table(const DistanceTable& table);
// Throws FormatError on bad magic, version, length or table invariants.
DistanceTable decode_distance_table(const std::vector<std::uint8_t>& bytes);

// hgdt_<k>_<n>_<source code>.bin
std::string cache_file_name(const PuzzleParams& params, Code source);

/// Writes the table into `directory` (created if missing) and returns the
/// file path. Throws Error on I/O failure.
std::filesystem::path save_distance_table(const DistanceTable& table, const std::filesystem::path& directory);
DistanceTable load_distance_table(const std::filesystem::path& path);

}  // namespace hanoi
