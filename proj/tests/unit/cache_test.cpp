#include <doctest.h>

#include <filesystem>
#include <fstream>

#include <unistd.h>

#include "hanoi/cache.hpp"
#include "hanoi/error.hpp"

using namespace hanoi;

namespace {

std::filesystem::path scratch_dir(const char* name) {
  auto dir = std::filesystem::temp_directory_path() / ("hanoi_cache_test_" + std::to_string(::getpid())) / name;
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("encoded layout") {
  const PuzzleParams params(3, 3);
  const auto table = bfs_from(parse_state("012", params));
  const auto bytes = encode_distance_table(table);
  REQUIRE(bytes.size() == 15 + 2 * 27);
  CHECK(std::string(bytes.begin(), bytes.begin() + 4) == "HGDT");
  CHECK(bytes[4] == 1);
  CHECK(bytes[5] == 3);
  CHECK(bytes[6] == 3);
  // "012": disk 0 on peg 2, disk 1 on peg 1, disk 2 on peg 0 -> 2 + 1*3 = 5.
  CHECK(bytes[7] == 5);
  for (int i = 8; i < 15; ++i) CHECK(bytes[i] == 0);
  for (Code c = 0; c < 27; ++c) CHECK((bytes[15 + 2 * c] | (bytes[16 + 2 * c] << 8)) == table[c]);
}

TEST_CASE("decode inverts encode") {
  for (auto [k, n] : {std::pair{3, 1}, {3, 6}, {4, 4}, {7, 3}}) {
    const PuzzleParams params(k, n);
    const auto table = bfs_from(State(params, params.vertex_count() / 3));
    CHECK(decode_distance_table(encode_distance_table(table)) == table);
  }
}

TEST_CASE("decode rejects malformed input") {
  const PuzzleParams params(3, 3);
  const auto good = encode_distance_table(bfs_from(perfect_state(params, 0)));

  auto bad = good;
  bad[0] = 'X';
  CHECK_THROWS_AS(decode_distance_table(bad), FormatError);

  bad = good;
  bad[4] = 2;
  CHECK_THROWS_AS(decode_distance_table(bad), FormatError);

  bad = good;
  bad.pop_back();
  CHECK_THROWS_AS(decode_distance_table(bad), FormatError);

  CHECK_THROWS_AS(decode_distance_table({'H', 'G', 'D'}), FormatError);

  bad = good;
  bad.push_back(0);
  CHECK_THROWS_AS(decode_distance_table(bad), FormatError);

  bad = good;
  bad[5] = 2;  // k = 2 is not a puzzle
  CHECK_THROWS_AS(decode_distance_table(bad), FormatError);

  bad = good;
  bad[7] = 27;  // source out of range
  CHECK_THROWS_AS(decode_distance_table(bad), FormatError);

  bad = good;
  bad[15] = 1;  // nonzero at the source
  CHECK_THROWS_AS(decode_distance_table(bad), FormatError);

  bad = good;
  bad[15 + 2 * 26] = 0xFF;  // unreached
  bad[16 + 2 * 26] = 0xFF;
  CHECK_THROWS_AS(decode_distance_table(bad), FormatError);

  bad = good;
  bad[15 + 2 * 13] = 40;  // jumps by more than one across an edge
  CHECK_THROWS_AS(decode_distance_table(bad), FormatError);
}

TEST_CASE("save and load") {
  const PuzzleParams params(4, 3);
  const auto table = bfs_from(parse_state("123", params));
  const auto dir = scratch_dir("save");
  const auto path = save_distance_table(table, dir / "nested");
  CHECK(path.filename() == cache_file_name(params, table.source_code()));
  CHECK(cache_file_name(params, 27) == "hgdt_4_3_27.bin");
  CHECK(std::filesystem::file_size(path) == 15 + 2 * 64);
  CHECK(load_distance_table(path) == table);
  CHECK_THROWS_AS(load_distance_table(dir / "missing.bin"), Error);
  std::filesystem::remove_all(dir.parent_path());
}
