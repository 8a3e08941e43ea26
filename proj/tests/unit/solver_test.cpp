#include <doctest.h>

#include "hanoi/error.hpp"
#include "hanoi/metric.hpp"
#include "hanoi/solver.hpp"

using namespace hanoi;

namespace {

// Straight recursion over every split, no table.
std::uint64_t naive_fs(int n, int k) {
  if (n <= 1) return static_cast<std::uint64_t>(n);
  if (k == 3) return (std::uint64_t{1} << n) - 1;
  std::uint64_t best = ~std::uint64_t{0};
  for (int t = 1; t < n; ++t) best = std::min(best, 2 * naive_fs(t, k) + naive_fs(n - t, k - 1));
  return best;
}

}  // namespace

TEST_CASE("frame_stewart values") {
  CHECK(frame_stewart_count(0, 4) == 0);
  CHECK(frame_stewart_count(1, 4) == 1);
  CHECK(frame_stewart_count(3, 3) == 7);
  const std::uint64_t four[] = {0, 1, 3, 5, 9, 13, 17, 25, 33, 41, 49};
  for (int n = 0; n <= 10; ++n) CHECK(frame_stewart_count(n, 4) == four[n]);
  CHECK(frame_stewart_count(7, 5) == 19);
  CHECK(frame_stewart(3, 3).split == 2);
  CHECK(frame_stewart(1, 5).split == 0);
  CHECK(frame_stewart_count(63, 3) == (std::uint64_t{1} << 63) - 1);
}

TEST_CASE("frame_stewart errors") {
  CHECK_THROWS_AS(frame_stewart(3, 2), InvalidArgument);
  CHECK_THROWS_AS(frame_stewart(-1, 4), InvalidArgument);
  CHECK_THROWS_AS(frame_stewart(64, 3), InfeasibleInstance);
  // The 3-peg row overflows long before the 20-peg count does.
  CHECK(frame_stewart_count(200, 20) < frame_stewart_count(200, 19));
  CHECK_NOTHROW(FrameStewartTable(100, 4));
  CHECK_THROWS_AS(FrameStewartTable(100, 4).at(100, 3), InfeasibleInstance);
  const FrameStewartTable table(5, 4);
  CHECK_THROWS_AS(table.at(6, 4), InvalidArgument);
  CHECK_THROWS_AS(table.at(5, 5), InvalidArgument);
}

TEST_CASE("table agrees with naive recursion, with 3-peg closed form and monotonicity") {
  const FrameStewartTable table(14, 7);
  for (int k = 3; k <= 7; ++k) {
    for (int n = 0; n <= 14; ++n) {
      const auto v = table.at(n, k);
      REQUIRE(v.count == naive_fs(n, k));
      if (k == 3) REQUIRE(v.count == (std::uint64_t{1} << n) - 1);
      if (n >= 2) {
        REQUIRE(v.split >= 1);
        REQUIRE(v.split < n);
        // With more than 3 pegs the split is the smallest minimizer.
        for (int t = 1; k > 3 && t < v.split; ++t) REQUIRE(2 * table.at(t, k).count + table.at(n - t, k - 1).count > v.count);
      }
      if (n >= 1) REQUIRE(v.count > table.at(n - 1, k).count);
      if (k > 3) REQUIRE(v.count <= table.at(n, k - 1).count);
    }
  }
  for (int n = 1; n <= 20; ++n) CHECK(frame_stewart_count(n, 3) == (std::uint64_t{1} << n) - 1);
}

TEST_CASE("frame_stewart_plan") {
  const PuzzleParams p33(3, 3);
  const auto plan = frame_stewart_plan(p33, 0, 1);
  CHECK(plan.moves.size() == 7);
  CHECK(plan.claimed_length == 7);
  CHECK(plan.moves.front() == Move{0, 0, 1});
  CHECK(render(replay_plan(plan)) == "111");

  CHECK_THROWS_AS(frame_stewart_plan(p33, 1, 1), InvalidArgument);
  CHECK_THROWS_AS(frame_stewart_plan(p33, 0, 3), InvalidArgument);
  CHECK_THROWS_AS(frame_stewart_plan(PuzzleParams(3, 30), 0, 1), InfeasibleInstance);
}

TEST_CASE("plans are legal and reach the target for every peg pair") {
  for (int k = 3; k <= 6; ++k) {
    for (int n = 1; n <= 9; ++n) {
      const PuzzleParams params(k, n);
      for (int from = 0; from < k; ++from) {
        for (int to = 0; to < k; ++to) {
          if (from == to) continue;
          const auto plan = frame_stewart_plan(params, from, to);
          REQUIRE(plan.moves.size() == frame_stewart_count(n, k));
          REQUIRE(replay_plan(plan) == perfect_state(params, to));
        }
      }
    }
  }
}

TEST_CASE("replay_plan reports the first illegal step") {
  const PuzzleParams params(3, 3);
  auto plan = frame_stewart_plan(params, 0, 2);
  plan.moves[3] = Move{2, 0, 1};
  try {
    replay_plan(plan);
    FAIL("expected PlanReplayError");
  } catch (const PlanReplayError& e) {
    CHECK(e.step() == 3);
    CHECK(e.move() == Move{2, 0, 1});
    CHECK(e.state() == replay_plan(plan.start, std::span(plan.moves).first(3)));
  }
  plan = frame_stewart_plan(params, 0, 2);
  plan.claimed_length = 8;
  CHECK_THROWS_AS(replay_plan(plan), InvalidArgument);
}

TEST_CASE("compare_exact") {
  const auto r = compare_exact(PuzzleParams(4, 6), 0, 3);
  CHECK(r.fs_count == 17);
  CHECK(r.exact_distance == 17);
  CHECK(r.equal);
  CHECK_THROWS_AS(compare_exact(PuzzleParams(4, 3), 2, 2), InvalidArgument);
  for (int k = 3; k <= 5; ++k) {
    for (int n = 1; n <= 6; ++n) CHECK(compare_exact(PuzzleParams(k, n), 0, 1).equal);
  }
}
