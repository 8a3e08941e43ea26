#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hanoi/error.hpp"
#include "hanoi/parallel.hpp"
#include "hanoi/state.hpp"

namespace hanoi {

/// Frame-Stewart move count with the split that attains it.
///
///   FS(0, k) = 0, FS(1, k) = 1, FS(n, 3) = 2^n - 1,
///   FS(n, k) = min over 1 <= t < n of 2 FS(t, k) + FS(n - t, k - 1).
///
/// `split` is the smallest minimizing t; with 3 pegs it is n - 1, and it is
/// 0 when n <= 1.
struct FrameStewartValue {
  std::uint64_t count = 0;
  int split = 0;
};

/// Bottom-up table of FS(m, p) for 0 <= m <= disks, 3 <= p <= pegs.
class FrameStewartTable {
 public:
  // Throws InvalidArgument for pegs < 3 or disks < 0, InfeasibleInstance
  // if a count overflows 64 bits.
  FrameStewartTable(int disks, int pegs);

  FrameStewartValue at(int disks, int pegs) const;

 private:
  int disks_;
  int pegs_;
  std::vector<FrameStewartValue> values_;  // row per peg count
};

FrameStewartValue frame_stewart(int disks, int pegs);
std::uint64_t frame_stewart_count(int disks, int pegs);

struct MovePlan {
  PuzzleParams params;
  State start;
  std::vector<Move> moves;
  std::size_t claimed_length = 0;
};

// Plans longer than this are refused.
inline constexpr std::uint64_t kMaxPlanLength = std::uint64_t{1} << 26;

/// Moves the tower from one peg to another: the top t disks go to the
/// lowest free spare with all pegs, the rest go to the target with the
/// spare excluded, then the t disks follow.
MovePlan frame_stewart_plan(const PuzzleParams& params, int from_peg, int to_peg);

/// Raised by replay_plan at the first illegal step.
class PlanReplayError : public IllegalMove {
 public:
  PlanReplayError(std::size_t step, const State& state, const Move& move);

  std::size_t step() const { return step_; }
  const State& state() const { return state_; }
  const Move& move() const { return move_; }

 private:
  std::size_t step_;
  State state_;
  Move move_;
};

State replay_plan(const State& start, std::span<const Move> moves);
State replay_plan(const MovePlan& plan);

struct ComparisonReport {
  PuzzleParams params;
  int from_peg = 0;
  int to_peg = 0;
  std::uint64_t fs_count = 0;
  std::uint64_t exact_distance = 0;
  bool equal = false;
};

/// Frame-Stewart count against the BFS distance between two perfect states.
ComparisonReport compare_exact(const PuzzleParams& params, int from_peg, int to_peg, Parallelism par = {});

}  // namespace hanoi
