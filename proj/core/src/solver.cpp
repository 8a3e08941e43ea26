#include "hanoi/solver.hpp"

#include <algorithm>
#include <limits>

#include "hanoi/metric.hpp"

namespace hanoi {

namespace {

constexpr std::uint64_t kOverflow = std::numeric_limits<std::uint64_t>::max();

std::uint64_t add(std::uint64_t a, std::uint64_t b) { return a > kOverflow - b ? kOverflow : a + b; }

void check_peg(const PuzzleParams& params, int peg) {
  if (peg < 0 || peg >= params.pegs()) throw InvalidArgument("peg " + std::to_string(peg) + " out of range");
}

class PlanBuilder {
 public:
  PlanBuilder(const FrameStewartTable& table, std::vector<Move>& out) : table_(table), out_(out) {}

  // Moves disks [lo, hi) from `from` to `to` using only `pegs`.
  void build(int lo, int hi, const std::vector<int>& pegs, int from, int to) {
    const int m = hi - lo;
    if (m == 0) return;
    if (m == 1) {
      out_.push_back({lo, from, to});
      return;
    }
    const int p = static_cast<int>(pegs.size());
    const int t = table_.at(m, p).split;
    const int spare = *std::find_if(pegs.begin(), pegs.end(), [&](int q) { return q != from && q != to; });
    std::vector<int> reduced;
    std::copy_if(pegs.begin(), pegs.end(), std::back_inserter(reduced), [&](int q) { return q != spare; });
    build(lo, lo + t, pegs, from, spare);
    build(lo + t, hi, reduced, from, to);
    build(lo, lo + t, pegs, spare, to);
  }

 private:
  const FrameStewartTable& table_;
  std::vector<Move>& out_;
};

}  // namespace

FrameStewartTable::FrameStewartTable(int disks, int pegs) : disks_(disks), pegs_(pegs) {
  if (pegs < 3) throw InvalidArgument("Frame-Stewart needs at least 3 pegs");
  if (disks < 0) throw InvalidArgument("Frame-Stewart needs a nonnegative disk count");
  const auto row = static_cast<std::size_t>(disks) + 1;
  values_.resize(row * static_cast<std::size_t>(pegs - 2));
  auto cell = [&](int m, int p) -> FrameStewartValue& { return values_[static_cast<std::size_t>(p - 3) * row + m]; };

  for (int m = 0; m <= disks; ++m) {
    cell(m, 3) = {m >= 64 ? kOverflow : (std::uint64_t{1} << m) - 1, m >= 2 ? m - 1 : 0};
  }
  for (int p = 4; p <= pegs; ++p) {
    cell(0, p) = {0, 0};
    if (disks >= 1) cell(1, p) = {1, 0};
    for (int m = 2; m <= disks; ++m) {
      FrameStewartValue best{kOverflow, 0};
      for (int t = 1; t < m; ++t) {
        const std::uint64_t moves = add(add(cell(t, p).count, cell(t, p).count), cell(m - t, p - 1).count);
        if (moves < best.count) best = {moves, t};
      }
      if (best.count == kOverflow) best.split = m - 1;
      cell(m, p) = best;
    }
  }
}

FrameStewartValue FrameStewartTable::at(int disks, int pegs) const {
  if (disks < 0 || disks > disks_ || pegs < 3 || pegs > pegs_) {
    throw InvalidArgument("Frame-Stewart table lookup out of range");
  }
  const auto& value = values_[static_cast<std::size_t>(pegs - 3) * (static_cast<std::size_t>(disks_) + 1) + disks];
  if (value.count == kOverflow) {
    throw InfeasibleInstance("Frame-Stewart count for " + std::to_string(disks) + " disks and " +
                             std::to_string(pegs) + " pegs overflows 64 bits");
  }
  return value;
}

FrameStewartValue frame_stewart(int disks, int pegs) { return FrameStewartTable(disks, pegs).at(disks, pegs); }

std::uint64_t frame_stewart_count(int disks, int pegs) { return frame_stewart(disks, pegs).count; }

MovePlan frame_stewart_plan(const PuzzleParams& params, int from_peg, int to_peg) {
  check_peg(params, from_peg);
  check_peg(params, to_peg);
  if (from_peg == to_peg) throw InvalidArgument("frame_stewart_plan: source and target peg coincide");
  const FrameStewartTable table(params.disks(), params.pegs());
  const std::uint64_t length = table.at(params.disks(), params.pegs()).count;
  if (length > kMaxPlanLength) {
    throw InfeasibleInstance("frame_stewart_plan: " + std::to_string(length) + " moves exceeds the plan cap");
  }
  MovePlan plan{params, perfect_state(params, from_peg), {}, 0};
  plan.moves.reserve(length);
  std::vector<int> pegs(params.pegs());
  for (int p = 0; p < params.pegs(); ++p) pegs[p] = p;
  PlanBuilder(table, plan.moves).build(0, params.disks(), pegs, from_peg, to_peg);
  plan.claimed_length = plan.moves.size();
  return plan;
}

PlanReplayError::PlanReplayError(std::size_t step, const State& state, const Move& move)
    : IllegalMove("illegal move at step " + std::to_string(step) + ": disk " + std::to_string(move.disk) + " " +
                  std::to_string(move.from_peg) + " -> " + std::to_string(move.to_peg) + " in state " +
                  render(state)),
      step_(step),
      state_(state),
      move_(move) {}

State replay_plan(const State& start, std::span<const Move> moves) {
  State current = start;
  for (std::size_t i = 0; i < moves.size(); ++i) {
    if (!is_legal(current, moves[i])) throw PlanReplayError(i, current, moves[i]);
    current = apply_move(current, moves[i]);
  }
  return current;
}

State replay_plan(const MovePlan& plan) {
  if (plan.claimed_length != plan.moves.size()) {
    throw InvalidArgument("plan claims " + std::to_string(plan.claimed_length) + " moves but lists " +
                          std::to_string(plan.moves.size()));
  }
  return replay_plan(plan.start, plan.moves);
}

ComparisonReport compare_exact(const PuzzleParams& params, int from_peg, int to_peg, Parallelism par) {
  check_peg(params, from_peg);
  check_peg(params, to_peg);
  if (from_peg == to_peg) throw InvalidArgument("compare_exact: source and target peg coincide");
  ComparisonReport report{params, from_peg, to_peg};
  report.fs_count = frame_stewart_count(params.disks(), params.pegs());
  const auto table = bfs_from(perfect_state(params, from_peg), par);
  report.exact_distance = table[codes::perfect(params, to_peg)];
  report.equal = report.fs_count == report.exact_distance;
  return report;
}

}  // namespace hanoi
