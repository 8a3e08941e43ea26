#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hanoi/check.hpp"
#include "hanoi/graph.hpp"
#include "hanoi/parallel.hpp"
#include "hanoi/state.hpp"

namespace hanoi {

// Hop counts. Diameters of feasible instances are far below this range.
using Distance = std::uint16_t;
inline constexpr Distance kUnreached = 0xFFFF;

using BigCount = boost::multiprecision::cpp_int;

/// Single-source hop distances over all k^n states, indexed by code.
class DistanceTable {
 public:
  // Validates size == k^n, source in range, dist[source] == 0 and that
  // every entry is reached.
  DistanceTable(const PuzzleParams& params, Code source, std::vector<Distance> dist);

  const PuzzleParams& params() const { return params_; }
  State source() const { return State(params_, source_); }
  Code source_code() const { return source_; }

  Distance operator[](Code code) const { return dist_[code]; }
  Distance at(const State& state) const { return dist_[state.code()]; }
  std::span<const Distance> entries() const { return dist_; }
  Distance eccentricity() const;

  friend bool operator==(const DistanceTable&, const DistanceTable&) = default;

 private:
  PuzzleParams params_;
  Code source_;
  std::vector<Distance> dist_;
};

/// Level-synchronous BFS. With several workers the frontier is split
/// across threads; the table is identical for every worker count.
DistanceTable bfs_from(const State& source, Parallelism par = {});

/// BFS from every perfect state, entry i is the table for peg i.
std::vector<DistanceTable> corner_tables(const PuzzleParams& params, Parallelism par = {});

struct SearchBudget {
  // Upper bound on states held by both search sides together.
  std::uint64_t max_visited = std::uint64_t{1} << 23;
};

/// Exact hop distance by bidirectional BFS that grows the smaller frontier
/// one full layer at a time (source side on ties). Throws
/// InfeasibleInstance when the budget is exhausted.
std::uint32_t distance(const State& u, const State& v, SearchBudget budget = {});

/// Shortest-path predecessor structure rooted at one source.
class GeodesicDag {
 public:
  explicit GeodesicDag(DistanceTable table);

  const PuzzleParams& params() const { return table_.params(); }
  const DistanceTable& distances() const { return table_; }
  Code source_code() const { return table_.source_code(); }

  // Neighbors one step closer to the source; empty only at the source.
  std::span<const Code> predecessors(Code code) const;
  // All codes sorted by (distance, code).
  std::span<const Code> order() const { return order_; }

 private:
  DistanceTable table_;
  std::vector<std::uint64_t> offsets_;
  std::vector<Code> preds_;
  std::vector<Code> order_;
};

GeodesicDag geodesic_dag(const State& source, Parallelism par = {});

/// Number of distinct shortest paths from the DAG source to `target`.
BigCount count_geodesics(const GeodesicDag& dag, Code target);
BigCount count_geodesics(const State& u, const State& v);

/// Fewest and most moves of the largest disk over all geodesics.
struct MoveRange {
  int min_moves = 0;
  int max_moves = 0;
  friend bool operator==(const MoveRange&, const MoveRange&) = default;
};

// Entry c is the range over geodesics from the DAG source to code c.
std::vector<MoveRange> largest_disk_move_ranges(const GeodesicDag& dag);
MoveRange largest_disk_move_range(const PuzzleParams& params, int corner_peg, const State& target);

/// Every geodesic from a perfect state to v moves the largest disk zero
/// times when v shares the corner's substructure, once otherwise.
CheckResult largest_disk_check(const PuzzleParams& params, Parallelism par = {});

/// Closest-perfect-state report: for each v in [i] and j != i,
/// d(v, i...i) < d(v, j...j).
struct NearestCornerReport {
  struct Counterexample {
    Code vertex;
    int own_peg;
    int other_peg;
    Distance own_distance;
    Distance other_distance;
  };

  PuzzleParams params;
  bool pass = true;
  std::optional<Counterexample> counterexample;
};

NearestCornerReport nearest_corner_report(const PuzzleParams& params, Parallelism par = {});
NearestCornerReport nearest_corner_report(const std::vector<DistanceTable>& corners);

}  // namespace hanoi
