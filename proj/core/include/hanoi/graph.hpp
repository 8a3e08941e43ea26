#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hanoi/parallel.hpp"
#include "hanoi/state.hpp"

namespace hanoi {

// Largest k^n accepted by full-scan operations (BFS tables, degree scans,
// automorphism enumeration).
inline constexpr Code kExhaustiveCap = Code{1} << 25;
// Largest k^n accepted by explicit edge-matrix and export operations.
inline constexpr Code kExplicitCap = 20000;

// Throw InfeasibleInstance naming `operation` when k^n is over the cap.
void require_exhaustive(const PuzzleParams& params, const char* operation);
void require_explicit(const PuzzleParams& params, const char* operation);

/// All states one legal move away, in legal_moves() order.
std::vector<State> neighbors(const State& state);

Code vertex_count(const PuzzleParams& params);

/// Half the degree sum, by full scan.
std::uint64_t edge_count(const PuzzleParams& params, Parallelism par = {});

/// Degree of every vertex, indexed by code.
std::vector<std::uint8_t> degree_table(const PuzzleParams& params, Parallelism par = {});

/// Edge multiplicities e_ij over vertices in code order.
///
/// Stored row-compressed: Hanoi graphs have at most O(k^2) neighbors per
/// vertex, so only nonzero entries are kept. Lookup of an absent pair
/// returns 0.
class EdgeMatrix {
 public:
  struct Entry {
    Code column;
    std::uint8_t multiplicity;
  };

  EdgeMatrix(Code order, std::vector<std::size_t> row_offsets, std::vector<Entry> entries);

  Code order() const { return order_; }
  std::uint32_t operator()(Code row, Code column) const;
  std::uint32_t row_sum(Code row) const;
  std::span<const Entry> row(Code row) const;
  bool symmetric() const;

 private:
  Code order_;
  std::vector<std::size_t> row_offsets_;
  std::vector<Entry> entries_;
};

EdgeMatrix edge_matrix(const PuzzleParams& params);

struct DotOptions {
  // Fill nodes by the peg holding the largest disk.
  bool color_substructures = false;
};

/// Undirected DOT graph; node ids and labels are state strings.
std::string export_dot(const PuzzleParams& params, const DotOptions& options = {});

/// One JSON object per line: {"v": "<state>", "nbrs": ["<state>", ...]}.
std::string export_adjlist(const PuzzleParams& params);

}  // namespace hanoi
