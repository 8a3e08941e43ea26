#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hanoi {

// Packed base-k state code; disk 0 is the least significant digit.
using Code = std::uint64_t;

inline constexpr int kMaxPegs = 255;
// k^n must stay at or below this bound.
inline constexpr Code kCodeLimit = Code{1} << 48;

/// The pair (k pegs, n disks) that fixes one Hanoi graph.
///
/// Construction validates k >= 3, n >= 1, k <= 255 and k^n <= 2^48; the
/// first three raise InvalidArgument, the last InfeasibleInstance.
class PuzzleParams {
 public:
  PuzzleParams(int pegs, int disks);

  int pegs() const { return pegs_; }
  int disks() const { return disks_; }
  // k^n, the number of states.
  Code vertex_count() const { return vertex_count_; }
  // k^i for 0 <= i <= n.
  Code weight(int disk) const;

  friend bool operator==(const PuzzleParams&, const PuzzleParams&) = default;

 private:
  int pegs_;
  int disks_;
  Code vertex_count_;
};

/// A single disk transfer.
struct Move {
  int disk = 0;
  int from_peg = 0;
  int to_peg = 0;

  Move reversed() const { return {disk, to_peg, from_peg}; }
  friend bool operator==(const Move&, const Move&) = default;
};

/// One legal configuration. Every assignment of disks to pegs is legal
/// (stacking order on a peg is forced by disk size), so a State is just
/// the packed code paired with its parameters.
class State {
 public:
  // Throws InvalidArgument when code >= k^n.
  State(const PuzzleParams& params, Code code);

  // pegs_by_disk[i] is the peg holding disk i (a_i).
  static State from_pegs(const PuzzleParams& params, const std::vector<int>& pegs_by_disk);

  const PuzzleParams& params() const { return params_; }
  Code code() const { return code_; }

  // a_i: the peg of disk i.
  int peg_of(int disk) const;
  // Index i holds a_i (disk 0 first).
  std::vector<int> pegs_by_disk() const;

  friend bool operator==(const State&, const State&) = default;

 private:
  PuzzleParams params_;
  Code code_;
};

/// Smallest disk on each peg, or nullopt for empty pegs.
struct TopmostProfile {
  std::vector<std::optional<int>> top;

  // Number of nonempty pegs (m).
  int occupied() const;
};

// Text form a_{n-1}...a_0: contiguous digits for k <= 10, comma-separated
// decimal values otherwise.
State parse_state(std::string_view text, const PuzzleParams& params);
std::string render(const State& state);

State perfect_state(const PuzzleParams& params, int peg);
bool is_perfect(const State& state);

TopmostProfile topmost_profile(const State& state);

/// Moves ordered by ascending disk, then ascending destination peg.
std::vector<Move> legal_moves(const State& state);
bool is_legal(const State& state, const Move& move);
// Throws IllegalMove.
State apply_move(const State& state, const Move& move);

int degree(const State& state);
// m(k-1) - m(m-1)/2 for m occupied pegs.
int degree_closed_form(int pegs, int occupied);

// a_{n-1}: the peg holding the largest disk.
int substructure_index(const State& state);

namespace codes {

// Code-level primitives used by the full-scan algorithms. No validation.

inline int digit(Code code, Code weight, int pegs) {
  return static_cast<int>((code / weight) % static_cast<Code>(pegs));
}

Code perfect(const PuzzleParams& params, int peg);
int substructure(const PuzzleParams& params, Code code);
int occupied_pegs(const PuzzleParams& params, Code code);
int degree(const PuzzleParams& params, Code code);
// True iff a and b differ by one legal move.
bool adjacent(const PuzzleParams& params, Code a, Code b);

/// Calls visit(neighbor_code) for every legal move out of `code`, in the
/// same order as legal_moves().
template <class Visit>
void for_each_neighbor(const PuzzleParams& params, Code code, Visit&& visit) {
  constexpr std::uint8_t kEmpty = 0xFF;
  const int k = params.pegs();
  const int n = params.disks();
  std::array<std::uint8_t, kMaxPegs> top;
  std::array<std::uint8_t, kMaxPegs> occ_peg;
  std::array<Code, kMaxPegs> occ_weight;
  for (int p = 0; p < k; ++p) top[p] = kEmpty;

  int found = 0;
  Code rest = code;
  Code weight = 1;
  const Code base = static_cast<Code>(k);
  for (int d = 0; d < n && found < k; ++d) {
    const auto p = static_cast<int>(rest % base);
    rest /= base;
    if (top[p] == kEmpty) {
      top[p] = static_cast<std::uint8_t>(d);
      occ_peg[found] = static_cast<std::uint8_t>(p);
      occ_weight[found] = weight;
      ++found;
    }
    weight *= base;
  }
  for (int t = 0; t < found; ++t) {
    const int p = occ_peg[t];
    const std::uint8_t d = top[p];
    const Code w = occ_weight[t];
    const Code without = code - static_cast<Code>(p) * w;
    for (int q = 0; q < k; ++q) {
      if (q != p && top[q] > d) visit(without + static_cast<Code>(q) * w);
    }
  }
}

}  // namespace codes

}  // namespace hanoi
