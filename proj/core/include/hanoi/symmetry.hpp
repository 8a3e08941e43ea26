#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "hanoi/check.hpp"
#include "hanoi/metric.hpp"
#include "hanoi/parallel.hpp"
#include "hanoi/state.hpp"

namespace hanoi {

/// A bijection on {0, ..., k-1}.
class PegPermutation {
 public:
  // Throws InvalidArgument unless mapping is a permutation of 0..size-1.
  explicit PegPermutation(std::vector<int> mapping);

  static PegPermutation identity(int pegs);
  static PegPermutation transposition(int pegs, int a, int b);
  // All k! permutations in lexicographic order of their mappings.
  static std::vector<PegPermutation> all(int pegs);

  int size() const { return static_cast<int>(mapping_.size()); }
  int operator()(int peg) const { return mapping_[peg]; }
  const std::vector<int>& mapping() const { return mapping_; }
  bool is_identity() const;

  PegPermutation inverse() const;
  // (a * b)(p) = a(b(p)).
  friend PegPermutation operator*(const PegPermutation& a, const PegPermutation& b);

  std::string to_string() const;

  friend bool operator==(const PegPermutation&, const PegPermutation&) = default;
  friend auto operator<=>(const PegPermutation&, const PegPermutation&) = default;

 private:
  std::vector<int> mapping_;
};

/// A total function on state codes, either an explicit image table or the
/// digitwise action of a peg permutation evaluated on demand.
class VertexMap {
 public:
  // image[c] is the image of code c. Throws InvalidArgument on size or
  // range mismatch; bijectivity is left to is_automorphism.
  static VertexMap from_table(const PuzzleParams& params, std::vector<Code> image);
  static VertexMap induced(const PuzzleParams& params, const PegPermutation& sigma);

  const PuzzleParams& params() const { return params_; }
  Code operator()(Code code) const;
  State operator()(const State& state) const;

  bool materialized() const { return !sigma_.has_value(); }
  const std::optional<PegPermutation>& generator() const { return sigma_; }
  std::vector<Code> table() const;

  // Permutation of pegs read off the images of the perfect states, or
  // nullopt if some perfect state is not sent to a perfect state.
  std::optional<PegPermutation> corner_action() const;

 private:
  VertexMap(const PuzzleParams& params, std::vector<Code> image, std::optional<PegPermutation> sigma);

  PuzzleParams params_;
  std::vector<Code> image_;
  std::optional<PegPermutation> sigma_;
};

/// g_sigma: apply sigma to every digit.
VertexMap induced_map(const PegPermutation& sigma, const PuzzleParams& params);

struct AutomorphismCheck {
  enum class Failure { kNotBijective, kEdgeNotPreserved };
  struct Witness {
    Failure failure;
    // kNotBijective: two codes with the same image.
    // kEdgeNotPreserved: an edge whose image is not an edge.
    Code first;
    Code second;
  };

  bool pass = true;
  std::optional<Witness> witness;
  std::string describe(const PuzzleParams& params) const;
};

AutomorphismCheck is_automorphism(const VertexMap& map, const PuzzleParams& params);

/// Distances from one vertex to every perfect state.
using CornerFingerprint = std::vector<Distance>;

CornerFingerprint corner_fingerprint(const std::vector<DistanceTable>& corners, const State& v);

/// The automorphism group found for one (k, n), sorted by corner action.
struct AutomorphismSet {
  PuzzleParams params;
  std::vector<VertexMap> members;
  std::vector<PegPermutation> corner_action;

  std::size_t order() const { return members.size(); }
};

/// Finds every automorphism without assuming they are induced by peg
/// permutations:
///  1. checks that the degree-(k-1) vertices are exactly the perfect states,
///     so every automorphism permutes corners;
///  2. for each of the k! corner assignments, extends the map over vertices
///     in (BFS level from 0...0, code) order, admitting only candidates
///     whose corner fingerprint is the permuted fingerprint of the source
///     vertex and which keep adjacency consistent, backtracking on dead ends;
///  3. confirms every completed map with is_automorphism.
/// Throws VerificationFailure if step 1 or 3 fails.
AutomorphismSet enumerate_automorphisms(const PuzzleParams& params, Parallelism par = {});

struct GroupReport {
  PuzzleParams params;
  std::size_t order = 0;
  bool has_identity = false;
  bool closed = false;
  bool has_inverses = false;
  bool action_is_homomorphism = false;
  bool action_injective = false;
  bool action_surjective = false;
  bool is_symmetric_group = false;
  std::optional<std::string> failure;
};

GroupReport verify_group_structure(const AutomorphismSet& set);

// Degree dichotomy and closed form over every vertex.
CheckResult degree_check(const PuzzleParams& params, Parallelism par = {});
// Every induced map is an automorphism.
CheckResult induced_maps_check(const PuzzleParams& params);
CheckResult corner_fixing_is_identity(const AutomorphismSet& set);
CheckResult corner_fixing_is_identity(const PuzzleParams& params, Parallelism par = {});
CheckResult substructure_preservation_check(const AutomorphismSet& set);
CheckResult substructure_preservation_check(const PuzzleParams& params, Parallelism par = {});
/// For i != j the vertex i j...j has no neighbor in [j], the neighbor
/// l j...j for every l outside {i, j}, and some neighbor in [i].
CheckResult adjacency_observation_check(const PuzzleParams& params);

}  // namespace hanoi
