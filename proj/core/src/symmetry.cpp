#include "hanoi/symmetry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include "hanoi/error.hpp"
#include "hanoi/graph.hpp"

namespace hanoi {

namespace {

constexpr Code kUnmapped = ~Code{0};

std::string describe(const PuzzleParams& params, Code code) { return render(State(params, code)); }

std::string fingerprint_key(const std::vector<DistanceTable>& corners, Code v) {
  std::string key(corners.size() * sizeof(Distance), '\0');
  for (std::size_t i = 0; i < corners.size(); ++i) {
    const Distance d = corners[i][v];
    key[2 * i] = static_cast<char>(d & 0xFF);
    key[2 * i + 1] = static_cast<char>(d >> 8);
  }
  return key;
}

// Fingerprint of v with entry i moved to slot sigma(i).
std::string permuted_key(const std::vector<DistanceTable>& corners, const PegPermutation& sigma, Code v) {
  std::string key(corners.size() * sizeof(Distance), '\0');
  for (std::size_t i = 0; i < corners.size(); ++i) {
    const Distance d = corners[i][v];
    const auto slot = static_cast<std::size_t>(sigma(static_cast<int>(i)));
    key[2 * slot] = static_cast<char>(d & 0xFF);
    key[2 * slot + 1] = static_cast<char>(d >> 8);
  }
  return key;
}

/// Shared read-only data for the per-assignment searches.
struct SearchContext {
  const PuzzleParams& params;
  const std::vector<DistanceTable>& corners;
  const std::vector<std::uint8_t>& degrees;
  std::unordered_map<std::string, std::vector<Code>> by_fingerprint;
  // Non-corner vertices in (BFS level from corner 0, code) order.
  std::vector<Code> sequence;
};

class Extender {
 public:
  Extender(const SearchContext& ctx, const PegPermutation& sigma)
      : ctx_(ctx),
        sigma_(sigma),
        image_(ctx.params.vertex_count(), kUnmapped),
        preimage_(ctx.params.vertex_count(), kUnmapped) {}

  std::vector<std::vector<Code>> run() {
    const auto& params = ctx_.params;
    for (int p = 0; p < params.pegs(); ++p) {
      assign(codes::perfect(params, p), codes::perfect(params, sigma_(p)));
    }
    for (int p = 0; p < params.pegs(); ++p) {
      const Code corner = codes::perfect(params, p);
      if (!consistent(corner, image_[corner])) return {};
    }

    std::vector<std::vector<Code>> solutions;
    const auto& seq = ctx_.sequence;
    const std::size_t length = seq.size();
    if (length == 0) {
      solutions.push_back(image_);
      return solutions;
    }
    std::vector<std::vector<Code>> candidates(length);
    std::vector<std::size_t> next(length, 0);
    std::size_t pos = 0;
    fill(candidates[0], seq[0]);
    while (true) {
      if (next[pos] < candidates[pos].size()) {
        assign(seq[pos], candidates[pos][next[pos]++]);
        if (pos + 1 == length) {
          solutions.push_back(image_);
          unassign(seq[pos]);
          continue;
        }
        ++pos;
        fill(candidates[pos], seq[pos]);
        next[pos] = 0;
      } else {
        if (pos == 0) break;
        --pos;
        unassign(seq[pos]);
      }
    }
    return solutions;
  }

 private:
  void assign(Code v, Code w) {
    image_[v] = w;
    preimage_[w] = v;
  }

  void unassign(Code v) {
    preimage_[image_[v]] = kUnmapped;
    image_[v] = kUnmapped;
  }

  // Mapped neighbors of v must land on neighbors of w, and w may have no
  // other mapped neighbors.
  bool consistent(Code v, Code w) const {
    const auto& params = ctx_.params;
    int mapped_v = 0;
    bool ok = true;
    codes::for_each_neighbor(params, v, [&](Code x) {
      if (!ok || image_[x] == kUnmapped) return;
      ++mapped_v;
      if (!codes::adjacent(params, image_[x], w)) ok = false;
    });
    if (!ok) return false;
    int mapped_w = 0;
    codes::for_each_neighbor(params, w, [&](Code y) { mapped_w += preimage_[y] != kUnmapped; });
    return mapped_v == mapped_w;
  }

  void fill(std::vector<Code>& out, Code v) const {
    out.clear();
    const auto it = ctx_.by_fingerprint.find(permuted_key(ctx_.corners, sigma_, v));
    if (it == ctx_.by_fingerprint.end()) return;
    for (Code w : it->second) {
      if (preimage_[w] != kUnmapped) continue;
      if (ctx_.degrees[w] != ctx_.degrees[v]) continue;
      if (consistent(v, w)) out.push_back(w);
    }
  }

  const SearchContext& ctx_;
  const PegPermutation& sigma_;
  std::vector<Code> image_;
  std::vector<Code> preimage_;
};

}  // namespace

// ---- PegPermutation ----

PegPermutation::PegPermutation(std::vector<int> mapping) : mapping_(std::move(mapping)) {
  std::vector<bool> hit(mapping_.size(), false);
  for (int p : mapping_) {
    if (p < 0 || p >= static_cast<int>(mapping_.size()) || hit[p]) {
      throw InvalidArgument("not a permutation: " + to_string());
    }
    hit[p] = true;
  }
}

PegPermutation PegPermutation::identity(int pegs) {
  std::vector<int> m(pegs);
  std::iota(m.begin(), m.end(), 0);
  return PegPermutation(std::move(m));
}

PegPermutation PegPermutation::transposition(int pegs, int a, int b) {
  auto m = identity(pegs).mapping_;
  if (a < 0 || b < 0 || a >= pegs || b >= pegs) throw InvalidArgument("transposition index out of range");
  std::swap(m[a], m[b]);
  return PegPermutation(std::move(m));
}

std::vector<PegPermutation> PegPermutation::all(int pegs) {
  std::vector<PegPermutation> out;
  auto m = identity(pegs).mapping_;
  do {
    out.emplace_back(m);
  } while (std::next_permutation(m.begin(), m.end()));
  return out;
}

bool PegPermutation::is_identity() const {
  for (int i = 0; i < size(); ++i) {
    if (mapping_[i] != i) return false;
  }
  return true;
}

PegPermutation PegPermutation::inverse() const {
  std::vector<int> inv(mapping_.size());
  for (int i = 0; i < size(); ++i) inv[mapping_[i]] = i;
  return PegPermutation(std::move(inv));
}

PegPermutation operator*(const PegPermutation& a, const PegPermutation& b) {
  if (a.size() != b.size()) throw InvalidArgument("composing permutations of different sizes");
  std::vector<int> m(a.mapping_.size());
  for (int i = 0; i < a.size(); ++i) m[i] = a(b(i));
  return PegPermutation(std::move(m));
}

std::string PegPermutation::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < mapping_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(mapping_[i]);
  }
  return out + "]";
}

// ---- VertexMap ----

VertexMap::VertexMap(const PuzzleParams& params, std::vector<Code> image, std::optional<PegPermutation> sigma)
    : params_(params), image_(std::move(image)), sigma_(std::move(sigma)) {}

VertexMap VertexMap::from_table(const PuzzleParams& params, std::vector<Code> image) {
  if (image.size() != params.vertex_count()) throw InvalidArgument("vertex map table has the wrong size");
  for (Code c : image) {
    if (c >= params.vertex_count()) throw InvalidArgument("vertex map image out of range");
  }
  return VertexMap(params, std::move(image), std::nullopt);
}

VertexMap VertexMap::induced(const PuzzleParams& params, const PegPermutation& sigma) {
  if (sigma.size() != params.pegs()) throw InvalidArgument("permutation size differs from peg count");
  return VertexMap(params, {}, sigma);
}

Code VertexMap::operator()(Code code) const {
  if (!sigma_) return image_[code];
  const Code base = static_cast<Code>(params_.pegs());
  Code out = 0;
  Code weight = 1;
  for (int d = 0; d < params_.disks(); ++d) {
    out += static_cast<Code>((*sigma_)(static_cast<int>(code % base))) * weight;
    code /= base;
    weight *= base;
  }
  return out;
}

State VertexMap::operator()(const State& state) const { return State(params_, (*this)(state.code())); }

std::vector<Code> VertexMap::table() const {
  if (!sigma_) return image_;
  std::vector<Code> out(params_.vertex_count());
  for (Code c = 0; c < out.size(); ++c) out[c] = (*this)(c);
  return out;
}

std::optional<PegPermutation> VertexMap::corner_action() const {
  std::vector<int> m(params_.pegs());
  for (int p = 0; p < params_.pegs(); ++p) {
    const Code image = (*this)(codes::perfect(params_, p));
    if (codes::occupied_pegs(params_, image) != 1) return std::nullopt;
    m[p] = static_cast<int>(image % static_cast<Code>(params_.pegs()));
  }
  try {
    return PegPermutation(std::move(m));
  } catch (const InvalidArgument&) {
    return std::nullopt;
  }
}

VertexMap induced_map(const PegPermutation& sigma, const PuzzleParams& params) {
  return VertexMap::induced(params, sigma);
}

// ---- is_automorphism ----

std::string AutomorphismCheck::describe(const PuzzleParams& params) const {
  if (pass || !witness) return "automorphism";
  const std::string a = render(State(params, witness->first));
  const std::string b = render(State(params, witness->second));
  if (witness->failure == Failure::kNotBijective) return "not bijective: " + a + " and " + b + " share an image";
  return "edge " + a + " -- " + b + " is not mapped to an edge";
}

AutomorphismCheck is_automorphism(const VertexMap& map, const PuzzleParams& params) {
  if (!(map.params() == params)) throw InvalidArgument("is_automorphism: map belongs to different params");
  require_exhaustive(params, "is_automorphism");
  const Code n = params.vertex_count();
  std::vector<Code> preimage(n, kUnmapped);
  for (Code c = 0; c < n; ++c) {
    const Code image = map(c);
    if (preimage[image] != kUnmapped) {
      return {false, AutomorphismCheck::Witness{AutomorphismCheck::Failure::kNotBijective, preimage[image], c}};
    }
    preimage[image] = c;
  }
  // An injective edge-preserving map of a finite graph onto itself also
  // preserves non-edges, since it is then a bijection on the edge set.
  for (Code u = 0; u < n; ++u) {
    const Code mu = map(u);
    std::optional<Code> broken;
    codes::for_each_neighbor(params, u, [&](Code w) {
      if (!broken && !codes::adjacent(params, mu, map(w))) broken = w;
    });
    if (broken) return {false, AutomorphismCheck::Witness{AutomorphismCheck::Failure::kEdgeNotPreserved, u, *broken}};
  }
  return {true, std::nullopt};
}

// ---- fingerprints ----

CornerFingerprint corner_fingerprint(const std::vector<DistanceTable>& corners, const State& v) {
  const auto& params = v.params();
  if (static_cast<int>(corners.size()) != params.pegs()) {
    throw InvalidArgument("corner_fingerprint: need one distance table per peg");
  }
  CornerFingerprint fp(corners.size());
  for (int p = 0; p < params.pegs(); ++p) {
    if (!(corners[p].params() == params) || corners[p].source_code() != codes::perfect(params, p)) {
      throw InvalidArgument("corner_fingerprint: table " + std::to_string(p) + " is not rooted at its corner");
    }
    fp[p] = corners[p].at(v);
  }
  return fp;
}

// ---- enumeration ----

AutomorphismSet enumerate_automorphisms(const PuzzleParams& params, Parallelism par) {
  require_exhaustive(params, "enumerate_automorphisms");
  const int k = params.pegs();
  const Code n = params.vertex_count();

  // Corners are exactly the minimum-degree vertices.
  const auto degrees = degree_table(params, par);
  for (Code c = 0; c < n; ++c) {
    const bool perfect = codes::occupied_pegs(params, c) == 1;
    if ((degrees[c] == k - 1) != perfect) {
      throw VerificationFailure("degree dichotomy fails at " + describe(params, c) + " (degree " +
                                std::to_string(degrees[c]) + ")");
    }
  }

  const auto corners = corner_tables(params, par);
  SearchContext ctx{params, corners, degrees, {}, {}};
  for (Code c = 0; c < n; ++c) ctx.by_fingerprint[fingerprint_key(corners, c)].push_back(c);
  const GeodesicDag levels(corners.front());
  for (Code c : levels.order()) {
    if (codes::occupied_pegs(params, c) != 1) ctx.sequence.push_back(c);
  }

  const auto assignments = PegPermutation::all(k);
  std::vector<std::vector<std::vector<Code>>> found(assignments.size());
  detail::parallel_chunks(par, std::size_t{0}, assignments.size(), [&](std::size_t lo, std::size_t hi, unsigned) {
    for (std::size_t i = lo; i < hi; ++i) found[i] = Extender(ctx, assignments[i]).run();
  });

  AutomorphismSet set{params, {}, {}};
  for (std::size_t i = 0; i < assignments.size(); ++i) {
    for (auto& image : found[i]) {
      auto map = VertexMap::from_table(params, std::move(image));
      const auto check = is_automorphism(map, params);
      if (!check.pass) {
        throw VerificationFailure("enumerated map for corner assignment " + assignments[i].to_string() +
                                  " is not an automorphism: " + check.describe(params));
      }
      if (n > kExplicitCap) {
        // Keep only the generator when the table is exactly its induced map.
        const auto lazy = VertexMap::induced(params, assignments[i]);
        bool same = true;
        for (Code c = 0; c < n && same; ++c) same = lazy(c) == map(c);
        if (same) map = lazy;
      }
      set.members.push_back(std::move(map));
      set.corner_action.push_back(assignments[i]);
    }
  }
  return set;
}

GroupReport verify_group_structure(const AutomorphismSet& set) {
  const auto& params = set.params;
  const int k = params.pegs();
  const Code n = params.vertex_count();
  GroupReport report{params, set.order(), false, false, false, false, false, false, false, std::nullopt};
  auto fail = [&](std::string why) {
    if (!report.failure) report.failure = std::move(why);
  };
  if (set.corner_action.size() != set.members.size()) {
    fail("corner action list does not match member list");
    return report;
  }

  std::vector<std::vector<Code>> tables;
  tables.reserve(set.order());
  for (const auto& m : set.members) tables.push_back(m.table());

  // Members whose tables realise each corner action.
  std::map<PegPermutation, std::vector<std::size_t>> by_action;
  for (std::size_t i = 0; i < set.order(); ++i) {
    const auto action = set.members[i].corner_action();
    if (!action || !(*action == set.corner_action[i])) {
      fail("member " + std::to_string(i) + " has an inconsistent corner action");
      return report;
    }
    by_action[*action].push_back(i);
  }
  auto find = [&](const PegPermutation& action, const std::vector<Code>& table) -> std::optional<std::size_t> {
    const auto it = by_action.find(action);
    if (it == by_action.end()) return std::nullopt;
    for (std::size_t i : it->second) {
      if (tables[i] == table) return i;
    }
    return std::nullopt;
  };

  std::vector<Code> identity(n);
  std::iota(identity.begin(), identity.end(), Code{0});
  report.has_identity = find(PegPermutation::identity(k), identity).has_value();
  if (!report.has_identity) fail("identity map missing");

  report.closed = true;
  report.action_is_homomorphism = true;
  std::vector<Code> composed(n);
  for (std::size_t a = 0; a < set.order() && report.closed; ++a) {
    for (std::size_t b = 0; b < set.order(); ++b) {
      for (Code c = 0; c < n; ++c) composed[c] = tables[a][tables[b][c]];
      const auto hit = find(set.corner_action[a] * set.corner_action[b], composed);
      if (!hit) {
        // Either the composite is missing or it realises another action.
        report.closed = false;
        fail("composite of members " + std::to_string(a) + " and " + std::to_string(b) +
             " is not in the set under the composed corner action");
        break;
      }
    }
  }
  if (!report.closed) report.action_is_homomorphism = false;

  report.has_inverses = true;
  std::vector<Code> inverse(n);
  for (std::size_t a = 0; a < set.order(); ++a) {
    for (Code c = 0; c < n; ++c) inverse[tables[a][c]] = c;
    if (!find(set.corner_action[a].inverse(), inverse)) {
      report.has_inverses = false;
      fail("inverse of member " + std::to_string(a) + " missing");
      break;
    }
  }

  std::size_t factorial = 1;
  for (int i = 2; i <= k; ++i) factorial *= static_cast<std::size_t>(i);
  report.action_injective = by_action.size() == set.order();
  if (!report.action_injective) fail("two members induce the same corner permutation");
  report.action_surjective = by_action.size() == factorial;
  if (!report.action_surjective) {
    fail("corner action reaches " + std::to_string(by_action.size()) + " of " + std::to_string(factorial) +
         " peg permutations");
  }
  report.is_symmetric_group = report.has_identity && report.closed && report.has_inverses &&
                              report.action_is_homomorphism && report.action_injective &&
                              report.action_surjective && report.order == factorial;
  return report;
}

// ---- structural checks ----

CheckResult degree_check(const PuzzleParams& params, Parallelism par) {
  const std::string name = "lemma2";
  const int k = params.pegs();
  const auto degrees = degree_table(params, par);
  for (Code c = 0; c < params.vertex_count(); ++c) {
    const int m = codes::occupied_pegs(params, c);
    const int deg = degrees[c];
    const std::string at = describe(params, c) + " (degree " + std::to_string(deg) + ")";
    if (deg != degree_closed_form(k, m)) {
      return CheckResult::fail(name, at + " differs from closed form " + std::to_string(degree_closed_form(k, m)));
    }
    if (m == 1 && deg != k - 1) return CheckResult::fail(name, "perfect state " + at + " is not of degree k-1");
    if (m > 1 && deg < 2 * k - 3) return CheckResult::fail(name, "non-perfect state " + at + " below 2k-3");
    if (m > 1 && deg == k - 1) return CheckResult::fail(name, "non-perfect state " + at + " has corner degree");
  }
  return CheckResult::ok(name);
}

CheckResult induced_maps_check(const PuzzleParams& params) {
  const std::string name = "prop1";
  for (const auto& sigma : PegPermutation::all(params.pegs())) {
    const auto check = is_automorphism(induced_map(sigma, params), params);
    if (!check.pass) return CheckResult::fail(name, "sigma " + sigma.to_string() + ": " + check.describe(params));
  }
  return CheckResult::ok(name);
}

CheckResult corner_fixing_is_identity(const AutomorphismSet& set) {
  const std::string name = "prop3";
  const auto& params = set.params;
  std::optional<std::size_t> fixer;
  for (std::size_t i = 0; i < set.order(); ++i) {
    bool fixes = true;
    for (int p = 0; p < params.pegs() && fixes; ++p) {
      const Code corner = codes::perfect(params, p);
      fixes = set.members[i](corner) == corner;
    }
    if (!fixes) continue;
    if (fixer) {
      return CheckResult::fail(name, "members " + std::to_string(*fixer) + " and " + std::to_string(i) +
                                         " both fix every corner");
    }
    fixer = i;
  }
  if (!fixer) return CheckResult::fail(name, "no member fixes every corner");
  for (Code c = 0; c < params.vertex_count(); ++c) {
    const Code image = set.members[*fixer](c);
    if (image != c) {
      return CheckResult::fail(name, "corner-fixing member moves " + describe(params, c) + " to " +
                                         describe(params, image));
    }
  }
  return CheckResult::ok(name);
}

CheckResult corner_fixing_is_identity(const PuzzleParams& params, Parallelism par) {
  return corner_fixing_is_identity(enumerate_automorphisms(params, par));
}

CheckResult substructure_preservation_check(const AutomorphismSet& set) {
  const std::string name = "lemma6";
  const auto& params = set.params;
  for (std::size_t g = 0; g < set.order(); ++g) {
    const auto& map = set.members[g];
    for (int i = 0; i < params.pegs(); ++i) {
      const Code corner = codes::perfect(params, i);
      if (map(corner) != corner) continue;
      for (Code v = 0; v < params.vertex_count(); ++v) {
        if (codes::substructure(params, v) != i) continue;
        const Code image = map(v);
        if (codes::substructure(params, image) != i) {
          return CheckResult::fail(name, "member " + set.corner_action[g].to_string() + " fixes corner " +
                                             std::to_string(i) + " but sends " + describe(params, v) + " to " +
                                             describe(params, image));
        }
      }
    }
  }
  return CheckResult::ok(name);
}

CheckResult substructure_preservation_check(const PuzzleParams& params, Parallelism par) {
  return substructure_preservation_check(enumerate_automorphisms(params, par));
}

CheckResult adjacency_observation_check(const PuzzleParams& params) {
  const std::string name = "adjacency";
  const int k = params.pegs();
  const int n = params.disks();
  if (n < 2) return CheckResult::skip(name, "requires n >= 2");
  require_exhaustive(params, "adjacency_observation_check");
  const Code top = params.weight(n - 1);
  const Code tail_span = top;  // k^(n-1)
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      // i followed by n-1 copies of j.
      const Code tail = static_cast<Code>(j) * ((tail_span - 1) / static_cast<Code>(k - 1));
      const Code v = static_cast<Code>(i) * top + tail;
      std::vector<bool> reaches(k, false);
      std::vector<Code> nbrs;
      codes::for_each_neighbor(params, v, [&](Code w) {
        reaches[codes::substructure(params, w)] = true;
        nbrs.push_back(w);
      });
      const std::string at = describe(params, v);
      if (reaches[j]) return CheckResult::fail(name, at + " has a neighbor in [" + std::to_string(j) + "]");
      for (int l = 0; l < k; ++l) {
        if (l == j) continue;
        if (!reaches[l]) return CheckResult::fail(name, at + " has no neighbor in [" + std::to_string(l) + "]");
        if (l == i) continue;
        const Code expected = static_cast<Code>(l) * top + tail;
        if (std::find(nbrs.begin(), nbrs.end(), expected) == nbrs.end()) {
          return CheckResult::fail(name, at + " is not adjacent to " + describe(params, expected));
        }
      }
    }
  }
  return CheckResult::ok(name);
}

}  // namespace hanoi
