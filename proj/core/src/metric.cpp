#include "hanoi/metric.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <unordered_map>

#include "hanoi/error.hpp"

namespace hanoi {

namespace {

std::string describe(const PuzzleParams& params, Code code) { return render(State(params, code)); }

}  // namespace

DistanceTable::DistanceTable(const PuzzleParams& params, Code source, std::vector<Distance> dist)
    : params_(params), source_(source), dist_(std::move(dist)) {
  if (dist_.size() != params_.vertex_count()) {
    throw FormatError("distance table has " + std::to_string(dist_.size()) + " entries, expected " +
                      std::to_string(params_.vertex_count()));
  }
  if (source_ >= params_.vertex_count()) throw FormatError("distance table source out of range");
  if (dist_[source_] != 0) throw FormatError("distance table has nonzero entry at its source");
  if (std::find(dist_.begin(), dist_.end(), kUnreached) != dist_.end()) {
    throw FormatError("distance table has unreached entries");
  }
}

Distance DistanceTable::eccentricity() const { return *std::max_element(dist_.begin(), dist_.end()); }

DistanceTable bfs_from(const State& source, Parallelism par) {
  const auto& params = source.params();
  require_exhaustive(params, "bfs_from");
  std::vector<Distance> dist(params.vertex_count(), kUnreached);
  dist[source.code()] = 0;
  std::vector<Code> frontier{source.code()};
  std::vector<Code> next;
  const unsigned workers = par.resolved();
  std::vector<std::vector<Code>> local(workers);

  for (Distance level = 0; !frontier.empty(); ++level) {
    if (level + 1 >= kUnreached) throw InfeasibleInstance("bfs_from: distance exceeds 16-bit range");
    const auto step = static_cast<Distance>(level + 1);
    next.clear();
    if (workers <= 1 || frontier.size() < 1024) {
      for (Code x : frontier) {
        codes::for_each_neighbor(params, x, [&](Code w) {
          if (dist[w] == kUnreached) {
            dist[w] = step;
            next.push_back(w);
          }
        });
      }
    } else {
      detail::parallel_chunks(par, std::size_t{0}, frontier.size(), [&](std::size_t lo, std::size_t hi, unsigned w) {
        auto& out = local[w];
        out.clear();
        for (std::size_t i = lo; i < hi; ++i) {
          codes::for_each_neighbor(params, frontier[i], [&](Code c) {
            std::atomic_ref<Distance> slot(dist[c]);
            Distance expected = kUnreached;
            if (slot.load(std::memory_order_relaxed) == kUnreached &&
                slot.compare_exchange_strong(expected, step, std::memory_order_relaxed)) {
              out.push_back(c);
            }
          });
        }
      });
      for (auto& out : local) next.insert(next.end(), out.begin(), out.end());
    }
    frontier.swap(next);
  }
  return DistanceTable(params, source.code(), std::move(dist));
}

std::vector<DistanceTable> corner_tables(const PuzzleParams& params, Parallelism par) {
  std::vector<DistanceTable> tables;
  tables.reserve(params.pegs());
  for (int p = 0; p < params.pegs(); ++p) tables.push_back(bfs_from(perfect_state(params, p), par));
  return tables;
}

std::uint32_t distance(const State& u, const State& v, SearchBudget budget) {
  if (!(u.params() == v.params())) throw InvalidArgument("distance: states belong to different puzzles");
  if (u == v) return 0;
  const auto& params = u.params();

  struct Side {
    std::unordered_map<Code, std::uint32_t> seen;
    std::vector<Code> frontier;
    std::uint32_t depth = 0;
  };
  Side fwd;
  Side bwd;
  fwd.seen.emplace(u.code(), 0);
  fwd.frontier.push_back(u.code());
  bwd.seen.emplace(v.code(), 0);
  bwd.frontier.push_back(v.code());

  constexpr auto kNone = std::numeric_limits<std::uint32_t>::max();
  std::vector<Code> next;
  while (!fwd.frontier.empty() && !bwd.frontier.empty()) {
    Side& grow = fwd.frontier.size() <= bwd.frontier.size() ? fwd : bwd;
    const Side& other = &grow == &fwd ? bwd : fwd;
    const std::uint32_t step = grow.depth + 1;
    std::uint32_t best = kNone;
    next.clear();
    for (Code x : grow.frontier) {
      codes::for_each_neighbor(params, x, [&](Code w) {
        if (!grow.seen.emplace(w, step).second) return;
        next.push_back(w);
        if (const auto it = other.seen.find(w); it != other.seen.end()) best = std::min(best, step + it->second);
      });
    }
    grow.frontier.swap(next);
    grow.depth = step;
    if (best != kNone) return best;
    if (fwd.seen.size() + bwd.seen.size() > budget.max_visited) {
      throw InfeasibleInstance("distance: search exceeded the budget of " + std::to_string(budget.max_visited) +
                               " visited states");
    }
  }
  throw VerificationFailure("distance: search exhausted without meeting; graph is not connected");
}

GeodesicDag::GeodesicDag(DistanceTable table) : table_(std::move(table)) {
  const auto& params = table_.params();
  const Code n = params.vertex_count();
  offsets_.assign(n + 1, 0);
  for (Code c = 0; c < n; ++c) {
    const Distance d = table_[c];
    std::uint64_t count = 0;
    codes::for_each_neighbor(params, c, [&](Code w) { count += table_[w] + 1 == d; });
    offsets_[c + 1] = offsets_[c] + count;
  }
  preds_.resize(offsets_[n]);
  for (Code c = 0; c < n; ++c) {
    const Distance d = table_[c];
    auto pos = offsets_[c];
    codes::for_each_neighbor(params, c, [&](Code w) {
      if (table_[w] + 1 == d) preds_[pos++] = w;
    });
  }

  // Counting sort by distance keeps code order within each layer.
  const Distance ecc = table_.eccentricity();
  std::vector<std::uint64_t> start(static_cast<std::size_t>(ecc) + 2, 0);
  for (Code c = 0; c < n; ++c) ++start[table_[c] + 1];
  for (std::size_t i = 1; i < start.size(); ++i) start[i] += start[i - 1];
  order_.resize(n);
  for (Code c = 0; c < n; ++c) order_[start[table_[c]]++] = c;
}

std::span<const Code> GeodesicDag::predecessors(Code code) const {
  return {preds_.data() + offsets_[code], preds_.data() + offsets_[code + 1]};
}

GeodesicDag geodesic_dag(const State& source, Parallelism par) { return GeodesicDag(bfs_from(source, par)); }

BigCount count_geodesics(const GeodesicDag& dag, Code target) {
  if (target >= dag.params().vertex_count()) throw InvalidArgument("count_geodesics: target out of range");
  // Collect the ancestors of target layer by layer, then count forward.
  std::vector<std::vector<Code>> layers{{target}};
  std::unordered_map<Code, BigCount> ways;
  ways.emplace(target, 0);
  while (!dag.predecessors(layers.back().front()).empty()) {
    std::vector<Code> layer;
    for (Code x : layers.back()) {
      for (Code p : dag.predecessors(x)) {
        if (ways.emplace(p, 0).second) layer.push_back(p);
      }
    }
    layers.push_back(std::move(layer));
  }
  ways[dag.source_code()] = 1;
  for (auto it = layers.rbegin() + 1; it != layers.rend(); ++it) {
    for (Code x : *it) {
      BigCount sum = 0;
      for (Code p : dag.predecessors(x)) sum += ways[p];
      ways[x] = std::move(sum);
    }
  }
  return ways[target];
}

BigCount count_geodesics(const State& u, const State& v) {
  if (!(u.params() == v.params())) throw InvalidArgument("count_geodesics: states belong to different puzzles");
  return count_geodesics(geodesic_dag(u), v.code());
}

std::vector<MoveRange> largest_disk_move_ranges(const GeodesicDag& dag) {
  const auto& params = dag.params();
  const Code top_weight = params.weight(params.disks() - 1);
  std::vector<MoveRange> range(params.vertex_count());
  for (Code x : dag.order()) {
    const auto preds = dag.predecessors(x);
    if (preds.empty()) continue;
    MoveRange r{std::numeric_limits<int>::max(), std::numeric_limits<int>::min()};
    for (Code p : preds) {
      const int moved = (p / top_weight) != (x / top_weight) ? 1 : 0;
      r.min_moves = std::min(r.min_moves, range[p].min_moves + moved);
      r.max_moves = std::max(r.max_moves, range[p].max_moves + moved);
    }
    range[x] = r;
  }
  return range;
}

MoveRange largest_disk_move_range(const PuzzleParams& params, int corner_peg, const State& target) {
  if (!(target.params() == params)) throw InvalidArgument("largest_disk_move_range: target has other params");
  const auto dag = geodesic_dag(perfect_state(params, corner_peg));
  return largest_disk_move_ranges(dag)[target.code()];
}

CheckResult largest_disk_check(const PuzzleParams& params, Parallelism par) {
  const std::string name = "lemma4";
  for (int corner = 0; corner < params.pegs(); ++corner) {
    const auto dag = geodesic_dag(perfect_state(params, corner), par);
    const auto ranges = largest_disk_move_ranges(dag);
    for (Code v = 0; v < params.vertex_count(); ++v) {
      const bool same = codes::substructure(params, v) == corner;
      const MoveRange expected = same ? MoveRange{0, 0} : MoveRange{1, 1};
      if (ranges[v] != expected) {
        return CheckResult::fail(name, "corner " + std::to_string(corner) + " to " + describe(params, v) +
                                           ": largest disk moves in [" + std::to_string(ranges[v].min_moves) +
                                           ", " + std::to_string(ranges[v].max_moves) + "], expected " +
                                           std::to_string(expected.min_moves));
      }
    }
  }
  return CheckResult::ok(name);
}

NearestCornerReport nearest_corner_report(const std::vector<DistanceTable>& corners) {
  if (corners.empty()) throw InvalidArgument("nearest_corner_report: no corner tables");
  const auto& params = corners.front().params();
  if (static_cast<int>(corners.size()) != params.pegs()) {
    throw InvalidArgument("nearest_corner_report: need one table per peg");
  }
  for (int p = 0; p < params.pegs(); ++p) {
    if (!(corners[p].params() == params) || corners[p].source_code() != codes::perfect(params, p)) {
      throw InvalidArgument("nearest_corner_report: table " + std::to_string(p) + " is not rooted at its corner");
    }
  }
  NearestCornerReport report{params, true, std::nullopt};
  for (Code v = 0; v < params.vertex_count(); ++v) {
    const int own = codes::substructure(params, v);
    const Distance own_d = corners[own][v];
    for (int j = 0; j < params.pegs(); ++j) {
      if (j == own) continue;
      if (!(own_d < corners[j][v])) {
        report.pass = false;
        report.counterexample = NearestCornerReport::Counterexample{v, own, j, own_d, corners[j][v]};
        return report;
      }
    }
  }
  return report;
}

NearestCornerReport nearest_corner_report(const PuzzleParams& params, Parallelism par) {
  return nearest_corner_report(corner_tables(params, par));
}

}  // namespace hanoi
