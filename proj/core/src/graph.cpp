#include "hanoi/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>

#include "hanoi/error.hpp"

namespace hanoi {

namespace {

void require_cap(const PuzzleParams& params, Code cap, const char* operation, const char* kind) {
  if (params.vertex_count() > cap) {
    throw InfeasibleInstance(std::string(operation) + ": k=" + std::to_string(params.pegs()) +
                             ", n=" + std::to_string(params.disks()) + " has " +
                             std::to_string(params.vertex_count()) + " states, over the " + kind + " cap of " +
                             std::to_string(cap));
  }
}

std::string hsv_color(int index, int count) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f 0.450 0.950", static_cast<double>(index) / count);
  return buf;
}

}  // namespace

void require_exhaustive(const PuzzleParams& params, const char* operation) {
  require_cap(params, kExhaustiveCap, operation, "exhaustive-scan");
}

void require_explicit(const PuzzleParams& params, const char* operation) {
  require_cap(params, kExplicitCap, operation, "explicit-materialization");
}

std::vector<State> neighbors(const State& state) {
  std::vector<State> out;
  codes::for_each_neighbor(state.params(), state.code(),
                           [&](Code c) { out.emplace_back(state.params(), c); });
  return out;
}

Code vertex_count(const PuzzleParams& params) { return params.vertex_count(); }

std::vector<std::uint8_t> degree_table(const PuzzleParams& params, Parallelism par) {
  require_exhaustive(params, "degree_table");
  std::vector<std::uint8_t> degrees(params.vertex_count());
  detail::parallel_chunks(par, Code{0}, params.vertex_count(), [&](Code lo, Code hi, unsigned) {
    for (Code c = lo; c < hi; ++c) degrees[c] = static_cast<std::uint8_t>(codes::degree(params, c));
  });
  return degrees;
}

std::uint64_t edge_count(const PuzzleParams& params, Parallelism par) {
  require_exhaustive(params, "edge_count");
  const unsigned workers = par.resolved();
  std::vector<std::uint64_t> partial(workers, 0);
  detail::parallel_chunks(par, Code{0}, params.vertex_count(), [&](Code lo, Code hi, unsigned w) {
    std::uint64_t sum = 0;
    for (Code c = lo; c < hi; ++c) sum += static_cast<std::uint64_t>(codes::degree(params, c));
    partial[w] = sum;
  });
  return std::accumulate(partial.begin(), partial.end(), std::uint64_t{0}) / 2;
}

EdgeMatrix::EdgeMatrix(Code order, std::vector<std::size_t> row_offsets, std::vector<Entry> entries)
    : order_(order), row_offsets_(std::move(row_offsets)), entries_(std::move(entries)) {}

std::span<const EdgeMatrix::Entry> EdgeMatrix::row(Code row) const {
  return {entries_.data() + row_offsets_[row], entries_.data() + row_offsets_[row + 1]};
}

std::uint32_t EdgeMatrix::operator()(Code row, Code column) const {
  const auto r = this->row(row);
  const auto it = std::lower_bound(r.begin(), r.end(), column,
                                   [](const Entry& e, Code c) { return e.column < c; });
  return it != r.end() && it->column == column ? it->multiplicity : 0;
}

std::uint32_t EdgeMatrix::row_sum(Code row) const {
  std::uint32_t sum = 0;
  for (const auto& e : this->row(row)) sum += e.multiplicity;
  return sum;
}

bool EdgeMatrix::symmetric() const {
  for (Code i = 0; i < order_; ++i) {
    for (const auto& e : row(i)) {
      if ((*this)(e.column, i) != e.multiplicity) return false;
    }
  }
  return true;
}

EdgeMatrix edge_matrix(const PuzzleParams& params) {
  require_explicit(params, "edge_matrix");
  const Code order = params.vertex_count();
  std::vector<std::size_t> offsets{0};
  std::vector<EdgeMatrix::Entry> entries;
  std::vector<Code> row;
  for (Code c = 0; c < order; ++c) {
    row.clear();
    codes::for_each_neighbor(params, c, [&](Code w) { row.push_back(w); });
    std::sort(row.begin(), row.end());
    for (std::size_t i = 0; i < row.size();) {
      std::size_t j = i;
      while (j < row.size() && row[j] == row[i]) ++j;
      entries.push_back({row[i], static_cast<std::uint8_t>(j - i)});
      i = j;
    }
    offsets.push_back(entries.size());
  }
  return EdgeMatrix(order, std::move(offsets), std::move(entries));
}

std::string export_dot(const PuzzleParams& params, const DotOptions& options) {
  require_explicit(params, "export_dot");
  const int k = params.pegs();
  std::string out = "graph H_" + std::to_string(params.disks()) + "_" + std::to_string(k) + " {\n";
  if (options.color_substructures) out += "  node [style=filled];\n";
  for (Code c = 0; c < params.vertex_count(); ++c) {
    const std::string name = render(State(params, c));
    out += "  \"" + name + "\" [label=\"" + name + "\"";
    if (options.color_substructures) {
      out += ", fillcolor=\"" + hsv_color(codes::substructure(params, c), k) + "\"";
    }
    out += "];\n";
  }
  for (Code c = 0; c < params.vertex_count(); ++c) {
    const std::string name = render(State(params, c));
    codes::for_each_neighbor(params, c, [&](Code w) {
      if (w > c) out += "  \"" + name + "\" -- \"" + render(State(params, w)) + "\";\n";
    });
  }
  out += "}\n";
  return out;
}

std::string export_adjlist(const PuzzleParams& params) {
  require_explicit(params, "export_adjlist");
  std::string out;
  for (Code c = 0; c < params.vertex_count(); ++c) {
    out += "{\"v\": \"" + render(State(params, c)) + "\", \"nbrs\": [";
    bool first = true;
    codes::for_each_neighbor(params, c, [&](Code w) {
      if (!first) out += ", ";
      first = false;
      out += "\"" + render(State(params, w)) + "\"";
    });
    out += "]}\n";
  }
  return out;
}

}  // namespace hanoi
