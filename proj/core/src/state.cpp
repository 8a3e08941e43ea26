#include "hanoi/state.hpp"

#include <algorithm>
#include <charconv>

#include "hanoi/error.hpp"

namespace hanoi {

namespace {

std::string params_text(int pegs, int disks) {
  return "k=" + std::to_string(pegs) + ", n=" + std::to_string(disks);
}

void check_peg(const PuzzleParams& params, int peg, const char* what) {
  if (peg < 0 || peg >= params.pegs()) {
    throw InvalidArgument(std::string(what) + " " + std::to_string(peg) + " out of range for " +
                          params_text(params.pegs(), params.disks()));
  }
}

}  // namespace

PuzzleParams::PuzzleParams(int pegs, int disks) : pegs_(pegs), disks_(disks), vertex_count_(1) {
  if (pegs < 3) throw InvalidArgument("need at least 3 pegs, got " + std::to_string(pegs));
  if (pegs > kMaxPegs) {
    throw InvalidArgument("at most " + std::to_string(kMaxPegs) + " pegs supported, got " +
                          std::to_string(pegs));
  }
  if (disks < 1) throw InvalidArgument("need at least 1 disk, got " + std::to_string(disks));
  for (int i = 0; i < disks; ++i) {
    if (vertex_count_ > kCodeLimit / static_cast<Code>(pegs)) {
      throw InfeasibleInstance("k^n exceeds 2^48 for " + params_text(pegs, disks));
    }
    vertex_count_ *= static_cast<Code>(pegs);
  }
}

Code PuzzleParams::weight(int disk) const {
  Code w = 1;
  for (int i = 0; i < disk; ++i) w *= static_cast<Code>(pegs_);
  return w;
}

State::State(const PuzzleParams& params, Code code) : params_(params), code_(code) {
  if (code >= params.vertex_count()) {
    throw InvalidArgument("state code " + std::to_string(code) + " out of range for " +
                          params_text(params.pegs(), params.disks()));
  }
}

State State::from_pegs(const PuzzleParams& params, const std::vector<int>& pegs_by_disk) {
  if (static_cast<int>(pegs_by_disk.size()) != params.disks()) {
    throw InvalidArgument("expected " + std::to_string(params.disks()) + " digits, got " +
                          std::to_string(pegs_by_disk.size()));
  }
  Code code = 0;
  for (int i = params.disks() - 1; i >= 0; --i) {
    check_peg(params, pegs_by_disk[i], "digit");
    code = code * static_cast<Code>(params.pegs()) + static_cast<Code>(pegs_by_disk[i]);
  }
  return State(params, code);
}

int State::peg_of(int disk) const {
  if (disk < 0 || disk >= params_.disks()) {
    throw InvalidArgument("disk " + std::to_string(disk) + " out of range");
  }
  return codes::digit(code_, params_.weight(disk), params_.pegs());
}

std::vector<int> State::pegs_by_disk() const {
  std::vector<int> out(params_.disks());
  Code rest = code_;
  for (auto& d : out) {
    d = static_cast<int>(rest % static_cast<Code>(params_.pegs()));
    rest /= static_cast<Code>(params_.pegs());
  }
  return out;
}

int TopmostProfile::occupied() const {
  return static_cast<int>(std::count_if(top.begin(), top.end(), [](const auto& t) { return t.has_value(); }));
}

State parse_state(std::string_view text, const PuzzleParams& params) {
  const int n = params.disks();
  std::vector<int> values;
  values.reserve(n);
  if (params.pegs() <= 10) {
    for (char c : text) {
      if (c < '0' || c > '9') {
        throw InvalidArgument("malformed state '" + std::string(text) + "': expected digits only");
      }
      values.push_back(c - '0');
    }
  } else {
    std::size_t pos = 0;
    while (true) {
      const std::size_t comma = text.find(',', pos);
      const std::string_view field = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
      int value = 0;
      const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
      if (field.empty() || ec != std::errc{} || end != field.data() + field.size()) {
        throw InvalidArgument("malformed state '" + std::string(text) +
                              "': expected comma-separated decimal values");
      }
      values.push_back(value);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
  }
  if (static_cast<int>(values.size()) != n) {
    throw InvalidArgument("state '" + std::string(text) + "' has " + std::to_string(values.size()) +
                          " digits, expected " + std::to_string(n));
  }
  for (int v : values) {
    if (v >= params.pegs()) {
      throw InvalidArgument("digit " + std::to_string(v) + " in '" + std::string(text) + "' is not below k=" +
                            std::to_string(params.pegs()));
    }
  }
  // Text is most significant digit first.
  std::reverse(values.begin(), values.end());
  return State::from_pegs(params, values);
}

std::string render(const State& state) {
  const auto pegs = state.pegs_by_disk();
  std::string out;
  const bool wide = state.params().pegs() > 10;
  for (auto it = pegs.rbegin(); it != pegs.rend(); ++it) {
    if (wide) {
      if (!out.empty()) out += ',';
      out += std::to_string(*it);
    } else {
      out += static_cast<char>('0' + *it);
    }
  }
  return out;
}

State perfect_state(const PuzzleParams& params, int peg) {
  check_peg(params, peg, "peg");
  return State(params, codes::perfect(params, peg));
}

bool is_perfect(const State& state) { return codes::occupied_pegs(state.params(), state.code()) == 1; }

TopmostProfile topmost_profile(const State& state) {
  TopmostProfile profile;
  profile.top.assign(state.params().pegs(), std::nullopt);
  const auto pegs = state.pegs_by_disk();
  for (int d = 0; d < static_cast<int>(pegs.size()); ++d) {
    auto& slot = profile.top[pegs[d]];
    if (!slot) slot = d;
  }
  return profile;
}

std::vector<Move> legal_moves(const State& state) {
  const auto profile = topmost_profile(state);
  std::vector<std::pair<int, int>> tops;  // (disk, peg)
  for (int p = 0; p < static_cast<int>(profile.top.size()); ++p) {
    if (profile.top[p]) tops.emplace_back(*profile.top[p], p);
  }
  std::sort(tops.begin(), tops.end());
  std::vector<Move> moves;
  for (const auto& [disk, from] : tops) {
    for (int to = 0; to < static_cast<int>(profile.top.size()); ++to) {
      if (to == from) continue;
      if (!profile.top[to] || *profile.top[to] > disk) moves.push_back({disk, from, to});
    }
  }
  return moves;
}

bool is_legal(const State& state, const Move& move) {
  const auto& params = state.params();
  if (move.disk < 0 || move.disk >= params.disks()) return false;
  if (move.from_peg < 0 || move.from_peg >= params.pegs()) return false;
  if (move.to_peg < 0 || move.to_peg >= params.pegs()) return false;
  if (move.from_peg == move.to_peg) return false;
  const auto pegs = state.pegs_by_disk();
  if (pegs[move.disk] != move.from_peg) return false;
  for (int d = 0; d < move.disk; ++d) {
    if (pegs[d] == move.from_peg || pegs[d] == move.to_peg) return false;
  }
  return true;
}

State apply_move(const State& state, const Move& move) {
  if (!is_legal(state, move)) {
    throw IllegalMove("illegal move (disk " + std::to_string(move.disk) + ", " + std::to_string(move.from_peg) +
                      " -> " + std::to_string(move.to_peg) + ") in state " + render(state));
  }
  const Code w = state.params().weight(move.disk);
  const Code code = state.code() - static_cast<Code>(move.from_peg) * w + static_cast<Code>(move.to_peg) * w;
  return State(state.params(), code);
}

int degree(const State& state) { return codes::degree(state.params(), state.code()); }

int degree_closed_form(int pegs, int occupied) { return occupied * (pegs - 1) - occupied * (occupied - 1) / 2; }

int substructure_index(const State& state) { return codes::substructure(state.params(), state.code()); }

namespace codes {

Code perfect(const PuzzleParams& params, int peg) {
  // peg * (k^n - 1) / (k - 1)
  return static_cast<Code>(peg) * ((params.vertex_count() - 1) / static_cast<Code>(params.pegs() - 1));
}

int substructure(const PuzzleParams& params, Code code) {
  return static_cast<int>(code / params.weight(params.disks() - 1));
}

int occupied_pegs(const PuzzleParams& params, Code code) {
  std::array<bool, kMaxPegs> seen{};
  int m = 0;
  const Code base = static_cast<Code>(params.pegs());
  for (int d = 0; d < params.disks() && m < params.pegs(); ++d) {
    const auto p = static_cast<int>(code % base);
    code /= base;
    if (!seen[p]) {
      seen[p] = true;
      ++m;
    }
  }
  return m;
}

int degree(const PuzzleParams& params, Code code) {
  int count = 0;
  for_each_neighbor(params, code, [&](Code) { ++count; });
  return count;
}

bool adjacent(const PuzzleParams& params, Code a, Code b) {
  if (a == b) return false;
  const Code base = static_cast<Code>(params.pegs());
  int moved = -1;
  int from = 0;
  int to = 0;
  Code x = a;
  Code y = b;
  for (int d = 0; d < params.disks(); ++d) {
    const auto p = static_cast<int>(x % base);
    const auto q = static_cast<int>(y % base);
    x /= base;
    y /= base;
    if (p != q) {
      if (moved >= 0) return false;
      moved = d;
      from = p;
      to = q;
    }
  }
  // No smaller disk may sit on the source or the destination peg.
  x = a;
  for (int d = 0; d < moved; ++d) {
    const auto p = static_cast<int>(x % base);
    x /= base;
    if (p == from || p == to) return false;
  }
  return true;
}

}  // namespace codes

}  // namespace hanoi
