#include <doctest.h>

#include <algorithm>
#include <regex>
#include <set>
#include <sstream>

#include <json.hpp>

#include "hanoi/error.hpp"
#include "hanoi/graph.hpp"
#include "oracle.hpp"

using namespace hanoi;

namespace {

std::vector<std::string> rendered_neighbors(const char* text, int k, int n) {
  const PuzzleParams params(k, n);
  std::vector<std::string> out;
  for (const auto& s : neighbors(parse_state(text, params))) out.push_back(render(s));
  return out;
}

bool contains(const std::vector<std::string>& v, const std::string& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

}  // namespace

TEST_CASE("neighbors") {
  CHECK(rendered_neighbors("000", 3, 3) == std::vector<std::string>{"001", "002"});
  CHECK(contains(rendered_neighbors("03112333", 4, 8), "03102333"));
  CHECK(contains(rendered_neighbors("001", 3, 3), "000"));
}

TEST_CASE("neighbor lists are duplicate-free and sized by degree") {
  for (auto [k, n] : {std::pair{3, 4}, {4, 4}, {5, 3}}) {
    const PuzzleParams params(k, n);
    for (Code c = 0; c < params.vertex_count(); ++c) {
      const State s(params, c);
      const auto nbrs = neighbors(s);
      std::set<Code> unique;
      for (const auto& t : nbrs) unique.insert(t.code());
      REQUIRE(unique.size() == nbrs.size());
      REQUIRE(static_cast<int>(nbrs.size()) == degree(s));
      REQUIRE(unique.count(c) == 0);
    }
  }
}

TEST_CASE("edge_count") {
  CHECK(edge_count(PuzzleParams(3, 1)) == 3);
  CHECK(edge_count(PuzzleParams(3, 2)) == 12);
  CHECK(edge_count(PuzzleParams(3, 3)) == 39);
  for (int n = 1; n <= 8; ++n) {
    const PuzzleParams params(3, n);
    CHECK(edge_count(params) == 3 * (params.vertex_count() - 1) / 2);
  }
}

TEST_CASE("handshake: edge count is half the degree sum, independent of workers") {
  for (auto [k, n] : {std::pair{3, 6}, {4, 5}, {5, 4}, {6, 3}}) {
    const PuzzleParams params(k, n);
    std::uint64_t degree_sum = 0;
    for (Code c = 0; c < params.vertex_count(); ++c) degree_sum += oracle::neighbors(params, c).size();
    CHECK(2 * edge_count(params) == degree_sum);
    CHECK(edge_count(params, Parallelism{3}) == edge_count(params, Parallelism{1}));
    CHECK(degree_table(params, Parallelism{4}) == degree_table(params, Parallelism{1}));
  }
}

TEST_CASE("edge_matrix") {
  SUBCASE("K3 for one disk") {
    const auto m = edge_matrix(PuzzleParams(3, 1));
    REQUIRE(m.order() == 3);
    for (Code i = 0; i < 3; ++i) {
      for (Code j = 0; j < 3; ++j) CHECK(m(i, j) == (i == j ? 0u : 1u));
    }
  }
  SUBCASE("3 pegs, 2 disks") {
    const auto m = edge_matrix(PuzzleParams(3, 2));
    REQUIRE(m.order() == 9);
    CHECK(m.symmetric());
    for (Code i = 0; i < 9; ++i) {
      CHECK((m.row_sum(i) == 2 || m.row_sum(i) == 3));
      for (Code j = 0; j < 9; ++j) CHECK(m(i, j) <= 1u);
    }
  }
}

TEST_CASE("edge matrix invariants and agreement with the oracle") {
  for (auto [k, n] : {std::pair{3, 1}, {3, 2}, {3, 3}, {3, 4}, {4, 1}, {4, 2}, {4, 3}, {4, 4}}) {
    const PuzzleParams params(k, n);
    const auto m = edge_matrix(params);
    REQUIRE(m.symmetric());
    for (Code i = 0; i < params.vertex_count(); ++i) {
      REQUIRE(m(i, i) == 0u);
      REQUIRE(m.row_sum(i) == static_cast<std::uint32_t>(degree(State(params, i))));
      if (codes::occupied_pegs(params, i) == 1) REQUIRE(m.row_sum(i) == static_cast<std::uint32_t>(k - 1));
      const auto expected = oracle::neighbors(params, i);
      for (Code j = 0; j < params.vertex_count(); ++j) {
        const bool edge = std::find(expected.begin(), expected.end(), j) != expected.end();
        REQUIRE(m(i, j) == (edge ? 1u : 0u));
      }
    }
  }
}

TEST_CASE("explicit cap") {
  CHECK_NOTHROW(require_explicit(PuzzleParams(3, 9), "test"));   // 19683
  CHECK_THROWS_AS(edge_matrix(PuzzleParams(3, 10)), InfeasibleInstance);  // 59049
  CHECK_THROWS_AS(export_dot(PuzzleParams(4, 8)), InfeasibleInstance);
  CHECK_THROWS_AS(export_adjlist(PuzzleParams(4, 8)), InfeasibleInstance);
  CHECK_THROWS_AS(edge_count(PuzzleParams(3, 30)), InfeasibleInstance);
}

TEST_CASE("export_dot") {
  const auto count = [](const std::string& text, const std::regex& re) {
    return std::distance(std::sregex_iterator(text.begin(), text.end(), re), std::sregex_iterator());
  };
  const std::regex node(R"(^  "[0-9]+" \[label=)", std::regex::multiline);
  const std::regex edge(R"(^  "[0-9]+" -- "[0-9]+";)", std::regex::multiline);

  const auto k3 = export_dot(PuzzleParams(3, 1));
  CHECK(k3.rfind("graph ", 0) == 0);
  CHECK(count(k3, node) == 3);
  CHECK(count(k3, edge) == 3);
  for (const char* label : {"\"0\"", "\"1\"", "\"2\""}) CHECK(k3.find(label) != std::string::npos);

  const auto h33 = export_dot(PuzzleParams(3, 3));
  CHECK(count(h33, node) == 27);
  CHECK(count(h33, edge) == 39);

  const auto colored = export_dot(PuzzleParams(3, 2), DotOptions{true});
  const std::regex fill(R"re(fillcolor="([0-9. ]+)")re");
  std::map<std::string, int> classes;
  for (auto it = std::sregex_iterator(colored.begin(), colored.end(), fill); it != std::sregex_iterator(); ++it) {
    ++classes[(*it)[1]];
  }
  CHECK(classes.size() == 3);
  for (const auto& [color, size] : classes) CHECK(size == 3);
}

TEST_CASE("export_adjlist is JSON lines matching neighbors") {
  const PuzzleParams params(4, 2);
  std::istringstream in(export_adjlist(params));
  std::string line;
  Code c = 0;
  while (std::getline(in, line)) {
    const auto j = nlohmann::json::parse(line);
    const State s(params, c);
    CHECK(j["v"] == render(s));
    std::vector<std::string> expected;
    for (const auto& t : neighbors(s)) expected.push_back(render(t));
    CHECK(j["nbrs"].get<std::vector<std::string>>() == expected);
    ++c;
  }
  CHECK(c == params.vertex_count());
}
