#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

#include "cli.hpp"

using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = hanoi::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<json> json_lines(const std::string& text) {
  std::vector<json> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(json::parse(line));
  return out;
}

std::string without_timing(const std::string& text) {
  std::string out;
  for (auto j : json_lines(text)) {
    j.erase("elapsed_ms");
    out += j.dump() + '\n';
  }
  return out;
}

}  // namespace

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"aut", "--k", "3"}).code == 2);
  CHECK(run({"aut", "--k", "2", "--n", "3"}).code == 2);
  CHECK(run({"export", "--k", "3", "--n", "2", "--format", "svg"}).code == 2);
  CHECK(run({"verify", "--k", "3", "--n", "2", "--check", "nope"}).code == 2);
  CHECK(run({"solve", "--k", "3", "--n", "2", "--from", "0", "--to", "0"}).code == 2);

  const auto bad_state = run({"dist", "--k", "3", "--n", "3", "--from", "000", "--to", "0003"});
  CHECK(bad_state.code == 2);
  CHECK(bad_state.err.find("error:") == 0);

  const auto too_big = run({"export", "--k", "4", "--n", "8"});
  CHECK(too_big.code == 2);
  CHECK(too_big.out.empty());

  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("export") {
  const auto dot = run({"export", "--k", "3", "--n", "2"});
  CHECK(dot.code == 0);
  CHECK(dot.out.rfind("graph ", 0) == 0);

  const auto adj = run({"export", "--k", "3", "--n", "1", "--format", "adjlist"});
  CHECK(adj.code == 0);
  const auto lines = json_lines(adj.out);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0]["v"] == "0");
  CHECK(lines[0]["nbrs"] == json::array({"1", "2"}));

  const auto colored = run({"export", "--k", "3", "--n", "2", "--color-substructures"});
  CHECK(colored.out.find("fillcolor") != std::string::npos);
}

TEST_CASE("degree-scan") {
  const auto r = run({"degree-scan", "--k", "4", "--n", "3", "--json"});
  CHECK(r.code == 0);
  const auto j = json_lines(r.out).at(0);
  CHECK(j["pass"] == true);
  CHECK(j["degrees"]["3"] == 4);

  const auto text = run({"degree-scan", "--k", "3", "--n", "3"});
  CHECK(text.out.find("lemma2: pass") != std::string::npos);
}

TEST_CASE("dist") {
  CHECK(run({"dist", "--k", "3", "--n", "3", "--from", "000", "--to", "111"}).out == "7\n");
  CHECK(run({"dist", "--k", "4", "--n", "8", "--from", "03112333", "--to", "03102333"}).out == "1\n");

  const auto j = json_lines(run({"dist", "--k", "4", "--n", "4", "--from", "0000", "--to", "1111", "--json"}).out).at(0);
  CHECK(j["distance"] == 9);
  CHECK(j["from"] == "0000");

  SUBCASE("cache directory") {
    const auto dir = std::filesystem::temp_directory_path() / ("hanoi_cli_test_" + std::to_string(::getpid()));
    std::filesystem::remove_all(dir);
    const std::vector<std::string> args = {"dist", "--k", "3", "--n", "5", "--from", "00000",
                                           "--to", "11111", "--cache", dir.string()};
    CHECK(run(args).out == "31\n");
    CHECK(std::filesystem::exists(dir / "hgdt_3_5_0.bin"));
    CHECK(run(args).out == "31\n");

    // A corrupt cache is a format error, not a silent recompute.
    std::filesystem::resize_file(dir / "hgdt_3_5_0.bin", 20);
    CHECK(run(args).code == 2);
    std::filesystem::remove_all(dir);
  }
}

TEST_CASE("aut") {
  const auto r = run({"aut", "--k", "4", "--n", "3", "--json"});
  CHECK(r.code == 0);
  const auto j = json_lines(r.out).at(0);
  CHECK(j["order"] == 24);
  CHECK(j["is_symmetric_group"] == true);
  CHECK(j.contains("elapsed_ms"));

  const auto text = run({"aut", "--k", "3", "--n", "2"});
  CHECK(text.out.find("order 6") != std::string::npos);
  CHECK(text.out.find("S_3") != std::string::npos);
}

TEST_CASE("verify") {
  const auto all = run({"verify", "--k", "3", "--n", "3"});
  CHECK(all.code == 0);
  const auto records = json_lines(all.out);
  REQUIRE(records.size() == 8);
  for (const auto& r : records) {
    CHECK(r["pass"] == true);
    CHECK(r["counterexample"].is_null());
    CHECK(r["k"] == 3);
    CHECK(r["n"] == 3);
  }
  CHECK(records.back()["check"] == "theorem");
  CHECK(records.back()["order"] == 6);

  const auto one = json_lines(run({"verify", "--k", "4", "--n", "1", "--check", "adjacency"}).out);
  REQUIRE(one.size() == 1);
  CHECK(one[0]["skipped"] == true);
  CHECK(one[0]["pass"] == true);
}

TEST_CASE("solve") {
  const auto moves = json_lines(run({"solve", "--k", "3", "--n", "3", "--from", "0", "--to", "2", "--emit-moves"}).out);
  REQUIRE(moves.size() == 7);
  CHECK(moves[0] == json{{"step", 0}, {"disk", 0}, {"from", 0}, {"to", 2}});
  CHECK(moves[3]["disk"] == 2);

  const auto j = json_lines(run({"solve", "--k", "4", "--n", "10", "--from", "0", "--to", "3", "--json"}).out).at(0);
  CHECK(j["moves"] == 49);

  CHECK(run({"solve", "--k", "3", "--n", "3", "--from", "0", "--to", "1"}).out.find("7 moves") != std::string::npos);
}

TEST_CASE("compare") {
  const auto r = run({"compare", "--k", "4", "--n", "6", "--json"});
  CHECK(r.code == 0);
  const auto j = json_lines(r.out).at(0);
  CHECK(j["fs_count"] == 17);
  CHECK(j["exact_distance"] == 17);
  CHECK(j["equal"] == true);
  CHECK(run({"compare", "--k", "3", "--n", "4", "--from", "2", "--to", "2"}).code == 2);
}

TEST_CASE("output is independent of worker count") {
  for (const auto& cmd : std::vector<std::vector<std::string>>{
           {"verify", "--k", "4", "--n", "4"},
           {"aut", "--k", "5", "--n", "3", "--json"},
           {"dist", "--k", "3", "--n", "8", "--from", "01201201", "--to", "22222222", "--json"}}) {
    std::vector<std::string> one = cmd;
    std::vector<std::string> many = cmd;
    one.insert(one.begin(), {"--workers", "1"});
    many.insert(many.begin(), {"--workers", "4"});
    CHECK(without_timing(run(one).out) == without_timing(run(many).out));
  }
}

TEST_CASE("the executable returns the same exit codes") {
  const auto status = [](const std::string& args) {
    const std::string cmd = std::string(HANOI_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    return WEXITSTATUS(std::system(cmd.c_str()));
  };
  CHECK(status("aut --k 3 --n 2") == 0);
  CHECK(status("aut --k 3") == 2);
  CHECK(status("dist --k 3 --n 2 --from 00 --to 9") == 2);
}
