#include "cli.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "hanoi/hanoi.hpp"

namespace hanoi::cli {

namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

struct Options {
  unsigned workers = 1;
  int k = 3;
  int n = 1;
  bool json_output = false;
  // export
  std::string format = "dot";
  bool color = false;
  // dist
  std::string from_state;
  std::string to_state;
  std::string cache_dir;
  // verify
  std::string check = "all";
  // solve / compare
  int from_peg = 0;
  int to_peg = 1;
  bool emit_moves = false;
};

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

json record(const CheckResult& result, const PuzzleParams& params, double ms) {
  json r = {{"check", result.name}, {"k", params.pegs()}, {"n", params.disks()}, {"pass", result.pass}};
  r["counterexample"] = result.counterexample ? json(*result.counterexample) : json(nullptr);
  if (result.skipped) {
    r["skipped"] = true;
    r["note"] = result.note;
  }
  r["elapsed_ms"] = ms;
  return r;
}

json group_json(const GroupReport& report) {
  return {{"k", report.params.pegs()},
          {"n", report.params.disks()},
          {"order", report.order},
          {"is_symmetric_group", report.is_symmetric_group}};
}

int cmd_export(const Options& o, std::ostream& out) {
  const PuzzleParams params(o.k, o.n);
  if (o.format == "dot") {
    out << export_dot(params, DotOptions{o.color});
  } else {
    out << export_adjlist(params);
  }
  return kExitOk;
}

int cmd_degree_scan(const Options& o, std::ostream& out) {
  const PuzzleParams params(o.k, o.n);
  const auto start = Clock::now();
  const auto degrees = degree_table(params, Parallelism{o.workers});
  std::map<int, std::uint64_t> histogram;
  for (auto d : degrees) ++histogram[d];
  const auto check = degree_check(params, Parallelism{o.workers});
  const double ms = elapsed_ms(start);
  if (o.json_output) {
    json hist = json::object();
    for (const auto& [d, count] : histogram) hist[std::to_string(d)] = count;
    auto r = record(check, params, ms);
    r["degrees"] = hist;
    out << r.dump() << '\n';
  } else {
    out << "degree  vertices\n";
    for (const auto& [d, count] : histogram) out << d << "  " << count << '\n';
    out << "lemma2: " << (check.pass ? "pass" : "FAIL");
    if (check.counterexample) out << " (" << *check.counterexample << ")";
    out << '\n';
  }
  return check.pass ? kExitOk : kExitCheckFailed;
}

int cmd_dist(const Options& o, std::ostream& out) {
  const PuzzleParams params(o.k, o.n);
  const State from = parse_state(o.from_state, params);
  const State to = parse_state(o.to_state, params);
  std::uint64_t hops = 0;
  if (!o.cache_dir.empty()) {
    const auto path = std::filesystem::path(o.cache_dir) / cache_file_name(params, from.code());
    std::optional<DistanceTable> table;
    if (std::filesystem::exists(path)) {
      table.emplace(load_distance_table(path));
    } else {
      table.emplace(bfs_from(from, Parallelism{o.workers}));
      save_distance_table(*table, o.cache_dir);
    }
    hops = table->at(to);
  } else {
    hops = distance(from, to);
  }
  if (o.json_output) {
    out << json{{"k", o.k}, {"n", o.n}, {"from", render(from)}, {"to", render(to)}, {"distance", hops}}.dump()
        << '\n';
  } else {
    out << hops << '\n';
  }
  return kExitOk;
}

int cmd_aut(const Options& o, std::ostream& out) {
  const PuzzleParams params(o.k, o.n);
  const auto start = Clock::now();
  const auto set = enumerate_automorphisms(params, Parallelism{o.workers});
  const auto report = verify_group_structure(set);
  const double ms = elapsed_ms(start);
  if (o.json_output) {
    auto r = group_json(report);
    r["elapsed_ms"] = ms;
    out << r.dump() << '\n';
  } else {
    out << "automorphism group of H(k=" << o.k << ", n=" << o.n << "): order " << report.order << '\n';
    for (const auto& action : set.corner_action) out << "  corner action " << action.to_string() << '\n';
    out << (report.is_symmetric_group ? "isomorphic to S_" + std::to_string(o.k)
                                      : "NOT the symmetric group: " + report.failure.value_or("?"))
        << '\n';
  }
  return report.is_symmetric_group ? kExitOk : kExitCheckFailed;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const PuzzleParams params(o.k, o.n);
  const Parallelism par{o.workers};
  std::optional<AutomorphismSet> group;
  auto automorphisms = [&]() -> const AutomorphismSet& {
    if (!group) group.emplace(enumerate_automorphisms(params, par));
    return *group;
  };

  using Check = std::function<json()>;
  auto timed = [&](const std::function<CheckResult()>& body) {
    const auto start = Clock::now();
    const auto result = body();
    return record(result, params, elapsed_ms(start));
  };
  const std::vector<std::pair<std::string, Check>> checks = {
      {"lemma2", [&] { return timed([&] { return degree_check(params, par); }); }},
      {"prop1", [&] { return timed([&] { return induced_maps_check(params); }); }},
      {"lemma4", [&] { return timed([&] { return largest_disk_check(params, par); }); }},
      {"lemma5",
       [&] {
         return timed([&] {
           const auto report = nearest_corner_report(params, par);
           if (report.pass) return CheckResult::ok("lemma5");
           const auto& c = *report.counterexample;
           return CheckResult::fail("lemma5", render(State(params, c.vertex)) + ": d to corner " +
                                                  std::to_string(c.own_peg) + " is " + std::to_string(c.own_distance) +
                                                  ", d to corner " + std::to_string(c.other_peg) + " is " +
                                                  std::to_string(c.other_distance));
         });
       }},
      {"lemma6", [&] { return timed([&] { return substructure_preservation_check(automorphisms()); }); }},
      {"prop3", [&] { return timed([&] { return corner_fixing_is_identity(automorphisms()); }); }},
      {"adjacency", [&] { return timed([&] { return adjacency_observation_check(params); }); }},
      {"theorem",
       [&] {
         const auto start = Clock::now();
         const auto report = verify_group_structure(automorphisms());
         CheckResult result = report.is_symmetric_group
                                  ? CheckResult::ok("theorem")
                                  : CheckResult::fail("theorem", report.failure.value_or("order is not k!"));
         auto r = record(result, params, elapsed_ms(start));
         r["order"] = report.order;
         r["is_symmetric_group"] = report.is_symmetric_group;
         return r;
       }},
  };

  bool all_pass = true;
  for (const auto& [name, run_check] : checks) {
    if (o.check != "all" && o.check != name) continue;
    const json r = run_check();
    all_pass = all_pass && r["pass"].get<bool>();
    out << r.dump() << '\n';
  }
  return all_pass ? kExitOk : kExitCheckFailed;
}

int cmd_solve(const Options& o, std::ostream& out) {
  const PuzzleParams params(o.k, o.n);
  const auto plan = frame_stewart_plan(params, o.from_peg, o.to_peg);
  const State end = replay_plan(plan);
  if (!(end == perfect_state(params, o.to_peg))) {
    throw VerificationFailure("plan ends at " + render(end) + " instead of the target tower");
  }
  if (o.emit_moves) {
    for (std::size_t i = 0; i < plan.moves.size(); ++i) {
      const auto& m = plan.moves[i];
      out << json{{"step", i}, {"disk", m.disk}, {"from", m.from_peg}, {"to", m.to_peg}}.dump() << '\n';
    }
  } else if (o.json_output) {
    const auto fs = frame_stewart(o.n, o.k);
    out << json{{"k", o.k}, {"n", o.n}, {"from", o.from_peg}, {"to", o.to_peg}, {"moves", plan.claimed_length},
                {"split", fs.split}}
               .dump()
        << '\n';
  } else {
    const auto fs = frame_stewart(o.n, o.k);
    out << "Frame-Stewart plan " << render(plan.start) << " -> " << render(end) << ": " << plan.claimed_length
        << " moves (split " << fs.split << ")\n";
  }
  return kExitOk;
}

int cmd_compare(const Options& o, std::ostream& out) {
  const PuzzleParams params(o.k, o.n);
  const auto report = compare_exact(params, o.from_peg, o.to_peg, Parallelism{o.workers});
  if (o.json_output) {
    out << json{{"k", o.k},
                {"n", o.n},
                {"from", report.from_peg},
                {"to", report.to_peg},
                {"fs_count", report.fs_count},
                {"exact_distance", report.exact_distance},
                {"equal", report.equal}}
               .dump()
        << '\n';
  } else {
    out << "k=" << o.k << " n=" << o.n << " peg " << report.from_peg << " -> " << report.to_peg
        << ": Frame-Stewart " << report.fs_count << ", exact " << report.exact_distance
        << (report.equal ? " (equal)" : " (DIFFERENT)") << '\n';
  }
  return report.equal ? kExitOk : kExitCheckFailed;
}

void add_size(CLI::App* sub, Options& o) {
  sub->add_option("--k", o.k, "Number of pegs")->required()->check(CLI::Range(3, kMaxPegs));
  sub->add_option("--n", o.n, "Number of disks")->required()->check(CLI::Range(1, 255));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Tower of Hanoi graph toolkit: distances, automorphisms, verification, Frame-Stewart plans"};
  app.name("hanoi");
  app.require_subcommand(1);
  app.add_option("--workers", o.workers, "Worker threads (0 = hardware concurrency)")->capture_default_str();

  auto* exp = app.add_subcommand("export", "Export the graph as DOT or JSON-lines adjacency list");
  add_size(exp, o);
  exp->add_option("--format", o.format, "dot or adjlist")->check(CLI::IsMember({"dot", "adjlist"}));
  exp->add_flag("--color-substructures", o.color, "Color DOT nodes by the peg of the largest disk");

  auto* deg = app.add_subcommand("degree-scan", "Degree histogram and degree dichotomy check");
  add_size(deg, o);
  deg->add_flag("--json", o.json_output, "Emit a JSON record");

  auto* dist = app.add_subcommand("dist", "Exact distance between two states");
  add_size(dist, o);
  dist->add_option("--from", o.from_state, "Source state")->required();
  dist->add_option("--to", o.to_state, "Target state")->required();
  dist->add_option("--cache", o.cache_dir, "Directory for cached BFS tables");
  dist->add_flag("--json", o.json_output, "Emit a JSON record");

  auto* aut = app.add_subcommand("aut", "Enumerate the automorphism group");
  add_size(aut, o);
  aut->add_flag("--json", o.json_output, "Emit the group report as JSON");

  auto* verify = app.add_subcommand("verify", "Run structural checks, one JSON record per check");
  add_size(verify, o);
  verify->add_option("--check", o.check, "Check to run")
      ->check(CLI::IsMember({"all", "lemma2", "prop1", "lemma4", "lemma5", "lemma6", "prop3", "adjacency", "theorem"}));

  auto* solve = app.add_subcommand("solve", "Frame-Stewart plan between two perfect states");
  add_size(solve, o);
  solve->add_option("--from", o.from_peg, "Source peg")->required();
  solve->add_option("--to", o.to_peg, "Target peg")->required();
  solve->add_flag("--emit-moves", o.emit_moves, "Emit the plan as JSON lines");
  solve->add_flag("--json", o.json_output, "Emit a JSON summary");

  auto* compare = app.add_subcommand("compare", "Frame-Stewart count versus exact BFS distance");
  add_size(compare, o);
  compare->add_option("--from", o.from_peg, "Source peg")->capture_default_str();
  compare->add_option("--to", o.to_peg, "Target peg")->capture_default_str();
  compare->add_flag("--json", o.json_output, "Emit a JSON record");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (exp->parsed()) return cmd_export(o, out);
    if (deg->parsed()) return cmd_degree_scan(o, out);
    if (dist->parsed()) return cmd_dist(o, out);
    if (aut->parsed()) return cmd_aut(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (solve->parsed()) return cmd_solve(o, out);
    if (compare->parsed()) return cmd_compare(o, out);
  } catch (const VerificationFailure& e) {
    err << "verification failure: " << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace hanoi::cli
