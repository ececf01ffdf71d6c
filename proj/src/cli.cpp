#include "lcep/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lcep/cycles.hpp"
#include "lcep/errors.hpp"
#include "lcep/generators.hpp"
#include "lcep/solver.hpp"
#include "lcep/suns.hpp"

namespace lcep {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void emit(const std::string& text, const std::string& output, std::ostream& out) {
  if (output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(output, std::ios::binary);
  if (!f) throw InputError("cannot write '" + output + "'");
  f << text;
}

AssertLevel parse_level(const std::string& s) {
  if (s == "low") return AssertLevel::low;
  if (s == "high") return AssertLevel::high;
  throw InputError("--assert-level must be low or high");
}

struct BudgetFlags {
  std::int64_t ms = 0;
  std::uint64_t nodes = 0;

  void attach(CLI::App* app) {
    app->add_option("--budget-ms", ms, "time limit per search budget, 0 = none")
        ->check(CLI::NonNegativeNumber);
    app->add_option("--budget-nodes", nodes, "search node limit, 0 = none");
  }
  DetectorBudget budget() const { return DetectorBudget{nodes, ms}; }
};

ordered_json cycle_json(const Cycle& c) { return c.edges; }

}  // namespace

std::string run_bench(const BenchSpec& spec) {
  std::ostringstream csv;
  csv << "seed,n,m,ell,k,type,size,f_bound,oracle,ms\n";
  for (int i = 0; i < spec.seeds; ++i) {
    const unsigned long long seed = spec.first_seed + static_cast<unsigned long long>(i);
    Rng rng(seed);
    const MultiGraph g = random_connected_graph(rng, spec.n, spec.m);
    SolverConfig cfg;
    cfg.seed = seed;
    const auto t0 = std::chrono::steady_clock::now();
    const Certificate cert = solve(g, spec.k, spec.ell, cfg);
    const auto t1 = std::chrono::steady_clock::now();
    std::string oracle = "";
    if (g.edge_count() <= spec.oracle_max_m) {
      oracle = std::to_string(cert.is_packing() ? oracle_max_packing(g, spec.ell).value
                                                : oracle_min_hitting(g, spec.ell).value);
    }
    const long ms =
        spec.timing ? static_cast<long>(
                          std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count())
                    : 0;
    csv << seed << ',' << g.vertex_count() << ',' << g.edge_count() << ',' << spec.ell << ','
        << spec.k << ',' << (cert.is_packing() ? "packing" : "hitting_set") << ','
        << (cert.is_packing() ? cert.cycles.size() : cert.edges.size()) << ',' << cert.bound
        << ',' << oracle << ',' << ms << '\n';
  }
  return csv.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Long-cycle packing or hitting-set certificates for multigraphs", "lcep"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "lcep 0.1.0");

  // solve
  CLI::App* solve_cmd = app.add_subcommand("solve", "k edge-disjoint long cycles or a hitting set");
  int k = 0;
  int ell = 0;
  std::string input;
  std::string output;
  std::string level_name;
  std::string dump;
  std::uint64_t seed = 0;
  BudgetFlags solve_budget;
  solve_cmd->add_option("--k", k, "number of cycles")->required();
  solve_cmd->add_option("--ell", ell, "minimum cycle length")->required();
  solve_cmd->add_option("--input", input, "edge-list file")->required();
  solve_cmd->add_option("--output", output, "certificate path (default stdout)");
  solve_cmd->add_option("--assert-level", level_name, "low or high");
  solve_cmd->add_option("--dump-structure", dump,
                        "write frame records to PATH and frame edge lists to PATH.frameN.txt");
  solve_cmd->add_option("--seed", seed, "recorded; the solver is deterministic");
  solve_budget.attach(solve_cmd);

  // verify
  CLI::App* verify_cmd = app.add_subcommand("verify", "check a certificate against a graph");
  std::string mode = "auto";
  std::string cert_path;
  BudgetFlags verify_budget;
  verify_cmd->add_option("mode", mode, "packing, hitting or auto")
      ->check(CLI::IsMember({"packing", "hitting", "auto"}));
  verify_cmd->add_option("--input", input, "edge-list file")->required();
  verify_cmd->add_option("--cert", cert_path, "certificate JSON")->required();
  verify_cmd->add_option("--output", output, "report path (default stdout)");
  verify_budget.attach(verify_cmd);

  // gen
  CLI::App* gen_cmd = app.add_subcommand("gen", "generate instances");
  gen_cmd->require_subcommand(1);
  CLI::App* gen_sun = gen_cmd->add_subcommand("sun", "the sun S_ell or disjoint copies of it");
  int copies = 1;
  gen_sun->add_option("--ell", ell, "cycle length threshold, at least 4")->required();
  gen_sun->add_option("--copies", copies, "number of disjoint suns");
  gen_sun->add_option("--output", output, "edge-list path (default stdout)");
  CLI::App* gen_random = gen_cmd->add_subcommand("random", "a random connected simple graph");
  int n = 10;
  int m = 15;
  gen_random->add_option("--n", n, "vertices")->required();
  gen_random->add_option("--m", m, "edges")->required();
  gen_random->add_option("--seed", seed, "random seed");
  gen_random->add_option("--output", output, "edge-list path (default stdout)");

  // oracle
  CLI::App* oracle_cmd = app.add_subcommand("oracle", "exact optimum by exhaustive search");
  std::string problem;
  BudgetFlags oracle_budget;
  oracle_cmd->add_option("problem", problem, "packing or hitting")
      ->required()
      ->check(CLI::IsMember({"packing", "hitting"}));
  oracle_cmd->add_option("--input", input, "edge-list file")->required();
  oracle_cmd->add_option("--ell", ell, "minimum cycle length")->required();
  oracle_cmd->add_option("--output", output, "report path (default stdout)");
  oracle_budget.attach(oracle_cmd);

  // bench
  CLI::App* bench_cmd = app.add_subcommand("bench", "CSV sweep over random instances");
  BenchSpec bench;
  bench_cmd->add_option("--seeds", bench.seeds, "number of seeds");
  bench_cmd->add_option("--seed", bench.first_seed, "first seed");
  bench_cmd->add_option("--n", bench.n, "vertices");
  bench_cmd->add_option("--m", bench.m, "edges");
  bench_cmd->add_option("--ell", bench.ell, "minimum cycle length");
  bench_cmd->add_option("--k", bench.k, "number of cycles");
  bench_cmd->add_option("--oracle-max-m", bench.oracle_max_m, "largest m given to the oracle");
  bool no_timing = false;
  bench_cmd->add_flag("--no-timing", no_timing, "print 0 in the ms column");
  bench_cmd->add_option("--output", output, "CSV path (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_invalid_input;
  }

  try {
    if (solve_cmd->parsed()) {
      const MultiGraph g = read_graph_file(input);
      SolverConfig cfg;
      cfg.budget = solve_budget.budget();
      cfg.seed = seed;
      if (!level_name.empty()) cfg.assert_level = parse_level(level_name);
      SolveTrace trace;
      const Certificate cert = solve(g, k, ell, cfg, dump.empty() ? nullptr : &trace);
      emit(certificate_to_json(cert), output, out);
      if (!dump.empty()) {
        ordered_json frames = ordered_json::array();
        for (std::size_t i = 0; i < trace.frames.size(); ++i) {
          ordered_json f = ordered_json::parse(trace.frames[i]);
          emit(f["frame_edge_list"].get<std::string>(), dump + ".frame" + std::to_string(i) + ".txt",
               out);
          f.erase("frame_edge_list");
          frames.push_back(std::move(f));
        }
        emit(frames.dump(2) + "\n", dump, out);
      }
      return exit_ok;
    }
    if (verify_cmd->parsed()) {
      const MultiGraph g = read_graph_file(input);
      const Certificate cert = certificate_from_json(read_text(cert_path));
      Verification v;
      if (mode == "packing" && !cert.is_packing()) {
        v = {false, "certificate is not a packing"};
      } else if (mode == "hitting" && cert.is_packing()) {
        v = {false, "certificate is not a hitting set"};
      } else {
        v = verify_certificate(g, cert, verify_budget.budget());
      }
      ordered_json report;
      report["valid"] = v.valid;
      report["type"] = cert.is_packing() ? "packing" : "hitting_set";
      report["diagnostics"] = v.diagnostics;
      emit(report.dump(2) + "\n", output, out);
      return exit_ok;
    }
    if (gen_sun->parsed()) {
      emit(sun_edge_list(ell, copies), output, out);
      return exit_ok;
    }
    if (gen_random->parsed()) {
      Rng rng(seed);
      const MultiGraph g = random_connected_graph(rng, n, m);
      emit(write_graph(g, "random connected graph n=" + std::to_string(n) +
                              " m=" + std::to_string(g.edge_count()) +
                              " seed=" + std::to_string(seed)),
           output, out);
      return exit_ok;
    }
    if (oracle_cmd->parsed()) {
      const MultiGraph g = read_graph_file(input);
      ordered_json report;
      report["problem"] = problem;
      report["ell"] = ell;
      if (problem == "packing") {
        const auto r = oracle_max_packing(g, ell, oracle_budget.budget());
        report["value"] = r.value;
        ordered_json cycles = ordered_json::array();
        for (const Cycle& c : r.witness) cycles.push_back(cycle_json(c));
        report["cycles"] = cycles;
        report["nodes"] = r.nodes;
      } else {
        const auto r = oracle_min_hitting(g, ell, oracle_budget.budget());
        report["value"] = r.value;
        report["edges"] = r.witness.ids();
        report["nodes"] = r.nodes;
      }
      emit(report.dump(2) + "\n", output, out);
      return exit_ok;
    }
    if (bench_cmd->parsed()) {
      bench.timing = !no_timing;
      emit(run_bench(bench), output, out);
      return exit_ok;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return exit_invalid_input;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return exit_budget;
  } catch (const ClaimViolation& e) {
    err << "claim violated [" << e.claim() << "]: " << e.what() << "\n";
    return exit_claim;
  }
  return exit_invalid_input;
}

}  // namespace lcep
