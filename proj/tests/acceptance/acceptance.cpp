// Acceptance suite: one PASS/FAIL line per criterion. Every check compares
// library output against the brute-force oracles in tests/support or against
// invariants recomputed here.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lcep/cli.hpp"
#include "lcep/cycles.hpp"
#include "lcep/frame.hpp"
#include "lcep/generators.hpp"
#include "lcep/pathtools.hpp"
#include "lcep/separation.hpp"
#include "lcep/solver.hpp"
#include "lcep/suns.hpp"
#include "support/oracles.hpp"
#include "support/surgery.hpp"

using namespace lcep;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::string first_failure;

  void fail(const std::string& why) {
    if (pass) first_failure = why;
    pass = false;
  }
};

struct Instance {
  MultiGraph g;
  int k = 2;
  int ell = 3;
  std::uint64_t seed = 0;
};

// The randomized suite shared by criteria 1, 2 and 9.
std::vector<Instance> dichotomy_suite() {
  std::vector<Instance> out;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    Rng rng(seed * 7919);
    const int n = uniform_int(rng, 4, 12);
    const int max_m = std::min(24, n * (n - 1) / 2);
    const int m = uniform_int(rng, n - 1, max_m);
    Instance in;
    in.g = random_connected_graph(rng, n, m);
    in.ell = uniform_int(rng, 3, 6);
    in.k = uniform_int(rng, 2, 3);
    in.seed = seed;
    out.push_back(std::move(in));
  }
  return out;
}

std::int64_t bound_here(int k, int ell) {
  const double v = 210.0 * k * k * std::log2(static_cast<double>(k)) + 10.0 * ell * (k - 1);
  return static_cast<std::int64_t>(std::ceil(v - 1e-9));
}

std::string instance_name(const Instance& in) {
  return "seed " + std::to_string(in.seed) + " (n=" + std::to_string(in.g.vertex_count()) +
         " m=" + std::to_string(in.g.edge_count()) + " k=" + std::to_string(in.k) +
         " ell=" + std::to_string(in.ell) + ")";
}

Outcome criterion_dichotomy() {
  Outcome o;
  int packings = 0;
  int hitting = 0;
  for (const Instance& in : dichotomy_suite()) {
    const std::int64_t f = bound_here(in.k, in.ell);
    if (f_bound(in.k, in.ell) != f) o.fail("f_bound mismatch for " + instance_name(in));
    try {
      const Certificate c = solve(in.g, in.k, in.ell);
      const Verification v = c.is_packing() ? verify_packing(in.g, c) : verify_hitting_set(in.g, c);
      if (!v.valid) o.fail(instance_name(in) + ": " + v.diagnostics);
      if (c.is_packing()) {
        ++packings;
      } else {
        ++hitting;
        if (static_cast<std::int64_t>(c.edges.size()) > f) o.fail(instance_name(in) + ": |X| > f");
      }
    } catch (const std::exception& e) {
      o.fail(instance_name(in) + ": " + e.what());
    }
  }
  o.detail = std::to_string(packings) + " packings, " + std::to_string(hitting) +
             " hitting sets, all verified";
  return o;
}

Outcome criterion_oracle() {
  Outcome o;
  int checked = 0;
  int brute = 0;
  for (const Instance& in : dichotomy_suite()) {
    if (in.g.edge_count() > 20) continue;
    ++checked;
    const Certificate c = solve(in.g, in.k, in.ell);
    const int opt_pack = oracle_max_packing(in.g, in.ell).value;
    // The subset oracle is independent of the library; run it where cheap.
    if (in.g.edge_count() <= 14) {
      ++brute;
      if (oracle::max_packing(in.g, in.ell) != opt_pack) o.fail(instance_name(in) + ": packing oracles disagree");
    }
    if (c.is_packing()) {
      if (static_cast<int>(c.cycles.size()) != in.k) o.fail(instance_name(in) + ": packing size != k");
      if (opt_pack < in.k) o.fail(instance_name(in) + ": packing above the optimum");
    } else {
      const int opt_hit = oracle_min_hitting(in.g, in.ell).value;
      if (in.g.edge_count() <= 14 && oracle::min_hitting(in.g, in.ell) != opt_hit) {
        o.fail(instance_name(in) + ": hitting oracles disagree");
      }
      if (opt_hit > static_cast<int>(c.edges.size())) o.fail(instance_name(in) + ": |X| below optimum");
    }
  }
  o.detail = std::to_string(checked) + " instances with m <= 20, " + std::to_string(brute) +
             " also by subset enumeration";
  return o;
}

Outcome criterion_dense() {
  Outcome o;
  Rng rng(3);
  int runs = 0;
  for (int t = 0; t < 50; ++t) {
    const int k = t % 2 == 0 ? 2 : 3;
    const int min_edges = static_cast<int>(std::ceil(42.0 * k * std::log2(static_cast<double>(k))));
    const int n = uniform_int(rng, 4, 60);
    const MultiGraph g = random_min_degree_multigraph(rng, n, 3, min_edges, t % 5 == 0);
    ++runs;
    const std::string name = "instance " + std::to_string(t);
    if (g.edge_count() < min_edges) o.fail(name + ": generator produced too few edges");
    const auto cycles = pack_cycles_dense(g, k);
    if (static_cast<int>(cycles.size()) != k) {
      o.fail(name + ": " + std::to_string(cycles.size()) + " cycles");
      continue;
    }
    std::set<EdgeId> used;
    for (const Cycle& c : cycles) {
      if (!is_valid_cycle(g, c)) o.fail(name + ": invalid cycle");
      for (EdgeId e : c.edges) {
        if (!used.insert(e).second) o.fail(name + ": cycles share edge " + std::to_string(e));
      }
    }
  }
  o.detail = std::to_string(runs) + " multigraphs, k in {2,3}";
  return o;
}

Outcome criterion_girth() {
  Outcome o;
  Rng rng(4);
  int worst_slack = 1 << 30;
  for (int t = 0; t < 100; ++t) {
    const int n = uniform_int(rng, 2, 200);
    const MultiGraph g = random_min_degree_multigraph(rng, n, 3, 0, t % 4 == 0);
    const auto c = shortest_cycle(g);
    const std::string name = "instance " + std::to_string(t) + " (n=" + std::to_string(n) + ")";
    if (!c) {
      o.fail(name + ": no cycle found");
      continue;
    }
    if (!is_valid_cycle(g, *c)) o.fail(name + ": invalid cycle");
    if (c->length() != oracle::girth(g)) o.fail(name + ": not a shortest cycle");
    const double cap = std::max(2.0 * std::log2(static_cast<double>(n)), 1.0);
    if (c->length() > cap) o.fail(name + ": girth " + std::to_string(c->length()) + " above cap");
    worst_slack = std::min(worst_slack, static_cast<int>(std::floor(cap)) - c->length());
  }
  o.detail = "100 multigraphs, min slack to 2 log2 n is " + std::to_string(worst_slack);
  return o;
}

Outcome criterion_separation() {
  Outcome o;
  Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    const int n = uniform_int(rng, 4, 14);
    const MultiGraph g = random_connected_graph(rng, n, uniform_int(rng, n - 1, 3 * n));
    const int k = uniform_int(rng, 2, 4);
    std::vector<VertexId> a;
    const int want = uniform_int(rng, 1, std::min(n, 7));
    while (static_cast<int>(a.size()) < want) {
      const VertexId v = uniform_int(rng, 0, n - 1);
      if (std::find(a.begin(), a.end(), v) == a.end()) a.push_back(v);
    }
    const std::string name = "instance " + std::to_string(t);
    const EdgeSet x = k_perfect_separation(g, a, k);
    if (static_cast<int>(x.size()) > (static_cast<int>(a.size()) - 1) * (k - 1)) {
      o.fail(name + ": |X| = " + std::to_string(x.size()));
    }
    const auto ids = x.ids();
    const std::set<EdgeId> xs(ids.begin(), ids.end());
    const MultiGraph gx = g.without(x);
    const auto label = oracle::labels_without(g, xs);
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = i + 1; j < a.size(); ++j) {
        if (label[a[i]] != label[a[j]]) continue;
        if (oracle::edge_connectivity(gx, a[i], a[j], k) < k) {
          o.fail(name + ": gates " + std::to_string(a[i]) + " and " + std::to_string(a[j]) +
                 " not k-connected");
        }
      }
    }
  }
  o.detail = "100 instances, |A| <= 7, k in {2,3,4}";
  return o;
}

Outcome criterion_sun() {
  Outcome o;
  for (int ell = 6; ell <= 10; ++ell) {
    const MultiGraph s = make_sun(ell);
    const int lib = oracle_max_packing(s, ell).value;
    if (lib != 1) o.fail("ell " + std::to_string(ell) + ": packing number " + std::to_string(lib));
    if (s.edge_count() <= 20 && oracle::max_packing(s, ell) != 1) {
      o.fail("ell " + std::to_string(ell) + ": subset oracle disagrees");
    }
  }
  const int ell = 30;
  const MultiGraph s = make_sun(ell);
  int checked = 0;
  int shortest = 1 << 30;
  for (EdgeId e : s.edge_ids()) {
    const EdgeId x[] = {e};
    const Cycle c = sun_witness_after_deletion(ell, x);
    ++checked;
    const bool avoids = std::find(c.edges.begin(), c.edges.end(), e) == c.edges.end();
    if (!is_valid_cycle(s, c) || !avoids || c.length() < ell) {
      o.fail("deleting edge " + std::to_string(e) + " leaves no verified long cycle");
    }
    shortest = std::min(shortest, c.length());
  }
  const SunReport r = check_sun_properties(ell);
  if (!r.ok || r.deletions_checked != 209) o.fail("sun report: " + r.failure);
  if (checked != 209) o.fail("S_30 has " + std::to_string(checked) + " edges");
  o.detail = "packing number 1 for ell 6..10; " + std::to_string(checked) +
             " deletions of S_30, shortest witness " + std::to_string(shortest);
  return o;
}

// Edge set the cycle through u_i, v_j of a reduced tuple must have, recomputed
// from positions on the base (vertex x of the base sits at position x).
std::vector<EdgeId> expected_cycle(const ExtensionTuple& t, int i, int j) {
  std::vector<EdgeId> out;
  const int lo = t.jumps[i].source();
  const int hi = t.jumps[j].target();
  for (int e = lo; e < hi; ++e) {
    bool dropped = false;
    for (int s = i + 1; s <= j; ++s) {
      dropped = dropped || (t.jumps[s].source() <= e && e < t.jumps[s - 1].target());
    }
    if (!dropped) out.push_back(e);
  }
  for (int s = i; s <= j; ++s) out.insert(out.end(), t.jumps[s].edges.begin(), t.jumps[s].edges.end());
  std::sort(out.begin(), out.end());
  return out;
}

Outcome criterion_surgery() {
  Outcome o;
  Rng rng(7);
  int tuples = 0;
  int chains = 0;
  int eq_checks = 0;
  while (tuples < 10000) {
    const bool small = eq_checks < 400;
    const auto tc = surgery::random_tuple(rng, tuples % 2 == 0, small ? 20 : 1 << 20);
    if (!tc) continue;
    ++tuples;
    const std::string name = "tuple " + std::to_string(tuples);
    if (const std::string d = extension_defect(tc->g, tc->t, tc->ell); !d.empty()) {
      o.fail(name + " generated invalid: " + d);
      continue;
    }
    try {
      const Path p = shortcut_extension(tc->g, tc->t, tc->ell);
      std::set<EdgeId> allowed(tc->t.base.edges.begin(), tc->t.base.edges.end());
      for (const Path& q : tc->t.jumps) allowed.insert(q.edges.begin(), q.edges.end());
      bool inside = true;
      for (EdgeId e : p.edges) inside = inside && allowed.count(e) == 1;
      if (!is_valid_path(tc->g, p) || p.length() >= tc->ell || !inside ||
          p.source() != tc->t.base.source() || p.target() != tc->t.base.target()) {
        o.fail(name + ": shortcut post-condition");
      }
      if (tc->g.edge_count() <= 20) {
        const ExtensionTuple red = reduce_extension(tc->g, tc->t, tc->ell);
        std::set<std::vector<EdgeId>> all;
        for (auto& c : oracle::cycles_by_subsets(tc->g)) all.insert(c);
        const int r = static_cast<int>(red.jumps.size());
        for (int i = 0; i < r; ++i) {
          for (int j = i; j < r; ++j) {
            const Cycle c = extension_cycle(tc->g, red, i, j);
            std::vector<EdgeId> got = c.edges;
            std::sort(got.begin(), got.end());
            const auto want = expected_cycle(red, i, j);
            if (got != want || !all.count(want) || !is_valid_cycle(tc->g, c)) {
              o.fail(name + ": cycle through jumps " + std::to_string(i) + ".." + std::to_string(j));
            }
            ++eq_checks;
          }
        }
      }
    } catch (const std::exception& e) {
      o.fail(name + ": " + e.what());
    }
  }
  while (chains < 10000) {
    const auto cc = surgery::random_chain(rng);
    if (!cc) continue;
    ++chains;
    const std::string name = "chain " + std::to_string(chains);
    if (const std::string d = chain_defect(cc->g, cc->base, cc->chain, cc->ell); !d.empty()) {
      o.fail(name + " generated invalid: " + d);
      continue;
    }
    try {
      const Cycle c = merge_short_cycles(cc->g, cc->base, cc->chain, cc->ell);
      std::set<EdgeId> pool;
      for (const Cycle& ci : cc->chain) pool.insert(ci.edges.begin(), ci.edges.end());
      bool inside = true;
      for (EdgeId e : c.edges) inside = inside && pool.count(e) == 1;
      // C meets the base exactly in u_1 P v_r. Segments need not be nested
      // in order, so v_r may lie before the end of an earlier segment.
      const int lo = cc->chain.front().vertices.front();
      const int hi = [&] {
        int h = 0;
        for (EdgeId e : cc->chain.back().edges) {
          if (e < cc->base.length()) h = std::max(h, e + 1);
        }
        return h;
      }();
      std::vector<EdgeId> on_base;
      for (EdgeId e : c.edges) {
        if (e < cc->base.length()) on_base.push_back(e);
      }
      std::sort(on_base.begin(), on_base.end());
      std::vector<EdgeId> want;
      for (int e = lo; e < hi; ++e) want.push_back(e);
      if (!is_valid_cycle(cc->g, c) || c.length() >= cc->ell || !inside || on_base != want) {
        o.fail(name + ": merge post-condition");
      }
    } catch (const std::exception& e) {
      o.fail(name + ": " + e.what());
    }
  }
  o.detail = std::to_string(tuples) + " tuples, " + std::to_string(chains) + " chains, " +
             std::to_string(eq_checks) + " jump-cycles matched by subset enumeration";
  if (eq_checks < 100) o.fail("too few small tuples for the enumeration check");
  return o;
}

// Every F-path by exhaustive DFS: ends in V(F), inner vertices outside V(F),
// no frame edges.
struct FPathScan {
  int addable = 0;
  int long_paths = 0;
  int total = 0;
};

FPathScan scan_fpaths(const Frame& f) {
  const MultiGraph& g = f.host();
  const auto fe = f.edges().ids();
  const std::set<EdgeId> frame_edges(fe.begin(), fe.end());
  std::vector<char> in_f(g.vertex_count(), 0);
  for (EdgeId e : fe) {
    in_f[g.endpoints(e).u] = 1;
    in_f[g.endpoints(e).v] = 1;
  }
  FPathScan scan;
  std::vector<char> on_path(g.vertex_count(), 0);
  std::function<void(VertexId, VertexId, int)> walk = [&](VertexId s, VertexId x, int len) {
    for (EdgeId e : g.edge_ids()) {
      if (frame_edges.count(e)) continue;
      const Edge& ed = g.endpoints(e);
      if (ed.u != x && ed.v != x) continue;
      const VertexId y = ed.u == x ? ed.v : ed.u;
      if (in_f[y]) {
        if (y == s && len == 0) continue;  // a loop at s
        ++scan.total;
        const int q = len + 1;
        if (q >= f.ell()) ++scan.long_paths;
        if (y != s) {
          const int d = oracle::distance_in(g, frame_edges, s, y);
          if (d < 0 || q + d >= f.ell()) ++scan.addable;
        }
        continue;
      }
      if (on_path[y]) continue;
      on_path[y] = 1;
      walk(s, y, len + 1);
      on_path[y] = 0;
    }
  };
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (in_f[s]) walk(s, s, 0);
  }
  return scan;
}

Outcome criterion_frame() {
  Outcome o;
  Rng rng(8);
  int fpaths = 0;
  int branchy = 0;
  for (int t = 0; t < 50; ++t) {
    const int ell = uniform_int(rng, 3, 4);
    const MultiGraph g = random_frame_instance(rng, ell, uniform_int(rng, 0, 8));
    const std::string name = "instance " + std::to_string(t);
    if (blocks(g).size() != 1) o.fail(name + ": not 2-connected");
    if (find_long_cycle(g, LongCycleQuery::length_at_most(ell, 10 * ell))) {
      o.fail(name + ": long cycle of length <= 10 ell");
    }
    const Frame f = maximize_frame(initial_frame(g, ell), AssertLevel::high);
    if (const std::string d = frame_defect(f); !d.empty()) o.fail(name + ": " + d);
    const FPathScan scan = scan_fpaths(f);
    fpaths += scan.total;
    branchy += !f.is_cycle();
    if (scan.addable > 0) o.fail(name + ": " + std::to_string(scan.addable) + " addable F-paths");
    if (scan.long_paths > 0) o.fail(name + ": " + std::to_string(scan.long_paths) + " long F-paths");
  }
  o.detail = "50 instances, " + std::to_string(branchy) + " frames with branch vertices, " +
             std::to_string(fpaths) + " F-paths enumerated";
  return o;
}

Outcome criterion_determinism() {
  Outcome o;
  const auto suite = dichotomy_suite();
  int compared = 0;
  for (std::size_t i = 0; i < suite.size(); i += 10) {
    const Instance& in = suite[i];
    SolverConfig cfg;
    cfg.seed = in.seed;
    const std::string a = certificate_to_json(solve(in.g, in.k, in.ell, cfg));
    const std::string b = certificate_to_json(solve(in.g, in.k, in.ell, cfg));
    if (a != b) o.fail(instance_name(in) + ": certificates differ");
    ++compared;
  }
  Rng rng(9);
  for (int t = 0; t < 5; ++t) {
    const MultiGraph g = random_frame_instance(rng, 3, 5);
    if (certificate_to_json(solve(g, 2, 3)) != certificate_to_json(solve(g, 2, 3))) {
      o.fail("frame instance " + std::to_string(t) + ": certificates differ");
    }
    ++compared;
  }
  BenchSpec spec;
  spec.seeds = 8;
  spec.timing = false;
  if (run_bench(spec) != run_bench(spec)) o.fail("bench CSV differs");
  std::ostringstream out1, out2, err;
  const std::vector<std::string> args{"bench", "--seeds", "4", "--no-timing"};
  run_cli(args, out1, err);
  run_cli(args, out2, err);
  if (out1.str() != out2.str() || out1.str().empty()) o.fail("bench command output differs");
  o.detail = std::to_string(compared) + " certificates and 3 CSV runs compared byte for byte";
  return o;
}

struct Criterion {
  int id;
  const char* name;
  Outcome (*run)();
};

const Criterion criteria[] = {
    {1, "dichotomy soundness", criterion_dichotomy},
    {2, "oracle cross-check", criterion_oracle},
    {3, "dense packing", criterion_dense},
    {4, "girth bound", criterion_girth},
    {5, "k-perfect separation", criterion_separation},
    {6, "sun lower bound", criterion_sun},
    {7, "path surgery", criterion_surgery},
    {8, "frame fixpoint", criterion_frame},
    {9, "determinism", criterion_determinism},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance checks, one line per criterion"};
  int only = 0;
  app.add_option("--only", only, "run a single criterion")->check(CLI::Range(1, 9));
  CLI11_PARSE(app, argc, argv);

  bool all = true;
  for (const Criterion& c : criteria) {
    if (only != 0 && c.id != only) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("uncaught: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream line;
    line << "criterion " << c.id << " " << (o.pass ? "PASS" : "FAIL") << " " << c.name << ": "
         << o.detail;
    if (!o.pass) line << "; first failure: " << o.first_failure;
    line.setf(std::ios::fixed);
    line.precision(1);
    line << " [" << secs << " s]";
    std::cout << line.str() << std::endl;
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
