#include "lcep/solver.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include <json.hpp>

#include "lcep/cycles.hpp"
#include "lcep/frame.hpp"
#include "lcep/separation.hpp"

namespace lcep {

using ordered_json = nlohmann::ordered_json;

std::int64_t f_bound(int k, int ell) {
  if (k < 1 || ell < 1) throw InputError("f_bound needs k >= 1 and ell >= 1");
  const double kk = static_cast<double>(k);
  const double value = 210.0 * kk * kk * std::log2(kk) + 10.0 * ell * (kk - 1.0);
  return static_cast<std::int64_t>(std::ceil(value));
}

AssertLevel effective_assert_level(const SolverConfig& cfg, const MultiGraph& g) {
  if (cfg.assert_level) return *cfg.assert_level;
  return g.vertex_count() <= 24 ? AssertLevel::high : AssertLevel::low;
}

namespace {

struct Outcome {
  bool packing = false;
  std::vector<Cycle> cycles;
  EdgeSet hitting;
};

Outcome packing_of(std::vector<Cycle> cycles) {
  Outcome o;
  o.packing = true;
  o.cycles = std::move(cycles);
  return o;
}

Outcome hitting_of(EdgeSet x) {
  Outcome o;
  o.hitting = std::move(x);
  return o;
}

ordered_json ids_json(const EdgeSet& s) { return s.ids(); }

class Solver {
 public:
  Solver(int ell, AssertLevel level, const DetectorBudget& budget, SolveTrace* trace)
      : ell_(ell), level_(level), meter_(budget), trace_(trace) {}

  Outcome run(const MultiGraph& g, int k, int depth) {
    stats_.recursion_depth = std::max(stats_.recursion_depth, depth);
    Outcome o = step(g, k, depth);
    if (o.packing) {
      check_claim(static_cast<int>(o.cycles.size()) == k, "packing size",
                  "expected " + std::to_string(k) + " cycles, built " +
                      std::to_string(o.cycles.size()));
    } else {
      check_claim(static_cast<std::int64_t>(o.hitting.size()) <= f_bound(k, ell_),
                  "hitting set bound",
                  "|X| = " + std::to_string(o.hitting.size()) + " exceeds f(" +
                      std::to_string(k) + ", ell)");
    }
    return o;
  }

  const SolveStats& stats() const { return stats_; }

 private:
  Outcome step(const MultiGraph& g, int k, int depth) {
    // A single long cycle, or no long cycle at all.
    auto any = find_long_cycle(g, LongCycleQuery::any_long(ell_), meter_);
    if (!any) return hitting_of(EdgeSet(g.edge_capacity()));
    if (k == 1) return packing_of({*any});

    // Strip a long cycle of length at most 10 ell.
    if (auto c = find_long_cycle(g, LongCycleQuery::length_at_most(ell_, 10 * ell_), meter_)) {
      Outcome sub = run(g.without(c->edges), k - 1, depth + 1);
      if (sub.packing) {
        sub.cycles.push_back(*c);
        return sub;
      }
      sub.hitting.insert_all(c->edges);
      return sub;
    }

    // Edges on no long cycle are irrelevant to both outcomes.
    EdgeSet relevant(g.edge_capacity());
    relevant.insert_all(any->edges);
    EdgeSet irrelevant(g.edge_capacity());
    for (EdgeId e : g.edge_ids()) {
      if (relevant.contains(e)) continue;
      auto through = find_long_cycle(g, LongCycleQuery::through_edge(ell_, e), meter_);
      if (through) {
        relevant.insert_all(through->edges);
      } else {
        irrelevant.insert(e);
      }
    }
    if (!irrelevant.empty()) return run(g.without(irrelevant), k, depth + 1);

    // Every long cycle lives in one block.
    const std::vector<EdgeSet> parts = blocks(g);
    if (parts.size() > 1) return split_block(g, parts.front(), k, depth);

    return frame_step(g, *any, k, depth);
  }

  Outcome split_block(const MultiGraph& g, const EdgeSet& block, int k, int depth) {
    const MultiGraph b = g.restricted_to(block);
    std::vector<Cycle> in_block;
    EdgeSet block_hitting;
    int k_block = 0;
    for (int j = 1; j <= k; ++j) {
      Outcome o = run(b, j, depth + 1);
      if (!o.packing) {
        block_hitting = std::move(o.hitting);
        break;
      }
      in_block = std::move(o.cycles);
      k_block = j;
    }
    if (k_block == k) return packing_of(std::move(in_block));
    check_claim(k_block >= 1, "block recursion", "block without a long cycle");

    Outcome rest = run(g.without(block), k - k_block, depth + 1);
    if (rest.packing) {
      in_block.insert(in_block.end(), rest.cycles.begin(), rest.cycles.end());
      return packing_of(std::move(in_block));
    }
    rest.hitting |= block_hitting;
    return rest;
  }

  Outcome frame_step(const MultiGraph& g, const Cycle& start, int k, int depth) {
    Frame f(g, edge_set(g, start), ell_);
    f = maximize_frame(std::move(f), level_, meter_);
    stats_.ds = std::max(stats_.ds, f.ds());
    ordered_json record;
    if (trace_) {
      record["depth"] = depth;
      record["k"] = k;
      record["frame_edges"] = ids_json(f.edges());
      record["frame_edge_list"] = write_graph(f.graph(), "frame");
      record["U"] = f.branch_vertices();
      record["ds"] = f.ds();
    }
    auto finish = [&](Outcome o, const char* how) {
      if (trace_) {
        record["outcome"] = how;
        trace_->frames.push_back(record.dump());
      }
      return o;
    };

    const double kk = static_cast<double>(k);
    if (f.ds() >= 84.0 * kk * std::log2(kk)) {
      const Suppression sup = suppress_degree2(f.graph());
      std::vector<Cycle> cycles;
      for (const Cycle& c : pack_cycles_dense(sup.reduced, k)) {
        Cycle full = expand_cycle(c, sup.expansion);
        check_claim(full.length() >= ell_, "dense frame", "frame cycle is short");
        cycles.push_back(std::move(full));
      }
      return finish(packing_of(std::move(cycles)), "dense frame packing");
    }

    const std::vector<Bridge> bridges = compute_bridges(f, level_);
    const std::vector<Hub> hubs = compute_hubs(f, bridges, level_, meter_);
    stats_.hubs = std::max(stats_.hubs, static_cast<int>(hubs.size()));
    if (trace_) {
      ordered_json bj = ordered_json::array();
      for (const Bridge& b : bridges) {
        bj.push_back({{"kind", b.kind == Bridge::Kind::chord ? "chord" : "component"},
                      {"edges", ids_json(b.edges)},
                      {"feet", b.feet},
                      {"shadow", ids_json(b.shadow)}});
      }
      record["bridges"] = bj;
      ordered_json hj = ordered_json::array();
      for (const Hub& h : hubs) {
        hj.push_back({{"kind", h.kind == Hub::Kind::vertex_hub ? "vertex_hub" : "path_hub"},
                      {"bridges", h.bridges},
                      {"shadow", ids_json(h.shadow)},
                      {"gates", h.gates}});
      }
      record["hubs"] = hj;
    }

    if (f.is_cycle()) return finish(cycle_frame(g, f, hubs, k), "cycle frame");

    const std::vector<UEar> ears = u_ears(f);
    const std::vector<EarClosure> closures = classify_ears(f, ears, hubs);
    EdgeSet x_p(g.edge_capacity());
    std::vector<char> thick(closures.size(), 0);
    for (std::size_t i = 0; i < closures.size(); ++i) {
      const CutResult tt = thick_thin(g, closures[i], k);
      thick[i] = tt.has_paths();
      if (!thick[i]) x_p |= tt.cut();
    }
    check_claim(2 * static_cast<std::int64_t>(x_p.size()) <= static_cast<std::int64_t>(k) * f.ds(),
                "thin ears", "|X_p| exceeds k ds / 2");

    EdgeSet x_v(g.edge_capacity());
    std::int64_t gate_total = 0;
    std::int64_t gate_budget = 0;
    for (const Hub& h : hubs) {
      if (h.kind != Hub::Kind::vertex_hub) continue;
      const EdgeSet x_h = k_perfect_separation(g.restricted_to(h.closure), h.gates, k);
      const std::int64_t cap =
          std::max<std::int64_t>(static_cast<std::int64_t>(h.gates.size()) - 1, 0) * (k - 1);
      check_claim(static_cast<std::int64_t>(x_h.size()) <= cap, "gate separation",
                  "separation of a hub's gates exceeds (|A_H| - 1)(k - 1)");
      x_v |= x_h;
      gate_total += static_cast<std::int64_t>(h.gates.size());
      gate_budget += cap;
    }
    check_claim(gate_total <= 2 * static_cast<std::int64_t>(f.ds()), "gate count",
                "vertex-hub gates exceed 2 ds");
    check_claim(static_cast<std::int64_t>(x_v.size()) <= gate_budget, "gate separation",
                "|X_v| exceeds its budget");

    if (trace_) {
      ordered_json ej = ordered_json::array();
      for (std::size_t i = 0; i < closures.size(); ++i) {
        const EarClosure& ec = closures[i];
        ej.push_back({{"ear_edges", ears[ec.ear].edges},
                      {"free_edges", ec.free_edges},
                      {"u_P", ec.u_p()},
                      {"v_P", ec.v_p()},
                      {"closure", ids_json(ec.closure)},
                      {"label", thick[i] ? "thick" : "thin"}});
      }
      record["ears"] = ej;
      record["X_p"] = ids_json(x_p);
      record["X_v"] = ids_json(x_v);
    }

    const EdgeSet x = x_p | x_v;
    const MultiGraph gx = g.without(x);
    auto c = find_long_cycle(gx, LongCycleQuery::any_long(ell_), meter_);
    if (!c) return finish(hitting_of(x), "hitting set");
    const std::vector<Piece> pieces = build_pieces(g, hubs, closures, thick, x);
    return finish(packing_of(extract_packing(gx, pieces, *c, k, ell_)), "extracted packing");
  }

  // F is a single long cycle.
  Outcome cycle_frame(const MultiGraph& g, const Frame& f, const std::vector<Hub>& hubs, int k) {
    if (hubs.empty()) {
      check_claim(g.edge_count() == static_cast<int>(f.edges().size()), "cycle frame",
                  "graph has edges outside a hubless frame");
      EdgeSet x(g.edge_capacity());
      x.insert(f.edges().ids().front());
      return hitting_of(x);
    }
    const Hub& h = hubs.front();
    const MultiGraph shadow = g.restricted_to(h.shadow);
    std::vector<VertexId> ends;
    for (VertexId v : vertices_of(g, h.shadow)) {
      if (shadow.degree(v) == 1) ends.push_back(v);
    }
    check_claim(ends.size() == 2, "cycle frame", "hub shadow is not a path");

    // The two arcs of F between the shadow ends.
    const MultiGraph fg = f.graph();
    std::vector<EdgeSet> arcs;
    for (const Incidence& first : fg.incident(ends[0])) {
      EdgeSet arc(g.edge_capacity());
      EdgeId e = first.edge;
      VertexId x = ends[0];
      while (true) {
        arc.insert(e);
        x = fg.other_end(e, x);
        if (x == ends[1]) break;
        for (const Incidence& in : fg.incident(x)) {
          if (in.edge != e) {
            e = in.edge;
            break;
          }
        }
      }
      arcs.push_back(std::move(arc));
    }
    check_claim(arcs.size() == 2, "cycle frame", "shadow end is not on the frame cycle");

    std::vector<EdgeSet> sides = arcs;
    for (const Hub& hub : hubs) {
      int placed = 0;
      for (int i = 0; i < 2; ++i) {
        if (hub.shadow.is_subset_of(arcs[i])) {
          sides[i] |= hub.closure;
          ++placed;
        }
      }
      check_claim(placed == 1, "cycle frame", "hub shadow not inside exactly one arc");
    }
    check_claim(!sides[0].intersects(sides[1]) &&
                    sides[0].size() + sides[1].size() == static_cast<std::size_t>(g.edge_count()),
                "cycle frame", "arc closures do not partition the graph");

    std::vector<PathSystem> systems;
    for (int i = 0; i < 2; ++i) {
      const CutResult r = edge_disjoint_paths(g.restricted_to(sides[i]), ends[0], ends[1], k);
      if (!r.has_paths()) return hitting_of(r.cut());
      systems.push_back(r.paths());
    }
    std::vector<Cycle> cycles;
    for (int r = 0; r < k; ++r) {
      std::vector<EdgeId> ids = systems[0].paths[r].edges;
      ids.insert(ids.end(), systems[1].paths[r].edges.begin(), systems[1].paths[r].edges.end());
      auto c = cycle_from_edges(g, ids);
      if (!c) c = find_any_cycle(g.restricted_to(EdgeSet::of(g.edge_capacity(), ids)));
      check_claim(c.has_value() && c->length() >= ell_, "cycle frame",
                  "combined arc paths do not give a long cycle");
      cycles.push_back(std::move(*c));
    }
    return packing_of(std::move(cycles));
  }

  int ell_;
  AssertLevel level_;
  BudgetMeter meter_;
  SolveTrace* trace_;
  SolveStats stats_;
};

// ------------------------------------------------------- packing extraction

struct Run {
  int piece = 0;
  int start = 0;   // index into the cycle's edge list
  int length = 0;
};

std::vector<Run> runs_of(const Cycle& c, const std::vector<int>& piece_of) {
  const int len = c.length();
  int rot = 0;
  while (rot < len && piece_of[c.edges[rot]] == piece_of[c.edges[(rot + len - 1) % len]]) ++rot;
  if (rot == len) return {Run{piece_of[c.edges[0]], 0, len}};
  std::vector<Run> runs;
  for (int i = 0; i < len; ++i) {
    const int idx = (rot + i) % len;
    const int p = piece_of[c.edges[idx]];
    if (runs.empty() || runs.back().piece != p) {
      runs.push_back(Run{p, idx, 0});
    }
    ++runs.back().length;
  }
  return runs;
}

// Cycle formed by the C-path q (from c.vertices[a] to c.vertices[b]) and the
// arc of c that runs forward from b back to a.
Cycle splice(const Cycle& c, const Path& q, int a, int b) {
  const int len = c.length();
  Cycle d;
  for (int i = 0; i < q.length(); ++i) {
    d.vertices.push_back(q.vertices[i]);
    d.edges.push_back(q.edges[i]);
  }
  for (int i = b; i != a; i = (i + 1) % len) {
    d.vertices.push_back(c.vertices[i]);
    d.edges.push_back(c.edges[i]);
  }
  return d;
}

// Shortcuts c through a piece it visits twice, keeping the result long and
// with fewer runs. Returns nullopt when no such shortcut exists.
std::optional<Cycle> reduce_runs(const MultiGraph& gx, const std::vector<Piece>& pieces,
                                 const std::vector<int>& piece_of, const Cycle& c, int ell) {
  const auto runs = runs_of(c, piece_of);
  const int len = c.length();
  std::vector<int> at(gx.vertex_count(), -1);
  for (int i = 0; i < len; ++i) at[c.vertices[i]] = i;
  std::vector<int> visits(pieces.size(), 0);
  for (const Run& r : runs) ++visits[r.piece];

  std::optional<Cycle> best;
  std::size_t best_runs = runs.size();
  for (const Run& run : runs) {
    if (visits[run.piece] < 2) continue;
    const EdgeSet& piece = pieces[run.piece].edges;
    // Breadth-first search off the cycle from the vertices of this run.
    const EdgeSet on_cycle = EdgeSet::of(gx.edge_capacity(), c.edges);
    std::vector<EdgeId> via(gx.vertex_count(), -1);
    std::vector<VertexId> from(gx.vertex_count(), -1);
    std::deque<VertexId> queue;
    for (int i = 0; i <= run.length; ++i) {
      const VertexId v = c.vertices[(run.start + i) % len];
      from[v] = v;
      queue.push_back(v);
    }
    while (!queue.empty()) {
      const VertexId x = queue.front();
      queue.pop_front();
      for (const Incidence& in : gx.incident(x)) {
        const VertexId y = in.other;
        if (!piece.contains(in.edge) || from[y] >= 0 || on_cycle.contains(in.edge)) continue;
        from[y] = from[x];
        via[y] = in.edge;
        if (at[y] >= 0) {
          // y is on c: rebuild the C-path and try both cycles through it.
          Path q = Path::trivial(y);
          for (VertexId v = y; v != from[y];) {
            const EdgeId e = via[v];
            v = gx.other_end(e, v);
            q.edges.push_back(e);
            q.vertices.push_back(v);
          }
          q = q.reversed();
          const int a = at[q.source()];
          const int b = at[q.target()];
          for (const Cycle& d : {splice(c, q, a, b), splice(c, q.reversed(), b, a)}) {
            if (d.length() < ell || !is_valid_cycle(gx, d)) continue;
            const std::size_t n_runs = runs_of(d, piece_of).size();
            if (n_runs < best_runs) {
              best_runs = n_runs;
              best = d;
            }
          }
          continue;
        }
        queue.push_back(y);
      }
    }
    if (best) return best;
  }
  return best;
}

}  // namespace

std::vector<Cycle> extract_packing(const MultiGraph& gx, const std::vector<Piece>& pieces,
                                   Cycle c, int k, int ell) {
  std::vector<int> piece_of(gx.edge_capacity(), -1);
  for (int i = 0; i < static_cast<int>(pieces.size()); ++i) {
    for (EdgeId e : pieces[i].edges.ids()) {
      check_claim(piece_of[e] < 0, "pieces edge-disjoint", "pieces share edge " + std::to_string(e));
      piece_of[e] = i;
    }
  }
  check_claim(c.length() >= ell && is_valid_cycle(gx, c), "packing extraction",
              "start cycle is not a long cycle of G - X");
  for (EdgeId e : c.edges) {
    check_claim(piece_of[e] >= 0, "cycle crosses pieces",
                "long cycle uses edge " + std::to_string(e) + " outside every piece");
  }

  while (true) {
    const auto runs = runs_of(c, piece_of);
    check_claim(runs.size() >= 2, "cycle crosses pieces", "long cycle inside a single piece");
    std::vector<int> visits(pieces.size(), 0);
    bool repeated = false;
    for (const Run& r : runs) repeated = ++visits[r.piece] >= 2 || repeated;
    if (!repeated) break;
    auto shorter = reduce_runs(gx, pieces, piece_of, c, ell);
    check_claim(shorter.has_value(), "single traversal",
                "cannot reroute a long cycle that visits a piece twice");
    c = std::move(*shorter);
  }

  const auto runs = runs_of(c, piece_of);
  const int len = c.length();
  std::vector<std::vector<EdgeId>> walks(k);
  for (const Run& r : runs) {
    const VertexId from = c.vertices[r.start];
    const VertexId to = c.vertices[(r.start + r.length) % len];
    const CutResult flow =
        edge_disjoint_paths(gx.restricted_to(pieces[r.piece].edges), from, to, k);
    check_claim(flow.has_paths(), "pieces k-linked",
                "piece " + std::to_string(r.piece) + " links " + std::to_string(from) + " and " +
                    std::to_string(to) + " only " + std::to_string(flow.flow) + " times");
    for (int i = 0; i < k; ++i) {
      const auto& e = flow.paths().paths[i].edges;
      walks[i].insert(walks[i].end(), e.begin(), e.end());
    }
  }

  std::vector<Cycle> out;
  EdgeSet used(gx.edge_capacity());
  for (int i = 0; i < k; ++i) {
    const EdgeSet w = EdgeSet::of(gx.edge_capacity(), walks[i]);
    check_claim(w.size() == walks[i].size() && !w.intersects(used), "single traversal",
                "closed walks share an edge");
    used |= w;
    auto cyc = find_any_cycle(gx.restricted_to(w));
    check_claim(cyc.has_value() && cyc->length() >= ell, "walk cycle long",
                "closed walk " + std::to_string(i) + " holds no long cycle");
    out.push_back(std::move(*cyc));
  }
  return out;
}

Certificate solve(const MultiGraph& g, int k, int ell, const SolverConfig& cfg,
                  SolveTrace* trace) {
  if (k < 1) throw InputError("k must be at least 1");
  if (ell < 1) throw InputError("ell must be at least 1");
  const AssertLevel level = effective_assert_level(cfg, g);
  Solver solver(ell, level, cfg.budget, trace);
  Outcome o = solver.run(g, k, 0);

  Certificate cert;
  cert.k = k;
  cert.ell = ell;
  cert.bound = f_bound(k, ell);
  cert.stats = solver.stats();
  if (o.packing) {
    cert.type = Certificate::Type::packing;
    for (const Cycle& c : o.cycles) cert.cycles.push_back(c.edges);
    const Verification v = verify_packing(g, cert);
    check_claim(v.valid, "packing certificate", v.diagnostics);
  } else {
    cert.type = Certificate::Type::hitting_set;
    cert.edges = o.hitting.ids();
    if (level == AssertLevel::high) {
      const Verification v = verify_hitting_set(g, cert, cfg.budget);
      check_claim(v.valid, "hitting set certificate", v.diagnostics);
    }
  }
  return cert;
}

// ------------------------------------------------------------ verification

Verification verify_packing(const MultiGraph& g, const Certificate& cert) {
  auto fail = [](std::string why) { return Verification{false, std::move(why)}; };
  if (!cert.is_packing()) return fail("certificate is not a packing");
  if (cert.k < 1 || cert.ell < 1) return fail("k and ell must be positive");
  if (static_cast<int>(cert.cycles.size()) != cert.k) {
    return fail("expected " + std::to_string(cert.k) + " cycles, got " +
                std::to_string(cert.cycles.size()));
  }
  EdgeSet used(g.edge_capacity());
  for (std::size_t i = 0; i < cert.cycles.size(); ++i) {
    const auto& ids = cert.cycles[i];
    const std::string name = "cycle " + std::to_string(i);
    for (EdgeId e : ids) {
      if (!g.has_edge(e)) return fail(name + " uses unknown edge " + std::to_string(e));
    }
    auto c = cycle_from_edges(g, ids);
    if (!c || c->length() != static_cast<int>(ids.size())) return fail(name + " is not a cycle");
    if (c->length() < cert.ell) {
      return fail(name + " has length " + std::to_string(c->length()) + " < ell");
    }
    const EdgeSet es = edge_set(g, *c);
    if (es.intersects(used)) return fail(name + " shares an edge with an earlier cycle");
    used |= es;
  }
  return {true, "ok"};
}

Verification verify_hitting_set(const MultiGraph& g, const Certificate& cert,
                                const DetectorBudget& budget) {
  auto fail = [](std::string why) { return Verification{false, std::move(why)}; };
  if (cert.is_packing()) return fail("certificate is not a hitting set");
  if (cert.k < 1 || cert.ell < 1) return fail("k and ell must be positive");
  EdgeSet x(g.edge_capacity());
  for (EdgeId e : cert.edges) {
    if (!g.has_edge(e)) return fail("unknown edge " + std::to_string(e));
    if (x.contains(e)) return fail("edge " + std::to_string(e) + " listed twice");
    x.insert(e);
  }
  const std::int64_t bound = f_bound(cert.k, cert.ell);
  if (static_cast<std::int64_t>(x.size()) > bound) {
    return fail("|X| = " + std::to_string(x.size()) + " exceeds f_bound = " +
                std::to_string(bound));
  }
  auto c = find_long_cycle(g.without(x), LongCycleQuery::any_long(cert.ell), budget);
  if (c) {
    std::string ids;
    for (EdgeId e : c->edges) ids += (ids.empty() ? "" : " ") + std::to_string(e);
    return fail("G - X has a long cycle with edges " + ids);
  }
  return {true, "ok"};
}

Verification verify_certificate(const MultiGraph& g, const Certificate& cert,
                                const DetectorBudget& budget) {
  return cert.is_packing() ? verify_packing(g, cert) : verify_hitting_set(g, cert, budget);
}

// --------------------------------------------------------------------- JSON

std::string certificate_to_json(const Certificate& cert) {
  ordered_json j;
  j["type"] = cert.is_packing() ? "packing" : "hitting_set";
  j["k"] = cert.k;
  j["ell"] = cert.ell;
  if (cert.is_packing()) {
    j["cycles"] = cert.cycles;
  } else {
    j["edges"] = cert.edges;
  }
  j["f_bound"] = cert.bound;
  j["stats"] = {{"ds", cert.stats.ds},
                {"hubs", cert.stats.hubs},
                {"recursion_depth", cert.stats.recursion_depth}};
  return j.dump(2) + "\n";
}

Certificate certificate_from_json(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
    Certificate cert;
    const std::string type = j.at("type").get<std::string>();
    if (type == "packing") {
      cert.type = Certificate::Type::packing;
      cert.cycles = j.at("cycles").get<std::vector<std::vector<EdgeId>>>();
    } else if (type == "hitting_set") {
      cert.type = Certificate::Type::hitting_set;
      cert.edges = j.at("edges").get<std::vector<EdgeId>>();
    } else {
      throw InputError("unknown certificate type '" + type + "'");
    }
    cert.k = j.at("k").get<int>();
    cert.ell = j.at("ell").get<int>();
    cert.bound = j.contains("f_bound") ? j["f_bound"].get<std::int64_t>() : 0;
    if (j.contains("stats")) {
      const auto& s = j["stats"];
      cert.stats.ds = s.value("ds", 0);
      cert.stats.hubs = s.value("hubs", 0);
      cert.stats.recursion_depth = s.value("recursion_depth", 0);
    }
    return cert;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed certificate: ") + e.what());
  }
}

}  // namespace lcep
