#include "lcep/hubs.hpp"

#include <algorithm>
#include <numeric>

#include "lcep/cycles.hpp"

namespace lcep {

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

void insert_sorted_unique(std::vector<VertexId>& list, VertexId v) {
  auto it = std::lower_bound(list.begin(), list.end(), v);
  if (it == list.end() || *it != v) list.insert(it, v);
}

bool contains_sorted(const std::vector<VertexId>& list, VertexId v) {
  return std::binary_search(list.begin(), list.end(), v);
}

}  // namespace

std::vector<VertexId> gates_of(const MultiGraph& host, const Hub& h) {
  std::vector<VertexId> gates;
  for (VertexId v : h.shadow_vertices) {
    for (const Incidence& in : host.incident(v)) {
      if (!h.closure.contains(in.edge)) {
        gates.push_back(v);
        break;
      }
    }
  }
  return gates;
}

std::vector<Hub> compute_hubs(const Frame& f, const std::vector<Bridge>& bridges,
                              AssertLevel level, BudgetMeter& meter) {
  const MultiGraph& g = f.host();
  const int nb = static_cast<int>(bridges.size());
  std::vector<int> parent(nb);
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<int> owner(g.edge_capacity(), -1);
  for (int b = 0; b < nb; ++b) {
    for (EdgeId e : bridges[b].shadow.ids()) {
      if (owner[e] < 0) {
        owner[e] = b;
        continue;
      }
      const int ra = find_root(parent, owner[e]);
      const int rb = find_root(parent, b);
      if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
  }

  std::vector<int> hub_of_root(nb, -1);
  std::vector<Hub> hubs;
  for (int b = 0; b < nb; ++b) {
    const int r = find_root(parent, b);
    if (hub_of_root[r] < 0) {
      hub_of_root[r] = static_cast<int>(hubs.size());
      Hub h;
      h.edges = EdgeSet(g.edge_capacity());
      h.shadow = EdgeSet(g.edge_capacity());
      hubs.push_back(std::move(h));
    }
    Hub& h = hubs[hub_of_root[r]];
    h.bridges.push_back(b);
    h.edges |= bridges[b].edges;
    h.shadow |= bridges[b].shadow;
    for (VertexId v : bridges[b].feet) insert_sorted_unique(h.shadow_vertices, v);
  }

  EdgeSet seen_shadow(g.edge_capacity());
  for (Hub& h : hubs) {
    for (VertexId v : vertices_of(g, h.shadow)) insert_sorted_unique(h.shadow_vertices, v);
    h.closure = h.edges | h.shadow;
    h.kind = Hub::Kind::path_hub;
    for (VertexId v : h.shadow_vertices) {
      if (f.is_branch(v)) h.kind = Hub::Kind::vertex_hub;
    }
    h.gates = gates_of(g, h);

    const std::string where = "hub of bridge " + std::to_string(h.bridges.front());
    check_claim(tree_diameter(g, h.shadow) >= 0, "hub shadow", where + " has a shadow that is not a tree");
    check_claim(!h.shadow.intersects(seen_shadow), "hub shadow", where + " shares a shadow edge");
    seen_shadow |= h.shadow;
    if (level == AssertLevel::high) {
      const auto c = find_long_cycle(g.restricted_to(h.closure),
                                     LongCycleQuery::any_long(f.ell()), meter);
      check_claim(!c.has_value(), "hub closure", where + " contains a long cycle");
    }
  }
  return hubs;
}

std::vector<Hub> compute_hubs(const Frame& f, const std::vector<Bridge>& bridges,
                              AssertLevel level) {
  BudgetMeter meter;
  return compute_hubs(f, bridges, level, meter);
}

std::vector<UEar> u_ears(const Frame& f) {
  if (f.is_cycle()) throw InputError("a frame that is a cycle has no U-ears");
  const MultiGraph& fg = f.graph();
  std::vector<char> used(fg.edge_capacity(), 0);
  std::vector<UEar> ears;
  for (VertexId u : f.branch_vertices()) {
    for (const Incidence& start : fg.incident(u)) {
      if (used[start.edge]) continue;
      UEar ear;
      ear.vertices.push_back(u);
      EdgeId e = start.edge;
      VertexId cur = u;
      while (true) {
        used[e] = 1;
        ear.edges.push_back(e);
        cur = fg.other_end(e, cur);
        ear.vertices.push_back(cur);
        if (f.is_branch(cur)) break;
        EdgeId next = -1;
        for (const Incidence& in : fg.incident(cur)) {
          if (in.edge != e) next = in.edge;
        }
        check_claim(next >= 0 && !used[next], "U-ears", "frame vertex " + std::to_string(cur) +
                                                          " breaks the ear walk");
        e = next;
      }
      ear.is_cycle = ear.u() == ear.v();
      if (ear.is_cycle && ear.edges.back() < ear.edges.front()) {
        std::reverse(ear.vertices.begin(), ear.vertices.end());
        std::reverse(ear.edges.begin(), ear.edges.end());
      }
      ears.push_back(std::move(ear));
    }
  }
  for (EdgeId e : fg.edge_ids()) {
    check_claim(used[e] != 0, "U-ears", "frame edge " + std::to_string(e) + " lies on no U-ear");
  }
  return ears;
}

std::vector<VertexId> vertex_hub_gates(const std::vector<Hub>& hubs) {
  std::vector<VertexId> out;
  for (const Hub& h : hubs) {
    if (h.kind != Hub::Kind::vertex_hub) continue;
    for (VertexId g : h.gates) insert_sorted_unique(out, g);
  }
  return out;
}

std::vector<EarClosure> classify_ears(const Frame& f, const std::vector<UEar>& ears,
                                      const std::vector<Hub>& hubs) {
  const MultiGraph& g = f.host();
  EdgeSet covered(g.edge_capacity());
  for (const Hub& h : hubs) {
    if (h.kind == Hub::Kind::vertex_hub) covered |= h.closure;
  }
  const std::vector<VertexId> gates = vertex_hub_gates(hubs);

  std::vector<EarClosure> out;
  for (int i = 0; i < static_cast<int>(ears.size()); ++i) {
    const UEar& ear = ears[i];
    const int len = static_cast<int>(ear.edges.size());
    std::vector<char> free(len);
    int free_count = 0;
    for (int j = 0; j < len; ++j) {
      free[j] = !covered.contains(ear.edges[j]);
      free_count += free[j];
    }
    if (free_count == 0) continue;

    // Runs of free positions; for a cycle the run through position 0 wraps.
    std::vector<std::pair<int, int>> runs;  // (start, length)
    for (int j = 0; j < len;) {
      if (!free[j]) {
        ++j;
        continue;
      }
      int r = j;
      while (r < len && free[r]) ++r;
      runs.emplace_back(j, r - j);
      j = r;
    }
    if (ear.is_cycle && runs.size() >= 2 && runs.front().first == 0 &&
        runs.back().first + runs.back().second == len) {
      runs.front().first = runs.back().first;
      runs.front().second += runs.back().second;
      runs.pop_back();
    }
    check_claim(runs.size() == 1, "free part",
                "ear " + std::to_string(i) + " has " + std::to_string(runs.size()) +
                    " free components");

    EarClosure ec;
    ec.ear = i;
    const auto [start, count] = runs.front();
    ec.free_vertices.push_back(ear.vertices[start]);
    for (int s = 0; s < count; ++s) {
      const int j = (start + s) % len;
      ec.free_edges.push_back(ear.edges[j]);
      ec.free_vertices.push_back(ear.vertices[j + 1]);
    }
    for (VertexId end : {ec.u_p(), ec.v_p()}) {
      check_claim(f.is_branch(end) || contains_sorted(gates, end), "free part",
                  "end " + std::to_string(end) + " of ear " + std::to_string(i) +
                      " is neither a gate nor in U");
    }

    ec.closure = EdgeSet::of(g.edge_capacity(), ec.free_edges);
    std::vector<VertexId> free_sorted = ec.free_vertices;
    std::sort(free_sorted.begin(), free_sorted.end());
    for (int h = 0; h < static_cast<int>(hubs.size()); ++h) {
      const Hub& hub = hubs[h];
      if (hub.kind != Hub::Kind::path_hub) continue;
      if (!hub.shadow.is_subset_of(ec.closure)) continue;
      const bool inside = std::all_of(hub.shadow_vertices.begin(), hub.shadow_vertices.end(),
                                      [&](VertexId v) { return contains_sorted(free_sorted, v); });
      if (!inside) continue;
      // A path-hub with an empty shadow sits at one vertex; give it to the
      // first ear that passes through that vertex in its interior.
      if (hub.shadow.empty()) {
        const VertexId at = hub.shadow_vertices.front();
        if (at == ec.u_p() || at == ec.v_p()) continue;
      }
      ec.path_hubs.push_back(h);
      ec.closure |= hub.closure;
    }
    out.push_back(std::move(ec));
  }

  // Vertex-hub closures and ear closures partition E(G).
  std::vector<int> hits(g.edge_capacity(), 0);
  for (const Hub& h : hubs) {
    if (h.kind != Hub::Kind::vertex_hub) continue;
    for (EdgeId e : h.closure.ids()) ++hits[e];
  }
  for (const EarClosure& ec : out) {
    for (EdgeId e : ec.closure.ids()) ++hits[e];
  }
  for (EdgeId e : g.edge_ids()) {
    check_claim(hits[e] == 1, "edge partition",
                "edge " + std::to_string(e) + " lies in " + std::to_string(hits[e]) +
                    " closures");
  }
  return out;
}

CutResult thick_thin(const MultiGraph& host, const EarClosure& p, int k) {
  if (p.u_p() != p.v_p()) {
    return edge_disjoint_paths(host.restricted_to(p.closure), p.u_p(), p.v_p(), k);
  }
  // Detach the last free edge from u_P onto a fresh vertex.
  const VertexId u = p.u_p();
  const VertexId twin = host.vertex_count();
  const EdgeId last = p.free_edges.back();
  MultiGraph aux(host.vertex_count() + 1);
  for (EdgeId e = 0; e < host.edge_capacity(); ++e) {
    Edge ed = host.endpoints(e);
    if (e == last) {
      if (ed.u == u) {
        ed.u = twin;
      } else {
        ed.v = twin;
      }
    }
    aux.add_edge(ed.u, ed.v);
  }
  CutResult r = edge_disjoint_paths(aux.restricted_to(p.closure), u, twin, k);
  if (r.has_paths()) {
    PathSystem ps = r.paths();
    ps.t = u;
    for (Path& path : ps.paths) path.vertices.back() = u;
    r.outcome = std::move(ps);
  }
  return r;
}

std::vector<Piece> build_pieces(const MultiGraph& host, const std::vector<Hub>& hubs,
                                const std::vector<EarClosure>& ears,
                                const std::vector<char>& thick, const EdgeSet& x) {
  std::vector<VertexId> boundary_set = vertex_hub_gates(hubs);
  for (const EarClosure& ec : ears) {
    insert_sorted_unique(boundary_set, ec.u_p());
    insert_sorted_unique(boundary_set, ec.v_p());
  }
  auto boundary_of = [&](const EdgeSet& edges) {
    std::vector<VertexId> out;
    for (VertexId v : vertices_of(host, edges)) {
      if (contains_sorted(boundary_set, v)) out.push_back(v);
    }
    return out;
  };

  std::vector<Piece> pieces;
  for (int i = 0; i < static_cast<int>(ears.size()); ++i) {
    if (!thick[i]) continue;
    Piece piece;
    piece.kind = Piece::Kind::thick_ear;
    piece.edges = ears[i].closure;
    piece.boundary = boundary_of(piece.edges);
    piece.source = i;
    pieces.push_back(std::move(piece));
  }
  for (int h = 0; h < static_cast<int>(hubs.size()); ++h) {
    if (hubs[h].kind != Hub::Kind::vertex_hub) continue;
    const MultiGraph rest = host.restricted_to(hubs[h].closure - x);
    const std::vector<int> label = component_labels(rest);
    std::vector<int> piece_of(host.vertex_count(), -1);
    for (EdgeId e : rest.edge_ids()) {
      const int c = label[rest.endpoints(e).u];
      if (piece_of[c] < 0) {
        piece_of[c] = static_cast<int>(pieces.size());
        Piece piece;
        piece.kind = Piece::Kind::hub_component;
        piece.edges = EdgeSet(host.edge_capacity());
        piece.source = h;
        pieces.push_back(std::move(piece));
      }
      pieces[piece_of[c]].edges.insert(e);
    }
  }
  for (Piece& piece : pieces) {
    if (piece.kind == Piece::Kind::hub_component) piece.boundary = boundary_of(piece.edges);
  }
  return pieces;
}

}  // namespace lcep
