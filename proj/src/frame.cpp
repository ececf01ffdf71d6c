#include "lcep/frame.hpp"

#include <algorithm>
#include <deque>

#include "lcep/cycles.hpp"

namespace lcep {

Frame::Frame(MultiGraph host, EdgeSet edges, int ell)
    : host_(std::move(host)), edges_(std::move(edges)), ell_(ell) {
  for (EdgeId e : edges_.ids()) {
    if (!host_.has_edge(e)) throw InputError("frame edge " + std::to_string(e) + " not in host");
  }
  view_ = host_.restricted_to(edges_);
  for (VertexId v = 0; v < view_.vertex_count(); ++v) {
    if (view_.degree(v) >= 3) {
      branch_.push_back(v);
      ds_ += view_.degree(v);
    }
  }
}

std::string frame_defect(const Frame& f) {
  if (f.edges().empty()) return "frame has no edges";
  if (f.graph().min_positive_degree() < 2) return "frame has a vertex of degree 1";
  auto c = shortest_cycle(f.graph());
  if (c && c->length() < f.ell()) {
    return "frame contains a cycle of length " + std::to_string(c->length());
  }
  return {};
}

Frame initial_frame(const MultiGraph& g, int ell, BudgetMeter& meter) {
  auto c = find_long_cycle(g, LongCycleQuery::any_long(ell), meter);
  if (!c) throw InputError("graph has no long cycle, so it has no frame");
  return Frame(g, edge_set(g, *c), ell);
}

Frame initial_frame(const MultiGraph& g, int ell, const DetectorBudget& budget) {
  BudgetMeter meter(budget);
  return initial_frame(g, ell, meter);
}

namespace {

std::vector<int> bfs_distances(const MultiGraph& g, VertexId from) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::deque<VertexId> queue{from};
  dist[from] = 0;
  while (!queue.empty()) {
    const VertexId x = queue.front();
    queue.pop_front();
    for (const Incidence& in : g.incident(x)) {
      if (dist[in.other] < 0) {
        dist[in.other] = dist[x] + 1;
        queue.push_back(in.other);
      }
    }
  }
  return dist;
}

// Distances in F, one BFS per source on demand.
class FrameDistances {
 public:
  explicit FrameDistances(const Frame& f) : f_(f), rows_(f.host().vertex_count()) {}

  int operator()(VertexId u, VertexId v) {
    if (rows_[u].empty()) rows_[u] = bfs_distances(f_.graph(), u);
    return rows_[u][v];
  }

  // Shortest admissible length of an F-path from u to v.
  int needed(VertexId u, VertexId v) {
    const int d = (*this)(u, v);
    return d < 0 ? 1 : std::max(1, f_.ell() - d);
  }

 private:
  const Frame& f_;
  std::vector<std::vector<int>> rows_;
};

Path oriented(Path p) { return p.source() > p.target() ? p.reversed() : p; }

class FPathSearch {
 public:
  FPathSearch(const Frame& f, BudgetMeter& meter)
      : f_(f), g_(f.host()), meter_(meter), dist_(f), on_path_(g_.vertex_count(), 0),
        mark_(g_.vertex_count(), 0) {}

  std::optional<Path> run() {
    for (VertexId u : f_.vertices()) {
      for (const Incidence& in : g_.incident(u)) {
        if (f_.has_vertex(in.other) || g_.is_loop(in.edge)) continue;
        u_ = u;
        path_ = Path{{u, in.other}, {in.edge}};
        on_path_[in.other] = 1;
        const bool hit = viable(in.other, 1) && dfs(in.other);
        on_path_[in.other] = 0;
        if (hit) return oriented(found_);
      }
    }
    return std::nullopt;
  }

 private:
  bool viable(VertexId x, int t) {
    ++stamp_;
    std::vector<VertexId> stack{x};
    mark_[x] = stamp_;
    int reachable = 0;
    int need = -1;
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (const Incidence& in : g_.incident(v)) {
        const VertexId w = in.other;
        if (f_.has_vertex(w)) {
          if (w != u_) {
            const int nd = dist_.needed(u_, w);
            if (need < 0 || nd < need) need = nd;
          }
          continue;
        }
        if (on_path_[w] || mark_[w] == stamp_) continue;
        mark_[w] = stamp_;
        ++reachable;
        stack.push_back(w);
      }
    }
    return need >= 0 && t + reachable + 1 >= need;
  }

  bool dfs(VertexId x) {
    meter_.charge();
    const int t = path_.length();
    for (const Incidence& in : g_.incident(x)) {
      const VertexId y = in.other;
      if (g_.is_loop(in.edge)) continue;
      if (f_.has_vertex(y)) {
        if (y == u_ || t + 1 < dist_.needed(u_, y)) continue;
        found_ = path_;
        found_.vertices.push_back(y);
        found_.edges.push_back(in.edge);
        return true;
      }
      if (on_path_[y]) continue;
      path_.vertices.push_back(y);
      path_.edges.push_back(in.edge);
      on_path_[y] = 1;
      const bool hit = viable(y, t + 1) && dfs(y);
      on_path_[y] = 0;
      if (hit) return true;
      path_.vertices.pop_back();
      path_.edges.pop_back();
    }
    return false;
  }

  const Frame& f_;
  const MultiGraph& g_;
  BudgetMeter& meter_;
  FrameDistances dist_;
  std::vector<char> on_path_;
  std::vector<unsigned> mark_;
  unsigned stamp_ = 0;
  VertexId u_ = 0;
  Path path_;
  Path found_;
};

// All edges lie in one component.
bool single_component(const MultiGraph& g) {
  const auto label = component_labels(g);
  int seen = -1;
  for (VertexId v : g.support()) {
    if (seen >= 0 && label[v] != seen) return false;
    seen = label[v];
  }
  return true;
}

}  // namespace

int frame_distance(const Frame& f, VertexId u, VertexId v) {
  return bfs_distances(f.graph(), u)[v];
}

std::optional<Path> find_addable_fpath(const Frame& f, BudgetMeter& meter) {
  const MultiGraph& g = f.host();
  FrameDistances dist(f);
  for (EdgeId e : g.edge_ids()) {
    if (f.edges().contains(e) || g.is_loop(e)) continue;
    const Edge& ed = g.endpoints(e);
    if (!f.has_vertex(ed.u) || !f.has_vertex(ed.v)) continue;
    meter.charge();
    if (dist.needed(ed.u, ed.v) <= 1) {
      return oriented(Path{{ed.u, ed.v}, {e}});
    }
  }
  return FPathSearch(f, meter).run();
}

Frame add_fpath(const Frame& f, const Path& q) {
  EdgeSet edges = f.edges();
  edges.insert_all(q.edges);
  return Frame(f.host(), std::move(edges), f.ell());
}

Frame maximize_frame(Frame f, AssertLevel level, BudgetMeter& meter) {
  while (auto q = find_addable_fpath(f, meter)) {
    const int before = f.ds();
    f = add_fpath(f, *q);
    check_claim(f.ds() > before, "frame augmentation", "ds did not grow");
    if (level == AssertLevel::high) {
      const std::string defect = frame_defect(f);
      check_claim(defect.empty(), "frame augmentation", defect);
    }
  }
  if (single_component(f.host())) {
    check_claim(single_component(f.graph()), "frame fixpoint",
                "fixpoint frame of a connected host is disconnected");
  }
  return f;
}

Frame maximize_frame(Frame f, AssertLevel level, const DetectorBudget& budget) {
  BudgetMeter meter(budget);
  return maximize_frame(std::move(f), level, meter);
}

Path shadow_of_pair(const Frame& f, VertexId u, VertexId v, AssertLevel level) {
  if (u == v) return Path::trivial(u);
  const MultiGraph& fg = f.graph();
  std::vector<EdgeId> via(fg.vertex_count(), -1);
  std::vector<char> seen(fg.vertex_count(), 0);
  std::deque<VertexId> queue{u};
  seen[u] = 1;
  while (!queue.empty() && !seen[v]) {
    const VertexId x = queue.front();
    queue.pop_front();
    for (const Incidence& in : fg.incident(x)) {
      if (seen[in.other]) continue;
      seen[in.other] = 1;
      via[in.other] = in.edge;
      queue.push_back(in.other);
    }
  }
  check_claim(seen[v], "shadow", "feet " + std::to_string(u) + " and " + std::to_string(v) +
                                     " lie in different frame components");
  Path p = Path::trivial(v);
  for (VertexId x = v; x != u;) {
    const EdgeId e = via[x];
    x = fg.other_end(e, x);
    p.edges.push_back(e);
    p.vertices.push_back(x);
  }
  p = p.reversed();
  check_claim(p.length() < f.ell(), "shadow",
              "no short frame path between " + std::to_string(u) + " and " + std::to_string(v));
  if (level == AssertLevel::high) {
    for (EdgeId e : p.edges) {
      const EdgeId drop[] = {e};
      const int d = bfs_distances(fg.without(drop), u)[v];
      check_claim(d < 0 || d >= f.ell(), "shadow",
                  "two short frame paths join " + std::to_string(u) + " and " + std::to_string(v));
    }
  }
  return p;
}

std::vector<VertexId> vertices_of(const MultiGraph& g, const EdgeSet& edges) {
  std::vector<char> hit(g.vertex_count(), 0);
  for (EdgeId e : edges.ids()) {
    hit[g.endpoints(e).u] = 1;
    hit[g.endpoints(e).v] = 1;
  }
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (hit[v]) out.push_back(v);
  }
  return out;
}

int tree_diameter(const MultiGraph& g, const EdgeSet& edges) {
  if (edges.empty()) return 0;
  const MultiGraph t = g.restricted_to(edges);
  const auto verts = vertices_of(g, edges);
  if (edges.size() + 1 != verts.size()) return -1;
  auto far = [&](VertexId from) {
    const auto d = bfs_distances(t, from);
    VertexId best = from;
    for (VertexId v : verts) {
      if (d[v] < 0) return std::pair<VertexId, int>{-1, -1};
      if (d[v] > d[best]) best = v;
    }
    return std::pair<VertexId, int>{best, d[best]};
  };
  const auto [a, da] = far(verts.front());
  if (a < 0) return -1;
  return far(a).second;
}

std::vector<Bridge> compute_bridges(const Frame& f, AssertLevel level) {
  const MultiGraph& g = f.host();
  const int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  int comps = 0;
  for (VertexId s = 0; s < n; ++s) {
    if (f.has_vertex(s) || comp[s] >= 0 || g.degree(s) == 0) continue;
    std::vector<VertexId> stack{s};
    comp[s] = comps;
    while (!stack.empty()) {
      const VertexId x = stack.back();
      stack.pop_back();
      for (const Incidence& in : g.incident(x)) {
        if (f.has_vertex(in.other) || comp[in.other] >= 0) continue;
        comp[in.other] = comps;
        stack.push_back(in.other);
      }
    }
    ++comps;
  }

  std::vector<Bridge> bridges;
  std::vector<int> bridge_of(comps, -1);
  auto add_unique = [](std::vector<VertexId>& list, VertexId v) {
    if (std::find(list.begin(), list.end(), v) == list.end()) list.push_back(v);
  };
  for (EdgeId e : g.edge_ids()) {
    if (f.edges().contains(e)) continue;
    const Edge& ed = g.endpoints(e);
    if (f.has_vertex(ed.u) && f.has_vertex(ed.v)) {
      Bridge b;
      b.kind = Bridge::Kind::chord;
      b.edges = EdgeSet(g.edge_capacity());
      b.edges.insert(e);
      add_unique(b.feet, ed.u);
      add_unique(b.feet, ed.v);
      bridges.push_back(std::move(b));
      continue;
    }
    const int c = comp[f.has_vertex(ed.u) ? ed.v : ed.u];
    if (bridge_of[c] < 0) {
      bridge_of[c] = static_cast<int>(bridges.size());
      Bridge b;
      b.kind = Bridge::Kind::component;
      b.edges = EdgeSet(g.edge_capacity());
      bridges.push_back(std::move(b));
    }
    Bridge& b = bridges[bridge_of[c]];
    b.edges.insert(e);
    for (VertexId x : {ed.u, ed.v}) {
      if (f.has_vertex(x)) {
        add_unique(b.feet, x);
      } else {
        add_unique(b.interior, x);
      }
    }
  }

  for (Bridge& b : bridges) {
    std::sort(b.feet.begin(), b.feet.end());
    std::sort(b.interior.begin(), b.interior.end());
    b.shadow = EdgeSet(g.edge_capacity());
    for (std::size_t i = 0; i < b.feet.size(); ++i) {
      for (std::size_t j = i + 1; j < b.feet.size(); ++j) {
        b.shadow |= edge_set(g, shadow_of_pair(f, b.feet[i], b.feet[j], level));
      }
    }
    const int diameter = tree_diameter(g, b.shadow);
    check_claim(diameter >= 0 && diameter < f.ell(), "bridge shadow",
                "shadow of the bridge at edge " + std::to_string(b.edges.ids().front()) +
                    " is not a tree of diameter below ell");
  }
  return bridges;
}

}  // namespace lcep
