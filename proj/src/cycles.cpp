#include "lcep/cycles.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "lcep/errors.hpp"

namespace lcep {

namespace {

constexpr int kUnbounded = std::numeric_limits<int>::max() / 4;

// Depth-first search for a simple start -> target path whose length plus
// `extra` (the closing edge, for cycle searches) lies in [min_total, max_total].
// Vertices below `min_vertex` are off limits, as is the edge `banned`.
class PathSearch {
 public:
  PathSearch(const MultiGraph& g, BudgetMeter& meter)
      : g_(g), meter_(meter), on_path_(g.vertex_count(), 0), mark_(g.vertex_count(), 0),
        dist_(g.vertex_count(), -1) {}

  struct Spec {
    VertexId start = 0;
    VertexId target = 0;
    EdgeId banned = -1;
    VertexId min_vertex = 0;
    int extra = 0;
    int min_total = 0;
    int max_total = kUnbounded;
    bool shortest = false;
    int best_total = kUnbounded;  // shortest mode: only strictly better results count
  };

  std::optional<Path> run(const Spec& spec) {
    spec_ = spec;
    found_.reset();
    best_ = spec.best_total;
    path_ = Path::trivial(spec.start);
    on_path_[spec.start] = 1;
    if (viable(spec.start, 0)) dfs(spec.start);
    on_path_[spec.start] = 0;
    return found_;
  }

  int best_total() const { return best_; }

 private:
  bool allowed(VertexId v) const { return v >= spec_.min_vertex; }

  // Bounds on how a path currently ending at x with t edges can be completed.
  bool viable(VertexId x, int t) {
    ++stamp_;
    if (stamp_ == 0) {
      std::fill(mark_.begin(), mark_.end(), 0);
      stamp_ = 1;
    }
    std::deque<VertexId> queue{x};
    mark_[x] = stamp_;
    dist_[x] = 0;
    int reachable = 0;  // intermediate vertices available to a completion
    int target_dist = -1;
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      for (const Incidence& in : g_.incident(v)) {
        if (in.edge == spec_.banned || g_.is_loop(in.edge)) continue;
        const VertexId w = in.other;
        if (w == spec_.target) {
          if (target_dist < 0) target_dist = dist_[v] + 1;
          continue;
        }
        if (on_path_[w] || !allowed(w) || mark_[w] == stamp_) continue;
        mark_[w] = stamp_;
        dist_[w] = dist_[v] + 1;
        ++reachable;
        queue.push_back(w);
      }
    }
    if (target_dist < 0) return false;
    const int min_total = t + target_dist + spec_.extra;
    const int max_total = t + reachable + 1 + spec_.extra;
    if (max_total < spec_.min_total) return false;
    if (min_total > spec_.max_total) return false;
    if (spec_.shortest && min_total >= best_) return false;
    return true;
  }

  // Returns true when the search should stop.
  bool dfs(VertexId x) {
    meter_.charge();
    const int t = path_.length();
    for (const Incidence& in : g_.incident(x)) {
      const EdgeId e = in.edge;
      if (e == spec_.banned || g_.is_loop(e)) continue;
      const VertexId y = in.other;
      if (y == spec_.target) {
        const int total = t + 1 + spec_.extra;
        if (total < spec_.min_total || total > spec_.max_total) continue;
        if (spec_.shortest && total >= best_) continue;
        Path p = path_;
        p.vertices.push_back(y);
        p.edges.push_back(e);
        found_ = std::move(p);
        best_ = total;
        if (!spec_.shortest) return true;
        continue;
      }
      if (on_path_[y] || !allowed(y)) continue;
      if (spec_.shortest && t + 2 + spec_.extra > best_) continue;
      path_.vertices.push_back(y);
      path_.edges.push_back(e);
      on_path_[y] = 1;
      bool stop = false;
      if (viable(y, t + 1)) stop = dfs(y);
      on_path_[y] = 0;
      path_.vertices.pop_back();
      path_.edges.pop_back();
      if (stop) return true;
    }
    return false;
  }

  const MultiGraph& g_;
  BudgetMeter& meter_;
  Spec spec_;
  Path path_;
  std::optional<Path> found_;
  int best_ = kUnbounded;
  std::vector<char> on_path_;
  std::vector<unsigned> mark_;
  std::vector<int> dist_;
  unsigned stamp_ = 0;
};

Cycle close_cycle(VertexId s, EdgeId first, const Path& rest) {
  // rest runs from the far end of `first` back to s.
  Cycle c;
  c.vertices.push_back(s);
  c.edges.push_back(first);
  for (std::size_t i = 0; i + 1 < rest.vertices.size(); ++i) {
    c.vertices.push_back(rest.vertices[i]);
    c.edges.push_back(rest.edges[i]);
  }
  return c;
}

std::optional<Cycle> first_loop(const MultiGraph& g) {
  for (EdgeId e : g.edge_ids()) {
    if (g.is_loop(e)) return Cycle{{g.endpoints(e).u}, {e}};
  }
  return std::nullopt;
}

}  // namespace

std::optional<Cycle> shortest_cycle(const MultiGraph& g) {
  if (auto loop = first_loop(g)) return loop;
  const int n = g.vertex_count();
  std::vector<int> dist(n);
  std::vector<EdgeId> parent(n);
  int best = kUnbounded;
  VertexId best_x = -1;
  VertexId best_w = -1;
  EdgeId best_e = -1;
  std::vector<VertexId> best_parent_path;
  std::vector<EdgeId> best_parent_edge;
  std::vector<VertexId> parent_vertex(n);

  for (VertexId r = 0; r < n; ++r) {
    if (g.degree(r) == 0) continue;
    std::fill(dist.begin(), dist.end(), -1);
    dist[r] = 0;
    parent[r] = -1;
    parent_vertex[r] = -1;
    std::deque<VertexId> queue{r};
    bool improved = false;
    while (!queue.empty()) {
      const VertexId x = queue.front();
      queue.pop_front();
      if (2 * dist[x] + 1 >= best) break;
      for (const Incidence& in : g.incident(x)) {
        if (in.edge == parent[x]) continue;
        const VertexId w = in.other;
        if (dist[w] == -1) {
          dist[w] = dist[x] + 1;
          parent[w] = in.edge;
          parent_vertex[w] = x;
          queue.push_back(w);
        } else {
          const int len = dist[x] + dist[w] + 1;
          if (len < best) {
            best = len;
            best_x = x;
            best_w = w;
            best_e = in.edge;
            improved = true;
          }
        }
      }
    }
    if (improved) {
      best_parent_edge = parent;
      best_parent_path = parent_vertex;
    }
  }
  if (best_e < 0) return std::nullopt;

  // Tree paths from the root to best_x and best_w, joined by best_e.
  std::vector<VertexId> up_x;
  std::vector<EdgeId> up_x_e;
  for (VertexId v = best_x; best_parent_path[v] != -1; v = best_parent_path[v]) {
    up_x.push_back(v);
    up_x_e.push_back(best_parent_edge[v]);
  }
  std::vector<VertexId> up_w;
  std::vector<EdgeId> up_w_e;
  for (VertexId v = best_w; best_parent_path[v] != -1; v = best_parent_path[v]) {
    up_w.push_back(v);
    up_w_e.push_back(best_parent_edge[v]);
  }
  VertexId root = best_x;
  while (best_parent_path[root] != -1) root = best_parent_path[root];

  Cycle c;
  c.vertices.push_back(root);
  for (std::size_t i = up_x.size(); i-- > 0;) {
    c.edges.push_back(up_x_e[i]);
    c.vertices.push_back(up_x[i]);
  }
  c.edges.push_back(best_e);
  for (std::size_t i = 0; i < up_w.size(); ++i) {
    c.vertices.push_back(up_w[i]);
    c.edges.push_back(up_w_e[i]);
  }
  // The walk ends back at root; drop the duplicate closing vertex.
  check_claim(static_cast<int>(c.edges.size()) == best && is_valid_cycle(g, c), "girth",
              "minimum closed walk is not a simple cycle");
  return c;
}

std::optional<Cycle> find_long_cycle(const MultiGraph& g, const LongCycleQuery& q,
                                     const DetectorBudget& budget) {
  BudgetMeter meter(budget);
  return find_long_cycle(g, q, meter);
}

std::optional<Cycle> find_long_cycle(const MultiGraph& g, const LongCycleQuery& q,
                                     BudgetMeter& meter) {
  using Mode = LongCycleQuery::Mode;
  if (q.ell < 1) throw InputError("ell must be at least 1");
  if (q.mode == Mode::length_at_most && q.bound < q.ell) {
    throw InputError("length bound below ell");
  }
  const int max_total = q.mode == Mode::length_at_most ? q.bound : kUnbounded;

  if (q.mode == Mode::through_edge) {
    if (!g.has_edge(q.edge)) throw InputError("edge not in graph");
    const Edge& ed = g.endpoints(q.edge);
    if (ed.u == ed.v) {
      if (q.ell <= 1) return Cycle{{ed.u}, {q.edge}};
      return std::nullopt;
    }
    PathSearch search(g, meter);
    PathSearch::Spec spec;
    spec.start = ed.v;
    spec.target = ed.u;
    spec.banned = q.edge;
    spec.extra = 1;
    spec.min_total = q.ell;
    auto p = search.run(spec);
    if (!p) return std::nullopt;
    return close_cycle(ed.u, q.edge, *p);
  }

  if (q.ell <= 1) {
    if (auto loop = first_loop(g)) return loop;
  }
  const bool shortest = q.mode == Mode::shortest_long;
  PathSearch search(g, meter);
  std::optional<Cycle> best;
  int best_len = kUnbounded;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    for (const Incidence& in : g.incident(s)) {
      if (in.other <= s || g.is_loop(in.edge)) continue;
      PathSearch::Spec spec;
      spec.start = in.other;
      spec.target = s;
      spec.banned = in.edge;
      spec.min_vertex = s;
      spec.extra = 1;
      spec.min_total = q.ell;
      spec.max_total = max_total;
      spec.shortest = shortest;
      spec.best_total = best_len;
      auto p = search.run(spec);
      if (!p) continue;
      Cycle c = close_cycle(s, in.edge, *p);
      if (!shortest) return c;
      best_len = c.length();
      best = std::move(c);
      if (best_len == std::max(q.ell, 2)) return best;
    }
  }
  return best;
}

bool edge_on_long_cycle(const MultiGraph& g, EdgeId e, int ell, const DetectorBudget& budget) {
  BudgetMeter meter(budget);
  return edge_on_long_cycle(g, e, ell, meter);
}

bool edge_on_long_cycle(const MultiGraph& g, EdgeId e, int ell, BudgetMeter& meter) {
  return find_long_cycle(g, LongCycleQuery::through_edge(ell, e), meter).has_value();
}

// ------------------------------------------------------------ dense packer

double dense_packing_threshold(int k) {
  return 42.0 * k * std::log2(static_cast<double>(k));
}

namespace {

std::vector<Cycle> pack_dense_rec(const MultiGraph& g, int k) {
  if (k == 0) return {};
  auto c = shortest_cycle(g);
  check_claim(c.has_value(), "dense packing",
              "no cycle left although " + std::to_string(k) + " more are guaranteed");
  std::vector<Cycle> out{*c};
  if (k == 1) return out;
  const MultiGraph rest = g.without(c->edges);
  const Suppression sup = suppress_degree2(rest);
  const int m = sup.reduced.edge_count();
  check_claim(m > 0 && (k - 1 < 2 || m >= dense_packing_threshold(k - 1)), "dense packing",
              "reduced multigraph has " + std::to_string(m) + " edges, too few for " +
                  std::to_string(k - 1) + " cycles");
  for (const Cycle& rc : pack_dense_rec(sup.reduced, k - 1)) {
    out.push_back(expand_cycle(rc, sup.expansion));
  }
  return out;
}

}  // namespace

std::vector<Cycle> pack_cycles_dense(const MultiGraph& g, int k) {
  if (k < 1) throw InputError("k must be at least 1");
  if (g.edge_count() == 0 || g.min_positive_degree() < 3) {
    throw InputError("dense packing needs minimum degree 3");
  }
  if (k >= 2 && g.edge_count() < dense_packing_threshold(k)) {
    throw InputError("dense packing needs at least 42 k log2 k edges");
  }
  return pack_dense_rec(g, k);
}

// ---------------------------------------------------------------- oracles

void enumerate_cycles(const MultiGraph& g, int min_len, int max_len, BudgetMeter& meter,
                      const std::function<bool(const Cycle&)>& visit) {
  const int n = g.vertex_count();
  std::vector<char> on_path(n, 0);
  std::vector<int> mark(n, 0);
  int stamp = 0;
  Cycle cur;
  bool stop = false;

  // Upper bound on how many more vertices a path ending at x can still visit
  // before closing at s.
  auto room = [&](VertexId s, VertexId x) {
    ++stamp;
    std::vector<VertexId> stack{x};
    mark[x] = stamp;
    int count = 0;
    bool closes = false;
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (const Incidence& in : g.incident(v)) {
        const VertexId w = in.other;
        if (w == s) {
          closes = true;
          continue;
        }
        if (w < s || on_path[w] || mark[w] == stamp) continue;
        mark[w] = stamp;
        ++count;
        stack.push_back(w);
      }
    }
    return closes ? count : -1;
  };

  std::function<void(VertexId, VertexId)> extend = [&](VertexId s, VertexId x) {
    meter.charge();
    const int t = cur.length();
    const EdgeId first = cur.edges.front();
    for (const Incidence& in : g.incident(x)) {
      if (stop) return;
      const EdgeId e = in.edge;
      if (g.is_loop(e)) continue;
      const VertexId y = in.other;
      if (y == s) {
        if (e <= first) continue;
        const int len = t + 1;
        if (len >= min_len && len <= max_len) {
          cur.edges.push_back(e);
          if (!visit(cur)) stop = true;
          cur.edges.pop_back();
        }
        continue;
      }
      if (y < s || on_path[y] || t + 2 > max_len) continue;
      on_path[y] = 1;
      cur.vertices.push_back(y);
      cur.edges.push_back(e);
      // Once t + 3 >= min_len any closing edge is long enough; prune only before.
      const bool viable = min_len <= t + 3 || [&] {
        const int r = room(s, y);
        return r >= 0 && t + 1 + r + 1 >= min_len;
      }();
      if (viable) extend(s, y);
      cur.vertices.pop_back();
      cur.edges.pop_back();
      on_path[y] = 0;
    }
  };

  for (VertexId s = 0; s < n && !stop; ++s) {
    if (min_len <= 1 && max_len >= 1) {
      // A loop shows up twice in the incidence list; report it once.
      EdgeId last_loop = -1;
      for (const Incidence& in : g.incident(s)) {
        if (!g.is_loop(in.edge) || in.edge == last_loop) continue;
        last_loop = in.edge;
        if (!visit(Cycle{{s}, {in.edge}})) {
          stop = true;
          break;
        }
      }
    }
    on_path[s] = 1;
    for (const Incidence& in : g.incident(s)) {
      if (stop) break;
      if (g.is_loop(in.edge) || in.other < s) continue;
      const VertexId w = in.other;
      on_path[w] = 1;
      cur.vertices = {s, w};
      cur.edges = {in.edge};
      extend(s, w);
      on_path[w] = 0;
    }
    on_path[s] = 0;
  }
}

std::vector<Cycle> all_cycles(const MultiGraph& g, int min_len, BudgetMeter& meter,
                              int max_len) {
  std::vector<Cycle> out;
  enumerate_cycles(g, min_len, max_len, meter, [&](const Cycle& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

namespace {

using Mask = std::vector<std::uint64_t>;

Mask mask_of(std::span<const EdgeId> edges, int capacity) {
  Mask m((capacity + 63) / 64, 0);
  for (EdgeId e : edges) m[e / 64] |= std::uint64_t{1} << (e % 64);
  return m;
}

bool masks_meet(const Mask& a, const Mask& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] & b[i]) return true;
  }
  return false;
}

void mask_add(Mask& a, const Mask& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] |= b[i];
}

void mask_remove(Mask& a, const Mask& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] &= ~b[i];
}

std::vector<Cycle> sorted_long_cycles(const MultiGraph& g, int ell, BudgetMeter& meter) {
  auto cycles = all_cycles(g, ell, meter);
  std::stable_sort(cycles.begin(), cycles.end(),
                   [](const Cycle& a, const Cycle& b) { return a.length() < b.length(); });
  return cycles;
}

}  // namespace

PackingOracleResult oracle_max_packing(const MultiGraph& g, int ell,
                                       const DetectorBudget& budget) {
  if (ell < 1) throw InputError("ell must be at least 1");
  BudgetMeter meter(budget);
  const auto cycles = sorted_long_cycles(g, ell, meter);
  const int cap = g.edge_capacity();
  std::vector<Mask> masks;
  masks.reserve(cycles.size());
  for (const Cycle& c : cycles) masks.push_back(mask_of(c.edges, cap));

  PackingOracleResult result;
  std::vector<int> chosen;
  std::vector<int> best_set;
  Mask used((cap + 63) / 64, 0);
  int used_edges = 0;
  const int n_cycles = static_cast<int>(cycles.size());
  const int total_edges = g.edge_count();

  std::function<void(int)> rec = [&](int from) {
    meter.charge();
    const int count = static_cast<int>(chosen.size());
    if (count > result.value) {
      result.value = count;
      best_set = chosen;
    }
    for (int j = from; j < n_cycles; ++j) {
      const int free_edges = total_edges - used_edges;
      const int upper = count + std::min(n_cycles - j, free_edges / ell);
      if (upper <= result.value) return;
      if (masks_meet(masks[j], used)) continue;
      mask_add(used, masks[j]);
      used_edges += cycles[j].length();
      chosen.push_back(j);
      rec(j + 1);
      chosen.pop_back();
      used_edges -= cycles[j].length();
      mask_remove(used, masks[j]);
    }
  };
  rec(0);
  for (int j : best_set) result.witness.push_back(cycles[j]);
  result.nodes = meter.nodes();
  return result;
}

HittingOracleResult oracle_min_hitting(const MultiGraph& g, int ell,
                                       const DetectorBudget& budget) {
  if (ell < 1) throw InputError("ell must be at least 1");
  BudgetMeter meter(budget);
  const auto cycles = sorted_long_cycles(g, ell, meter);
  const int cap = g.edge_capacity();
  std::vector<Mask> masks;
  masks.reserve(cycles.size());
  for (const Cycle& c : cycles) masks.push_back(mask_of(c.edges, cap));
  Mask chosen_mask((cap + 63) / 64, 0);
  std::vector<EdgeId> chosen;

  auto first_unhit = [&]() -> int {
    for (std::size_t i = 0; i < cycles.size(); ++i) {
      if (!masks_meet(masks[i], chosen_mask)) return static_cast<int>(i);
    }
    return -1;
  };
  // Edge-disjoint unhit cycles each need their own edge.
  auto disjoint_unhit = [&](int from) {
    Mask taken = chosen_mask;
    int count = 0;
    for (std::size_t i = from; i < cycles.size(); ++i) {
      if (masks_meet(masks[i], taken)) continue;
      mask_add(taken, masks[i]);
      ++count;
    }
    return count;
  };

  std::function<bool(int)> search = [&](int limit) -> bool {
    meter.charge();
    const int idx = first_unhit();
    if (idx < 0) return true;
    const int size = static_cast<int>(chosen.size());
    if (size == limit) return false;
    if (size + disjoint_unhit(idx) > limit) return false;
    std::vector<EdgeId> options = cycles[idx].edges;
    std::sort(options.begin(), options.end());
    for (EdgeId e : options) {
      chosen.push_back(e);
      chosen_mask[e / 64] |= std::uint64_t{1} << (e % 64);
      if (search(limit)) return true;
      chosen_mask[e / 64] &= ~(std::uint64_t{1} << (e % 64));
      chosen.pop_back();
    }
    return false;
  };

  HittingOracleResult result;
  for (int limit = 0;; ++limit) {
    if (search(limit)) break;
  }
  result.value = static_cast<int>(chosen.size());
  result.witness = EdgeSet::of(static_cast<std::size_t>(cap), chosen);
  result.nodes = meter.nodes();
  return result;
}

}  // namespace lcep
