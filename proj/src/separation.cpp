#include "lcep/separation.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "lcep/errors.hpp"

namespace lcep {

namespace {

// Unit-capacity flow on an undirected multigraph. flow_[e] is +1 when one
// unit runs from endpoints(e).u to endpoints(e).v, -1 for the reverse.
class UnitFlow {
 public:
  UnitFlow(const MultiGraph& g, std::span<const VertexId> sources,
           std::span<const VertexId> sinks)
      : g_(g), flow_(g.edge_capacity(), 0), is_source_(g.vertex_count(), 0),
        is_sink_(g.vertex_count(), 0) {
    for (VertexId v : sources) check_vertex(v), is_source_[v] = 1;
    for (VertexId v : sinks) {
      check_vertex(v);
      if (is_source_[v]) throw InputError("flow terminals overlap at vertex " + std::to_string(v));
      is_sink_[v] = 1;
    }
    sources_.assign(sources.begin(), sources.end());
  }

  int run(int limit) {
    while (value_ < limit && augment()) ++value_;
    return value_;
  }

  int value() const { return value_; }

  // Residual-reachable vertices from the sources; valid after run() stalls.
  std::vector<char> reachable() const {
    std::vector<char> seen(g_.vertex_count(), 0);
    std::deque<VertexId> queue;
    for (VertexId s : sources_) {
      if (!seen[s]) seen[s] = 1, queue.push_back(s);
    }
    while (!queue.empty()) {
      const VertexId x = queue.front();
      queue.pop_front();
      for (const Incidence& in : g_.incident(x)) {
        if (g_.is_loop(in.edge) || seen[in.other] || !residual(in.edge, x)) continue;
        seen[in.other] = 1;
        queue.push_back(in.other);
      }
    }
    return seen;
  }

  // Units leaving x along e.
  bool carries(EdgeId e, VertexId x) const {
    return g_.endpoints(e).u == x ? flow_[e] == 1 : flow_[e] == -1;
  }

 private:
  void check_vertex(VertexId v) const {
    if (v < 0 || v >= g_.vertex_count()) {
      throw InputError("vertex " + std::to_string(v) + " out of range");
    }
  }

  bool residual(EdgeId e, VertexId from) const {
    return g_.endpoints(e).u == from ? flow_[e] < 1 : flow_[e] > -1;
  }

  bool augment() {
    const int n = g_.vertex_count();
    std::vector<EdgeId> via(n, -1);
    std::vector<char> seen(n, 0);
    std::deque<VertexId> queue;
    for (VertexId s : sources_) {
      if (!seen[s]) seen[s] = 1, queue.push_back(s);
    }
    while (!queue.empty()) {
      const VertexId x = queue.front();
      queue.pop_front();
      for (const Incidence& in : g_.incident(x)) {
        const VertexId y = in.other;
        if (g_.is_loop(in.edge) || seen[y] || !residual(in.edge, x)) continue;
        seen[y] = 1;
        via[y] = in.edge;
        if (is_sink_[y]) {
          for (VertexId v = y; !is_source_[v];) {
            const EdgeId e = via[v];
            const VertexId u = g_.other_end(e, v);
            flow_[e] += g_.endpoints(e).u == u ? 1 : -1;
            v = u;
          }
          return true;
        }
        queue.push_back(y);
      }
    }
    return false;
  }

  const MultiGraph& g_;
  std::vector<int> flow_;
  std::vector<char> is_source_;
  std::vector<char> is_sink_;
  std::vector<VertexId> sources_;
  int value_ = 0;
};

EdgeSet cut_edges(const MultiGraph& g, const std::vector<char>& side) {
  EdgeSet cut(g.edge_capacity());
  for (EdgeId e : g.edge_ids()) {
    const Edge& ed = g.endpoints(e);
    if (side[ed.u] != side[ed.v]) cut.insert(e);
  }
  return cut;
}

// Greedy walk decomposition of an s-t flow, each walk pruned to a path.
std::vector<Path> decompose(const MultiGraph& g, const UnitFlow& flow, VertexId s, VertexId t,
                            int count) {
  std::vector<char> used(g.edge_capacity(), 0);
  std::vector<Path> out;
  for (int i = 0; i < count; ++i) {
    Path walk = Path::trivial(s);
    VertexId x = s;
    while (x != t) {
      bool moved = false;
      for (const Incidence& in : g.incident(x)) {
        if (used[in.edge] || g.is_loop(in.edge) || !flow.carries(in.edge, x)) continue;
        used[in.edge] = 1;
        walk.edges.push_back(in.edge);
        walk.vertices.push_back(in.other);
        x = in.other;
        moved = true;
        break;
      }
      check_claim(moved, "flow conservation", "flow walk stuck at vertex " + std::to_string(x));
    }
    // Cut out closed sub-walks so every vertex appears once.
    Path p = Path::trivial(s);
    std::vector<int> pos(g.vertex_count(), -1);
    pos[s] = 0;
    for (std::size_t j = 0; j < walk.edges.size(); ++j) {
      const VertexId v = walk.vertices[j + 1];
      if (pos[v] >= 0) {
        const int keep = pos[v];
        for (std::size_t r = keep + 1; r < p.vertices.size(); ++r) pos[p.vertices[r]] = -1;
        p.vertices.resize(keep + 1);
        p.edges.resize(keep);
        continue;
      }
      p.edges.push_back(walk.edges[j]);
      p.vertices.push_back(v);
      pos[v] = static_cast<int>(p.vertices.size()) - 1;
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

CutResult edge_disjoint_paths(const MultiGraph& g, VertexId s, VertexId t, int k) {
  if (k < 1) throw InputError("k must be at least 1");
  if (s == t) throw InputError("edge_disjoint_paths needs distinct endpoints");
  const VertexId src[] = {s};
  const VertexId dst[] = {t};
  UnitFlow flow(g, src, dst);
  const int value = flow.run(k);
  CutResult result;
  result.flow = value;
  if (value >= k) {
    result.outcome = PathSystem{s, t, decompose(g, flow, s, t, k)};
  } else {
    result.outcome = cut_edges(g, flow.reachable());
  }
  return result;
}

int max_flow_between(const MultiGraph& g, std::span<const VertexId> sources,
                     std::span<const VertexId> sinks, int limit) {
  UnitFlow flow(g, sources, sinks);
  return flow.run(limit);
}

std::optional<EdgeSet> min_cut_between(const MultiGraph& g, std::span<const VertexId> sources,
                                       std::span<const VertexId> sinks, int limit) {
  UnitFlow flow(g, sources, sinks);
  if (flow.run(limit) >= limit) return std::nullopt;
  return cut_edges(g, flow.reachable());
}

bool sim_k(const MultiGraph& g, VertexId u, VertexId v, int k) {
  if (u == v) return true;
  const VertexId src[] = {u};
  const VertexId dst[] = {v};
  return max_flow_between(g, src, dst, k) >= k;
}

std::vector<std::vector<VertexId>> sim_k_classes(const MultiGraph& g,
                                                 std::span<const VertexId> a, int k) {
  std::vector<std::vector<VertexId>> classes;
  for (VertexId v : a) {
    bool placed = false;
    for (auto& cls : classes) {
      if (sim_k(g, cls.front(), v, k)) {
        if (std::find(cls.begin(), cls.end(), v) == cls.end()) cls.push_back(v);
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back({v});
  }
  return classes;
}

namespace {

struct DisjointSets {
  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> parent;
};

void separate_rec(const MultiGraph& view, const std::vector<std::vector<VertexId>>& sets, int k,
                  EdgeSet& out) {
  if (sets.size() <= 1) return;
  auto cut = min_cut_between(view, sets[0], sets[1], k);
  if (!cut) throw InputError("two separated sets are k-edge-connected");
  out |= *cut;
  const MultiGraph rest = view.without(*cut);
  const std::vector<int> label = component_labels(rest);
  const int comps = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;

  // Each set acts as one contracted vertex, so its components merge.
  DisjointSets merged(comps);
  for (const auto& set : sets) {
    for (VertexId v : set) merged.unite(label[set.front()], label[v]);
  }
  std::vector<int> group_of(sets.size());
  std::vector<int> roots;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    group_of[i] = merged.find(label[sets[i].front()]);
    if (std::find(roots.begin(), roots.end(), group_of[i]) == roots.end()) {
      roots.push_back(group_of[i]);
    }
  }
  check_claim(roots.size() >= 2, "class separation", "cut left the first two sets joined");
  for (int root : roots) {
    std::vector<std::vector<VertexId>> sub;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if (group_of[i] == root) sub.push_back(sets[i]);
    }
    if (sub.size() <= 1) continue;
    EdgeSet keep(rest.edge_capacity());
    for (EdgeId e : rest.edge_ids()) {
      if (merged.find(label[rest.endpoints(e).u]) == root) keep.insert(e);
    }
    separate_rec(rest.restricted_to(keep), sub, k, out);
  }
}

void perfect_rec(const MultiGraph& view, const std::vector<VertexId>& a, int k, EdgeSet& out) {
  const auto classes = sim_k_classes(view, a, k);
  if (classes.size() <= 1) return;
  EdgeSet x(view.edge_capacity());
  separate_rec(view, classes, k, x);
  out |= x;
  const MultiGraph rest = view.without(x);
  const std::vector<int> label = component_labels(rest);
  for (const auto& cls : classes) {
    if (cls.size() <= 1) continue;
    std::vector<char> mine(label.size(), 0);
    for (VertexId v : cls) mine[label[v]] = 1;
    EdgeSet keep(rest.edge_capacity());
    for (EdgeId e : rest.edge_ids()) {
      if (mine[label[rest.endpoints(e).u]]) keep.insert(e);
    }
    perfect_rec(rest.restricted_to(keep), cls, k, out);
  }
}

}  // namespace

EdgeSet separate_class_sets(const MultiGraph& g, const std::vector<std::vector<VertexId>>& sets,
                            int k) {
  if (k < 1) throw InputError("k must be at least 1");
  for (const auto& s : sets) {
    if (s.empty()) throw InputError("class sets must be nonempty");
    for (VertexId v : s) {
      if (v < 0 || v >= g.vertex_count()) throw InputError("vertex out of range");
    }
  }
  EdgeSet out(g.edge_capacity());
  separate_rec(g, sets, k, out);
  return out;
}

EdgeSet k_perfect_separation(const MultiGraph& g, std::span<const VertexId> a, int k) {
  if (k < 1) throw InputError("k must be at least 1");
  std::vector<VertexId> distinct;
  for (VertexId v : a) {
    if (v < 0 || v >= g.vertex_count()) throw InputError("vertex out of range");
    if (std::find(distinct.begin(), distinct.end(), v) == distinct.end()) distinct.push_back(v);
  }
  EdgeSet out(g.edge_capacity());
  perfect_rec(g, distinct, k, out);
  return out;
}

}  // namespace lcep
