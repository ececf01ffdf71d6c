#include "lcep/generators.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <utility>

#include "lcep/cycles.hpp"
#include "lcep/errors.hpp"

namespace lcep {

int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

MultiGraph random_connected_graph(Rng& rng, int n, int m) {
  if (n < 1) throw InputError("need at least one vertex");
  const long max_m = static_cast<long>(n) * (n - 1) / 2;
  m = static_cast<int>(std::clamp<long>(m, n - 1, max_m));
  MultiGraph g(n);
  std::set<std::pair<int, int>> used;
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  for (int i = 1; i < n; ++i) {
    const int a = order[i];
    const int b = order[uniform_int(rng, 0, i - 1)];
    used.insert({std::min(a, b), std::max(a, b)});
  }
  while (static_cast<int>(used.size()) < m) {
    const int a = uniform_int(rng, 0, n - 1);
    const int b = uniform_int(rng, 0, n - 1);
    if (a != b) used.insert({std::min(a, b), std::max(a, b)});
  }
  // Insertion in sorted order keeps edge ids independent of set internals.
  for (const auto& [a, b] : used) g.add_edge(a, b);
  return g;
}

MultiGraph random_min_degree_multigraph(Rng& rng, int n, int min_degree, int min_edges,
                                        bool loops) {
  if (n < 1 || (n < 2 && !loops)) throw InputError("too few vertices");
  MultiGraph g(n);
  std::vector<int> deg(n, 0);
  auto add = [&](int a, int b) {
    g.add_edge(a, b);
    ++deg[a];
    ++deg[b];
  };
  for (int v = 0; v < n; ++v) {
    while (deg[v] < min_degree) {
      int w = uniform_int(rng, 0, n - 1);
      if (w == v && !loops) continue;
      add(v, w);
    }
  }
  while (g.edge_count() < min_edges) {
    const int a = uniform_int(rng, 0, n - 1);
    const int b = uniform_int(rng, 0, n - 1);
    if (a != b || loops) add(a, b);
  }
  return g;
}

MultiGraph random_two_connected(Rng& rng, int n, int chords) {
  if (n < 3) throw InputError("a 2-connected simple graph needs 3 vertices");
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::set<std::pair<int, int>> used;
  for (int i = 0; i < n; ++i) {
    const int a = order[i];
    const int b = order[(i + 1) % n];
    used.insert({std::min(a, b), std::max(a, b)});
  }
  const long max_m = static_cast<long>(n) * (n - 1) / 2;
  const long target = std::min<long>(max_m, n + static_cast<long>(chords));
  while (static_cast<long>(used.size()) < target) {
    const int a = uniform_int(rng, 0, n - 1);
    const int b = uniform_int(rng, 0, n - 1);
    if (a != b) used.insert({std::min(a, b), std::max(a, b)});
  }
  MultiGraph g(n);
  for (const auto& [a, b] : used) g.add_edge(a, b);
  return g;
}

namespace {

std::vector<int> bfs_distances(const MultiGraph& g, VertexId s) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::deque<VertexId> queue{s};
  dist[s] = 0;
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

}  // namespace

MultiGraph random_frame_instance(Rng& rng, int ell, int gadgets) {
  if (ell < 2) throw InputError("frame instances need ell >= 2");
  const int base_n = uniform_int(rng, 3, 5);
  const MultiGraph base = random_two_connected(rng, base_n, uniform_int(rng, 0, 3));
  const int sub = 6 * ell;

  std::vector<Edge> edges;
  int n = base_n;
  for (EdgeId e : base.edge_ids()) {
    VertexId prev = base.endpoints(e).u;
    for (int i = 1; i < sub; ++i) {
      edges.push_back({prev, n});
      prev = n++;
    }
    edges.push_back({prev, base.endpoints(e).v});
  }
  auto build = [&](const std::vector<Edge>& es, int order) {
    MultiGraph g(order);
    for (const Edge& e : es) g.add_edge(e.u, e.v);
    return g;
  };

  // Each ear x..y of length a closes a short cycle with a path of length d,
  // a + d < ell; kept only if no long cycle of length <= 10 ell appears.
  for (int t = 0; t < gadgets; ++t) {
    const MultiGraph g = build(edges, n);
    const VertexId x = uniform_int(rng, 0, n - 1);
    const std::vector<int> dist = bfs_distances(g, x);
    std::vector<VertexId> near;
    for (VertexId y = 0; y < n; ++y) {
      if (y != x && dist[y] >= 1 && dist[y] <= ell - 2) near.push_back(y);
    }
    if (near.empty()) continue;
    const VertexId y = near[uniform_int(rng, 0, static_cast<int>(near.size()) - 1)];
    const int a = uniform_int(rng, 1, ell - 1 - dist[y]);
    std::vector<Edge> trial = edges;
    int trial_n = n;
    VertexId prev = x;
    for (int i = 1; i < a; ++i) {
      trial.push_back({prev, trial_n});
      prev = trial_n++;
    }
    trial.push_back({prev, y});
    const MultiGraph h = build(trial, trial_n);
    if (find_long_cycle(h, LongCycleQuery::length_at_most(ell, 10 * ell))) continue;
    edges = std::move(trial);
    n = trial_n;
  }
  return build(edges, n);
}

}  // namespace lcep
