#include "lcep/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <fstream>
#include <numeric>
#include <sstream>

#include "lcep/errors.hpp"

namespace lcep {

// ---------------------------------------------------------------- EdgeSet

EdgeSet EdgeSet::of(std::size_t capacity, std::span<const EdgeId> ids) {
  EdgeSet s(capacity);
  s.insert_all(ids);
  return s;
}

void EdgeSet::grow(std::size_t capacity) {
  if (bits_.size() < capacity) bits_.resize(capacity, 0);
}

void EdgeSet::insert(EdgeId e) {
  if (e < 0) throw InputError("negative edge id");
  grow(static_cast<std::size_t>(e) + 1);
  if (!bits_[e]) {
    bits_[e] = 1;
    ++count_;
  }
}

void EdgeSet::erase(EdgeId e) {
  if (contains(e)) {
    bits_[e] = 0;
    --count_;
  }
}

EdgeSet& EdgeSet::operator|=(const EdgeSet& other) {
  grow(other.bits_.size());
  for (std::size_t i = 0; i < other.bits_.size(); ++i) {
    if (other.bits_[i] && !bits_[i]) {
      bits_[i] = 1;
      ++count_;
    }
  }
  return *this;
}

EdgeSet& EdgeSet::operator-=(const EdgeSet& other) {
  const std::size_t lim = std::min(bits_.size(), other.bits_.size());
  for (std::size_t i = 0; i < lim; ++i) {
    if (other.bits_[i] && bits_[i]) {
      bits_[i] = 0;
      --count_;
    }
  }
  return *this;
}

EdgeSet& EdgeSet::operator&=(const EdgeSet& other) {
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] && !other.contains(static_cast<EdgeId>(i))) {
      bits_[i] = 0;
      --count_;
    }
  }
  return *this;
}

bool EdgeSet::intersects(const EdgeSet& other) const {
  const std::size_t lim = std::min(bits_.size(), other.bits_.size());
  for (std::size_t i = 0; i < lim; ++i) {
    if (bits_[i] && other.bits_[i]) return true;
  }
  return false;
}

bool EdgeSet::is_subset_of(const EdgeSet& other) const {
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] && !other.contains(static_cast<EdgeId>(i))) return false;
  }
  return true;
}

std::vector<EdgeId> EdgeSet::ids() const {
  std::vector<EdgeId> out;
  out.reserve(count_);
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) out.push_back(static_cast<EdgeId>(i));
  }
  return out;
}

bool operator==(const EdgeSet& a, const EdgeSet& b) {
  if (a.count_ != b.count_) return false;
  return a.is_subset_of(b);
}

// ------------------------------------------------------------- MultiGraph

MultiGraph::MultiGraph(int vertex_count) : n_(vertex_count), adj_(vertex_count) {
  if (vertex_count < 0) throw InputError("negative vertex count");
}

EdgeId MultiGraph::add_edge(VertexId u, VertexId v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw InputError("edge endpoint out of range: " + std::to_string(u) + " " +
                     std::to_string(v));
  }
  const auto id = static_cast<EdgeId>(edges_.size());
  edges_.push_back({u, v});
  present_.push_back(1);
  adj_[u].push_back({id, v});
  adj_[v].push_back({id, u});
  ++m_;
  return id;
}

int MultiGraph::min_positive_degree() const {
  int best = 0;
  for (const auto& a : adj_) {
    const int d = static_cast<int>(a.size());
    if (d > 0 && (best == 0 || d < best)) best = d;
  }
  return best;
}

std::vector<EdgeId> MultiGraph::edge_ids() const {
  std::vector<EdgeId> out;
  out.reserve(m_);
  for (EdgeId e = 0; e < edge_capacity(); ++e) {
    if (present_[e]) out.push_back(e);
  }
  return out;
}

EdgeSet MultiGraph::edges() const {
  EdgeSet s(edges_.size());
  for (EdgeId e = 0; e < edge_capacity(); ++e) {
    if (present_[e]) s.insert(e);
  }
  return s;
}

std::vector<VertexId> MultiGraph::support() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < n_; ++v) {
    if (!adj_[v].empty()) out.push_back(v);
  }
  return out;
}

void MultiGraph::rebuild_adjacency() {
  for (auto& a : adj_) a.clear();
  m_ = 0;
  for (EdgeId e = 0; e < edge_capacity(); ++e) {
    if (!present_[e]) continue;
    adj_[edges_[e].u].push_back({e, edges_[e].v});
    adj_[edges_[e].v].push_back({e, edges_[e].u});
    ++m_;
  }
}

MultiGraph MultiGraph::restricted_to(const EdgeSet& keep) const {
  MultiGraph h = *this;
  for (EdgeId e = 0; e < edge_capacity(); ++e) {
    if (h.present_[e] && !keep.contains(e)) h.present_[e] = 0;
  }
  h.rebuild_adjacency();
  return h;
}

MultiGraph MultiGraph::without(const EdgeSet& drop) const {
  MultiGraph h = *this;
  for (EdgeId e = 0; e < edge_capacity(); ++e) {
    if (drop.contains(e)) h.present_[e] = 0;
  }
  h.rebuild_adjacency();
  return h;
}

MultiGraph MultiGraph::without(std::span<const EdgeId> drop) const {
  return without(EdgeSet::of(edges_.size(), drop));
}

// ---------------------------------------------------------- paths, cycles

Path Path::reversed() const {
  Path r{{vertices.rbegin(), vertices.rend()}, {edges.rbegin(), edges.rend()}};
  return r;
}

bool is_valid_path(const MultiGraph& g, const Path& p) {
  if (p.vertices.size() != p.edges.size() + 1) return false;
  std::vector<char> seen(g.vertex_count(), 0);
  for (VertexId v : p.vertices) {
    if (v < 0 || v >= g.vertex_count() || seen[v]) return false;
    seen[v] = 1;
  }
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    const EdgeId e = p.edges[i];
    if (!g.has_edge(e)) return false;
    const Edge& ed = g.endpoints(e);
    const VertexId a = p.vertices[i];
    const VertexId b = p.vertices[i + 1];
    if (!((ed.u == a && ed.v == b) || (ed.u == b && ed.v == a))) return false;
  }
  return true;
}

bool is_valid_cycle(const MultiGraph& g, const Cycle& c) {
  const int len = c.length();
  if (len < 1 || static_cast<int>(c.vertices.size()) != len) return false;
  std::vector<char> seen(g.vertex_count(), 0);
  for (VertexId v : c.vertices) {
    if (v < 0 || v >= g.vertex_count() || seen[v]) return false;
    seen[v] = 1;
  }
  std::vector<EdgeId> sorted = c.edges;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (int i = 0; i < len; ++i) {
    const EdgeId e = c.edges[i];
    if (!g.has_edge(e)) return false;
    const Edge& ed = g.endpoints(e);
    const VertexId a = c.vertices[i];
    const VertexId b = c.vertices[(i + 1) % len];
    if (!((ed.u == a && ed.v == b) || (ed.u == b && ed.v == a))) return false;
  }
  return true;
}

EdgeSet edge_set(const MultiGraph& g, std::span<const EdgeId> ids) {
  return EdgeSet::of(static_cast<std::size_t>(g.edge_capacity()), ids);
}

std::optional<Cycle> cycle_from_edges(const MultiGraph& g, std::span<const EdgeId> ids) {
  if (ids.empty()) return std::nullopt;
  std::vector<EdgeId> sorted(ids.begin(), ids.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;
  std::vector<std::vector<EdgeId>> at(g.vertex_count());
  for (EdgeId e : sorted) {
    if (!g.has_edge(e)) return std::nullopt;
    at[g.endpoints(e).u].push_back(e);
    at[g.endpoints(e).v].push_back(e);
  }
  for (const auto& a : at) {
    if (!a.empty() && a.size() != 2) return std::nullopt;
  }
  const EdgeId first = sorted.front();
  const Edge& fe = g.endpoints(first);
  const VertexId start = std::min(fe.u, fe.v);
  Cycle c;
  c.vertices.push_back(start);
  c.edges.push_back(first);
  VertexId cur = g.other_end(first, start);
  EdgeId prev = first;
  while (cur != start) {
    const auto& a = at[cur];
    const EdgeId next = a[0] == prev ? a[1] : a[0];
    c.vertices.push_back(cur);
    c.edges.push_back(next);
    cur = g.other_end(next, cur);
    prev = next;
    if (c.edges.size() > sorted.size()) return std::nullopt;
  }
  if (c.edges.size() != sorted.size()) return std::nullopt;
  return c;
}

std::optional<Cycle> find_any_cycle(const MultiGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> depth(n, -1);
  std::vector<EdgeId> parent_edge(n, -1);
  std::vector<VertexId> order;
  const auto ids = g.edge_ids();
  if (ids.empty()) return std::nullopt;
  {
    const Edge& e = g.endpoints(ids.front());
    order.push_back(std::min(e.u, e.v));
  }
  for (VertexId v = 0; v < n; ++v) order.push_back(v);

  struct Frame {
    VertexId v;
    std::size_t next;
  };
  for (VertexId root : order) {
    if (depth[root] != -1 || g.degree(root) == 0) continue;
    std::vector<Frame> stack{{root, 0}};
    std::vector<VertexId> path{root};
    depth[root] = 0;
    while (!stack.empty()) {
      Frame& fr = stack.back();
      const auto inc = g.incident(fr.v);
      if (fr.next == inc.size()) {
        depth[fr.v] = -2;  // finished
        stack.pop_back();
        path.pop_back();
        continue;
      }
      const Incidence in = inc[fr.next++];
      if (in.edge == parent_edge[fr.v]) continue;
      if (depth[in.other] >= 0) {
        // in.other is on the current DFS path: close the cycle.
        Cycle c;
        const int from = depth[in.other];
        for (std::size_t i = from; i < path.size(); ++i) {
          c.vertices.push_back(path[i]);
          if (i + 1 < path.size()) c.edges.push_back(parent_edge[path[i + 1]]);
        }
        c.edges.push_back(in.edge);
        return c;
      }
      if (depth[in.other] == -1) {
        depth[in.other] = static_cast<int>(path.size());
        parent_edge[in.other] = in.edge;
        path.push_back(in.other);
        stack.push_back({in.other, 0});
      }
    }
  }
  return std::nullopt;
}

// ------------------------------------------------------------ components

std::vector<int> component_labels(const MultiGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> label(n, -1);
  int next = 0;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < n; ++s) {
    if (label[s] != -1) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (const Incidence& in : g.incident(v)) {
        if (label[in.other] == -1) {
          label[in.other] = next;
          stack.push_back(in.other);
        }
      }
    }
    ++next;
  }
  return label;
}

std::vector<std::vector<VertexId>> components(const MultiGraph& g) {
  const auto label = component_labels(g);
  const int count = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
  std::vector<std::vector<VertexId>> out(count);
  for (VertexId v = 0; v < g.vertex_count(); ++v) out[label[v]].push_back(v);
  return out;
}

std::vector<EdgeSet> blocks(const MultiGraph& g) {
  const int n = g.vertex_count();
  const auto cap = static_cast<std::size_t>(g.edge_capacity());
  std::vector<int> disc(n, -1);
  std::vector<int> low(n, 0);
  std::vector<char> loop_seen(cap, 0);
  std::vector<EdgeId> estack;
  std::vector<EdgeSet> out;
  int timer = 0;

  struct Frame {
    VertexId v;
    EdgeId parent_edge;
    std::size_t next;
  };

  for (VertexId root = 0; root < n; ++root) {
    if (disc[root] != -1 || g.degree(root) == 0) continue;
    disc[root] = low[root] = timer++;
    std::vector<Frame> stack{{root, -1, 0}};
    while (!stack.empty()) {
      Frame& fr = stack.back();
      const VertexId v = fr.v;
      const auto inc = g.incident(v);
      if (fr.next < inc.size()) {
        const Incidence in = inc[fr.next++];
        const EdgeId e = in.edge;
        if (e == fr.parent_edge) continue;
        if (g.is_loop(e)) {
          if (!loop_seen[e]) {
            loop_seen[e] = 1;
            out.push_back(EdgeSet::of(cap, std::span<const EdgeId>(&e, 1)));
          }
          continue;
        }
        const VertexId w = in.other;
        if (disc[w] == -1) {
          estack.push_back(e);
          disc[w] = low[w] = timer++;
          stack.push_back({w, e, 0});
        } else if (disc[w] < disc[v]) {
          estack.push_back(e);
          low[v] = std::min(low[v], disc[w]);
        }
        continue;
      }
      const EdgeId pe = fr.parent_edge;
      stack.pop_back();
      if (stack.empty()) break;
      const VertexId p = stack.back().v;
      low[p] = std::min(low[p], low[v]);
      if (low[v] >= disc[p]) {
        EdgeSet b(cap);
        while (true) {
          const EdgeId top = estack.back();
          estack.pop_back();
          b.insert(top);
          if (top == pe) break;
        }
        out.push_back(std::move(b));
      }
    }
  }
  return out;
}

// ------------------------------------------------------------ suppression

namespace {

struct WorkEdge {
  VertexId u;
  VertexId v;
  Path path;  // oriented from u to v
  bool alive = true;
};

struct SuppressionWork {
  std::vector<WorkEdge> edges;
  std::vector<std::vector<int>> inc;  // work-edge indices; loops listed twice

  void remove_incidence(VertexId v, int idx) {
    auto& a = inc[v];
    a.erase(std::find(a.begin(), a.end(), idx));
  }

  void kill(int idx) {
    WorkEdge& e = edges[idx];
    e.alive = false;
    remove_incidence(e.u, idx);
    remove_incidence(e.v, idx);
  }

  int add(VertexId u, VertexId v, Path p) {
    const int idx = static_cast<int>(edges.size());
    edges.push_back({u, v, std::move(p), true});
    inc[u].push_back(idx);
    inc[v].push_back(idx);
    return idx;
  }

  // Path of edge idx oriented to start at `from`.
  Path oriented_from(int idx, VertexId from) const {
    const WorkEdge& e = edges[idx];
    return e.u == from ? e.path : e.path.reversed();
  }
};

}  // namespace

Suppression suppress_degree2(const MultiGraph& g) {
  const int n = g.vertex_count();
  SuppressionWork w;
  w.inc.resize(n);
  for (EdgeId e : g.edge_ids()) {
    const Edge& ed = g.endpoints(e);
    w.add(ed.u, ed.v, Path{{ed.u, ed.v}, {e}});
  }

  std::deque<VertexId> queue;
  std::vector<char> queued(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    queue.push_back(v);
    queued[v] = 1;
  }
  auto enqueue = [&](VertexId v) {
    if (!queued[v]) {
      queued[v] = 1;
      queue.push_back(v);
    }
  };

  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    queued[v] = 0;
    const auto& a = w.inc[v];
    if (a.size() == 1) {
      const int idx = a[0];
      const VertexId other = w.edges[idx].u == v ? w.edges[idx].v : w.edges[idx].u;
      w.kill(idx);
      enqueue(other);
    } else if (a.size() == 2) {
      const int i1 = a[0];
      const int i2 = a[1];
      if (i1 == i2) {
        // Only a loop is left at v.
        w.kill(i1);
        continue;
      }
      // Merge x - v - y into one edge x - y.
      const Path left = w.oriented_from(i1, v).reversed();  // x ... v
      const Path right = w.oriented_from(i2, v);            // v ... y
      const VertexId x = left.source();
      const VertexId y = right.target();
      Path merged = left;
      merged.vertices.insert(merged.vertices.end(), right.vertices.begin() + 1,
                             right.vertices.end());
      merged.edges.insert(merged.edges.end(), right.edges.begin(), right.edges.end());
      w.kill(i1);
      w.kill(i2);
      w.add(x, y, std::move(merged));
      enqueue(x);
      enqueue(y);
    }
  }

  Suppression out{MultiGraph(n), {}};
  for (const WorkEdge& e : w.edges) {
    if (!e.alive) continue;
    out.reduced.add_edge(e.u, e.v);
    out.expansion.push_back(e.path);
  }
  return out;
}

Cycle expand_cycle(const Cycle& reduced_cycle, const SuppressionMap& map) {
  Cycle out;
  const int len = reduced_cycle.length();
  for (int i = 0; i < len; ++i) {
    const VertexId from = reduced_cycle.vertices[i];
    Path p = map.at(reduced_cycle.edges[i]);
    if (p.source() != from) p = p.reversed();
    out.vertices.insert(out.vertices.end(), p.vertices.begin(), p.vertices.end() - 1);
    out.edges.insert(out.edges.end(), p.edges.begin(), p.edges.end());
  }
  return out;
}

// ---------------------------------------------------------------- text io

namespace {

bool parse_int(std::string_view tok, long long& out) {
  const auto* first = tok.data();
  const auto* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

MultiGraph parse_graph(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool have_header = false;
  long long n = 0;
  long long m = 0;
  MultiGraph g;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tok = tokens(line);
    if (tok.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (tok.size() != 2) throw ParseError(line_no, "expected two integers");
    long long a = 0;
    long long b = 0;
    if (!parse_int(tok[0], a) || !parse_int(tok[1], b)) {
      throw ParseError(line_no, "expected two integers");
    }
    if (!have_header) {
      if (a < 0 || b < 0) throw ParseError(line_no, "negative count");
      if (a > 50'000'000 || b > 50'000'000) throw ParseError(line_no, "count too large");
      n = a;
      m = b;
      g = MultiGraph(static_cast<int>(n));
      have_header = true;
    } else {
      if (g.edge_capacity() >= m) throw ParseError(line_no, "more edge lines than declared");
      if (a < 0 || b < 0 || a >= n || b >= n) {
        throw ParseError(line_no, "endpoint out of range");
      }
      g.add_edge(static_cast<VertexId>(a), static_cast<VertexId>(b));
    }
    if (end == text.size()) break;
  }
  if (!have_header) throw ParseError(line_no, "missing 'n m' header");
  if (g.edge_capacity() != m) {
    throw ParseError(line_no, "expected " + std::to_string(m) + " edge lines, found " +
                                  std::to_string(g.edge_capacity()));
  }
  return g;
}

MultiGraph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_graph(ss.str());
}

std::string write_graph(const MultiGraph& g, std::string_view header_comment) {
  std::ostringstream out;
  if (!header_comment.empty()) {
    std::size_t pos = 0;
    while (pos < header_comment.size()) {
      std::size_t end = header_comment.find('\n', pos);
      if (end == std::string_view::npos) end = header_comment.size();
      out << "# " << header_comment.substr(pos, end - pos) << '\n';
      pos = end + 1;
    }
  }
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (EdgeId e : g.edge_ids()) {
    out << g.endpoints(e).u << ' ' << g.endpoints(e).v << '\n';
  }
  return out.str();
}

}  // namespace lcep
