#include "lcep/pathtools.hpp"

#include <algorithm>
#include <limits>

#include "lcep/errors.hpp"

namespace lcep {

namespace {

std::vector<int> positions(const MultiGraph& g, const Path& p) {
  std::vector<int> pos(g.vertex_count(), -1);
  for (int i = 0; i < static_cast<int>(p.vertices.size()); ++i) pos[p.vertices[i]] = i;
  return pos;
}

// Vertices strictly inside a path, flagged.
std::vector<char> interior_flags(const MultiGraph& g, const Path& q) {
  std::vector<char> in(g.vertex_count(), 0);
  for (std::size_t i = 1; i + 1 < q.vertices.size(); ++i) in[q.vertices[i]] = 1;
  return in;
}

bool interiors_meet(const MultiGraph& g, const Path& a, const Path& b) {
  const auto fa = interior_flags(g, a);
  for (std::size_t i = 1; i + 1 < b.vertices.size(); ++i) {
    if (fa[b.vertices[i]]) return true;
  }
  return false;
}

Path slice(const Path& p, int from, int to) {
  Path out;
  if (from <= to) {
    out.vertices.assign(p.vertices.begin() + from, p.vertices.begin() + to + 1);
    out.edges.assign(p.edges.begin() + from, p.edges.begin() + to);
  } else {
    for (int i = from; i >= to; --i) out.vertices.push_back(p.vertices[i]);
    for (int i = from - 1; i >= to; --i) out.edges.push_back(p.edges[i]);
  }
  return out;
}

Path join(Path a, const Path& b) {
  a.vertices.insert(a.vertices.end(), b.vertices.begin() + 1, b.vertices.end());
  a.edges.insert(a.edges.end(), b.edges.begin(), b.edges.end());
  return a;
}

std::vector<EdgeId> base_edges_between(const Path& p, int a, int b) {
  if (a > b) std::swap(a, b);
  return {p.edges.begin() + a, p.edges.begin() + b};
}

// Oriented so that its source comes first along the base.
Path oriented_jump(const Path& q, const std::vector<int>& pos) {
  return pos[q.source()] <= pos[q.target()] ? q : q.reversed();
}

std::string tuple_defect(const MultiGraph& g, const ExtensionTuple& t, int ell, bool full) {
  const Path& p = t.base;
  if (p.vertices.empty() || !is_valid_path(g, p)) return "base is not a path";
  if (t.jumps.empty()) return "no jumps";
  const auto pos = positions(g, p);
  const EdgeSet base_edges = edge_set(g, p);
  const int r = static_cast<int>(t.jumps.size());
  std::vector<int> pu(r), pv(r);
  for (int i = 0; i < r; ++i) {
    const Path& q = t.jumps[i];
    const std::string name = "jump " + std::to_string(i);
    if (q.vertices.size() < 2 || !is_valid_path(g, q)) return name + " is not a path";
    const int a = pos[q.source()];
    const int b = pos[q.target()];
    if (a < 0 || b < 0 || a == b) return name + " does not join two base vertices";
    for (std::size_t j = 1; j + 1 < q.vertices.size(); ++j) {
      if (pos[q.vertices[j]] >= 0) return name + " touches the base internally";
    }
    if (q.length() == 1 && base_edges.contains(q.edges.front())) return name + " is a base edge";
    pu[i] = std::min(a, b);
    pv[i] = std::max(a, b);
    if (pv[i] - pu[i] + q.length() >= ell) return name + " closes a long cycle";
  }
  if (pu.front() != 0 || pv.back() != p.length()) {
    return "jumps do not start and end at the ends of the base";
  }
  for (int i = 0; i + 1 < r; ++i) {
    if (!(pu[i] < pu[i + 1] && pu[i + 1] < pv[i] && pv[i] < pv[i + 1])) {
      return "jumps " + std::to_string(i) + " and " + std::to_string(i + 1) + " do not interleave";
    }
  }
  for (int i = 0; i < r; ++i) {
    for (int j = i + (full ? 1 : 2); j < r; ++j) {
      if (interiors_meet(g, t.jumps[i], t.jumps[j])) {
        return "jumps " + std::to_string(i) + " and " + std::to_string(j) + " share a vertex";
      }
    }
  }
  if (full) {
    for (int i = 0; i + 2 < r; ++i) {
      if (pu[i + 2] < pv[i]) return "jump " + std::to_string(i + 1) + " is redundant";
    }
  }
  return {};
}

}  // namespace

std::string extension_defect(const MultiGraph& g, const ExtensionTuple& t, int ell, bool full) {
  return tuple_defect(g, t, ell, full);
}

ExtensionTuple reduce_extension(const MultiGraph& g, const ExtensionTuple& t, int ell) {
  const std::string defect = tuple_defect(g, t, ell, false);
  if (!defect.empty()) throw InputError("invalid extension tuple: " + defect);
  const auto pos = positions(g, t.base);
  ExtensionTuple out{t.base, {}};
  for (const Path& q : t.jumps) out.jumps.push_back(oriented_jump(q, pos));
  auto& jumps = out.jumps;

  // Merge the first pair of consecutive jumps sharing an inner vertex.
  for (std::size_t i = 0; i + 1 < jumps.size();) {
    if (!interiors_meet(g, jumps[i], jumps[i + 1])) {
      ++i;
      continue;
    }
    const Path& qi = jumps[i];
    const Path& qn = jumps[i + 1];
    std::vector<int> at(g.vertex_count(), -1);
    for (int j = 0; j < static_cast<int>(qn.vertices.size()); ++j) at[qn.vertices[j]] = j;
    int ix = 1;
    while (at[qi.vertices[ix]] < 0) ++ix;
    Path merged = join(slice(qi, 0, ix), slice(qn, at[qi.vertices[ix]], qn.length()));
    const int cycle_len = merged.length() + pos[merged.target()] - pos[merged.source()];
    check_claim(cycle_len < ell, "extension merge",
                "merged jump closes a cycle of length " + std::to_string(cycle_len));
    jumps[i] = std::move(merged);
    jumps.erase(jumps.begin() + static_cast<std::ptrdiff_t>(i) + 1);
    i = 0;
  }

  // Drop Q_{i+1} whenever Q_i and Q_{i+2} already interleave.
  for (std::size_t i = 0; i + 2 < jumps.size();) {
    if (pos[jumps[i + 2].source()] < pos[jumps[i].target()]) {
      jumps.erase(jumps.begin() + static_cast<std::ptrdiff_t>(i) + 1);
      i = 0;
    } else {
      ++i;
    }
  }
  const std::string left = tuple_defect(g, out, ell, true);
  check_claim(left.empty(), "extension reduction", left);
  return out;
}

Cycle extension_cycle(const MultiGraph& g, const ExtensionTuple& t, int i, int j) {
  const std::string defect = tuple_defect(g, t, std::numeric_limits<int>::max(), true);
  if (!defect.empty()) throw InputError("not an extension: " + defect);
  const int r = static_cast<int>(t.jumps.size());
  if (i < 0 || j >= r || i > j) throw InputError("jump indices out of range");
  const auto pos = positions(g, t.base);
  std::vector<Path> jumps;
  for (const Path& q : t.jumps) jumps.push_back(oriented_jump(q, pos));

  EdgeSet edges(g.edge_capacity());
  edges.insert_all(base_edges_between(t.base, pos[jumps[i].source()], pos[jumps[j].target()]));
  for (int s = i; s <= j; ++s) edges.insert_all(jumps[s].edges);
  for (int s = i + 1; s <= j; ++s) {
    for (EdgeId e : base_edges_between(t.base, pos[jumps[s].source()], pos[jumps[s - 1].target()])) {
      edges.erase(e);
    }
  }
  const auto ids = edges.ids();
  auto c = cycle_from_edges(g, ids);
  check_claim(c.has_value(), "extension cycle", "edge formula does not give a cycle");
  return *c;
}

Path shortcut_extension(const MultiGraph& g, const ExtensionTuple& t, int ell) {
  const ExtensionTuple reduced = reduce_extension(g, t, ell);
  const int r = static_cast<int>(reduced.jumps.size());
  const Cycle c = extension_cycle(g, reduced, 0, r - 1);
  check_claim(c.length() < ell, "extension shortcut",
              "extension cycle has length " + std::to_string(c.length()));

  // Walk the cycle from the start of the base out along the first jump.
  const VertexId from = t.base.source();
  const VertexId to = t.base.target();
  const MultiGraph cg = g.restricted_to(edge_set(g, c));
  Path out = Path::trivial(from);
  EdgeId e = reduced.jumps.front().edges.front();
  VertexId x = from;
  while (true) {
    x = g.other_end(e, x);
    out.edges.push_back(e);
    out.vertices.push_back(x);
    if (x == to) break;
    EdgeId next = -1;
    for (const Incidence& in : cg.incident(x)) {
      if (in.edge != e) next = in.edge;
    }
    e = next;
  }
  check_claim(out.length() < ell && is_valid_path(g, out), "extension shortcut",
              "shortcut path is not a short path");
  return out;
}

// ------------------------------------------------------------ cycle chains

namespace {

struct Segment {
  int lo = 0;  // position of u_i on the base
  int hi = 0;  // position of v_i
};

std::optional<Segment> base_segment(const MultiGraph& g, const Path& p,
                                    const std::vector<int>& pos, const Cycle& c) {
  int lo = -1;
  int hi = -1;
  int on_base = 0;
  for (VertexId v : c.vertices) {
    if (pos[v] < 0) continue;
    ++on_base;
    lo = lo < 0 ? pos[v] : std::min(lo, pos[v]);
    hi = std::max(hi, pos[v]);
  }
  if (lo < 0 || on_base != hi - lo + 1) return std::nullopt;
  const EdgeSet ce = edge_set(g, c);
  const EdgeSet want = edge_set(g, base_edges_between(p, lo, hi));
  EdgeSet shared = ce & edge_set(g, p);
  if (!(shared == want)) return std::nullopt;
  return Segment{lo, hi};
}

// The part of c off the base segment, walked from u_i to v_i. When
// u_i = v_i it is the whole cycle in its stored orientation.
Path off_base_arc(const MultiGraph& g, const Path& p, const Cycle& c, const Segment& s) {
  const int len = c.length();
  const VertexId u = p.vertices[s.lo];
  const VertexId v = p.vertices[s.hi];
  int start = 0;
  while (c.vertices[start] != u) ++start;
  const EdgeSet base = edge_set(g, p);
  const int dir = base.contains(c.edges[start]) && s.lo != s.hi ? -1 : 1;
  Path arc = Path::trivial(u);
  int idx = start;
  do {
    if (dir == 1) {
      arc.edges.push_back(c.edges[idx]);
      idx = (idx + 1) % len;
    } else {
      idx = (idx - 1 + len) % len;
      arc.edges.push_back(c.edges[idx]);
    }
    arc.vertices.push_back(c.vertices[idx]);
  } while (c.vertices[idx] != v);
  return arc;
}

int first_interior_hit(const Path& walk, const std::vector<char>& target, bool backward) {
  const int last = static_cast<int>(walk.vertices.size()) - 1;
  if (!backward) {
    for (int i = 1; i < last; ++i) {
      if (target[walk.vertices[i]]) return i;
    }
  } else {
    for (int i = last - 1; i >= 1; --i) {
      if (target[walk.vertices[i]]) return i;
    }
  }
  return -1;
}

int index_in(const Path& walk, VertexId v) {
  for (int i = 1; i + 1 < static_cast<int>(walk.vertices.size()); ++i) {
    if (walk.vertices[i] == v) return i;
  }
  return -1;
}

}  // namespace

std::string chain_defect(const MultiGraph& g, const Path& p, const std::vector<Cycle>& chain,
                         int ell) {
  if (p.vertices.empty() || !is_valid_path(g, p)) return "base is not a path";
  if (chain.empty()) return "empty chain";
  const auto pos = positions(g, p);
  std::vector<Segment> segs;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const std::string name = "cycle " + std::to_string(i);
    if (!is_valid_cycle(g, chain[i])) return name + " is not a cycle";
    if (chain[i].length() >= ell) return name + " is long";
    auto s = base_segment(g, p, pos, chain[i]);
    if (!s) return name + " does not meet the base in a segment";
    if (static_cast<int>(chain[i].vertices.size()) == s->hi - s->lo + 1) {
      return name + " has no vertex off the base";
    }
    segs.push_back(*s);
  }
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    const std::string pair = "cycles " + std::to_string(i) + " and " + std::to_string(i + 1);
    std::vector<char> off(g.vertex_count(), 0);
    for (VertexId v : chain[i].vertices) {
      if (pos[v] < 0) off[v] = 1;
    }
    bool meet = false;
    for (VertexId v : chain[i + 1].vertices) meet = meet || off[v];
    if (!meet) return pair + " do not meet off the base";
    if (segs[i].hi < segs[i + 1].lo || segs[i + 1].hi < segs[i].lo) {
      return pair + " have disjoint base segments";
    }
  }
  return {};
}

Cycle merge_short_cycles(const MultiGraph& g, const Path& p, const std::vector<Cycle>& chain,
                         int ell) {
  const std::string defect = chain_defect(g, p, chain, ell);
  if (!defect.empty()) throw InputError("invalid cycle chain: " + defect);
  const auto pos = positions(g, p);
  std::vector<Path> arcs;
  for (const Cycle& c : chain) arcs.push_back(off_base_arc(g, p, c, *base_segment(g, p, pos, c)));

  const int u1 = pos[arcs.front().source()];
  auto close = [&](const Path& arc) {
    std::vector<EdgeId> ids = arc.edges;
    const auto seg = base_edges_between(p, u1, pos[arc.target()]);
    ids.insert(ids.end(), seg.begin(), seg.end());
    auto c = cycle_from_edges(g, ids);
    check_claim(c.has_value() && c->length() == static_cast<int>(ids.size()), "cycle chain merge",
                "spliced edges do not form a cycle");
    check_claim(c->length() < ell, "cycle chain merge",
                "spliced cycle has length " + std::to_string(c->length()));
    return *c;
  };

  Path arc = arcs.front();
  Cycle current = chain.front();
  for (std::size_t r = 1; r < arcs.size(); ++r) {
    const Path& next = arcs[r];
    const int ix = first_interior_hit(arc, interior_flags(g, next), false);
    if (ix >= 0) {
      arc = join(slice(arc, 0, ix), slice(next, index_in(next, arc.vertices[ix]), next.length()));
    } else {
      const Path& prev = arcs[r - 1];
      const auto prev_inside = interior_flags(g, prev);
      const int iy = first_interior_hit(arc, prev_inside, false);
      const int iz = first_interior_hit(next, prev_inside, true);
      check_claim(iy >= 0 && iz >= 0, "cycle chain merge", "no route through the previous cycle");
      const Path bridge = slice(prev, index_in(prev, arc.vertices[iy]),
                                index_in(prev, next.vertices[iz]));
      arc = join(join(slice(arc, 0, iy), bridge), slice(next, iz, next.length()));
    }
    current = close(arc);
  }

  // C meets the base exactly in u_1 P v_r.
  const int lo = std::min(u1, pos[arcs.back().target()]);
  const int hi = std::max(u1, pos[arcs.back().target()]);
  const auto seg = base_segment(g, p, pos, current);
  check_claim(seg && seg->lo == lo && seg->hi == hi, "cycle chain merge",
              "merged cycle meets the base outside u_1 P v_r");
  return current;
}

}  // namespace lcep
