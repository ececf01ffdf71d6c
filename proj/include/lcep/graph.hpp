#pragma once

// Multigraph store and the traversal / decomposition primitives shared by
// every other module.
//
// Subgraphs are views: a MultiGraph keeps the full edge table of the graph it
// was derived from and only masks which edges are present. Edge ids therefore
// never shift, and anything computed on a subgraph can be reported in terms of
// the original graph.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lcep {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
};

struct Incidence {
  EdgeId edge = 0;
  VertexId other = 0;
};

/// Membership set over the edge ids of a host graph.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(std::size_t capacity) : bits_(capacity, 0) {}

  static EdgeSet of(std::size_t capacity, std::span<const EdgeId> ids);

  std::size_t capacity() const { return bits_.size(); }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool contains(EdgeId e) const {
    return e >= 0 && static_cast<std::size_t>(e) < bits_.size() && bits_[e] != 0;
  }
  void insert(EdgeId e);
  void erase(EdgeId e);
  void insert_all(std::span<const EdgeId> ids) {
    for (EdgeId e : ids) insert(e);
  }

  EdgeSet& operator|=(const EdgeSet& other);
  EdgeSet& operator-=(const EdgeSet& other);
  EdgeSet& operator&=(const EdgeSet& other);
  friend EdgeSet operator|(EdgeSet a, const EdgeSet& b) { return a |= b; }
  friend EdgeSet operator-(EdgeSet a, const EdgeSet& b) { return a -= b; }
  friend EdgeSet operator&(EdgeSet a, const EdgeSet& b) { return a &= b; }

  bool intersects(const EdgeSet& other) const;
  bool is_subset_of(const EdgeSet& other) const;

  /// Member ids in increasing order.
  std::vector<EdgeId> ids() const;

  friend bool operator==(const EdgeSet& a, const EdgeSet& b);

 private:
  void grow(std::size_t capacity);

  std::vector<char> bits_;
  std::size_t count_ = 0;
};

/// Undirected multigraph with stable edge ids. Parallel edges and loops are
/// allowed; a loop appears twice in its vertex's incidence list and so
/// contributes 2 to the degree.
class MultiGraph {
 public:
  MultiGraph() = default;
  explicit MultiGraph(int vertex_count);

  EdgeId add_edge(VertexId u, VertexId v);

  int vertex_count() const { return n_; }
  /// Ids of this graph live in [0, edge_capacity()); some may be absent.
  int edge_capacity() const { return static_cast<int>(edges_.size()); }
  int edge_count() const { return m_; }

  bool has_edge(EdgeId e) const {
    return e >= 0 && e < edge_capacity() && present_[e] != 0;
  }
  const Edge& endpoints(EdgeId e) const { return edges_[e]; }
  bool is_loop(EdgeId e) const { return edges_[e].u == edges_[e].v; }
  VertexId other_end(EdgeId e, VertexId v) const {
    return edges_[e].u == v ? edges_[e].v : edges_[e].u;
  }

  std::span<const Incidence> incident(VertexId v) const { return adj_[v]; }
  int degree(VertexId v) const { return static_cast<int>(adj_[v].size()); }
  /// Smallest degree over vertices that carry at least one edge (0 if none).
  int min_positive_degree() const;

  std::vector<EdgeId> edge_ids() const;
  EdgeSet edges() const;
  /// Vertices incident with at least one present edge.
  std::vector<VertexId> support() const;

  MultiGraph restricted_to(const EdgeSet& keep) const;
  MultiGraph without(const EdgeSet& drop) const;
  MultiGraph without(std::span<const EdgeId> drop) const;

 private:
  void rebuild_adjacency();

  int n_ = 0;
  int m_ = 0;
  std::vector<Edge> edges_;
  std::vector<char> present_;
  std::vector<std::vector<Incidence>> adj_;
};

/// A walk with no repeated vertex. `vertices` has one more entry than `edges`.
struct Path {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  static Path trivial(VertexId v) { return Path{{v}, {}}; }

  VertexId source() const { return vertices.front(); }
  VertexId target() const { return vertices.back(); }
  int length() const { return static_cast<int>(edges.size()); }
  Path reversed() const;
};

/// A closed walk with no repeated vertex. edges[i] joins vertices[i] and
/// vertices[(i + 1) % length()]. A loop is a cycle of length 1 and a pair of
/// parallel edges one of length 2.
struct Cycle {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  int length() const { return static_cast<int>(edges.size()); }
};

bool is_valid_path(const MultiGraph& g, const Path& p);
bool is_valid_cycle(const MultiGraph& g, const Cycle& c);

EdgeSet edge_set(const MultiGraph& g, std::span<const EdgeId> ids);
inline EdgeSet edge_set(const MultiGraph& g, const Cycle& c) { return edge_set(g, c.edges); }
inline EdgeSet edge_set(const MultiGraph& g, const Path& p) { return edge_set(g, p.edges); }

/// Rebuilds the cycle whose edge set is `ids`, or nullopt if those edges do
/// not form exactly one cycle of `g`. The walk starts at the lower endpoint of
/// the smallest id and leaves along it.
std::optional<Cycle> cycle_from_edges(const MultiGraph& g, std::span<const EdgeId> ids);

/// Some cycle of `g` found by depth-first search from the smallest edge id,
/// or nullopt if `g` is a forest.
std::optional<Cycle> find_any_cycle(const MultiGraph& g);

std::vector<std::vector<VertexId>> components(const MultiGraph& g);
/// Component label per vertex, labels dense from 0.
std::vector<int> component_labels(const MultiGraph& g);

/// Biconnected components as edge sets. Loops form singleton blocks.
std::vector<EdgeSet> blocks(const MultiGraph& g);

/// For each edge of a suppressed graph, the path of the source graph it stands for.
using SuppressionMap = std::vector<Path>;

struct Suppression {
  MultiGraph reduced;
  SuppressionMap expansion;
};

/// Repeatedly deletes degree-1 vertices (with their edge) and suppresses
/// degree-2 vertices. A degree-2 vertex whose only edge is a loop loses the
/// loop. The result has no vertex of degree 1 or 2; vertex ids are kept,
/// edge ids are fresh and index `expansion`.
Suppression suppress_degree2(const MultiGraph& g);

Cycle expand_cycle(const Cycle& reduced_cycle, const SuppressionMap& map);

/// Edge-list text: first non-comment line "n m", then m lines "u v".
MultiGraph parse_graph(std::string_view text);
MultiGraph read_graph_file(const std::string& path);
/// Writes present edges in id order. Absent ids are skipped, so a view is
/// renumbered densely on output.
std::string write_graph(const MultiGraph& g, std::string_view header_comment = {});

}  // namespace lcep
