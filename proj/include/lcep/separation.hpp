#pragma once

// Edge connectivity: unit-capacity max-flow, Menger path systems and cuts,
// the k-edge-connectivity relation ~k, and k-perfect separation.

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "lcep/graph.hpp"

namespace lcep {

struct PathSystem {
  VertexId s = 0;
  VertexId t = 0;
  std::vector<Path> paths;
};

/// Either k edge-disjoint s-t paths or a minimum s-t cut of fewer than k edges.
struct CutResult {
  int flow = 0;  // number of paths found, or the cut size
  std::variant<PathSystem, EdgeSet> outcome;

  bool has_paths() const { return std::holds_alternative<PathSystem>(outcome); }
  const PathSystem& paths() const { return std::get<PathSystem>(outcome); }
  const EdgeSet& cut() const { return std::get<EdgeSet>(outcome); }
};

CutResult edge_disjoint_paths(const MultiGraph& g, VertexId s, VertexId t, int k);

/// Max-flow between two disjoint vertex sets, capped at `limit`.
int max_flow_between(const MultiGraph& g, std::span<const VertexId> sources,
                     std::span<const VertexId> sinks, int limit);

/// Minimum edge cut between two disjoint vertex sets, taken as the edges
/// leaving the residual-reachable side of `sources`. Returns nullopt when the
/// sets are joined by at least `limit` edge-disjoint paths.
std::optional<EdgeSet> min_cut_between(const MultiGraph& g, std::span<const VertexId> sources,
                                       std::span<const VertexId> sinks, int limit);

bool sim_k(const MultiGraph& g, VertexId u, VertexId v, int k);

/// Partition of `a` into ~k classes, each in input order, classes ordered by
/// first member.
std::vector<std::vector<VertexId>> sim_k_classes(const MultiGraph& g,
                                                 std::span<const VertexId> a, int k);

/// Edges whose removal leaves no path between distinct sets. The sets must
/// come from distinct ~k classes; at most (p-1)(k-1) edges.
EdgeSet separate_class_sets(const MultiGraph& g, const std::vector<std::vector<VertexId>>& sets,
                            int k);

/// Edges X, at most (|a|-1)(k-1) of them, such that two vertices of `a` in a
/// common component of g - X are k-edge-connected in g - X.
EdgeSet k_perfect_separation(const MultiGraph& g, std::span<const VertexId> a, int k);

}  // namespace lcep
