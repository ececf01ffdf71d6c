#pragma once

// Hubs group bridges whose shadows share frame edges. Together with the
// U-ears of the frame they chop the graph into the pieces the hitting set is
// assembled from.

#include <vector>

#include "lcep/budget.hpp"
#include "lcep/frame.hpp"
#include "lcep/separation.hpp"

namespace lcep {

struct Hub {
  enum class Kind { vertex_hub, path_hub };
  Kind kind = Kind::path_hub;
  std::vector<int> bridges;  // indices into the bridge list, ascending
  EdgeSet edges;             // union of the bridges
  EdgeSet shadow;
  EdgeSet closure;           // edges plus shadow
  std::vector<VertexId> shadow_vertices;
  std::vector<VertexId> gates;
};

/// Shadow vertices with an incident host edge outside the closure.
std::vector<VertexId> gates_of(const MultiGraph& host, const Hub& h);

/// Hubs ordered by their smallest bridge. Shadows must be trees and, at high
/// level, closures must be free of long cycles.
std::vector<Hub> compute_hubs(const Frame& f, const std::vector<Bridge>& bridges,
                              AssertLevel level, BudgetMeter& meter);
std::vector<Hub> compute_hubs(const Frame& f, const std::vector<Bridge>& bridges,
                              AssertLevel level = AssertLevel::low);

/// A U-path of the frame, or a cycle of the frame through exactly one vertex
/// of U (then `vertices` starts and ends at that vertex and the first edge
/// has the smaller id of its two edges at it).
struct UEar {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
  bool is_cycle = false;

  VertexId u() const { return vertices.front(); }
  VertexId v() const { return vertices.back(); }
};

/// Edge partition of a frame that is not a cycle into U-ears.
std::vector<UEar> u_ears(const Frame& f);

/// An ear that keeps edges outside every vertex-hub closure, with its free
/// part u_P..v_P and its closure: the free part plus the path-hubs whose
/// shadow lies in it.
struct EarClosure {
  int ear = 0;
  std::vector<VertexId> free_vertices;  // u_P first, v_P last; equal for a free cycle
  std::vector<EdgeId> free_edges;
  EdgeSet closure;
  std::vector<int> path_hubs;

  VertexId u_p() const { return free_vertices.front(); }
  VertexId v_p() const { return free_vertices.back(); }
};

/// Gates of all vertex-hubs, ascending.
std::vector<VertexId> vertex_hub_gates(const std::vector<Hub>& hubs);

/// Free parts and ear closures. Also checks that vertex-hub closures and ear
/// closures partition the edges of the host.
std::vector<EarClosure> classify_ears(const Frame& f, const std::vector<UEar>& ears,
                                      const std::vector<Hub>& hubs);

/// Whether an ear closure carries k edge-disjoint u_P-v_P paths. A free part
/// that is a cycle through one vertex is tested with its last edge detached
/// onto a copy of that vertex, so the paths become closed walks at u_P.
CutResult thick_thin(const MultiGraph& host, const EarClosure& p, int k);

struct Piece {
  enum class Kind { thick_ear, hub_component };
  Kind kind = Kind::thick_ear;
  EdgeSet edges;
  std::vector<VertexId> boundary;  // piece vertices among gates and free-part ends
  int source = 0;                  // ear closure index or hub index
};

/// Closures of thick ears and the nontrivial components of each vertex-hub
/// closure minus `x`.
std::vector<Piece> build_pieces(const MultiGraph& host, const std::vector<Hub>& hubs,
                                const std::vector<EarClosure>& ears,
                                const std::vector<char>& thick, const EdgeSet& x);

}  // namespace lcep
