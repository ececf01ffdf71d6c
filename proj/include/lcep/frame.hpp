#pragma once

// Frames: subgraphs of minimum degree 2 in which every cycle is long, grown
// greedily by F-path additions, plus the shadows and bridges of a frame.

#include <optional>
#include <vector>

#include "lcep/budget.hpp"
#include "lcep/errors.hpp"
#include "lcep/graph.hpp"

namespace lcep {

class Frame {
 public:
  Frame(MultiGraph host, EdgeSet edges, int ell);

  const MultiGraph& host() const { return host_; }
  const EdgeSet& edges() const { return edges_; }
  const MultiGraph& graph() const { return view_; }
  int ell() const { return ell_; }

  int degree(VertexId v) const { return view_.degree(v); }
  bool has_vertex(VertexId v) const { return view_.degree(v) > 0; }
  std::vector<VertexId> vertices() const { return view_.support(); }

  /// U(F): vertices of F-degree at least 3, ascending.
  const std::vector<VertexId>& branch_vertices() const { return branch_; }
  bool is_branch(VertexId v) const { return view_.degree(v) >= 3; }
  /// ds(F): sum of F-degrees over U(F).
  int ds() const { return ds_; }

  bool is_cycle() const { return branch_.empty(); }

 private:
  MultiGraph host_;
  EdgeSet edges_;
  MultiGraph view_;
  int ell_ = 1;
  std::vector<VertexId> branch_;
  int ds_ = 0;
};

/// Empty string when `f` is a frame, otherwise the first violated condition.
std::string frame_defect(const Frame& f);

/// The frame formed by one long cycle of `g`. Throws InputError if there is none.
Frame initial_frame(const MultiGraph& g, int ell, BudgetMeter& meter);
Frame initial_frame(const MultiGraph& g, int ell, const DetectorBudget& budget = {});

/// Frame distance between u and v, or -1 if they lie in different components.
int frame_distance(const Frame& f, VertexId u, VertexId v);

/// An F-path Q with len(Q) + dist_F(ends) >= ell, or joining two components
/// of F. Chords come first by edge id, then paths through G - V(F) in
/// depth-first order from the smallest endpoint. Source < target.
std::optional<Path> find_addable_fpath(const Frame& f, BudgetMeter& meter);

Frame add_fpath(const Frame& f, const Path& q);

/// Adds F-paths until none is addable.
Frame maximize_frame(Frame f, AssertLevel level, BudgetMeter& meter);
Frame maximize_frame(Frame f, AssertLevel level = AssertLevel::low,
                     const DetectorBudget& budget = {});

/// The short u-v path of F. At high level its uniqueness among short paths
/// is checked as well.
Path shadow_of_pair(const Frame& f, VertexId u, VertexId v,
                    AssertLevel level = AssertLevel::low);

struct Bridge {
  enum class Kind { chord, component };
  Kind kind = Kind::chord;
  EdgeSet edges;
  std::vector<VertexId> feet;      // ascending, inside V(F)
  std::vector<VertexId> interior;  // ascending, outside V(F)
  EdgeSet shadow;                  // inside E(F)
};

/// Every edge outside F in exactly one bridge, ordered by smallest edge id.
std::vector<Bridge> compute_bridges(const Frame& f, AssertLevel level = AssertLevel::low);

/// Vertices touched by an edge set, ascending.
std::vector<VertexId> vertices_of(const MultiGraph& g, const EdgeSet& edges);

/// Longest distance between two vertices of a forest given as an edge set,
/// or -1 if the edges contain a cycle or are disconnected.
int tree_diameter(const MultiGraph& g, const EdgeSet& edges);

}  // namespace lcep
