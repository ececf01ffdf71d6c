#pragma once

// Cycle searches: girth, budgeted long-cycle detection, the greedy packer for
// dense multigraphs, and exhaustive oracles for small instances.

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "lcep/budget.hpp"
#include "lcep/graph.hpp"

namespace lcep {

/// What find_long_cycle looks for. A cycle is long when its length is at
/// least `ell`.
struct LongCycleQuery {
  enum class Mode { any_long, shortest_long, through_edge, length_at_most };

  int ell = 1;
  Mode mode = Mode::any_long;
  EdgeId edge = -1;  // through_edge
  int bound = 0;     // length_at_most

  static LongCycleQuery any_long(int ell) { return {ell, Mode::any_long, -1, 0}; }
  static LongCycleQuery shortest_long(int ell) { return {ell, Mode::shortest_long, -1, 0}; }
  static LongCycleQuery through_edge(int ell, EdgeId e) {
    return {ell, Mode::through_edge, e, 0};
  }
  static LongCycleQuery length_at_most(int ell, int bound) {
    return {ell, Mode::length_at_most, -1, bound};
  }
};

/// A minimum-length cycle, or nullopt for a forest. Loops and parallel pairs
/// count as cycles of length 1 and 2.
std::optional<Cycle> shortest_cycle(const MultiGraph& g);

/// Exact branch-and-bound search over simple paths. Throws BudgetExceeded
/// rather than answering "absent" when the budget runs out.
std::optional<Cycle> find_long_cycle(const MultiGraph& g, const LongCycleQuery& q,
                                     const DetectorBudget& budget = {});
std::optional<Cycle> find_long_cycle(const MultiGraph& g, const LongCycleQuery& q,
                                     BudgetMeter& meter);

bool edge_on_long_cycle(const MultiGraph& g, EdgeId e, int ell,
                        const DetectorBudget& budget = {});
bool edge_on_long_cycle(const MultiGraph& g, EdgeId e, int ell, BudgetMeter& meter);

/// k edge-disjoint cycles of a multigraph with minimum degree 3 and at least
/// 42 k log2 k edges: take a shortest cycle, delete it, clean up degrees 1
/// and 2, recurse, and expand the recursive cycles back.
std::vector<Cycle> pack_cycles_dense(const MultiGraph& g, int k);

/// Threshold 42 k log2 k used by pack_cycles_dense.
double dense_packing_threshold(int k);

/// Calls `visit` once per cycle of `g` whose length lies in [min_len, max_len].
/// Each cycle is reported once, starting at its smallest vertex and oriented
/// so that its first edge id is below its last. `visit` returns false to stop.
void enumerate_cycles(const MultiGraph& g, int min_len, int max_len, BudgetMeter& meter,
                      const std::function<bool(const Cycle&)>& visit);

std::vector<Cycle> all_cycles(const MultiGraph& g, int min_len, BudgetMeter& meter,
                              int max_len = std::numeric_limits<int>::max());

struct PackingOracleResult {
  int value = 0;
  std::vector<Cycle> witness;
  std::uint64_t nodes = 0;
};

struct HittingOracleResult {
  int value = 0;
  EdgeSet witness;
  std::uint64_t nodes = 0;
};

/// Exact maximum number of pairwise edge-disjoint cycles of length >= ell.
PackingOracleResult oracle_max_packing(const MultiGraph& g, int ell,
                                       const DetectorBudget& budget = {});

/// Exact minimum number of edges meeting every cycle of length >= ell.
HittingOracleResult oracle_min_hitting(const MultiGraph& g, int ell,
                                       const DetectorBudget& budget = {});

}  // namespace lcep
