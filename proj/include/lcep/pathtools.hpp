#pragma once

// Path surgery in graphs whose long cycles are all much longer than ell:
// shortcutting a path through a chain of jumps, and merging a chain of short
// cycles that hang off a path.

#include <string>
#include <vector>

#include "lcep/graph.hpp"

namespace lcep {

/// A base path P with P-paths Q_1..Q_r ("jumps"). Jumps may be given in
/// either direction; u_i denotes the end closer to the start of P.
struct ExtensionTuple {
  Path base;
  std::vector<Path> jumps;
};

/// Empty when the tuple satisfies the hypotheses of shortcut_extension:
/// every jump is a P-path closing a short cycle with P, the first jump starts
/// at the start of P and the last ends at its end, jumps interleave strictly
/// (u_i < u_{i+1} < v_i < v_{i+1}) and jumps two or more apart are
/// internally disjoint. With `full`, also demands pairwise internally
/// disjoint jumps and v_i <= u_{i+2}.
std::string extension_defect(const MultiGraph& g, const ExtensionTuple& t, int ell,
                             bool full = false);

/// Normal form of a tuple: jumps oriented from u_i to v_i, overlapping
/// consecutive jumps merged at the first shared vertex along Q_i, and jumps
/// made redundant by u_{i+2} < v_i dropped. The result satisfies the `full`
/// conditions.
ExtensionTuple reduce_extension(const MultiGraph& g, const ExtensionTuple& t, int ell);

/// For a tuple meeting the `full` conditions: the unique cycle through u_i and
/// v_j in P plus jumps i..j, whose edges are those of P and the jumps minus
/// the base segments u_t P v_{t-1}, i < t <= j. Indices are 0-based.
Cycle extension_cycle(const MultiGraph& g, const ExtensionTuple& t, int i, int j);

/// A path shorter than ell between the ends of the base, inside the base and
/// jumps. Requires every long cycle of the ambient graph to have length at
/// least 2 ell; a long result raises ClaimViolation.
Path shortcut_extension(const MultiGraph& g, const ExtensionTuple& t, int ell);

/// Empty when `chain` meets the hypotheses of merge_short_cycles.
std::string chain_defect(const MultiGraph& g, const Path& p, const std::vector<Cycle>& chain,
                         int ell);

/// Short cycles C_1..C_r with C_i meeting P in a segment u_i P v_i,
/// consecutive cycles meeting off P and consecutive segments meeting, merge
/// into one short cycle C with C meeting P exactly in u_1 P v_r. Requires
/// every long cycle of the ambient graph to have length at least 3 ell.
Cycle merge_short_cycles(const MultiGraph& g, const Path& p, const std::vector<Cycle>& chain,
                         int ell);

}  // namespace lcep
