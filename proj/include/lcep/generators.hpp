#pragma once

// Seeded random instance families used by bench and the test suites.

#include <cstdint>
#include <random>
#include <vector>

#include "lcep/graph.hpp"

namespace lcep {

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi].
int uniform_int(Rng& rng, int lo, int hi);

/// Simple connected graph: a random spanning tree plus distinct random edges
/// until `m` edges (capped at n(n-1)/2, raised to n-1).
MultiGraph random_connected_graph(Rng& rng, int n, int m);

/// Multigraph on n vertices with minimum degree >= min_degree and at least
/// min_edges edges. Parallel edges always allowed, loops optionally.
MultiGraph random_min_degree_multigraph(Rng& rng, int n, int min_degree, int min_edges,
                                        bool loops = false);

/// 2-connected simple graph: a Hamiltonian cycle on a random permutation
/// plus `chords` distinct chords.
MultiGraph random_two_connected(Rng& rng, int n, int chords);

/// 2-connected graph with long cycles, all of length more than 10 ell: a
/// small 2-connected base graph with every edge subdivided 6 ell times, plus
/// up to `gadgets` short ears hung between nearby vertices. Ears that would
/// close a long cycle of length at most 10 ell are dropped. Needs ell >= 2.
MultiGraph random_frame_instance(Rng& rng, int ell, int gadgets);

}  // namespace lcep
