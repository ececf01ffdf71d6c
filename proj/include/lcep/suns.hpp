#pragma once

// Suns: a clique v_0..v_{p-1} with a rim w_0..w_{p-1}, w_i adjacent to
// v_{i-1} and v_i (indices mod p), where p = floor(2 (ell - 1) / 3). A sun
// has no two edge-disjoint long cycles, yet no small edge set hits all of
// its long cycles.

#include <optional>
#include <span>
#include <string>

#include "lcep/budget.hpp"
#include "lcep/graph.hpp"

namespace lcep {

int sun_order(int ell);  // p

/// Vertices v_i = i, w_i = p + i. Edge ids: clique edges v_i v_j (i < j) in
/// lexicographic order, then for each i the rim edges v_{i-1} w_i and w_i v_i.
MultiGraph make_sun(int ell);

/// k - 1 disjoint suns, copy c shifted by 2pc.
MultiGraph make_lower_bound_family(int k, int ell);

/// Text of `gen sun`: a comment header with ell, p and the construction,
/// followed by the edge list of `copies` disjoint suns.
std::string sun_edge_list(int ell, int copies = 1);

/// A cycle of S_ell avoiding the edges `x`: delete the ends of every edge of
/// x, plus both rim neighbours of each deleted clique vertex, then route the
/// remaining clique path segments through their rim vertices and close them
/// up with clique edges. Requires ell >= 30 and |x| <= floor(ell / 30).
/// The cycle is Hamiltonian in what is left, so its length is 2p - |U|.
Cycle sun_witness_after_deletion(int ell, std::span<const EdgeId> x);

struct SunReport {
  int ell = 0;
  int p = 0;
  std::optional<int> packing_number;  // oracle, for ell < 30
  int deletions_checked = 0;          // single-edge deletions, for ell >= 30
  int shortest_witness = 0;
  bool ok = true;
  std::string failure;
};

/// Packing number 1 by oracle for ell < 30. For ell >= 30 with
/// floor(ell / 30) = 1, a verified witness after every single-edge deletion.
SunReport check_sun_properties(int ell, const DetectorBudget& budget = {});

}  // namespace lcep
