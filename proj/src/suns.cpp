#include "lcep/suns.hpp"

#include <algorithm>
#include <sstream>

#include "lcep/cycles.hpp"
#include "lcep/errors.hpp"

namespace lcep {

namespace {

void require_sun(int ell) {
  if (ell < 4) throw InputError("a sun needs ell >= 4, got " + std::to_string(ell));
}

void add_sun(MultiGraph& g, int p, VertexId offset) {
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j < p; ++j) g.add_edge(offset + i, offset + j);
  }
  for (int i = 0; i < p; ++i) {
    const VertexId w = offset + p + i;
    g.add_edge(offset + (i + p - 1) % p, w);
    g.add_edge(w, offset + i);
  }
}

}  // namespace

int sun_order(int ell) {
  require_sun(ell);
  return 2 * (ell - 1) / 3;
}

MultiGraph make_sun(int ell) {
  const int p = sun_order(ell);
  MultiGraph g(2 * p);
  add_sun(g, p, 0);
  return g;
}

MultiGraph make_lower_bound_family(int k, int ell) {
  if (k < 2) throw InputError("the lower-bound family needs k >= 2");
  const int p = sun_order(ell);
  MultiGraph g(2 * p * (k - 1));
  for (int c = 0; c < k - 1; ++c) add_sun(g, p, 2 * p * c);
  return g;
}

std::string sun_edge_list(int ell, int copies) {
  if (copies < 1) throw InputError("--copies must be at least 1");
  const int p = sun_order(ell);
  const MultiGraph g = copies == 1 ? make_sun(ell) : make_lower_bound_family(copies + 1, ell);
  std::ostringstream header;
  header << "sun ell=" << ell << " p=" << p << " copies=" << copies << "\n"
         << "clique v_i = i on p vertices, rim w_i = p + i adjacent to v_{i-1 mod p} and v_i\n"
         << "copy c shifted by 2pc";
  return write_graph(g, header.str());
}

Cycle sun_witness_after_deletion(int ell, std::span<const EdgeId> x) {
  if (ell < 30) throw InputError("sun witnesses need ell >= 30");
  if (static_cast<int>(x.size()) > ell / 30) {
    throw InputError("at most floor(ell / 30) edges may be deleted");
  }
  const MultiGraph g = make_sun(ell);
  const int p = sun_order(ell);
  std::vector<char> gone(2 * p, 0);
  for (EdgeId e : x) {
    if (!g.has_edge(e)) throw InputError("edge " + std::to_string(e) + " is not in the sun");
    for (VertexId v : {g.endpoints(e).u, g.endpoints(e).v}) {
      gone[v] = 1;
      if (v < p) {
        gone[p + v] = 1;
        gone[p + (v + 1) % p] = 1;
      }
    }
  }

  // Edge ids by endpoints.
  auto clique_edge = [p](int i, int j) {
    if (i > j) std::swap(i, j);
    return static_cast<EdgeId>(i * (2 * p - i - 1) / 2 + (j - i - 1));
  };
  const EdgeId rim_base = p * (p - 1) / 2;
  auto rim_in = [&](int i) { return rim_base + 2 * i; };       // v_{i-1} w_i
  auto rim_out = [&](int i) { return rim_base + 2 * i + 1; };  // w_i v_i

  Cycle d;
  int first_kept = 0;
  while (first_kept < p && gone[first_kept]) ++first_kept;
  if (first_kept == p) throw ClaimViolation("sun witness", "every clique vertex was deleted");
  // Start right after a deleted clique vertex so segments do not wrap; with
  // nothing deleted the whole rim tour is the cycle.
  int start = first_kept;
  for (int i = 0; i < p; ++i) {
    if (gone[(i + p - 1) % p] && !gone[i]) {
      start = i;
      break;
    }
  }
  for (int step = 0; step < p; ++step) {
    const int i = (start + step) % p;
    if (gone[i]) continue;
    const int next = (i + 1) % p;
    d.vertices.push_back(i);
    if (!gone[next]) {
      // Rim detour v_i w_{i+1} v_{i+1}; closes the tour when nothing is deleted.
      d.edges.push_back(rim_in(next));
      d.vertices.push_back(p + next);
      d.edges.push_back(rim_out(next));
      continue;
    }
    // End of a segment: jump to the start of the next one.
    int j = next;
    while (gone[j]) j = (j + 1) % p;
    d.edges.push_back(clique_edge(i, j));
  }
  const int deleted = static_cast<int>(std::count(gone.begin(), gone.end(), 1));
  check_claim(is_valid_cycle(g, d), "sun witness", "stitched walk is not a cycle");
  for (EdgeId e : x) {
    check_claim(std::find(d.edges.begin(), d.edges.end(), e) == d.edges.end(), "sun witness",
                "witness uses a deleted edge");
  }
  check_claim(d.length() == 2 * p - deleted, "sun witness", "witness is not Hamiltonian in G - U");
  check_claim(d.length() >= ell, "sun witness",
              "witness has length " + std::to_string(d.length()) + " < ell");
  return d;
}

SunReport check_sun_properties(int ell, const DetectorBudget& budget) {
  SunReport r;
  r.ell = ell;
  r.p = sun_order(ell);
  const MultiGraph g = make_sun(ell);
  auto fail = [&](std::string why) {
    r.ok = false;
    if (r.failure.empty()) r.failure = std::move(why);
  };
  if (ell < 30) {
    r.packing_number = oracle_max_packing(g, ell, budget).value;
    if (*r.packing_number != 1) fail("packing number is " + std::to_string(*r.packing_number));
    return r;
  }
  if (ell / 30 != 1) return r;
  r.shortest_witness = 2 * r.p;
  for (EdgeId e : g.edge_ids()) {
    const EdgeId x[] = {e};
    try {
      const Cycle d = sun_witness_after_deletion(ell, x);
      const MultiGraph gx = g.without(std::span<const EdgeId>(x));
      if (!is_valid_cycle(gx, d) || d.length() < ell) {
        fail("witness after deleting edge " + std::to_string(e) + " does not verify");
      }
      r.shortest_witness = std::min(r.shortest_witness, d.length());
    } catch (const ClaimViolation& ex) {
      fail(ex.what());
    }
    ++r.deletions_checked;
  }
  return r;
}

}  // namespace lcep
