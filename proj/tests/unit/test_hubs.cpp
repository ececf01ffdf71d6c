#include <doctest.h>

#include <algorithm>

#include "../support/graphs.hpp"
#include "lcep/hubs.hpp"

using namespace lcep;
using namespace testgraphs;

namespace {

Frame frame_of(const MultiGraph& g, std::vector<EdgeId> ids, int ell) {
  return Frame(g, EdgeSet::of(g.edge_capacity(), ids), ell);
}

std::vector<EdgeId> range(int lo, int hi) {
  std::vector<EdgeId> out;
  for (int e = lo; e < hi; ++e) out.push_back(e);
  return out;
}

std::vector<Hub> hubs_of(const Frame& f) {
  return compute_hubs(f, compute_bridges(f, AssertLevel::high), AssertLevel::high);
}

// Theta between 0 and 1 with three paths of length `len`; the first vertex
// after 0 on path p is 2 + p (len - 1).
MultiGraph theta_with_star(int len) {
  MultiGraph g = theta(len);
  MultiGraph h(g.vertex_count() + 1);
  for (EdgeId e : g.edge_ids()) h.add_edge(g.endpoints(e).u, g.endpoints(e).v);
  const VertexId x = g.vertex_count();
  for (int p = 0; p < 3; ++p) h.add_edge(x, 2 + p * (len - 1));
  return h;
}

}  // namespace

TEST_CASE("chords with disjoint shadows form separate hubs") {
  MultiGraph g = cycle(30);
  g.add_edge(0, 2);
  g.add_edge(10, 12);
  const Frame f = frame_of(g, range(0, 30), 5);
  const auto hubs = hubs_of(f);
  REQUIRE(hubs.size() == 2);
  for (const Hub& h : hubs) CHECK(h.kind == Hub::Kind::path_hub);
  CHECK(hubs[0].gates == std::vector<VertexId>{0, 2});
  CHECK(hubs[1].gates == std::vector<VertexId>{10, 12});
}

TEST_CASE("chords with overlapping shadows share a hub") {
  MultiGraph g = cycle(30);
  g.add_edge(0, 2);
  g.add_edge(1, 3);
  const Frame f = frame_of(g, range(0, 30), 5);
  const auto hubs = hubs_of(f);
  REQUIRE(hubs.size() == 1);
  CHECK(hubs[0].bridges == std::vector<int>{0, 1});
  CHECK(hubs[0].shadow.ids() == std::vector<EdgeId>{0, 1, 2});
  CHECK(hubs[0].closure.size() == 5);
  CHECK(hubs[0].gates == std::vector<VertexId>{0, 3});
}

TEST_CASE("no bridges, no hubs") {
  const MultiGraph c = cycle(12);
  CHECK(hubs_of(frame_of(c, range(0, 12), 6)).empty());
}

TEST_CASE("gates of a hub whose closure is everything") {
  const MultiGraph c = cycle(6);
  Hub h;
  h.shadow = c.edges();
  h.closure = c.edges();
  h.shadow_vertices = {0, 1, 2, 3, 4, 5};
  CHECK(gates_of(c, h).empty());
}

TEST_CASE("a star-shaped shadow at a branch vertex") {
  const MultiGraph g = theta_with_star(10);
  const Frame f = frame_of(g, range(0, 30), 5);
  CHECK(f.branch_vertices() == std::vector<VertexId>{0, 1});
  const auto hubs = hubs_of(f);
  REQUIRE(hubs.size() == 1);
  CHECK(hubs[0].kind == Hub::Kind::vertex_hub);
  CHECK(hubs[0].shadow.ids() == std::vector<EdgeId>{0, 10, 20});
  CHECK(hubs[0].gates == std::vector<VertexId>{2, 11, 20});
  CHECK(vertex_hub_gates(hubs) == std::vector<VertexId>{2, 11, 20});

  // Each ear loses its first edge to the hub closure.
  const auto ears = u_ears(f);
  REQUIRE(ears.size() == 3);
  const auto closures = classify_ears(f, ears, hubs);
  REQUIRE(closures.size() == 3);
  for (const EarClosure& ec : closures) {
    CHECK(ec.free_edges.size() == 9);
    const bool gate_first = ec.u_p() != 1;
    const VertexId gate = gate_first ? ec.u_p() : ec.v_p();
    CHECK(std::find(hubs[0].gates.begin(), hubs[0].gates.end(), gate) != hubs[0].gates.end());
    CHECK((gate_first ? ec.v_p() : ec.u_p()) == 1);
  }
}

TEST_CASE("u_ears") {
  const MultiGraph th = theta(3);
  const auto t = u_ears(frame_of(th, range(0, 9), 3));
  CHECK(t.size() == 3);
  for (const UEar& e : t) {
    CHECK_FALSE(e.is_cycle);
    CHECK(e.edges.size() == 3);
  }

  const MultiGraph k4 = complete(4);
  const auto k = u_ears(frame_of(k4, range(0, 6), 3));
  CHECK(k.size() == 6);
  for (const UEar& e : k) CHECK(e.edges.size() == 1);

  const MultiGraph db = dumbbell(5, 3);
  const auto d = u_ears(frame_of(db, db.edge_ids(), 5));
  REQUIRE(d.size() == 3);
  int cycles = 0;
  for (const UEar& e : d) cycles += e.is_cycle;
  CHECK(cycles == 2);

  const MultiGraph c = cycle(6);
  CHECK_THROWS_AS(u_ears(frame_of(c, range(0, 6), 6)), InputError);
}

TEST_CASE("an ear inside vertex-hub closures has no free part") {
  // Theta with paths of lengths 2, 10, 10 between 0 and 1; path A is 0-2-1.
  MultiGraph g(2 + 1 + 9 + 9 + 2);
  g.add_edge(0, 2);
  g.add_edge(2, 1);
  int next = 3;
  std::vector<VertexId> first, last;
  for (int p = 0; p < 2; ++p) {
    VertexId prev = 0;
    for (int i = 1; i < 10; ++i) {
      g.add_edge(prev, next);
      if (i == 1) first.push_back(next);
      prev = next++;
    }
    last.push_back(prev);
    g.add_edge(prev, 1);
  }
  const int frame_edges = g.edge_count();
  const VertexId x = next++;
  const VertexId y = next++;
  g.add_edge(x, 2);
  g.add_edge(x, first[0]);
  g.add_edge(y, 2);
  g.add_edge(y, last[1]);
  const Frame f = frame_of(g, range(0, frame_edges), 5);
  const auto hubs = hubs_of(f);
  REQUIRE(hubs.size() == 2);
  for (const Hub& h : hubs) CHECK(h.kind == Hub::Kind::vertex_hub);
  const auto ears = u_ears(f);
  const auto closures = classify_ears(f, ears, hubs);
  CHECK(closures.size() == 2);
  for (const EarClosure& ec : closures) CHECK(ears[ec.ear].edges.size() == 10);
}

TEST_CASE("thick_thin") {
  // A bare ear between the branch vertices of a theta: one strand.
  const MultiGraph th = theta(6);
  const Frame f = frame_of(th, range(0, 18), 6);
  const auto ears = u_ears(f);
  const auto closures = classify_ears(f, ears, {});
  REQUIRE(closures.size() == 3);
  const CutResult thin = thick_thin(th, closures[0], 2);
  REQUIRE_FALSE(thin.has_paths());
  CHECK(thin.cut().size() == 1);

  // A chord hub doubles only part of the ear, so the ear stays thin.
  MultiGraph g(th.vertex_count());
  for (EdgeId e : th.edge_ids()) g.add_edge(th.endpoints(e).u, th.endpoints(e).v);
  const auto& ear0 = ears[closures[0].ear];
  g.add_edge(ear0.vertices[1], ear0.vertices[3]);
  const Frame fg = frame_of(g, range(0, 18), 6);
  const auto hubs = hubs_of(fg);
  REQUIRE(hubs.size() == 1);
  const auto cl = classify_ears(fg, u_ears(fg), hubs);
  REQUIRE(cl.size() == 3);
  CHECK(cl[0].path_hubs == std::vector<int>{0});
  const CutResult still_thin = thick_thin(g, cl[0], 2);
  CHECK_FALSE(still_thin.has_paths());

  // Every ear edge doubled: the end edges join vertex-hubs, the inner ones
  // are path-hubs that supply the second strand.
  MultiGraph ladder(th.vertex_count());
  for (EdgeId e : th.edge_ids()) ladder.add_edge(th.endpoints(e).u, th.endpoints(e).v);
  for (EdgeId e : ear0.edges) ladder.add_edge(th.endpoints(e).u, th.endpoints(e).v);
  const Frame fl = frame_of(ladder, range(0, 18), 6);
  const auto hl = hubs_of(fl);
  const auto cll = classify_ears(fl, u_ears(fl), hl);
  const CutResult thick = thick_thin(ladder, cll[0], 2);
  REQUIRE(thick.has_paths());
  CHECK(thick.paths().paths.size() == 2);
}
