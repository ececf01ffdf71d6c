#include <doctest.h>

#include <random>

#include "../support/graphs.hpp"
#include "lcep/cycles.hpp"
#include "lcep/frame.hpp"
#include "lcep/generators.hpp"

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

}  // namespace

TEST_CASE("initial_frame") {
  const MultiGraph c7 = cycle(7);
  const Frame f = initial_frame(c7, 7);
  CHECK(f.edges().size() == 7);
  CHECK(f.is_cycle());
  CHECK(f.ds() == 0);
  CHECK(frame_defect(f).empty());

  MultiGraph chorded = cycle(8);
  chorded.add_edge(0, 4);
  const Frame g = initial_frame(chorded, 5);
  CHECK(frame_defect(g).empty());

  CHECK_THROWS_AS(initial_frame(cycle(4), 5), InputError);
}

TEST_CASE("frame_defect flags short cycles and low degree") {
  const MultiGraph k4 = complete(4);
  CHECK_FALSE(frame_defect(frame_of(k4, range(0, 6), 4)).empty());
  CHECK(frame_defect(frame_of(k4, range(0, 6), 3)).empty());
  CHECK_FALSE(frame_defect(frame_of(k4, {0, 1}, 1)).empty());
}

TEST_CASE("branch vertices and ds") {
  const MultiGraph k4 = complete(4);
  const Frame f = frame_of(k4, range(0, 6), 3);
  CHECK(f.branch_vertices() == std::vector<VertexId>{0, 1, 2, 3});
  CHECK(f.ds() == 12);
  CHECK_FALSE(f.is_cycle());
}

TEST_CASE("maximize_frame joins two frame components") {
  // Both cycles are in F; the bridge path is an F-path between components.
  const MultiGraph db = dumbbell(6, 3);
  const Frame f = frame_of(db, range(0, 12), 5);
  const Frame m = maximize_frame(f, AssertLevel::high);
  CHECK(m.edges().size() == static_cast<std::size_t>(db.edge_count()));
  CHECK(frame_defect(m).empty());
  CHECK(m.branch_vertices() == std::vector<VertexId>{0, 6});

  // From one cycle alone nothing is addable: the other hangs off a bridge path.
  const Frame lone = maximize_frame(frame_of(db, range(0, 6), 5), AssertLevel::high);
  CHECK(lone.edges().size() == 6);
}

TEST_CASE("maximize_frame leaves a short chord out") {
  MultiGraph g = cycle(8);
  g.add_edge(0, 3);
  const Frame f = frame_of(g, range(0, 8), 8);
  BudgetMeter meter;
  CHECK_FALSE(find_addable_fpath(f, meter).has_value());
  const Frame m = maximize_frame(f, AssertLevel::high);
  CHECK(m.edges() == f.edges());
}

TEST_CASE("find_addable_fpath") {
  // Long chord-path: vertices 0 and 5 of C10 joined by a path of length 4.
  MultiGraph g(13);
  add_cycle(g, 10);
  g.add_edge(0, 10);
  g.add_edge(10, 11);
  g.add_edge(11, 12);
  g.add_edge(12, 5);
  const Frame f = frame_of(g, range(0, 10), 5);
  BudgetMeter meter;
  const auto q = find_addable_fpath(f, meter);
  REQUIRE(q.has_value());
  CHECK(q->source() == 0);
  CHECK(q->target() == 5);
  CHECK(q->length() == 4);

  // Disconnected frame: the connecting path is addable.
  const MultiGraph db = dumbbell(5, 2);
  const Frame two = frame_of(db, range(0, 10), 5);
  const auto join = find_addable_fpath(two, meter);
  REQUIRE(join.has_value());
  CHECK(join->length() == 2);
  CHECK(join->source() == 0);
  CHECK(join->target() == 5);
}

TEST_CASE("shadow_of_pair") {
  const MultiGraph c = cycle(40);
  const Frame f = frame_of(c, range(0, 40), 5);
  const Path adj = shadow_of_pair(f, 3, 4, AssertLevel::high);
  CHECK(adj.length() == 1);
  CHECK(adj.edges.front() == 3);
  CHECK(shadow_of_pair(f, 7, 7).length() == 0);
  const Path arc = shadow_of_pair(f, 38, 1, AssertLevel::high);
  CHECK(arc.length() == 3);
  CHECK(is_valid_path(c, arc));
}

TEST_CASE("compute_bridges") {
  MultiGraph g(31);
  add_cycle(g, 30);
  const EdgeId chord = g.add_edge(0, 2);
  const EdgeId a = g.add_edge(5, 30);
  const EdgeId b = g.add_edge(30, 7);
  const Frame f = frame_of(g, range(0, 30), 5);
  const auto bridges = compute_bridges(f, AssertLevel::high);
  REQUIRE(bridges.size() == 2);

  CHECK(bridges[0].kind == Bridge::Kind::chord);
  CHECK(bridges[0].edges.ids() == std::vector<EdgeId>{chord});
  CHECK(bridges[0].feet == std::vector<VertexId>{0, 2});
  CHECK(bridges[0].shadow.ids() == std::vector<EdgeId>{0, 1});

  CHECK(bridges[1].kind == Bridge::Kind::component);
  CHECK(bridges[1].edges.ids() == std::vector<EdgeId>{a, b});
  CHECK(bridges[1].feet == std::vector<VertexId>{5, 7});
  CHECK(bridges[1].interior == std::vector<VertexId>{30});
  CHECK(bridges[1].shadow.ids() == std::vector<EdgeId>{5, 6});

  const Frame whole = frame_of(cycle(9), range(0, 9), 9);
  CHECK(compute_bridges(whole).empty());
}

TEST_CASE("tree_diameter and vertices_of") {
  const MultiGraph p = path(6);
  CHECK(tree_diameter(p, p.edges()) == 5);
  const MultiGraph c = cycle(4);
  CHECK(tree_diameter(c, c.edges()) == -1);
  CHECK(vertices_of(p, EdgeSet::of(5, std::vector<EdgeId>{1, 3})) == std::vector<VertexId>{1, 2, 3, 4});
}

TEST_CASE("maximized frames on random instances are fixpoints") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 10; ++t) {
    const int ell = 3;
    const MultiGraph g = random_frame_instance(rng, ell, 8);
    const Frame f = maximize_frame(initial_frame(g, ell), AssertLevel::high);
    CHECK(frame_defect(f).empty());
    BudgetMeter meter;
    CHECK_FALSE(find_addable_fpath(f, meter).has_value());
    compute_bridges(f, AssertLevel::high);
  }
}
