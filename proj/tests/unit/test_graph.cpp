#include <doctest.h>

#include <algorithm>
#include <random>

#include "../support/graphs.hpp"
#include "lcep/errors.hpp"
#include "lcep/generators.hpp"
#include "lcep/graph.hpp"

using namespace lcep;
using namespace testgraphs;

TEST_CASE("parse_graph reads triangles, parallel pairs and loops") {
  const MultiGraph tri = parse_graph("3 3\n0 1\n1 2\n2 0");
  CHECK(tri.vertex_count() == 3);
  CHECK(tri.edge_count() == 3);

  const MultiGraph two = parse_graph("2 2\n0 1\n0 1");
  CHECK(two.edge_count() == 2);
  CHECK(two.degree(0) == 2);

  const MultiGraph loop = parse_graph("1 1\n0 0");
  CHECK(loop.edge_count() == 1);
  CHECK(loop.degree(0) == 2);
  CHECK(loop.is_loop(0));
}

TEST_CASE("parse_graph skips comments and rejects malformed input") {
  const MultiGraph g = parse_graph("# header\n\n2 1\n# mid\n0 1\n");
  CHECK(g.edge_count() == 1);
  CHECK_THROWS_AS(parse_graph("2 2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("2 1\n0 5\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("x y\n"), ParseError);
  CHECK_THROWS_AS(parse_graph(""), InputError);
}

TEST_CASE("write_graph round-trips through parse_graph") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 20; ++t) {
    const MultiGraph g = random_min_degree_multigraph(rng, 8, 2, 12, true);
    const MultiGraph h = parse_graph(write_graph(g, "round trip"));
    REQUIRE(h.edge_count() == g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      CHECK(h.endpoints(e).u == g.endpoints(e).u);
      CHECK(h.endpoints(e).v == g.endpoints(e).v);
    }
  }
}

TEST_CASE("views keep edge ids stable") {
  const MultiGraph g = cycle(5);
  const MultiGraph h = g.without(std::vector<EdgeId>{1, 3});
  CHECK(h.edge_capacity() == 5);
  CHECK(h.edge_count() == 3);
  CHECK(h.has_edge(0));
  CHECK_FALSE(h.has_edge(1));
  CHECK(h.edge_ids() == std::vector<EdgeId>{0, 2, 4});
}

TEST_CASE("components") {
  CHECK(components(cycle(3)).size() == 1);
  MultiGraph g(4);
  add_cycle(g, 3);
  const auto comps = components(g);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == std::vector<VertexId>{0, 1, 2});
  CHECK(comps[1] == std::vector<VertexId>{3});
  CHECK(components(MultiGraph(0)).empty());
}

TEST_CASE("blocks") {
  const MultiGraph bowtie = from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
  const auto b = blocks(bowtie);
  REQUIRE(b.size() == 2);
  CHECK(b[0].size() == 3);
  CHECK(b[1].size() == 3);
  CHECK_FALSE(b[0].intersects(b[1]));

  CHECK(blocks(cycle(6)).size() == 1);

  const auto p = blocks(path(4));
  CHECK(p.size() == 3);
  for (const EdgeSet& s : p) CHECK(s.size() == 1);

  const MultiGraph loops = from_edges(2, {{0, 0}, {0, 1}, {0, 1}});
  CHECK(blocks(loops).size() == 2);
}

TEST_CASE("suppress_degree2") {
  // K4 with edge 0-1 subdivided by vertex 4.
  const MultiGraph sub = from_edges(5, {{0, 4}, {4, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  const Suppression s = suppress_degree2(sub);
  CHECK(s.reduced.edge_count() == 6);
  CHECK(s.reduced.degree(4) == 0);
  for (VertexId v = 0; v < 4; ++v) CHECK(s.reduced.degree(v) == 3);
  int total = 0;
  for (const Path& p : s.expansion) total += p.length();
  CHECK(total == 7);

  // A lone triangle collapses completely.
  CHECK(suppress_degree2(cycle(3)).reduced.edge_count() == 0);

  const Suppression k4 = suppress_degree2(complete(4));
  CHECK(k4.reduced.edge_count() == 6);
  for (const Path& p : k4.expansion) CHECK(p.length() == 1);
}

TEST_CASE("expand_cycle") {
  // Two parallel reduced edges, each standing for a length-2 path: a 4-cycle.
  const MultiGraph g = from_edges(4, {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 1}, {0, 1}, {0, 1}});
  const Suppression s = suppress_degree2(g);
  auto c = find_any_cycle(s.reduced);
  REQUIRE(c.has_value());
  const Cycle full = expand_cycle(*c, s.expansion);
  CHECK(is_valid_cycle(g, full));
  int expected = 0;
  for (EdgeId e : c->edges) expected += s.expansion[e].length();
  CHECK(full.length() == expected);

  std::mt19937_64 rng(11);
  for (int t = 0; t < 30; ++t) {
    const MultiGraph h = random_connected_graph(rng, 10, 13);
    const Suppression sh = suppress_degree2(h);
    if (auto rc = find_any_cycle(sh.reduced)) {
      const Cycle fc = expand_cycle(*rc, sh.expansion);
      int len = 0;
      for (EdgeId e : rc->edges) len += sh.expansion[e].length();
      CHECK(fc.length() == len);
      CHECK(is_valid_cycle(h, fc));
    }
  }
}

TEST_CASE("cycle_from_edges") {
  const MultiGraph g = complete(4);
  auto c = cycle_from_edges(g, std::vector<EdgeId>{0, 3, 1});  // 01, 12, 02
  REQUIRE(c.has_value());
  CHECK(c->length() == 3);
  CHECK(c->vertices.front() == 0);
  CHECK(c->edges.front() == 0);
  CHECK_FALSE(cycle_from_edges(g, std::vector<EdgeId>{0, 1}).has_value());
  CHECK_FALSE(cycle_from_edges(g, std::vector<EdgeId>{0, 5, 3, 1}).has_value());
}
