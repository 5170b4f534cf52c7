#include "bcolor/error.hpp"
#include "bcolor/fixtures.hpp"
#include "bcolor/graph.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace bcolor;

TEST_CASE("graph_from_edges builds simple graphs") {
  const std::vector<Edge> triangle{{0, 1}, {1, 2}, {0, 2}};
  const Graph k3 = graph_from_edges(3, triangle);
  CHECK(k3.vertex_count() == 3);
  CHECK(k3.edge_count() == 3);
  CHECK(k3.adjacent(2, 0));
  CHECK(k3.same_structure(complete_graph(3)));

  const Graph empty = graph_from_edges(4, {});
  CHECK(empty.vertex_count() == 4);
  CHECK(empty.edge_count() == 0);

  const std::vector<Edge> doubled{{0, 1}, {1, 0}, {0, 1}, {1, 2}};
  CHECK(graph_from_edges(3, doubled).edge_count() == 2);
}

TEST_CASE("graph_from_edges rejects loops and bad endpoints") {
  const std::vector<Edge> loop{{1, 1}};
  const std::vector<Edge> outside{{0, 3}};
  CHECK_THROWS_AS(graph_from_edges(3, loop), InputError);
  CHECK_THROWS_AS(graph_from_edges(3, outside), InputError);
  CHECK_THROWS_AS(graph_from_edges(2, {}, {"a"}), InputError);
}

TEST_CASE("edges are sorted with u < v") {
  const std::vector<Edge> es{{3, 1}, {2, 0}, {1, 0}};
  const auto out = graph_from_edges(4, es).edges();
  CHECK(out == std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}});
}

TEST_CASE("closed neighborhoods") {
  const Graph k3 = complete_graph(3);
  CHECK(closed_neighborhood(k3, 0).count() == 3);

  const Graph empty = graph_from_edges(3, {});
  const VertexSet n1 = closed_neighborhood(empty, 1);
  CHECK(n1.count() == 1);
  CHECK(n1.test(1));

  const Graph p = fixtures::petersen();
  const auto a = oracle::matrix(p);
  for (Vertex v = 0; v < p.vertex_count(); ++v) {
    const VertexSet set = closed_neighborhood(p, v);
    CHECK(set.count() == 4);
    for (Vertex u = 0; u < p.vertex_count(); ++u)
      CHECK(set.test(u) == (u == v || a[v][u]));
  }
  CHECK_THROWS_AS(closed_neighborhood(k3, 3), InputError);
}

TEST_CASE("regularity") {
  CHECK(regularity(fixtures::petersen()) == 3);
  CHECK(regularity(complete_graph(3)) == 2);
  CHECK_FALSE(regularity(path_graph(3)).has_value());
  CHECK(regularity(graph_from_edges(5, {})) == 0);
  CHECK_THROWS_AS(regularity(Graph{}), InputError);
}

TEST_CASE("girth of small named graphs") {
  CHECK(girth(fixtures::petersen()).length == 5);
  CHECK(girth(complete_graph(3)).length == 3);
  CHECK(girth(path_graph(3)).infinite());
  CHECK(girth(cycle_graph(7)).length == 7);
  CHECK(girth(fixtures::q3()).length == 4);
  CHECK(girth(Graph{}).infinite());
  CHECK(oracle::girth(oracle::matrix(fixtures::petersen())) == std::optional<std::size_t>(5));
}

TEST_CASE("bipartite predicate with witness") {
  const Graph cube = fixtures::q3();
  const auto side = bipartition(cube);
  REQUIRE(side.has_value());
  for (const Edge &e : cube.edges())
    CHECK((*side)[e.u] != (*side)[e.v]);
  CHECK_FALSE(is_bipartite(fixtures::petersen()));
  CHECK_FALSE(is_bipartite(complete_graph(3)));
  CHECK(is_bipartite(graph_from_edges(3, {})));
  CHECK(is_bipartite(cycle_graph(6)));
}

TEST_CASE("property: girth matches cycle enumeration and forests have no girth") {
  std::mt19937_64 rng(0x6172746831);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + int(rng() % 10);
    const double p = 0.1 + 0.1 * double(rng() % 6);
    const Graph g = oracle::random_graph(rng, n, p);
    const auto expected = oracle::girth(oracle::matrix(g));
    CAPTURE(trial);
    CHECK(girth(g).length == expected);
    const bool forest = g.edge_count() == g.vertex_count() - connected_components(g);
    CHECK(girth(g).infinite() == forest);
  }
}

TEST_CASE("property: bipartite iff no odd cycle") {
  std::mt19937_64 rng(0x626970);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + int(rng() % 8);
    const Graph g = oracle::random_graph(rng, n, 0.15 + 0.1 * double(rng() % 5));
    CAPTURE(trial);
    const auto side = bipartition(g);
    CHECK(side.has_value() != oracle::has_odd_cycle(oracle::matrix(g)));
    if (side)
      for (const Edge &e : g.edges())
        CHECK((*side)[e.u] != (*side)[e.v]);
  }
}

TEST_CASE("property: every vertex is in its own closed neighborhood, and N[v] = N(v) + v") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_graph(rng, 1 + int(rng() % 12), 0.3);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      const VertexSet set = closed_neighborhood(g, v);
      CHECK(set.test(v));
      CHECK(set.count() == g.degree(v) + 1);
    }
  }
}
