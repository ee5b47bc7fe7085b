#include <doctest.h>

#include "domtk/graph.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace domtk;

TEST_SUITE_BEGIN("graph");

TEST_CASE("parse_edge_list basics") {
  Graph g = parse_edge_list("n 3\n0 1\n1 2\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(2, 1));
  CHECK(!g.has_edge(0, 2));
}

TEST_CASE("parse_edge_list rejects self-loops") {
  CHECK_THROWS_AS(parse_edge_list("n 2\n0 0\n"), std::invalid_argument);
}

TEST_CASE("parse_edge_list collapses duplicate lines") {
  Graph g = parse_edge_list("n 4\n0 1\n0 1\n2 3\n");
  CHECK(g.edge_count() == 2);
}

TEST_CASE("parse_edge_list error paths") {
  CHECK_THROWS_AS(parse_edge_list("n 2\n0 5\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_edge_list("n 2\n0 x\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_edge_list("0 -1\n"), std::invalid_argument);
}

TEST_CASE("parse_edge_list comments and missing header") {
  Graph g = parse_edge_list("# a triangle\n0 1\n1 2\n0 2\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 3);
}

TEST_CASE("remove_edges") {
  Graph triangle = fixtures::cycle(3);
  Graph p = triangle.remove_edges({{0, 2}});
  CHECK(p == fixtures::path(3));
  CHECK(triangle.remove_edges({}) == triangle);
  Graph none = fixtures::path(3).remove_edges({{0, 1}, {1, 2}});
  CHECK(none.edge_count() == 0);
  CHECK(none.vertex_count() == 3);
  CHECK_THROWS_AS(triangle.remove_edges({{0, 1}, {0, 1}}), std::invalid_argument);
}

TEST_CASE("add_edges") {
  Graph p3 = fixtures::path(3);
  CHECK(p3.add_edges({{0, 2}}) == fixtures::cycle(3));
  CHECK(p3.add_edges({}) == p3);
  CHECK_THROWS_AS(fixtures::complete(3).add_edges({{0, 1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(p3.add_edges({Edge{0, 0}}), std::invalid_argument);
}

TEST_CASE("non_edges") {
  CHECK(fixtures::complete(3).non_edges().empty());
  CHECK(fixtures::edgeless(3).non_edges() ==
        std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(fixtures::path(3).non_edges() == std::vector<Edge>{{0, 2}});
}

TEST_CASE("closed_neighborhood") {
  CHECK(fixtures::edgeless(2).closed_neighborhood(1) == VertexSet::of({1}));
  CHECK(fixtures::star4().closed_neighborhood(0) ==
        VertexSet::full(4));
  CHECK(fixtures::path(2).closed_neighborhood(0) == VertexSet::of({0, 1}));
  CHECK_THROWS_AS(fixtures::path(2).closed_neighborhood(7), std::out_of_range);
}

TEST_CASE("to_dot shape and determinism") {
  std::string one = to_dot(fixtures::edgeless(1));
  CHECK(one.find("0;") != std::string::npos);
  CHECK(one.find("--") == std::string::npos);

  Graph triangle = fixtures::cycle(3);
  std::string dot = to_dot(triangle, {{0, "a"}}, VertexSet::of({1}));
  CHECK(dot == to_dot(triangle, {{0, "a"}}, VertexSet::of({1})));
  CHECK(dot.find("label=\"a\"") != std::string::npos);
  CHECK(dot.find("style=filled") != std::string::npos);
  int edge_lines = 0;
  for (std::size_t pos = 0; (pos = dot.find("--", pos)) != std::string::npos;
       ++pos)
    ++edge_lines;
  CHECK(edge_lines == 3);
}

TEST_CASE("edge round trip and complement count on random graphs") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Graph g = oracles::random_graph(8, 0.4, seed);
    const int pairs = 8 * 7 / 2;
    CHECK(g.edge_count() + static_cast<int>(g.non_edges().size()) == pairs);
    if (g.edge_count() > 0) {
      Edge e = g.edges()[seed % g.edges().size()];
      CHECK(g.remove_edges({e}).add_edges({e}) == g);
    }
    CHECK(parse_edge_list(serialize(g)) == g);
  }
}

TEST_CASE("adjacency symmetry") {
  Graph g = oracles::random_graph(10, 0.5, 99);
  for (int u = 0; u < 10; ++u)
    for (int v = 0; v < 10; ++v)
      CHECK(g.neighbors(u).test(v) == g.neighbors(v).test(u));
  for (int v = 0; v < 10; ++v) CHECK(!g.neighbors(v).test(v));
}

TEST_SUITE_END();
