#include <doctest.h>

#include "domtk/domination.hpp"
#include "domtk/perturbation.hpp"
#include "domtk/reduction.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace domtk;

TEST_SUITE_BEGIN("perturbation");

TEST_CASE("bondage basics") {
  PerturbationResult r = bondage_number(fixtures::path(2), 1);
  CHECK(r.is_one());
  CHECK(r.witness == std::vector<Edge>{{0, 1}});

  // b(C_4) = 3: any one or two removals leave gamma = 2.
  PerturbationResult c4 = bondage_number(fixtures::cycle(4), 3);
  CHECK(c4.status == PerturbationResult::Status::kValue);
  CHECK(c4.value == 3);
  CHECK(c4.value == oracles::min_bondage(fixtures::cycle(4), 3, false));

  CHECK_THROWS_AS(bondage_number(fixtures::edgeless(3), 1),
                  std::invalid_argument);
}

TEST_CASE("bondage of the example gadget is 1") {
  Graph g = build_bondage_instance(fixtures::example_formula()).graph;
  CHECK(bondage_number(g, 2).is_one());
}

TEST_CASE("total bondage basics") {
  // Every edge removal in a star isolates a leaf.
  CHECK(total_bondage_number(fixtures::star4(), 3).status ==
        PerturbationResult::Status::kNonexistent);

  PerturbationResult c6 = total_bondage_number(fixtures::cycle(6), 3);
  CHECK(c6.status == PerturbationResult::Status::kValue);
  CHECK(c6.value == 3);
  CHECK(c6.value == oracles::min_bondage(fixtures::cycle(6), 3, true));

  CHECK_THROWS_AS(total_bondage_number(fixtures::edgeless(2), 1),
                  std::invalid_argument);
}

TEST_CASE("total bondage of the example gadget is 1") {
  Graph g = build_total_bondage_instance(fixtures::example_formula()).graph;
  CHECK(total_bondage_number(g, 2).is_one());
}

TEST_CASE("reinforcement basics") {
  CHECK(reinforcement_number(fixtures::complete(3), 1).status ==
        PerturbationResult::Status::kZero);

  PerturbationResult p4 = reinforcement_number(fixtures::path(4), 2);
  CHECK(p4.is_one());
  CHECK(p4.value == oracles::min_reinforcement(fixtures::path(4), 2));
}

TEST_CASE("reinforcement of the example gadget is 1") {
  Graph g = build_reinforcement_instance(fixtures::example_formula()).graph;
  CHECK(reinforcement_number(g, 2).is_one());
}

TEST_CASE("witness soundness and minimality") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    Graph g = oracles::random_graph(7, 0.45, 3000 + seed);
    if (g.edge_count() == 0) continue;
    int gamma = domination_number(g).value;

    PerturbationResult b = bondage_number(g, 3);
    if (b.status == PerturbationResult::Status::kValue) {
      CHECK(static_cast<int>(b.witness.size()) == b.value);
      CHECK(domination_number(g.remove_edges(b.witness)).value > gamma);
      CHECK(b.value == oracles::min_bondage(g, 3, false));
    }

    PerturbationResult r = reinforcement_number(g, 2);
    if (r.status == PerturbationResult::Status::kValue) {
      CHECK(domination_number(g.add_edges(r.witness)).value < gamma);
      CHECK(r.value == oracles::min_reinforcement(g, 2));
    } else if (r.status == PerturbationResult::Status::kZero) {
      CHECK(gamma == 1);
    } else {
      CHECK(oracles::min_reinforcement(g, 2) == -1);
    }
  }
}

TEST_CASE("total bondage agrees with the naive oracle") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = oracles::random_graph(6, 0.55, 4000 + seed);
    if (g.has_isolated_vertex() || g.vertex_count() < 2) continue;
    PerturbationResult bt = total_bondage_number(g, 2);
    int naive = oracles::min_bondage(g, 2, true);
    if (bt.status == PerturbationResult::Status::kValue) {
      CHECK(bt.value == naive);
      Graph h = g.remove_edges(bt.witness);
      CHECK(!h.has_isolated_vertex());
      CHECK(total_domination_number(h).value >
            total_domination_number(g).value);
    } else {
      CHECK(naive == -1);
    }
  }
}

TEST_CASE("paper bounds on satisfiable gadgets") {
  CnfFormula f = fixtures::example_formula();
  const int n = f.variable_count();

  Graph gb = build_bondage_instance(f).graph;
  for (const Edge& e : gb.edges())
    CHECK(domination_number(gb.remove_edges({e})).value <= n + 2);

  Graph gt = build_total_bondage_instance(f).graph;
  for (const Edge& e : gt.edges()) {
    Graph h = gt.remove_edges({e});
    if (h.has_isolated_vertex()) continue;
    CHECK(total_domination_number(h).value <= 2 * n + 3);
  }
}

TEST_CASE("witness is lexicographically first") {
  // P_4 gains gamma = 1 via either 1-3 or 0-2... the search must report
  // the smallest qualifying edge in non-edge order.
  PerturbationResult r = reinforcement_number(fixtures::path(4), 1);
  REQUIRE(r.is_one());
  std::vector<Edge> pool = fixtures::path(4).non_edges();
  for (const Edge& e : pool) {
    if (e == r.witness[0]) break;
    CHECK(domination_number(fixtures::path(4).add_edges({e})).value == 2);
  }
}

TEST_SUITE_END();
