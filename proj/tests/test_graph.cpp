#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "tpw/chordal.hpp"
#include "tpw/errors.hpp"
#include "tpw/generators.hpp"

using namespace tpw;
using testutil::make;

TEST_SUITE("graph") {
  TEST_CASE("build_graph") {
    Graph k3 = make(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(k3.edge_count() == 3);
    for (int v = 0; v < 3; ++v) CHECK(k3.degree(v) == 2);

    Graph dup = make(2, {{0, 1}, {1, 0}});
    CHECK(dup.edge_count() == 1);

    Graph one = make(1, {});
    CHECK(one.vertex_count() == 1);
    CHECK(max_degree(one) == 0);

    CHECK_THROWS_AS(make(2, {{0, 2}}), InputError);
    CHECK_THROWS_AS(make(2, {{1, 1}}), InputError);
    CHECK_THROWS_AS(make(2, {{-1, 0}}), InputError);
  }

  TEST_CASE("adjacency queries") {
    Graph g = make(4, {{2, 0}, {3, 1}, {0, 1}});
    CHECK(g.adjacent(0, 2));
    CHECK(g.adjacent(2, 0));
    CHECK_FALSE(g.adjacent(2, 3));
    REQUIRE(g.edge_index(1, 0).has_value());
    CHECK(g.edges()[*g.edge_index(1, 0)] == Edge{0, 1});
    CHECK_FALSE(g.edge_index(2, 3).has_value());
  }

  TEST_CASE("max_degree") {
    CHECK(max_degree(gen_grid_h(9, 4).graph) == 11);
    CHECK(max_degree(testutil::clique(5)) == 4);
    CHECK(max_degree(gen_lower_general(4, 15, 9).graph) <= 15);
  }

  TEST_CASE("connected_components") {
    CHECK(connected_components(testutil::path(5)) == std::vector<VertexSet>{{0, 1, 2, 3, 4}});
    Graph two = make(6, {{0, 2}, {2, 4}, {0, 4}, {1, 3}, {3, 5}, {1, 5}});
    CHECK(connected_components(two) == std::vector<VertexSet>{{0, 2, 4}, {1, 3, 5}});
    CHECK(connected_components(make(4, {})).size() == 4);
    CHECK_FALSE(is_connected(two));
  }

  TEST_CASE("induced_subgraph") {
    Subgraph p3 = induced_subgraph(testutil::cycle(4), std::vector<int>{0, 1, 2});
    CHECK(p3.graph.edge_count() == 2);
    CHECK_FALSE(p3.graph.adjacent(0, 2));
    CHECK(p3.from_parent[3] == -1);

    Graph k5 = testutil::clique(5);
    Subgraph k2 = induced_subgraph(k5, std::vector<int>{1, 4});
    CHECK(k2.graph.edge_count() == 1);
    CHECK(k2.to_parent == std::vector<int>{1, 4});

    std::vector<int> all{0, 1, 2, 3, 4};
    CHECK(induced_subgraph(k5, all).graph == k5);
    CHECK_THROWS_AS(induced_subgraph(k5, std::vector<int>{7}), InputError);
  }

  TEST_CASE("edge_subgraph keeps only listed edges") {
    Graph k4 = testutil::clique(4);
    std::vector<Edge> keep{{0, 1}, {1, 2}};
    Subgraph s = edge_subgraph(k4, std::vector<int>{0, 1, 2}, keep);
    CHECK(s.graph.edge_count() == 2);
    CHECK_FALSE(s.graph.adjacent(0, 2));
  }
}

TEST_SUITE("chordal") {
  TEST_CASE("C4 is not chordal and yields a witness") {
    Graph c4 = testutil::cycle(4);
    ChordalityResult r = is_chordal(c4);
    CHECK_FALSE(r.chordal);
    CHECK_FALSE(r.peo.has_value());
    CHECK(r.witness_cycle.size() == 4);
    CHECK(is_chordless_cycle(c4, r.witness_cycle));
  }

  TEST_CASE("paper families are chordal") {
    CHECK(is_chordal(gen_grid_h(3, 2).graph).chordal);
    CHECK(is_chordal(gen_lower_tw2(11).graph).chordal);
    CHECK(is_chordal(gen_lower_general(4, 15, 9).graph).chordal);
  }

  TEST_CASE("simplicial vertices") {
    CHECK(simplicial_vertices(testutil::path(3)) == VertexSet{0, 2});
    CHECK(simplicial_vertices(testutil::cycle(4)).empty());
    Instance tw2 = gen_lower_tw2(13);
    VertexSet simp = simplicial_vertices(tw2.graph);
    for (int v = 14; v < tw2.graph.vertex_count(); ++v)
      CHECK(std::binary_search(simp.begin(), simp.end(), v));
  }

  TEST_CASE("gadgets are exactly the simplicial vertices outside H") {
    Instance g = gen_lower_general(2, 7, 3);
    VertexSet simp = simplicial_vertices(g.graph);
    VertexSet outside;
    for (int v : simp)
      if (v >= 3 * 2) outside.push_back(v);
    VertexSet gadgets;
    for (int v = 6; v < g.graph.vertex_count(); ++v) gadgets.push_back(v);
    CHECK(outside == gadgets);
  }

  TEST_CASE("agrees with induced-cycle enumeration on random graphs") {
    std::mt19937_64 rng(7);
    int chordal = 0;
    for (int t = 0; t < 400; ++t) {
      int n = 1 + static_cast<int>(rng() % 8);
      Graph g = oracle::random_graph(n, 0.2 + 0.6 * static_cast<double>(rng() % 100) / 100.0, rng);
      ChordalityResult r = is_chordal(g);
      REQUIRE(r.chordal == oracle::brute_chordal(g));
      if (r.chordal) {
        ++chordal;
        REQUIRE(r.peo.has_value());
        // Later neighbours form a clique, checked pairwise.
        std::vector<int> pos(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(r.peo->order[static_cast<std::size_t>(i)])] = i;
        for (int v = 0; v < n; ++v)
          for (int x : g.neighbors(v))
            for (int y : g.neighbors(v))
              if (x < y && pos[static_cast<std::size_t>(x)] > pos[static_cast<std::size_t>(v)] &&
                  pos[static_cast<std::size_t>(y)] > pos[static_cast<std::size_t>(v)])
                REQUIRE(g.adjacent(x, y));
      } else {
        REQUIRE(is_chordless_cycle(g, r.witness_cycle));
        VertexSet simp = simplicial_vertices(g);
        for (int v : r.witness_cycle) CHECK_FALSE(std::binary_search(simp.begin(), simp.end(), v));
      }
    }
    CHECK(chordal > 20);
  }

  TEST_CASE("PEO checks") {
    Graph p3 = testutil::path(3);
    CHECK(is_perfect_elimination_order(p3, {{0, 1, 2}}));
    CHECK_FALSE(is_perfect_elimination_order(p3, {{1, 0, 2}}));
    auto viol = find_peo_violation(p3, {{1, 0, 2}});
    REQUIRE(viol.has_value());
    CHECK(viol->pivot == 1);
  }
}
