#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "tpw/chordal.hpp"
#include "tpw/decomposition.hpp"
#include "tpw/errors.hpp"
#include "tpw/generators.hpp"
#include "tpw/partition.hpp"

using namespace tpw;

namespace {

// Every claim attached to an instance, checked with the library's oracles.
void check_claims(const Instance& inst) {
  const InstanceMeta& m = inst.meta;
  const Graph& g = inst.graph;
  REQUIRE(static_cast<int>(m.vertex_labels.size()) == g.vertex_count());
  REQUIRE(std::set<std::string>(m.vertex_labels.begin(), m.vertex_labels.end()).size() == m.vertex_labels.size());
  bool chordal = is_chordal(g).chordal;
  if (m.claimed_chordal) REQUIRE(*m.claimed_chordal == chordal);
  if (m.claimed_maxdeg_bound) REQUIRE(max_degree(g) <= *m.claimed_maxdeg_bound);
  if (m.claimed_tw && (chordal || g.vertex_count() <= kTreewidthExactMaxN))
    REQUIRE(treewidth_exact(g).width == *m.claimed_tw);
  if (g.vertex_count() <= 10 && is_connected(g)) {
    int tpw = exact_tpw(g).lower_bound;
    if (m.claimed_tpw_lower) REQUIRE(*m.claimed_tpw_lower <= Rational(tpw));
    if (m.claimed_tpw_upper) REQUIRE(Rational(tpw) <= *m.claimed_tpw_upper);
  }
}

}  // namespace

TEST_SUITE("generators") {
  TEST_CASE("grid_h") {
    Instance h = gen_grid_h(9, 4);
    CHECK(h.graph.vertex_count() == 36);
    CHECK(max_degree(h.graph) == 11);
    auto id = [](int x, int y) { return (x - 1) * 4 + (y - 1); };
    for (int x = 1; x <= 9; ++x) {
      std::vector<int> col;
      for (int y = 1; y <= 4; ++y) col.push_back(id(x, y));
      CHECK(is_clique(h.graph, col));
    }
    for (int y = 1; y <= 4; ++y) {
      std::vector<int> row;
      for (int x = 1; x <= 9; ++x) row.push_back(id(x, y));
      Subgraph r = induced_subgraph(h.graph, make_vertex_set(row));
      CHECK(r.graph.edge_count() == 8);
      CHECK(is_connected(r.graph));
      CHECK(max_degree(r.graph) == 2);
    }
    CHECK(h.meta.vertex_labels[static_cast<std::size_t>(id(2, 3))] == "(2,3)");
    check_claims(h);
    check_claims(gen_grid_h(1, 3));
    check_claims(gen_grid_h(2, 3));
  }

  TEST_CASE("lower_general") {
    Instance big = gen_lower_general(4, 15, 9);
    CHECK(big.graph.vertex_count() == 100);
    CHECK(max_degree(big.graph) <= 15);
    CHECK(*big.meta.claimed_tpw_lower == Rational(3));
    check_claims(big);
    Instance small = gen_lower_general(2, 7, 3);
    CHECK(small.graph.vertex_count() == 3 * 2 + 2 * 2 * 1);
    CHECK(treewidth_exact(small.graph).width == 3);
    CHECK(max_degree(small.graph) <= 7);
    check_claims(small);
    CHECK(small.meta.vertex_labels[6] == "g(1,1,1)");

    CHECK_THROWS_AS(gen_lower_general(1, 7, 3), InputError);
    CHECK_THROWS_AS(gen_lower_general(2, 6, 3), InputError);
    CHECK_THROWS_AS(gen_lower_general(4, 15, 6), InputError);
    try {
      gen_lower_general(2, 6, 3);
    } catch (const InputError& e) {
      CHECK(std::string(e.what()).find("n > max{k(delta-3k)/2, 2}") != std::string::npos);
    }
  }

  TEST_CASE("lower_tw2") {
    Instance g13 = gen_lower_tw2(13);
    CHECK(g13.graph.vertex_count() == 74);
    CHECK(max_degree(g13.graph) == 13);
    CHECK(treewidth_exact(g13.graph).width == 2);
    CHECK_FALSE(oracle::brute_has_clique(g13.graph, 4));
    CHECK(*g13.meta.claimed_tpw_lower == Rational(8));
    check_claims(g13);

    Instance g11 = gen_lower_tw2(11);
    CHECK(*g11.meta.claimed_tpw_lower == Rational(20, 3));
    CHECK(g11.meta.claimed_tpw_lower->ceil() == 7);
    CHECK_FALSE(gen_lower_tw2(9).meta.claimed_tpw_lower.has_value());
    CHECK(gen_lower_tw2(5).graph.vertex_count() == 1 + 5 + 4 * 1);
    CHECK(g11.meta.vertex_labels[0] == "r");
    CHECK(g11.meta.vertex_labels[12] == "w(1,1)");

    CHECK_THROWS_AS(gen_lower_tw2(12), InputError);
    CHECK_THROWS_AS(gen_lower_tw2(3), InputError);
  }

  TEST_CASE("simple families") {
    Instance wheel = gen_family("wheel", {{"n", 8}}, 0);
    CHECK(wheel.graph.degree(0) == 8);
    CHECK(treewidth_exact(wheel.graph).width == 3);
    check_claims(wheel);

    Instance k6 = gen_family("clique", {{"n", 6}}, 0);
    CHECK(*k6.meta.claimed_tpw_lower == Rational(3));
    check_claims(k6);

    Instance kt = gen_family("random_ktree", {{"n", 10}, {"k", 2}}, 1);
    CHECK(is_chordal(kt.graph).chordal);
    CHECK(treewidth_exact(kt.graph).width == 2);
    check_claims(kt);

    for (std::int64_t n : {1, 2, 7}) check_claims(gen_family("path", {{"n", n}}, 0));
    for (std::int64_t n : {3, 4, 8}) check_claims(gen_family("cycle", {{"n", n}}, 0));
    check_claims(gen_family("random_tree", {{"n", 9}}, 4));
    check_claims(gen_family("random_connected", {{"n", 9}, {"p", 30}}, 4));
  }

  TEST_CASE("determinism and seeds") {
    FamilyParams p{{"n", 30}, {"k", 3}};
    CHECK(gen_family("random_ktree", p, 7).graph == gen_family("random_ktree", p, 7).graph);
    CHECK_FALSE(gen_family("random_ktree", p, 7).graph == gen_family("random_ktree", p, 8).graph);
  }

  TEST_CASE("degree cap") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      Instance inst = gen_family("random_ktree", {{"n", 60}, {"k", 2}, {"max_degree", 8}}, seed);
      CHECK(max_degree(inst.graph) <= 8);
      check_claims(inst);
    }
    CHECK_THROWS_AS(gen_family("random_ktree", {{"n", 10}, {"k", 3}, {"max_degree", 3}}, 1), InputError);
  }

  TEST_CASE("validation") {
    CHECK_THROWS_AS(gen_family("nope", {}, 0), InputError);
    CHECK_THROWS_AS(gen_family("path", {}, 0), InputError);
    CHECK_THROWS_AS(gen_family("path", {{"n", 3}, {"k", 1}}, 0), InputError);
    CHECK_THROWS_AS(gen_family("cycle", {{"n", 2}}, 0), InputError);
    CHECK_THROWS_AS(validate_family("random_connected", {{"n", 5}, {"p", 101}}), InputError);
    CHECK_NOTHROW(validate_family("lower_tw2", {{"delta", 13}}));
    CHECK(family_names().size() == 10);
  }
}
