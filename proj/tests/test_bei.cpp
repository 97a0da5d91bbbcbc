#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "koszul/bei.hpp"
#include "koszul/classify.hpp"
#include "koszul/survey.hpp"

using namespace koszul;

TEST_CASE("edge binomials") {
  CHECK(f_ij(1, 2) == parse_polynomial("x1*y2 - x2*y1"));
  CHECK(f_ij_raw(2, 1) == -f_ij_raw(1, 2));
  CHECK(f_ij(2, 1) == f_ij(1, 2));
  CHECK_THROWS_AS(f_ij(3, 3), std::invalid_argument);
}

TEST_CASE("ideal construction") {
  CHECK(binomial_edge_ideal(parse_edge_list("n 3\n")).generators.empty());
  BinomialEdgeIdeal claw = binomial_edge_ideal(named_graph("claw"));
  REQUIRE(claw.generators.size() == 3);
  CHECK(claw.generators[0] == f_ij(1, 2));
  CHECK(claw.generators[1] == f_ij(1, 3));
  CHECK(claw.generators[2] == f_ij(1, 4));
}

TEST_CASE("lex order from a vertex order") {
  MonomialOrder id4 = lex_from_vertex_order({1, 2, 3, 4});
  REQUIRE(id4.priority.size() == 8);
  CHECK(id4.priority[0] == var_x(1));
  CHECK(id4.priority[3] == var_x(4));
  CHECK(id4.priority[4] == var_y(1));

  MonomialOrder rev = lex_from_vertex_order({4, 3, 2, 1});
  CHECK(rev.priority[0] == var_x(4));
  CHECK(rev.priority[7] == var_y(1));

  MonomialOrder one = lex_from_vertex_order({1});
  CHECK(one.priority == std::vector<VarId>{var_x(1), var_y(1)});

  CHECK_THROWS_AS(lex_from_vertex_order({1, 1}), std::invalid_argument);
}

TEST_CASE("quadratic basis detection") {
  CHECK(has_quadratic_lex_gb(named_graph("c4_chord"), {1, 2, 3, 4}));
  for (int k = 2; k <= 4; ++k) {
    std::vector<int> id(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) id[static_cast<size_t>(i)] = i + 1;
    CHECK(has_quadratic_lex_gb(named_graph("complete", k), id));
  }
  // One arbitrary order on the net fails; the full 720-order sweep lives
  // in the acceptance suite.
  CHECK_FALSE(has_quadratic_lex_gb(named_graph("net"), {1, 2, 3, 4, 5, 6}));

  CHECK(quadratic_gb_exists(named_graph("c4_chord")));
  CHECK(quadratic_gb_exists(named_graph("path", 4)));
  CHECK_FALSE(quadratic_gb_exists(named_graph("cycle", 4)));
}

TEST_CASE("completion graph of an edge") {
  Graph ge = graph_G_e(named_graph("claw"), Edge(1, 4));
  CHECK(ge.adjacent(2, 3));
  CHECK_FALSE(ge.adjacent(1, 4));
  CHECK(ge.edge_count() == 3);

  Graph single = graph_G_e(named_graph("path", 2), Edge(1, 2));
  CHECK(single.edge_count() == 0);

  Graph c4c = graph_G_e(named_graph("c4_chord"), Edge(2, 3));
  CHECK(c4c.adjacent(1, 4));

  CHECK_THROWS_AS(graph_G_e(named_graph("claw"), Edge(2, 3)),
                  std::invalid_argument);
}

TEST_CASE("cycle monomials") {
  CHECK(cycle_monomials(named_graph("claw"), Edge(1, 4)).empty());

  std::vector<Monomial> tri =
      cycle_monomials(named_graph("complete", 3), Edge(1, 2));
  std::vector<Monomial> tri_expected = {Monomial::variable(var_x(3)),
                                        Monomial::variable(var_y(3))};
  std::sort(tri.begin(), tri.end());
  std::sort(tri_expected.begin(), tri_expected.end());
  CHECK(tri == tri_expected);

  std::vector<Monomial> c4 = cycle_monomials(named_graph("cycle", 4), Edge(1, 2));
  std::vector<Monomial> c4_expected = {
      Monomial::variable(var_x(4)) * Monomial::variable(var_x(3)),
      Monomial::variable(var_y(4)) * Monomial::variable(var_x(3)),
      Monomial::variable(var_y(4)) * Monomial::variable(var_y(3))};
  std::sort(c4.begin(), c4.end());
  std::sort(c4_expected.begin(), c4_expected.end());
  CHECK(c4 == c4_expected);

  // Within the chorded 4-cycle, only triangles pass through the chord.
  std::vector<Monomial> chord =
      cycle_monomials(named_graph("c4_chord"), Edge(2, 3));
  CHECK(chord.size() == 4);
  for (const Monomial& m : chord) CHECK(m.degree() == 1);
}

TEST_CASE("colon identity on the reference edges") {
  CHECK(verify_colon_formula(named_graph("claw"), Edge(1, 4)));
  for (const Edge& e : named_graph("complete", 3).edges())
    CHECK(verify_colon_formula(named_graph("complete", 3), e));
  CHECK(verify_colon_formula(named_graph("c4_chord"), Edge(2, 3)));
  CHECK(verify_colon_formula(named_graph("cycle", 4), Edge(1, 2)));
  CHECK(verify_colon_formula(named_graph("cycle", 5), Edge(1, 2)));
}

TEST_CASE("claw colon ideal is the completed triangle") {
  Graph claw = named_graph("claw");
  std::set<VarId> vars;
  for (int i = 1; i <= 4; ++i) {
    vars.insert(var_x(i));
    vars.insert(var_y(i));
  }
  GroebnerBasis colon = colon_by_element(
      binomial_edge_ideal(delete_edge(claw, Edge(1, 4))).generators,
      f_ij(1, 4), canonical_order(vars));
  CHECK(ideal_equal(colon.elements, {f_ij(1, 2), f_ij(1, 3), f_ij(2, 3)}));
}

TEST_CASE("index minor identity") {
  CHECK(plucker_check(1, 2, 3, 4));
  CHECK(plucker_check(2, 3, 5, 7));
  CHECK(plucker_check(9, 1, 6, 2));
  CHECK_THROWS_AS(plucker_check(1, 2, 2, 4), std::invalid_argument);

  // Same products with a flipped sign must not vanish.
  Polynomial wrong = f_ij_raw(1, 2) * f_ij_raw(3, 4) +
                     f_ij_raw(1, 3) * f_ij_raw(2, 4) +
                     f_ij_raw(2, 3) * f_ij_raw(1, 4);
  CHECK_FALSE(wrong.is_zero());
}

TEST_CASE("five vertex tent restriction checks") {
  TentCheckReport r = tent_section4_checks();
  CHECK(r.x3_f15_in_ideal);
  CHECK(r.y3_f15_in_ideal);
  CHECK(r.explicit_identity);
  CHECK(r.f15_not_in_extended);
  CHECK(r.path_initial_ideal);
  CHECK(r.tent_initial_ideal);
  CHECK(r.all_pass());
}

TEST_CASE("closed order certificates give quadratic bases") {
  for (int n = 2; n <= 5; ++n)
    for (const Graph& g : enumerate_connected_graphs(n)) {
      ClassificationReport r = classify(g);
      if (r.closed_order)
        CHECK(has_quadratic_lex_gb(g, r.closed_order->seq));
    }
}
