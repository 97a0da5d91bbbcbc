#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "koszul/bei.hpp"
#include "koszul/betti.hpp"

using namespace koszul;

namespace {

Monomial mono(const char* text) {
  return parse_polynomial(text).terms().begin()->first;
}

std::vector<Monomial> init_of(const Graph& g, const std::vector<int>& order) {
  return initial_ideal(
      buchberger(binomial_edge_ideal(g).generators,
                 lex_from_vertex_order(order)));
}

// Alternating Betti sums per internal degree must match the Hilbert
// numerator of the quotient.
void check_alternating_sum(const std::vector<Monomial>& gens) {
  BettiTable table = betti_table_squarefree(gens, 0);
  std::vector<long> numerator = hilbert_numerator(gens);
  std::map<int, long> alt;
  for (const auto& [key, value] : table.entries)
    alt[key.second] += (key.first % 2 == 0 ? value : -value);
  for (const auto& [j, sum] : alt) {
    long expected =
        j < static_cast<int>(numerator.size()) ? numerator[static_cast<size_t>(j)] : 0;
    CHECK(sum == expected);
  }
  for (size_t j = 0; j < numerator.size(); ++j)
    if (numerator[j] != 0) CHECK(alt[static_cast<int>(j)] == numerator[j]);
}

}  // namespace

TEST_CASE("stanley reisner complexes") {
  std::set<VarId> two = {var_x(1), var_y(2)};
  SimplicialComplex c = stanley_reisner({mono("x1*y2")}, two);
  REQUIRE(c.facets.size() == 2);
  CHECK(c.is_face({var_x(1)}));
  CHECK(c.is_face({var_y(2)}));
  CHECK_FALSE(c.is_face(two));

  SimplicialComplex full = stanley_reisner({}, two);
  REQUIRE(full.facets.size() == 1);
  CHECK(full.facets[0] == two);

  CHECK_THROWS_AS(stanley_reisner({mono("x1^2")}, {var_x(1)}),
                  std::invalid_argument);
}

TEST_CASE("reduced homology ranks") {
  // Hollow triangle: a circle.
  SimplicialComplex hollow;
  hollow.vertices = {var_x(1), var_x(2), var_x(3)};
  hollow.facets = {{var_x(1), var_x(2)}, {var_x(1), var_x(3)},
                   {var_x(2), var_x(3)}};
  CHECK(reduced_homology_rank(hollow, 1) == 1);
  CHECK(reduced_homology_rank(hollow, 0) == 0);
  CHECK(reduced_homology_rank(hollow, -1) == 0);

  // Full simplex: contractible.
  SimplicialComplex simplex;
  simplex.vertices = hollow.vertices;
  simplex.facets = {{var_x(1), var_x(2), var_x(3)}};
  for (int d = -1; d <= 2; ++d) CHECK(reduced_homology_rank(simplex, d) == 0);

  // Two isolated points.
  SimplicialComplex points;
  points.vertices = {var_x(1), var_x(2)};
  points.facets = {{var_x(1)}, {var_x(2)}};
  CHECK(reduced_homology_rank(points, 0) == 1);
  CHECK(reduced_homology_rank(points, -1) == 0);

  // Only the empty face.
  SimplicialComplex empty_face;
  empty_face.facets = {{}};
  CHECK(reduced_homology_rank(empty_face, -1) == 1);
}

TEST_CASE("betti table of the chorded square initial ideal") {
  BettiTable t =
      betti_table_squarefree(init_of(named_graph("c4_chord"), {1, 2, 3, 4}), 8);
  CHECK(t.get(0, 0) == 1);
  CHECK(t.get(1, 2) == 5);
  CHECK(t.get(2, 3) == 4);
  CHECK(t.get(2, 4) == 3);
  CHECK(t.get(3, 5) == 4);
  CHECK(t.get(4, 6) == 1);
  CHECK(t.entries.size() == 6);
}

TEST_CASE("principal squarefree quadric") {
  BettiTable t = betti_table_squarefree({mono("x1*y2")}, 2);
  CHECK(t.get(0, 0) == 1);
  CHECK(t.get(1, 2) == 1);
  CHECK(t.entries.size() == 2);
}

TEST_CASE("minimal generator count appears in degree two") {
  std::vector<Monomial> tent_init =
      init_of(delete_vertex(named_graph("tent_labeled"), 6).graph,
              {1, 2, 3, 4, 5});
  REQUIRE(tent_init.size() == 7);
  BettiTable t = betti_table_squarefree(tent_init, 10);
  CHECK(t.get(1, 2) == 7);
}

TEST_CASE("taylor strand oracle agrees with the simplicial route") {
  std::vector<std::vector<Monomial>> ideals = {
      {mono("x1*y2")},
      {mono("x1*y2"), mono("x2*y3")},
      {mono("x1*x2"), mono("x2*x3"), mono("x1*x3")},
      init_of(named_graph("c4_chord"), {1, 2, 3, 4}),
      init_of(named_graph("path", 4), {1, 2, 3, 4})};
  for (const auto& gens : ideals) {
    BettiTable hochster = betti_table_squarefree(gens, 0);
    BettiTable taylor = betti_table_taylor(gens);
    CHECK(hochster.entries == taylor.entries);
  }
}

TEST_CASE("taylor oracle on random squarefree ideals") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> var(1, 4), count(1, 5);
  for (int trial = 0; trial < 12; ++trial) {
    std::set<Monomial> gens_set;
    int m = count(rng);
    for (int i = 0; i < m; ++i) {
      int a = var(rng), b = var(rng);
      if (a == b) continue;
      gens_set.insert(Monomial::variable(var_x(a)) *
                      Monomial::variable(var_y(b)));
    }
    // Drop non-minimal generators.
    std::vector<Monomial> gens;
    for (const Monomial& g : gens_set) {
      bool minimal = true;
      for (const Monomial& h : gens_set)
        if (!(h == g) && h.divides(g)) minimal = false;
      if (minimal) gens.push_back(g);
    }
    if (gens.empty()) continue;
    BettiTable hochster = betti_table_squarefree(gens, 0);
    BettiTable taylor = betti_table_taylor(gens);
    CHECK(hochster.entries == taylor.entries);
    check_alternating_sum(gens);
  }
}

TEST_CASE("alternating sums match the hilbert numerator") {
  check_alternating_sum(init_of(named_graph("c4_chord"), {1, 2, 3, 4}));
  check_alternating_sum(
      init_of(delete_vertex(named_graph("tent_labeled"), 6).graph,
              {1, 2, 3, 4, 5}));
}

TEST_CASE("assembled second betti number") {
  CHECK(c4_betti_assembly() == 9);
}

TEST_CASE("table rendering layout") {
  BettiTable t =
      betti_table_squarefree(init_of(named_graph("c4_chord"), {1, 2, 3, 4}), 8);
  std::string s = t.render();
  CHECK(s.find("5\t4") != std::string::npos);
  CHECK(s.find("3\t4\t1") != std::string::npos);
}
