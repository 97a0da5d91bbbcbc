#ifndef KOSZUL_BEI_HPP
#define KOSZUL_BEI_HPP

#include <string>
#include <vector>

#include "koszul/graph.hpp"
#include "koszul/poly.hpp"

namespace koszul {

// The 2x2 minar binomial x_i*y_j - x_j*y_i exactly as indexed; callers
// that want the canonical generator should pass i < j.
Polynomial f_ij_raw(int i, int j);

// Normalized to i < j (so the x-variable of the smaller vertex leads).
Polynomial f_ij(int i, int j);

struct BinomialEdgeIdeal {
  Graph graph;
  std::vector<Polynomial> generators;  // one per edge, f_{i,j} with i < j
};

BinomialEdgeIdeal binomial_edge_ideal(const Graph& g);

// Lex priority x_{s(1)} > ... > x_{s(n)} > y_{s(1)} > ... > y_{s(n)}.
MonomialOrder lex_from_vertex_order(const std::vector<int>& vertex_order);

bool has_quadratic_lex_gb(const Graph& g, const std::vector<int>& vertex_order);

// Exhaustive over all vertex orders; guard n <= 7. Cross-asserted by
// callers against the closed-graph characterization.
bool quadratic_gb_exists(const Graph& g);

// G_e: delete e, then complete the neighborhoods of both endpoints.
Graph graph_G_e(const Graph& g, const Edge& e);

// The monomials g_{C,t} over induced cycles of G through e, walking each
// cycle from the smaller endpoint of e to the larger. With
// all_cycles = true, every (not necessarily induced) cycle contributes.
std::vector<Monomial> cycle_monomials(const Graph& g, const Edge& e,
                                      bool all_cycles = false);

// Checks the colon-ideal description of J_{G\e} : f_e against the
// independently computed colon, including the simplified clique form
// when e is a claw-avoiding simplicial edge and the all-cycle variant.
bool verify_colon_formula(const Graph& g, const Edge& e);

// f_ij*f_kl - f_ik*f_jl + f_jk*f_il must vanish identically.
bool plucker_check(int i, int j, int k, int l);

struct TentCheckReport {
  bool x3_f15_in_ideal = false;
  bool y3_f15_in_ideal = false;
  bool explicit_identity = false;
  bool f15_not_in_extended = false;
  bool path_initial_ideal = false;
  bool tent_initial_ideal = false;
  std::string detail;

  bool all_pass() const {
    return x3_f15_in_ideal && y3_f15_in_ideal && explicit_identity &&
           f15_not_in_extended && path_initial_ideal && tent_initial_ideal;
  }
};

// The packaged membership/initial-ideal checks for the 5-vertex graph
// obtained from the labeled tent by deleting vertex 6.
TentCheckReport tent_section4_checks();

}  // namespace koszul

#endif
