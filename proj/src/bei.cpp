#include "koszul/bei.hpp"

#include <algorithm>
#include <set>

#include "koszul/orders.hpp"

namespace koszul {

Polynomial f_ij_raw(int i, int j) {
  if (i == j) throw std::invalid_argument("f_ij needs distinct indices");
  Polynomial p;
  p.add_term(Monomial::variable(var_x(i)) * Monomial::variable(var_y(j)), 1);
  p.add_term(Monomial::variable(var_x(j)) * Monomial::variable(var_y(i)), -1);
  return p;
}

Polynomial f_ij(int i, int j) { return f_ij_raw(std::min(i, j), std::max(i, j)); }

BinomialEdgeIdeal binomial_edge_ideal(const Graph& g) {
  BinomialEdgeIdeal ideal{g, {}};
  for (const Edge& e : g.edges()) ideal.generators.push_back(f_ij(e.u, e.v));
  return ideal;
}

MonomialOrder lex_from_vertex_order(const std::vector<int>& vertex_order) {
  std::set<int> seen;
  for (int v : vertex_order) {
    if (v < 1 || !seen.insert(v).second)
      throw std::invalid_argument("vertex labels must be distinct and >= 1");
  }
  MonomialOrder order;
  for (int v : vertex_order) order.priority.push_back(var_x(v));
  for (int v : vertex_order) order.priority.push_back(var_y(v));
  return order;
}

bool has_quadratic_lex_gb(const Graph& g, const std::vector<int>& vertex_order) {
  BinomialEdgeIdeal ideal = binomial_edge_ideal(g);
  GroebnerBasis gb = buchberger(ideal.generators,
                                lex_from_vertex_order(vertex_order));
  return gb.max_degree() <= 2;
}

bool quadratic_gb_exists(const Graph& g) {
  int n = g.vertex_count();
  if (n > 7)
    throw guard_error(
        "quadratic_gb_exists is exhaustive over vertex orders; n <= 7 "
        "required, use the combinatorial closed-graph test instead");
  std::vector<int> perm(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i + 1;
  bool found = false;
  do {
    if (has_quadratic_lex_gb(g, perm)) {
      found = true;
      break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  bool closed = find_closed_order(g).has_value();
  if (found != closed)
    throw consistency_error(
        "quadratic lex GB existence disagrees with closed-graph recognition");
  return found;
}

Graph graph_G_e(const Graph& g, const Edge& e) {
  if (!g.has_edge(e)) throw std::invalid_argument("edge not in graph");
  Graph rest = delete_edge(g, e);
  std::vector<Edge> edges = rest.edges();
  for (int endpoint : {e.u, e.v}) {
    std::vector<int> nb(rest.neighbors(endpoint).begin(),
                        rest.neighbors(endpoint).end());
    for (size_t a = 0; a < nb.size(); ++a)
      for (size_t b = a + 1; b < nb.size(); ++b) edges.emplace_back(nb[a], nb[b]);
  }
  return Graph(g.vertex_count(), edges);
}

namespace {

// Simple i -> j paths in G \ e; each corresponds to one cycle through e.
void path_search(const Graph& rest, int target, std::vector<int>& path,
                 std::vector<bool>& on_path,
                 std::vector<std::vector<int>>& interiors) {
  int last = path.back();
  for (int v : rest.neighbors(last)) {
    if (v == target) {
      if (path.size() >= 2)
        interiors.push_back(std::vector<int>(path.begin() + 1, path.end()));
      continue;
    }
    if (on_path[v]) continue;
    path.push_back(v);
    on_path[v] = true;
    path_search(rest, target, path, on_path, interiors);
    on_path[v] = false;
    path.pop_back();
  }
}

bool cycle_is_induced(const Graph& g, int i, int j,
                      const std::vector<int>& interior) {
  // Vertex sequence of the cycle: i, interior..., j, back to i.
  std::vector<int> cyc{i};
  cyc.insert(cyc.end(), interior.begin(), interior.end());
  cyc.push_back(j);
  int len = static_cast<int>(cyc.size());
  for (int a = 0; a < len; ++a)
    for (int b = a + 1; b < len; ++b) {
      bool consecutive = (b == a + 1) || (a == 0 && b == len - 1);
      if (g.adjacent(cyc[a], cyc[b]) != consecutive) return false;
    }
  return true;
}

}  // namespace

std::vector<Monomial> cycle_monomials(const Graph& g, const Edge& e,
                                      bool all_cycles) {
  if (!g.has_edge(e)) throw std::invalid_argument("edge not in graph");
  Graph rest = delete_edge(g, e);
  std::vector<int> path{e.u};
  std::vector<bool> on_path(static_cast<size_t>(g.vertex_count()) + 1, false);
  on_path[e.u] = true;
  std::vector<std::vector<int>> interiors;
  path_search(rest, e.v, path, on_path, interiors);

  std::set<Monomial> out;
  for (const std::vector<int>& interior : interiors) {
    if (!all_cycles && !cycle_is_induced(g, e.u, e.v, interior)) continue;
    int s = static_cast<int>(interior.size());
    for (int t = 0; t <= s; ++t) {
      Monomial m;
      for (int a = 0; a < t; ++a)
        m = m * Monomial::variable(var_y(interior[a]));
      for (int a = t; a < s; ++a)
        m = m * Monomial::variable(var_x(interior[a]));
      out.insert(m);
    }
  }
  return std::vector<Monomial>(out.begin(), out.end());
}

bool verify_colon_formula(const Graph& g, const Edge& e) {
  if (!g.has_edge(e)) throw std::invalid_argument("edge not in graph");
  if (g.vertex_count() > 6)
    throw guard_error("colon formula verification limited to n <= 6");
  std::set<VarId> vars;
  for (int v = 1; v <= g.vertex_count(); ++v) {
    vars.insert(var_x(v));
    vars.insert(var_y(v));
  }
  MonomialOrder order = canonical_order(vars);

  Graph rest = delete_edge(g, e);
  std::vector<Polynomial> gens_rest = binomial_edge_ideal(rest).generators;
  Polynomial fe = f_ij(e.u, e.v);
  GroebnerBasis lhs = colon_by_element(gens_rest, fe, order);

  std::vector<Polynomial> rhs = binomial_edge_ideal(graph_G_e(g, e)).generators;
  for (const Monomial& m : cycle_monomials(g, e, false))
    rhs.push_back(Polynomial(m, 1));
  bool ok = ideal_equal(lhs.elements, rhs);

  // The induced-cycle restriction must not change the ideal.
  std::vector<Polynomial> rhs_all = binomial_edge_ideal(graph_G_e(g, e)).generators;
  for (const Monomial& m : cycle_monomials(g, e, true))
    rhs_all.push_back(Polynomial(m, 1));
  ok = ok && ideal_equal(rhs, rhs_all);

  if (find_perfect_elimination_order(g) && is_simplicial_edge(g, e) &&
      is_claw_avoiding(g, e)) {
    // Unique maximal clique containing e.
    std::set<int> clique;
    for (const auto& c : maximal_cliques(g))
      if (c.count(e.u) && c.count(e.v)) clique = c;
    std::vector<Polynomial> rhs_clique = gens_rest;
    for (int k : clique) {
      if (k == e.u || k == e.v) continue;
      rhs_clique.push_back(Polynomial(Monomial::variable(var_x(k)), 1));
      rhs_clique.push_back(Polynomial(Monomial::variable(var_y(k)), 1));
    }
    ok = ok && ideal_equal(lhs.elements, rhs_clique);
  }
  return ok;
}

bool plucker_check(int i, int j, int k, int l) {
  std::set<int> distinct{i, j, k, l};
  if (distinct.size() != 4)
    throw std::invalid_argument("plucker_check needs distinct indices");
  Polynomial combo = f_ij_raw(i, j) * f_ij_raw(k, l) -
                     f_ij_raw(i, k) * f_ij_raw(j, l) +
                     f_ij_raw(j, k) * f_ij_raw(i, l);
  return combo.is_zero();
}

TentCheckReport tent_section4_checks() {
  TentCheckReport report;
  Graph tent = named_graph("tent_labeled");
  Graph g = delete_vertex(tent, 6).graph;
  MonomialOrder order = lex_from_vertex_order({1, 2, 3, 4, 5});
  std::vector<Polynomial> gens = binomial_edge_ideal(g).generators;
  GroebnerBasis gb = buchberger(gens, order);

  Polynomial f15 = f_ij(1, 5);
  Polynomial x3(Monomial::variable(var_x(3)), 1);
  Polynomial y3(Monomial::variable(var_y(3)), 1);
  report.x3_f15_in_ideal = ideal_membership(x3 * f15, gb);
  report.y3_f15_in_ideal = ideal_membership(y3 * f15, gb);

  Polynomial x1(Monomial::variable(var_x(1)), 1);
  Polynomial x5(Monomial::variable(var_x(5)), 1);
  report.explicit_identity =
      (x3 * f15 - x1 * f_ij(3, 5) - x5 * f_ij(1, 3)).is_zero();

  std::vector<Polynomial> extended = gens;
  for (int k : {2, 4}) {
    extended.push_back(Polynomial(Monomial::variable(var_x(k)), 1));
    extended.push_back(Polynomial(Monomial::variable(var_y(k)), 1));
  }
  GroebnerBasis gb_ext = buchberger(extended, order);
  report.f15_not_in_extended = !ideal_membership(f15, gb_ext);

  // Induced path on {1, 3, 5} with lex x1 > x3 > x5 > y1 > y3 > y5.
  MonomialOrder path_order;
  for (int v : {1, 3, 5}) path_order.priority.push_back(var_x(v));
  for (int v : {1, 3, 5}) path_order.priority.push_back(var_y(v));
  GroebnerBasis gb_path = buchberger({f_ij(1, 3), f_ij(3, 5)}, path_order);
  std::set<Monomial> path_init;
  for (const Monomial& m : initial_ideal(gb_path)) path_init.insert(m);
  std::set<Monomial> path_expected{
      Monomial::variable(var_x(1)) * Monomial::variable(var_y(3)),
      Monomial::variable(var_x(3)) * Monomial::variable(var_y(5))};
  report.path_initial_ideal = path_init == path_expected;

  std::set<Monomial> tent_init;
  for (const Monomial& m : initial_ideal(gb)) tent_init.insert(m);
  std::set<Monomial> tent_expected;
  for (auto [a, b] : std::vector<std::pair<int, int>>{
           {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 5}})
    tent_expected.insert(Monomial::variable(var_x(a)) *
                         Monomial::variable(var_y(b)));
  report.tent_initial_ideal = tent_init == tent_expected;

  if (!report.all_pass()) report.detail = "one or more tent checks failed";
  return report;
}

}  // namespace koszul
