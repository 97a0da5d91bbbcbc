#include "koszul/orders.hpp"

#include <algorithm>

#include "koszul/forbidden.hpp"

namespace koszul {

namespace {

bool is_permutation_of_vertices(const Graph& g, const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != g.vertex_count()) return false;
  std::vector<bool> seen(static_cast<size_t>(g.vertex_count()) + 1, false);
  for (int v : order) {
    if (v < 1 || v > g.vertex_count() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool simplicial_in(const Graph& g, const std::vector<bool>& alive, int v) {
  std::vector<int> nb;
  for (int w : g.neighbors(v))
    if (alive[w]) nb.push_back(w);
  for (size_t i = 0; i < nb.size(); ++i)
    for (size_t j = i + 1; j < nb.size(); ++j)
      if (!g.adjacent(nb[i], nb[j])) return false;
  return true;
}

bool simple_in(const Graph& g, const std::vector<bool>& alive, int v) {
  std::vector<int> members{v};
  for (int w : g.neighbors(v))
    if (alive[w]) members.push_back(w);
  std::vector<std::set<int>> hoods;
  for (int w : members) {
    std::set<int> h{w};
    for (int u : g.neighbors(w))
      if (alive[u]) h.insert(u);
    hoods.push_back(std::move(h));
  }
  std::sort(hoods.begin(), hoods.end(),
            [](const auto& a, const auto& b) { return a.size() < b.size(); });
  for (size_t i = 0; i + 1 < hoods.size(); ++i)
    if (!std::includes(hoods[i + 1].begin(), hoods[i + 1].end(),
                       hoods[i].begin(), hoods[i].end()))
      return false;
  return true;
}

}  // namespace

bool is_simplicial_vertex(const Graph& g, int v) {
  std::vector<bool> alive(static_cast<size_t>(g.vertex_count()) + 1, true);
  (void)g.neighbors(v);  // range check
  return simplicial_in(g, alive, v);
}

bool is_simple_vertex(const Graph& g, int v) {
  std::vector<bool> alive(static_cast<size_t>(g.vertex_count()) + 1, true);
  (void)g.neighbors(v);
  return simple_in(g, alive, v);
}

std::optional<VertexOrder> find_perfect_elimination_order(const Graph& g) {
  int n = g.vertex_count();
  std::vector<bool> alive(static_cast<size_t>(n) + 1, true);
  std::vector<int> seq;
  for (int step = 0; step < n; ++step) {
    int pick = 0;
    for (int v = 1; v <= n && pick == 0; ++v)
      if (alive[v] && simplicial_in(g, alive, v)) pick = v;
    if (pick == 0) return std::nullopt;
    alive[pick] = false;
    seq.push_back(pick);
  }
  return VertexOrder{seq, "perfect"};
}

bool verify_perfect_elimination_order(const Graph& g,
                                      const std::vector<int>& order) {
  if (!is_permutation_of_vertices(g, order))
    throw std::invalid_argument("order is not a permutation of V(G)");
  int n = g.vertex_count();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = i + 1; k < n; ++k) {
        if (j == k) continue;
        if (g.adjacent(order[i], order[j]) && g.adjacent(order[i], order[k]) &&
            !g.adjacent(order[j], order[k]))
          return false;
      }
  return true;
}

bool greedy_simple_elimination_succeeds(const Graph& g) {
  int n = g.vertex_count();
  std::vector<bool> alive(static_cast<size_t>(n) + 1, true);
  for (int step = 0; step < n; ++step) {
    int pick = 0;
    for (int v = 1; v <= n && pick == 0; ++v)
      if (alive[v] && simple_in(g, alive, v)) pick = v;
    if (pick == 0) return false;
    alive[pick] = false;
  }
  return true;
}

namespace {

// Incremental feasibility for a strong-elimination prefix: checks every
// PEO triple and strong quadruple whose latest position is the one just
// placed. Positions are 0-based here.
bool strong_prefix_ok(const Graph& g, const std::vector<int>& seq) {
  int p = static_cast<int>(seq.size()) - 1;
  // PEO: i < j < p with edges (i,p),(i,j) need edge (j,p).
  for (int i = 0; i < p; ++i) {
    if (!g.adjacent(seq[i], seq[p])) continue;
    for (int j = i + 1; j < p; ++j)
      if (g.adjacent(seq[i], seq[j]) && !g.adjacent(seq[j], seq[p]))
        return false;
  }
  // Quadruples with l = p: i < k < p, j in (i, p); edges (i,k),(k,j),(i,p)
  // require (j,p) unless j = p.
  for (int i = 0; i < p; ++i) {
    if (!g.adjacent(seq[i], seq[p])) continue;
    for (int k = i + 1; k < p; ++k) {
      if (!g.adjacent(seq[i], seq[k])) continue;
      for (int j = i + 1; j <= p; ++j) {
        if (j == k || j == p) continue;
        if (g.adjacent(seq[k], seq[j]) && !g.adjacent(seq[j], seq[p]))
          return false;
      }
    }
  }
  // Quadruples with j = p: i < k < l < p; edges (i,k),(k,p),(i,l) require
  // (p,l).
  for (int k = 0; k < p; ++k) {
    if (!g.adjacent(seq[k], seq[p])) continue;
    for (int i = 0; i < k; ++i) {
      if (!g.adjacent(seq[i], seq[k])) continue;
      for (int l = k + 1; l < p; ++l)
        if (g.adjacent(seq[i], seq[l]) && !g.adjacent(seq[p], seq[l]))
          return false;
    }
  }
  return true;
}

bool strong_backtrack(const Graph& g, std::vector<bool>& alive,
                      std::vector<int>& seq) {
  int n = g.vertex_count();
  if (static_cast<int>(seq.size()) == n) return true;
  for (int v = 1; v <= n; ++v) {
    if (!alive[v] || !simple_in(g, alive, v)) continue;
    seq.push_back(v);
    alive[v] = false;
    if (strong_prefix_ok(g, seq) && strong_backtrack(g, alive, seq))
      return true;
    alive[v] = true;
    seq.pop_back();
  }
  return false;
}

}  // namespace

std::optional<VertexOrder> find_strong_elimination_order(const Graph& g) {
  int n = g.vertex_count();
  std::vector<bool> alive(static_cast<size_t>(n) + 1, true);
  std::vector<int> seq;
  bool found = strong_backtrack(g, alive, seq);
  if (found != greedy_simple_elimination_succeeds(g))
    throw consistency_error(
        "strong elimination search and greedy simple elimination disagree");
  if (!found) return std::nullopt;
  VertexOrder order{seq, "strong"};
  if (!verify_strong_elimination_order(g, order.seq))
    throw consistency_error("constructed strong elimination order fails verifier");
  return order;
}

bool verify_strong_elimination_order(const Graph& g,
                                     const std::vector<int>& order) {
  if (!is_permutation_of_vertices(g, order))
    throw std::invalid_argument("order is not a permutation of V(G)");
  if (!verify_perfect_elimination_order(g, order)) return false;
  int n = g.vertex_count();
  for (int i = 0; i < n; ++i)
    for (int k = i + 1; k < n; ++k) {
      if (!g.adjacent(order[i], order[k])) continue;
      for (int l = k + 1; l < n; ++l) {
        if (!g.adjacent(order[i], order[l])) continue;
        for (int j = i + 1; j < n; ++j) {
          if (j == k || j == l) continue;
          if (g.adjacent(order[k], order[j]) &&
              !g.adjacent(order[j], order[l]))
            return false;
        }
      }
    }
  return true;
}

namespace {

// Incremental feasibility for a closed-order prefix (0-based positions):
// the just-placed vertex must see a clique among its placed neighbors,
// and for every placed i adjacent to it, the intermediate neighbors of i
// must also be adjacent to it.
bool closed_prefix_ok(const Graph& g, const std::vector<int>& seq) {
  int p = static_cast<int>(seq.size()) - 1;
  for (int i = 0; i < p; ++i) {
    if (!g.adjacent(seq[i], seq[p])) continue;
    for (int j = i + 1; j < p; ++j) {
      if (g.adjacent(seq[i], seq[j]) && !g.adjacent(seq[j], seq[p]))
        return false;  // N>=[v_i] must be a clique
    }
  }
  // N<=[v_p] clique.
  for (int i = 0; i < p; ++i) {
    if (!g.adjacent(seq[i], seq[p])) continue;
    for (int j = i + 1; j < p; ++j)
      if (g.adjacent(seq[j], seq[p]) && !g.adjacent(seq[i], seq[j]))
        return false;
  }
  return true;
}

bool closed_backtrack(const Graph& g, std::vector<bool>& used,
                      std::vector<int>& seq) {
  int n = g.vertex_count();
  if (static_cast<int>(seq.size()) == n) return true;
  for (int v = 1; v <= n; ++v) {
    if (used[v]) continue;
    seq.push_back(v);
    used[v] = true;
    if (closed_prefix_ok(g, seq) && closed_backtrack(g, used, seq))
      return true;
    used[v] = false;
    seq.pop_back();
  }
  return false;
}

}  // namespace

std::optional<VertexOrder> find_closed_order(const Graph& g) {
  bool characterization =
      find_perfect_elimination_order(g).has_value() &&
      !has_induced_claw(g) && !find_induced(g, named_graph("net"), "net") &&
      !find_induced(g, named_graph("tent"), "tent");
  int n = g.vertex_count();
  std::vector<bool> used(static_cast<size_t>(n) + 1, false);
  std::vector<int> seq;
  bool found = closed_backtrack(g, used, seq);
  if (found != characterization)
    throw consistency_error(
        "closed-order search and forbidden-subgraph characterization disagree");
  if (!found) return std::nullopt;
  VertexOrder order{seq, "closed"};
  if (!verify_closed_order(g, order.seq))
    throw consistency_error("constructed closed order fails verifier");
  return order;
}

bool verify_closed_order(const Graph& g, const std::vector<int>& order) {
  if (!is_permutation_of_vertices(g, order))
    throw std::invalid_argument("order is not a permutation of V(G)");
  int n = g.vertex_count();
  // (a) literal definition.
  bool a_ok = true;
  for (int i = 0; i < n && a_ok; ++i)
    for (int j = 0; j < n && a_ok; ++j)
      for (int k = 0; k < n && a_ok; ++k) {
        if (j == k || j == i || k == i) continue;
        bool both_later = i < j && i < k;
        bool both_earlier = i > j && i > k;
        if (!both_later && !both_earlier) continue;
        if (g.adjacent(order[i], order[j]) && g.adjacent(order[i], order[k]) &&
            !g.adjacent(order[j], order[k]))
          a_ok = false;
      }
  // (b) N<=[v_i] and N>=[v_i] are cliques.
  bool b_ok = true;
  for (int i = 0; i < n && b_ok; ++i) {
    std::set<int> before{order[i]}, after{order[i]};
    for (int j = 0; j < n; ++j)
      if (g.adjacent(order[i], order[j])) (j < i ? before : after).insert(order[j]);
    if (!is_clique(g, before) || !is_clique(g, after)) b_ok = false;
  }
  // (c) N>=[v_i] is a clique occupying consecutive positions from i.
  bool c_ok = true;
  for (int i = 0; i < n && c_ok; ++i) {
    std::set<int> after{order[i]};
    int last = i;
    for (int j = i + 1; j < n; ++j)
      if (g.adjacent(order[i], order[j])) {
        after.insert(order[j]);
        last = j;
      }
    if (!is_clique(g, after)) c_ok = false;
    if (static_cast<int>(after.size()) != last - i + 1) c_ok = false;
  }
  if (a_ok != b_ok || b_ok != c_ok)
    throw consistency_error("closed-order criteria (a)/(b)/(c) disagree");
  return a_ok;
}

bool is_simplicial_edge(const Graph& g, const Edge& e) {
  if (!g.has_edge(e))
    throw std::invalid_argument("edge not in graph");
  int count = 0;
  for (const auto& clique : maximal_cliques(g))
    if (clique.count(e.u) && clique.count(e.v)) ++count;
  if (count != 1) return false;
  return find_perfect_elimination_order(delete_edge(g, e)).has_value();
}

bool is_claw_avoiding(const Graph& g, const Edge& e) {
  if (!g.has_edge(e))
    throw std::invalid_argument("edge not in graph");
  // In any induced claw containing both endpoints, one endpoint is the
  // center and the other a leaf.
  auto scan = [&](int center, int leaf) {
    std::vector<int> others;
    for (int w : g.neighbors(center))
      if (w != leaf && !g.adjacent(w, leaf)) others.push_back(w);
    for (size_t i = 0; i < others.size(); ++i)
      for (size_t j = i + 1; j < others.size(); ++j)
        if (!g.adjacent(others[i], others[j])) return true;
    return false;
  };
  return !scan(e.u, e.v) && !scan(e.v, e.u);
}

std::optional<EdgeOrder> find_claw_avoiding_peeo(const Graph& g) {
  Graph current = g;
  std::vector<Edge> seq;
  bool claw_free = !has_induced_claw(current);
  while (current.edge_count() > 0) {
    auto seo = find_strong_elimination_order(current);
    if (!seo) return std::nullopt;
    int v = 0;
    for (int candidate : seo->seq)
      if (current.degree(candidate) > 0) {
        v = candidate;
        break;
      }
    // Pick j in N(v) with inclusion-maximal closed neighborhood;
    // smallest label among ties.
    int j = 0;
    std::set<int> best;
    for (int w : current.neighbors(v)) {
      std::set<int> hood = current.closed_neighborhood(w);
      if (j == 0 || (hood.size() > best.size())) {
        j = w;
        best = hood;
      }
    }
    Edge e(v, j);
    if (!is_claw_avoiding(current, e)) return std::nullopt;
    seq.push_back(e);
    current = delete_edge(current, e);
    if (claw_free && has_induced_claw(current))
      throw consistency_error(
          "claw-free graph lost claw-freeness after simplicial edge deletion");
  }
  return EdgeOrder{seq};
}

bool verify_claw_avoiding_peeo(const Graph& g, const std::vector<Edge>& order) {
  std::vector<Edge> all = g.edges();
  std::vector<Edge> sorted_order = order;
  std::sort(sorted_order.begin(), sorted_order.end());
  if (sorted_order != all)
    throw std::invalid_argument("order is not a permutation of E(G)");
  Graph current = g;
  for (const Edge& e : order) {
    if (!is_simplicial_edge(current, e) || !is_claw_avoiding(current, e))
      return false;
    current = delete_edge(current, e);
  }
  return true;
}

}  // namespace koszul
