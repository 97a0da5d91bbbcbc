#ifndef KOSZUL_ORDERS_HPP
#define KOSZUL_ORDERS_HPP

#include <optional>
#include <string>
#include <vector>

#include "koszul/graph.hpp"

namespace koszul {

// A permutation of V(G) carrying elimination-order semantics.
struct VertexOrder {
  std::vector<int> seq;
  std::string kind;  // "perfect" | "strong" | "closed"
};

// A permutation of E(G); each edge is a claw-avoiding simplicial edge of
// the graph remaining after deleting its predecessors.
struct EdgeOrder {
  std::vector<Edge> seq;
};

bool is_simplicial_vertex(const Graph& g, int v);

// The closed neighborhoods of all members of N[v] form an inclusion chain.
bool is_simple_vertex(const Graph& g, int v);

// Greedy simplicial elimination, smallest label first. Succeeds iff G is
// chordal.
std::optional<VertexOrder> find_perfect_elimination_order(const Graph& g);
bool verify_perfect_elimination_order(const Graph& g,
                                      const std::vector<int>& order);

// Decision route of Farber's characterization: repeatedly remove the
// smallest-label simple vertex. Succeeds iff G is strongly chordal.
bool greedy_simple_elimination_succeeds(const Graph& g);

// A verified strong elimination order, or nullopt when none exists.
// Found by backtracking over simple vertices with incremental checking
// of the defining quadruple condition; existence is cross-asserted
// against the greedy decision route.
std::optional<VertexOrder> find_strong_elimination_order(const Graph& g);
bool verify_strong_elimination_order(const Graph& g,
                                     const std::vector<int>& order);

// A closed (= proper interval) order, or nullopt. Existence is
// cross-asserted against the forbidden-subgraph characterization
// (chordal, claw-free, net-free, tent-free).
std::optional<VertexOrder> find_closed_order(const Graph& g);

// Checks all three equivalent forms of the closed-order criterion and
// asserts that they agree.
bool verify_closed_order(const Graph& g, const std::vector<int>& order);

// e lies in exactly one maximal clique and G \ e is chordal.
bool is_simplicial_edge(const Graph& g, const Edge& e);

// No induced claw of G contains both endpoints of e.
bool is_claw_avoiding(const Graph& g, const Edge& e);

// Constructive edge elimination per the strong-elimination recipe:
// take the first non-isolated vertex v of a strong elimination order and
// join it to a neighbor with inclusion-maximal closed neighborhood.
// Returns nullopt iff G is not strongly chordal or some emitted edge
// lies in an induced claw.
std::optional<EdgeOrder> find_claw_avoiding_peeo(const Graph& g);
bool verify_claw_avoiding_peeo(const Graph& g,
                               const std::vector<Edge>& order);

}  // namespace koszul

#endif
