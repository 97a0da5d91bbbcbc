#ifndef KOSZUL_GRAPH_HPP
#define KOSZUL_GRAPH_HPP

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace koszul {

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct guard_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bug trap: two supposedly equivalent routes disagreed.
struct consistency_error : std::logic_error {
  using std::logic_error::logic_error;
};

// Unordered edge, canonical form with the smaller endpoint first.
struct Edge {
  int u, v;

  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {
    if (a == b) throw std::invalid_argument("loop edge " + std::to_string(a));
  }
  auto operator<=>(const Edge&) const = default;
};

// Simple undirected graph on vertices 1..n, immutable after construction.
class Graph {
 public:
  Graph() : n_(0) {}
  explicit Graph(int n) : n_(n), adj_(static_cast<size_t>(n) + 1) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
  }
  Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
    for (const Edge& e : edges) add_edge_(e.u, e.v);
  }

  int vertex_count() const { return n_; }
  int edge_count() const;

  bool has_vertex(int v) const { return v >= 1 && v <= n_; }
  bool adjacent(int u, int v) const {
    return has_vertex(u) && has_vertex(v) && adj_[u].count(v) > 0;
  }
  bool has_edge(const Edge& e) const { return adjacent(e.u, e.v); }

  const std::set<int>& neighbors(int v) const {
    check_vertex_(v);
    return adj_[v];
  }
  std::set<int> closed_neighborhood(int v) const {
    std::set<int> s = neighbors(v);
    s.insert(v);
    return s;
  }
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

  std::vector<Edge> edges() const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && adj_ == other.adj_;
  }

 private:
  void check_vertex_(int v) const {
    if (!has_vertex(v))
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " out of range 1.." + std::to_string(n_));
  }
  void add_edge_(int u, int v) {
    check_vertex_(u);
    check_vertex_(v);
    adj_[u].insert(v);
    adj_[v].insert(u);
  }

  int n_;
  std::vector<std::set<int>> adj_;
};

// Edge-list text format: "# ..." comments, optional "n <count>" header,
// one "u v" pair per line.
Graph parse_edge_list(const std::string& text);

// Standard graph6 short form, n <= 62.
Graph parse_graph6(const std::string& bytes);
std::string encode_graph6(const Graph& g);

// claw, tent, net, trampoline(k), cycle(k), path(k), complete(k),
// tent_labeled, c4_chord, thick_net.
Graph named_graph(const std::string& name, int param = 0);

// Result of a vertex-removing operation: the new graph plus the map from
// old labels to new ones.
struct RelabeledGraph {
  Graph graph;
  std::map<int, int> old_to_new;
};

RelabeledGraph induced_subgraph(const Graph& g, const std::set<int>& vertices);
Graph delete_edge(const Graph& g, const Edge& e);
RelabeledGraph delete_vertex(const Graph& g, int v);

bool is_clique(const Graph& g, const std::set<int>& vertices);
int clique_number(const Graph& g);
std::vector<std::set<int>> maximal_cliques(const Graph& g);

// Blocks (maximal 2-connected subgraphs) as vertex sets, via DFS low-link.
std::vector<std::set<int>> blocks(const Graph& g);
std::set<int> cut_vertices(const Graph& g);

bool is_connected(const Graph& g);
std::vector<std::vector<int>> connected_components(const Graph& g);

// Exhaustive isomorphism test, desk scale only.
bool is_isomorphic(const Graph& a, const Graph& b);

// Lexicographically minimal adjacency bit string over all vertex
// permutations; equal strings iff isomorphic.
std::string canonical_form(const Graph& g);

}  // namespace koszul

#endif
