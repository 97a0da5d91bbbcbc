#include "koszul/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace koszul {

int Graph::edge_count() const {
  int total = 0;
  for (int v = 1; v <= n_; ++v) total += static_cast<int>(adj_[v].size());
  return total / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 1; u <= n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  int header_n = 0;
  std::vector<Edge> edges;
  int max_label = 0;
  while (std::getline(in, line)) {
    ++line_no;
    size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    std::istringstream ls(line.substr(start));
    std::string first;
    ls >> first;
    if (first == "n") {
      if (!(ls >> header_n) || header_n < 0)
        throw parse_error("line " + std::to_string(line_no) +
                          ": bad vertex count header");
      continue;
    }
    int u = 0, v = 0;
    std::string rest;
    try {
      u = std::stoi(first);
    } catch (...) {
      throw parse_error("line " + std::to_string(line_no) + ": expected integer");
    }
    if (!(ls >> v))
      throw parse_error("line " + std::to_string(line_no) +
                        ": expected two integers");
    if (ls >> rest)
      throw parse_error("line " + std::to_string(line_no) + ": trailing tokens");
    if (u < 1 || v < 1)
      throw parse_error("line " + std::to_string(line_no) +
                        ": vertex labels must be >= 1");
    if (u == v)
      throw parse_error("line " + std::to_string(line_no) + ": loop edge " +
                        std::to_string(u));
    edges.emplace_back(u, v);
    max_label = std::max({max_label, u, v});
  }
  int n = std::max(header_n, max_label);
  return Graph(n, edges);
}

Graph parse_graph6(const std::string& bytes) {
  if (bytes.empty()) throw parse_error("empty graph6 record");
  size_t pos = 0;
  // Trim one trailing newline if present.
  std::string s = bytes;
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  if (s.empty()) throw parse_error("empty graph6 record");
  int c0 = static_cast<unsigned char>(s[pos]);
  if (c0 < 63 || c0 > 126) throw parse_error("graph6 byte out of range");
  if (c0 == 126) throw parse_error("graph6 long form not supported (n > 62)");
  int n = c0 - 63;
  ++pos;
  int nbits = n * (n - 1) / 2;
  int nbytes = (nbits + 5) / 6;
  if (static_cast<int>(s.size() - pos) != nbytes)
    throw parse_error("graph6 record has wrong length");
  std::vector<Edge> edges;
  int bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      int c = static_cast<unsigned char>(s[pos + bit / 6]);
      if (c < 63 || c > 126) throw parse_error("graph6 byte out of range");
      int word = c - 63;
      if ((word >> (5 - bit % 6)) & 1) edges.emplace_back(i + 1, j + 1);
    }
  }
  return Graph(n, edges);
}

std::string encode_graph6(const Graph& g) {
  int n = g.vertex_count();
  if (n > 62) throw guard_error("graph6 short form limited to n <= 62");
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int word = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      word = (word << 1) | (g.adjacent(i + 1, j + 1) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(word + 63));
        word = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((word << (6 - filled)) + 63));
  return out;
}

namespace {

Graph make_trampoline(int k) {
  if (k < 3) throw std::invalid_argument("trampoline needs k >= 3");
  // Clique v_1..v_k on labels 1..k, rim w_i = k + i.
  std::vector<Edge> edges;
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) edges.emplace_back(i, j);
  for (int i = 1; i <= k; ++i) {
    edges.emplace_back(k + i, i);
    edges.emplace_back(k + i, i < k ? i + 1 : 1);
  }
  return Graph(2 * k, edges);
}

}  // namespace

Graph named_graph(const std::string& name, int param) {
  if (name == "claw") return Graph(4, {{1, 2}, {1, 3}, {1, 4}});
  if (name == "tent") return make_trampoline(3);
  if (name == "net")
    return Graph(6, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 5}, {3, 6}});
  if (name == "trampoline") return make_trampoline(param);
  if (name == "cycle") {
    if (param < 3) throw std::invalid_argument("cycle needs k >= 3");
    std::vector<Edge> edges;
    for (int i = 1; i < param; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(param, 1);
    return Graph(param, edges);
  }
  if (name == "path") {
    if (param < 1) throw std::invalid_argument("path needs k >= 1");
    std::vector<Edge> edges;
    for (int i = 1; i < param; ++i) edges.emplace_back(i, i + 1);
    return Graph(param, edges);
  }
  if (name == "complete") {
    if (param < 1) throw std::invalid_argument("complete needs k >= 1");
    std::vector<Edge> edges;
    for (int i = 1; i <= param; ++i)
      for (int j = i + 1; j <= param; ++j) edges.emplace_back(i, j);
    return Graph(param, edges);
  }
  if (name == "tent_labeled")
    return Graph(6, {{2, 3}, {3, 4}, {2, 4}, {1, 2}, {1, 3}, {5, 4}, {3, 5},
                     {2, 6}, {4, 6}});
  if (name == "c4_chord")
    return Graph(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}, {2, 3}});
  if (name == "thick_net")
    return Graph(9, {{6, 2}, {2, 3}, {3, 5}, {6, 5}, {2, 5}, {6, 3}, {8, 7},
                     {8, 6}, {1, 2}, {1, 3}, {9, 5}, {9, 4}, {7, 6}, {2, 7},
                     {3, 7}, {4, 7}, {6, 4}, {2, 4}, {3, 4}, {4, 5}, {5, 7}});
  throw std::invalid_argument("unknown named graph: " + name);
}

RelabeledGraph induced_subgraph(const Graph& g, const std::set<int>& vertices) {
  std::map<int, int> relabel;
  int next = 1;
  for (int v : vertices) {
    if (!g.has_vertex(v))
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " not in graph");
    relabel[v] = next++;
  }
  std::vector<Edge> edges;
  for (int u : vertices)
    for (int v : g.neighbors(u))
      if (u < v && vertices.count(v)) edges.emplace_back(relabel[u], relabel[v]);
  return {Graph(static_cast<int>(vertices.size()), edges), relabel};
}

Graph delete_edge(const Graph& g, const Edge& e) {
  if (!g.has_edge(e))
    throw std::invalid_argument("edge {" + std::to_string(e.u) + "," +
                                std::to_string(e.v) + "} not in graph");
  std::vector<Edge> edges;
  for (const Edge& f : g.edges())
    if (!(f == e)) edges.push_back(f);
  return Graph(g.vertex_count(), edges);
}

RelabeledGraph delete_vertex(const Graph& g, int v) {
  if (!g.has_vertex(v))
    throw std::invalid_argument("vertex " + std::to_string(v) + " not in graph");
  std::set<int> keep;
  for (int u = 1; u <= g.vertex_count(); ++u)
    if (u != v) keep.insert(u);
  return induced_subgraph(g, keep);
}

bool is_clique(const Graph& g, const std::set<int>& vertices) {
  for (int u : vertices)
    for (int v : vertices)
      if (u < v && !g.adjacent(u, v)) return false;
  return true;
}

namespace {

// Bron-Kerbosch with pivoting.
void bron_kerbosch(const Graph& g, std::set<int>& r, std::set<int> p,
                   std::set<int> x, std::vector<std::set<int>>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  int pivot = -1;
  size_t best = 0;
  for (int u : p)
    if (pivot == -1 || g.neighbors(u).size() >= best) {
      pivot = u;
      best = g.neighbors(u).size();
    }
  for (int u : x)
    if (g.neighbors(u).size() > best) {
      pivot = u;
      best = g.neighbors(u).size();
    }
  std::vector<int> candidates;
  for (int v : p)
    if (pivot == -1 || !g.adjacent(pivot, v)) candidates.push_back(v);
  for (int v : candidates) {
    std::set<int> np, nx;
    for (int w : p)
      if (g.adjacent(v, w)) np.insert(w);
    for (int w : x)
      if (g.adjacent(v, w)) nx.insert(w);
    r.insert(v);
    bron_kerbosch(g, r, np, nx, out);
    r.erase(v);
    p.erase(v);
    x.insert(v);
  }
}

}  // namespace

std::vector<std::set<int>> maximal_cliques(const Graph& g) {
  std::set<int> r, p, x;
  for (int v = 1; v <= g.vertex_count(); ++v) p.insert(v);
  std::vector<std::set<int>> out;
  if (g.vertex_count() > 0) bron_kerbosch(g, r, p, x, out);
  std::sort(out.begin(), out.end());
  return out;
}

int clique_number(const Graph& g) {
  int best = 0;
  for (const auto& c : maximal_cliques(g))
    best = std::max(best, static_cast<int>(c.size()));
  return best;
}

namespace {

struct BlockFinder {
  const Graph& g;
  std::vector<int> disc, low;
  std::vector<std::pair<int, int>> edge_stack;
  std::vector<std::set<int>> block_list;
  std::set<int> cuts;
  int timer = 0;

  explicit BlockFinder(const Graph& graph)
      : g(graph),
        disc(static_cast<size_t>(graph.vertex_count()) + 1, 0),
        low(static_cast<size_t>(graph.vertex_count()) + 1, 0) {}

  void pop_block(int u, int v) {
    std::set<int> block;
    while (!edge_stack.empty()) {
      auto [a, b] = edge_stack.back();
      edge_stack.pop_back();
      block.insert(a);
      block.insert(b);
      if (a == u && b == v) break;
    }
    if (!block.empty()) block_list.push_back(block);
  }

  void dfs(int u, int parent) {
    disc[u] = low[u] = ++timer;
    int children = 0;
    for (int v : g.neighbors(u)) {
      if (v == parent) continue;
      if (disc[v] == 0) {
        ++children;
        edge_stack.push_back({u, v});
        dfs(v, u);
        low[u] = std::min(low[u], low[v]);
        if ((parent != 0 && low[v] >= disc[u]) || (parent == 0 && children > 1))
          cuts.insert(u);
        if (low[v] >= disc[u]) pop_block(u, v);
      } else if (disc[v] < disc[u]) {
        edge_stack.push_back({u, v});
        low[u] = std::min(low[u], disc[v]);
      }
    }
  }
};

}  // namespace

std::vector<std::set<int>> blocks(const Graph& g) {
  BlockFinder bf(g);
  for (int v = 1; v <= g.vertex_count(); ++v)
    if (bf.disc[v] == 0) {
      bf.dfs(v, 0);
      bf.pop_block(0, 0);  // flush any remaining edges of this component
    }
  std::sort(bf.block_list.begin(), bf.block_list.end());
  return bf.block_list;
}

std::set<int> cut_vertices(const Graph& g) {
  BlockFinder bf(g);
  for (int v = 1; v <= g.vertex_count(); ++v)
    if (bf.disc[v] == 0) bf.dfs(v, 0);
  return bf.cuts;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<bool> seen(static_cast<size_t>(g.vertex_count()) + 1, false);
  std::vector<std::vector<int>> comps;
  for (int s = 1; s <= g.vertex_count(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp, stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (int v : g.neighbors(u))
        if (!seen[v]) {
          seen[v] = true;
          stack.push_back(v);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(comp);
  }
  return comps;
}

bool is_connected(const Graph& g) {
  return connected_components(g).size() <= 1;
}

namespace {

// Backtracking minimization of the adjacency bit string. Vertices are
// grouped by degree so only degree-preserving permutations are explored.
struct Canonizer {
  const Graph& g;
  int n;
  std::vector<int> perm;        // perm[pos] = original vertex at position pos
  std::vector<bool> used;
  std::string best;
  std::string current;

  explicit Canonizer(const Graph& graph)
      : g(graph),
        n(graph.vertex_count()),
        used(static_cast<size_t>(graph.vertex_count()) + 1, false) {}

  void extend(int pos) {
    if (pos == n) {
      if (best.empty() || current < best) best = current;
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (used[v]) continue;
      std::string row;
      row.reserve(pos);
      for (int i = 0; i < pos; ++i)
        row.push_back(g.adjacent(perm[i], v) ? '1' : '0');
      std::string next = current + row;
      if (!best.empty() && next > best.substr(0, next.size())) continue;
      used[v] = true;
      perm.push_back(v);
      std::swap(current, next);
      extend(pos + 1);
      std::swap(current, next);
      perm.pop_back();
      used[v] = false;
    }
  }
};

}  // namespace

std::string canonical_form(const Graph& g) {
  Canonizer c(g);
  c.extend(0);
  return std::to_string(g.vertex_count()) + ":" + c.best;
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
    return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace koszul
