#include "koszul/forbidden.hpp"

#include <algorithm>

namespace koszul {

namespace {

bool extend_match(const Graph& host, const Graph& pattern,
                  std::vector<int>& map, std::vector<bool>& used) {
  int k = static_cast<int>(map.size()) + 1;  // next pattern vertex
  if (k > pattern.vertex_count()) return true;
  for (int v = 1; v <= host.vertex_count(); ++v) {
    if (used[v]) continue;
    if (host.degree(v) < pattern.degree(k)) continue;
    bool ok = true;
    for (int p = 1; p < k && ok; ++p)
      if (pattern.adjacent(p, k) != host.adjacent(map[p - 1], v)) ok = false;
    if (!ok) continue;
    map.push_back(v);
    used[v] = true;
    if (extend_match(host, pattern, map, used)) return true;
    used[v] = false;
    map.pop_back();
  }
  return false;
}

}  // namespace

std::optional<InducedWitness> find_induced(const Graph& host,
                                           const Graph& pattern,
                                           const std::string& pattern_name) {
  if (pattern.vertex_count() > host.vertex_count()) return std::nullopt;
  std::vector<int> map;
  std::vector<bool> used(static_cast<size_t>(host.vertex_count()) + 1, false);
  if (extend_match(host, pattern, map, used))
    return InducedWitness{pattern_name, map};
  return std::nullopt;
}

std::optional<InducedWitness> has_induced_claw(const Graph& g) {
  for (int c = 1; c <= g.vertex_count(); ++c) {
    std::vector<int> nb(g.neighbors(c).begin(), g.neighbors(c).end());
    if (nb.size() < 3) continue;
    for (size_t i = 0; i < nb.size(); ++i)
      for (size_t j = i + 1; j < nb.size(); ++j) {
        if (g.adjacent(nb[i], nb[j])) continue;
        for (size_t k = j + 1; k < nb.size(); ++k) {
          if (g.adjacent(nb[i], nb[k]) || g.adjacent(nb[j], nb[k])) continue;
          return InducedWitness{"claw", {c, nb[i], nb[j], nb[k]}};
        }
      }
  }
  return std::nullopt;
}

namespace {

// Grow an induced path s, v1, ..., vk with all interior vertices
// non-adjacent to s; closing back to s with k >= 3 gives an induced
// cycle of length >= 4.
bool grow_cycle(const Graph& g, int s, std::vector<int>& path,
                std::vector<bool>& on_path) {
  int last = path.back();
  for (int v : g.neighbors(last)) {
    if (v <= s || on_path[v]) continue;
    bool induced = true;
    for (size_t i = 1; i + 1 < path.size() && induced; ++i)
      if (g.adjacent(path[i], v)) induced = false;
    if (!induced) continue;
    if (g.adjacent(s, v)) {
      if (path.size() >= 3) {
        path.push_back(v);
        return true;
      }
      continue;  // would close a triangle or shorter
    }
    path.push_back(v);
    on_path[v] = true;
    if (grow_cycle(g, s, path, on_path)) return true;
    on_path[v] = false;
    path.pop_back();
  }
  return false;
}

}  // namespace

std::optional<InducedWitness> long_induced_cycle(const Graph& g) {
  std::vector<bool> on_path(static_cast<size_t>(g.vertex_count()) + 1, false);
  for (int s = 1; s <= g.vertex_count(); ++s) {
    for (int v : g.neighbors(s)) {
      if (v <= s) continue;
      std::vector<int> path{s, v};
      on_path[s] = on_path[v] = true;
      if (grow_cycle(g, s, path, on_path)) {
        std::string name = "cycle(" + std::to_string(path.size()) + ")";
        return InducedWitness{name, path};
      }
      on_path[s] = on_path[v] = false;
    }
  }
  return std::nullopt;
}

std::optional<InducedWitness> find_trampoline(const Graph& g, int kmax) {
  if (kmax < 3) throw std::invalid_argument("trampoline search needs kmax >= 3");
  for (int k = 3; k <= kmax; ++k) {
    if (2 * k > g.vertex_count()) break;
    auto hit = find_induced(g, named_graph("trampoline", k),
                            "trampoline(" + std::to_string(k) + ")");
    if (hit) return hit;
  }
  return std::nullopt;
}

}  // namespace koszul
