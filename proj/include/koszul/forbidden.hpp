#ifndef KOSZUL_FORBIDDEN_HPP
#define KOSZUL_FORBIDDEN_HPP

#include <optional>
#include <string>
#include <vector>

#include "koszul/graph.hpp"

namespace koszul {

// Witness for an induced copy of a pattern graph inside a host graph.
// map[k] is the host vertex assigned to pattern vertex k+1; the image
// induces the pattern (edges and non-edges both preserved).
struct InducedWitness {
  std::string pattern;
  std::vector<int> map;
};

// Backtracking search for an induced copy of `pattern` in `host`.
// Returns the lexicographically least witness (as a vertex sequence
// indexed by pattern vertex), or nullopt.
std::optional<InducedWitness> find_induced(const Graph& host,
                                           const Graph& pattern,
                                           const std::string& pattern_name = "");

// Direct scan: a vertex with three pairwise non-adjacent neighbors.
std::optional<InducedWitness> has_induced_claw(const Graph& g);

// An induced cycle of length >= 4, the chordality obstruction.
std::optional<InducedWitness> long_induced_cycle(const Graph& g);

// Induced trampoline(k) for some 3 <= k <= kmax, smallest k first.
std::optional<InducedWitness> find_trampoline(const Graph& g, int kmax);

}  // namespace koszul

#endif
