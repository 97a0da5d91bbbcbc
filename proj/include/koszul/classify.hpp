#ifndef KOSZUL_CLASSIFY_HPP
#define KOSZUL_CLASSIFY_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "koszul/forbidden.hpp"
#include "koszul/graph.hpp"
#include "koszul/orders.hpp"

namespace koszul {

struct ClassificationReport {
  bool chordal = false;
  bool strongly_chordal = false;
  bool claw_free = false;
  bool tent_free = false;
  bool net_free = false;
  bool closed = false;
  bool koszul = false;

  std::optional<VertexOrder> peo;
  std::optional<VertexOrder> seo;
  std::optional<VertexOrder> closed_order;
  std::optional<EdgeOrder> edge_order;
  std::optional<InducedWitness> cycle_witness;
  std::optional<InducedWitness> claw_witness;
  std::optional<InducedWitness> tent_witness;
  std::optional<InducedWitness> net_witness;

  int clique_number = 0;
  std::vector<std::set<int>> block_list;
  std::optional<bool> blocks_all_closed;  // connected graphs only
};

// Every flag is decided by two independent routes (forbidden subgraphs
// vs. elimination orders) and cross-asserted; a disagreement throws
// consistency_error.
ClassificationReport classify(const Graph& g);

// True iff every block induces a closed graph. Errors on disconnected
// input.
bool blocks_all_closed(const Graph& g);

// Stable-key JSON rendering of the report.
std::string report_to_json(const ClassificationReport& report);

}  // namespace koszul

#endif
