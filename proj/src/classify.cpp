#include "koszul/classify.hpp"

#include <nlohmann/json.hpp>

namespace koszul {

ClassificationReport classify(const Graph& g) {
  ClassificationReport r;

  r.peo = find_perfect_elimination_order(g);
  r.cycle_witness = long_induced_cycle(g);
  r.chordal = r.peo.has_value();
  if (r.chordal == r.cycle_witness.has_value())
    throw consistency_error("chordality routes disagree");

  r.claw_witness = has_induced_claw(g);
  auto generic_claw = find_induced(g, named_graph("claw"), "claw");
  if (r.claw_witness.has_value() != generic_claw.has_value())
    throw consistency_error("claw detection routes disagree");
  r.claw_free = !r.claw_witness;

  r.tent_witness = find_induced(g, named_graph("tent"), "tent");
  r.tent_free = !r.tent_witness;
  r.net_witness = find_induced(g, named_graph("net"), "net");
  r.net_free = !r.net_witness;

  r.seo = find_strong_elimination_order(g);
  r.strongly_chordal = r.seo.has_value();
  bool trampoline_free = true;
  if (g.vertex_count() >= 6) {
    if (find_trampoline(g, g.vertex_count() / 2)) trampoline_free = false;
  }
  if (r.strongly_chordal != (r.chordal && trampoline_free))
    throw consistency_error("strong chordality routes disagree");

  r.koszul = r.chordal && r.claw_free && r.tent_free;
  if (r.koszul != (r.strongly_chordal && r.claw_free))
    throw consistency_error("Koszul flag routes disagree");
  r.edge_order = find_claw_avoiding_peeo(g);
  if (r.koszul != r.edge_order.has_value())
    throw consistency_error(
        "claw-avoiding edge elimination disagrees with Koszul flag");

  r.closed_order = find_closed_order(g);  // cross-asserted internally
  r.closed = r.closed_order.has_value();
  if (r.closed != (r.chordal && r.claw_free && r.net_free && r.tent_free))
    throw consistency_error("closed-graph routes disagree");

  r.clique_number = clique_number(g);
  r.block_list = blocks(g);
  if (is_connected(g) && g.vertex_count() > 0)
    r.blocks_all_closed = blocks_all_closed(g);
  return r;
}

bool blocks_all_closed(const Graph& g) {
  if (!is_connected(g))
    throw std::invalid_argument("blocks_all_closed requires a connected graph");
  for (const std::set<int>& block : blocks(g)) {
    Graph sub = induced_subgraph(g, block).graph;
    if (!find_closed_order(sub)) return false;
  }
  return true;
}

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json witness_json(const InducedWitness& w) {
  return ordered_json{{"pattern", w.pattern}, {"map", w.map}};
}

ordered_json edge_order_json(const EdgeOrder& order) {
  ordered_json arr = ordered_json::array();
  for (const Edge& e : order.seq) arr.push_back({e.u, e.v});
  return arr;
}

}  // namespace

std::string report_to_json(const ClassificationReport& r) {
  ordered_json flags{{"chordal", r.chordal},
                     {"strongly_chordal", r.strongly_chordal},
                     {"claw_free", r.claw_free},
                     {"tent_free", r.tent_free},
                     {"net_free", r.net_free},
                     {"closed", r.closed},
                     {"koszul", r.koszul}};
  ordered_json certs = ordered_json::object();
  if (r.peo) certs["peo"] = r.peo->seq;
  if (r.seo) certs["seo"] = r.seo->seq;
  if (r.closed_order) certs["closed_order"] = r.closed_order->seq;
  if (r.edge_order) certs["edge_order"] = edge_order_json(*r.edge_order);
  if (r.cycle_witness) certs["long_cycle"] = witness_json(*r.cycle_witness);
  if (r.claw_witness) certs["claw"] = witness_json(*r.claw_witness);
  if (r.tent_witness) certs["tent"] = witness_json(*r.tent_witness);
  if (r.net_witness) certs["net"] = witness_json(*r.net_witness);

  ordered_json blocks_arr = ordered_json::array();
  for (const auto& block : r.block_list)
    blocks_arr.push_back(std::vector<int>(block.begin(), block.end()));

  ordered_json out{{"flags", flags},
                   {"certificates", certs},
                   {"clique_number", r.clique_number},
                   {"blocks", blocks_arr}};
  if (r.blocks_all_closed) out["blocks_all_closed"] = *r.blocks_all_closed;
  return out.dump(2);
}

}  // namespace koszul
