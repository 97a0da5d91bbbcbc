#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "koszul/classify.hpp"
#include "koszul/survey.hpp"

using namespace koszul;

TEST_CASE("named graph classifications") {
  ClassificationReport net = classify(named_graph("net"));
  CHECK(net.koszul);
  CHECK_FALSE(net.closed);
  CHECK(net.strongly_chordal);
  CHECK(net.claw_free);
  CHECK_FALSE(net.net_free);

  ClassificationReport tent = classify(named_graph("tent"));
  CHECK_FALSE(tent.koszul);
  CHECK_FALSE(tent.tent_free);
  CHECK(tent.chordal);
  CHECK(tent.claw_free);
  CHECK_FALSE(tent.strongly_chordal);

  ClassificationReport claw = classify(named_graph("claw"));
  CHECK_FALSE(claw.koszul);
  CHECK_FALSE(claw.claw_free);
  CHECK(claw.chordal);

  ClassificationReport tn = classify(named_graph("thick_net"));
  CHECK(tn.strongly_chordal);
  CHECK(tn.claw_free);
  CHECK_FALSE(tn.closed);
  CHECK(tn.koszul);
  CHECK(tn.clique_number >= 4);
  CHECK(tn.block_list.size() == 1);

  for (int k = 4; k <= 8; ++k) {
    ClassificationReport ck = classify(named_graph("cycle", k));
    CHECK_FALSE(ck.koszul);
    CHECK_FALSE(ck.chordal);
    REQUIRE(ck.cycle_witness.has_value());
  }
}

TEST_CASE("certificates accompany the flags") {
  ClassificationReport net = classify(named_graph("net"));
  REQUIRE(net.peo.has_value());
  REQUIRE(net.seo.has_value());
  REQUIRE(net.edge_order.has_value());
  CHECK_FALSE(net.closed_order.has_value());
  REQUIRE(net.net_witness.has_value());
  CHECK(verify_strong_elimination_order(named_graph("net"), net.seo->seq));
  CHECK(verify_claw_avoiding_peeo(named_graph("net"), net.edge_order->seq));

  ClassificationReport c4c = classify(named_graph("c4_chord"));
  REQUIRE(c4c.closed_order.has_value());
  CHECK(verify_closed_order(named_graph("c4_chord"), c4c.closed_order->seq));
}

TEST_CASE("flag implications over the small corpus") {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : enumerate_connected_graphs(n)) {
      ClassificationReport r = classify(g);
      if (r.closed) CHECK(r.koszul);
      if (r.koszul) CHECK(r.strongly_chordal);
      if (r.strongly_chordal) CHECK(r.chordal);
      CHECK(r.koszul == (r.chordal && r.claw_free && r.tent_free));
      CHECK(r.koszul == (r.strongly_chordal && r.claw_free));
      CHECK(r.closed ==
            (r.chordal && r.claw_free && r.net_free && r.tent_free));
    }
}

TEST_CASE("block closedness") {
  CHECK(blocks_all_closed(named_graph("path", 6)));
  CHECK(blocks_all_closed(named_graph("claw")));
  CHECK_FALSE(blocks_all_closed(named_graph("thick_net")));
  CHECK(blocks_all_closed(parse_edge_list("1 2\n2 3\n1 3\n3 4")));
  CHECK_THROWS_AS(blocks_all_closed(parse_edge_list("n 4\n1 2")),
                  std::invalid_argument);
}

TEST_CASE("block criterion at small clique number") {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : enumerate_connected_graphs(n)) {
      ClassificationReport r = classify(g);
      REQUIRE(r.blocks_all_closed.has_value());
      bool a = r.strongly_chordal && r.claw_free;
      bool c = r.claw_free && *r.blocks_all_closed;
      if (c) CHECK(a);  // valid at every clique number
      if (r.clique_number <= 3) CHECK(a == c);
    }
  // At clique number 4 the forward direction can fail.
  ClassificationReport tn = classify(named_graph("thick_net"));
  CHECK((tn.strongly_chordal && tn.claw_free));
  CHECK_FALSE(*tn.blocks_all_closed);
}

TEST_CASE("two edge deletions make the thick net closed") {
  Graph g = delete_edge(delete_edge(named_graph("thick_net"), Edge(5, 9)),
                        Edge(4, 9));
  CHECK(classify(g).closed);
}

TEST_CASE("json report shape") {
  nlohmann::json j =
      nlohmann::json::parse(report_to_json(classify(named_graph("net"))));
  CHECK(j.at("flags").at("koszul").get<bool>());
  CHECK_FALSE(j.at("flags").at("closed").get<bool>());
  CHECK(j.at("certificates").contains("seo"));
  CHECK(j.at("certificates").contains("edge_order"));
  CHECK(j.at("certificates").at("net").at("pattern") == "net");
  CHECK(j.at("clique_number") == 3);
  CHECK(j.at("blocks").size() == 4);
  CHECK(j.contains("blocks_all_closed"));

  // Byte-stable across repeated runs.
  CHECK(report_to_json(classify(named_graph("thick_net"))) ==
        report_to_json(classify(named_graph("thick_net"))));
}
