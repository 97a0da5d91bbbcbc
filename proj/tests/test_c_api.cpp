#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include <nlohmann/json.hpp>

#include "koszul.h"

using json = nlohmann::json;

namespace {

struct Str {
  char* s = nullptr;
  ~Str() { koszul_string_free(s); }
};

struct G {
  koszul_graph* g = nullptr;
  ~G() { koszul_graph_free(g); }
};

}  // namespace

TEST_CASE("graph construction and inspection") {
  G g;
  REQUIRE(koszul_graph_named("net", 0, &g.g) == KOSZUL_OK);
  int n = 0, m = 0;
  CHECK(koszul_graph_vertex_count(g.g, &n) == KOSZUL_OK);
  CHECK(koszul_graph_edge_count(g.g, &m) == KOSZUL_OK);
  CHECK(n == 6);
  CHECK(m == 6);

  Str g6;
  REQUIRE(koszul_graph_to_graph6(g.g, &g6.s) == KOSZUL_OK);
  G back;
  REQUIRE(koszul_graph_from_graph6(g6.s, &back.g) == KOSZUL_OK);
  Str again;
  REQUIRE(koszul_graph_to_graph6(back.g, &again.s) == KOSZUL_OK);
  CHECK(std::string(g6.s) == again.s);

  G from_list;
  REQUIRE(koszul_graph_from_edge_list("1 2\n2 3", &from_list.g) == KOSZUL_OK);
  CHECK(koszul_graph_vertex_count(from_list.g, &n) == KOSZUL_OK);
  CHECK(n == 3);
}

TEST_CASE("error reporting") {
  G g;
  CHECK(koszul_graph_from_edge_list("1 one", &g.g) == KOSZUL_ERR_PARSE);
  CHECK(std::strlen(koszul_last_error()) > 0);
  CHECK(koszul_graph_named("no_such_graph", 0, &g.g) == KOSZUL_ERR_ARG);
  CHECK(koszul_graph_from_graph6("\x01", &g.g) == KOSZUL_ERR_PARSE);
  CHECK(koszul_graph_named(nullptr, 0, &g.g) == KOSZUL_ERR_ARG);
  CHECK(koszul_classify_json(nullptr, nullptr) == KOSZUL_ERR_ARG);
}

TEST_CASE("classification json") {
  G g;
  REQUIRE(koszul_graph_named("net", 0, &g.g) == KOSZUL_OK);
  Str out;
  REQUIRE(koszul_classify_json(g.g, &out.s) == KOSZUL_OK);
  json j = json::parse(out.s);
  CHECK(j.at("flags").at("koszul").get<bool>());
  CHECK_FALSE(j.at("flags").at("closed").get<bool>());
}

TEST_CASE("groebner json") {
  G g;
  REQUIRE(koszul_graph_named("c4_chord", 0, &g.g) == KOSZUL_OK);
  Str out;
  REQUIRE(koszul_groebner_json(g.g, nullptr, 0, &out.s) == KOSZUL_OK);
  json j = json::parse(out.s);
  CHECK(j.at("quadratic").get<bool>());
  CHECK(j.at("initial_ideal").size() == 5);
  CHECK(j.at("generators").size() == 5);

  int bad_order[] = {1, 2, 3, 3};
  Str bad;
  CHECK(koszul_groebner_json(g.g, bad_order, 4, &bad.s) == KOSZUL_ERR_ARG);

  int rev[] = {4, 3, 2, 1};
  Str rev_out;
  REQUIRE(koszul_groebner_json(g.g, rev, 4, &rev_out.s) == KOSZUL_OK);
}

TEST_CASE("betti json") {
  G g;
  REQUIRE(koszul_graph_named("c4_chord", 0, &g.g) == KOSZUL_OK);
  Str out;
  REQUIRE(koszul_betti_json(g.g, nullptr, 0, &out.s) == KOSZUL_OK);
  json j = json::parse(out.s);
  long b24 = 0;
  for (const auto& e : j.at("entries"))
    if (e.at("i") == 2 && e.at("j") == 4) b24 = e.at("beta").get<long>();
  CHECK(b24 == 3);
}

TEST_CASE("colon endpoints") {
  G g;
  REQUIRE(koszul_graph_named("claw", 0, &g.g) == KOSZUL_OK);
  CHECK(koszul_colon_check(g.g, 1, 4) == KOSZUL_OK);
  CHECK(koszul_colon_check(g.g, 2, 3) == KOSZUL_ERR_ARG);
  Str out;
  REQUIRE(koszul_colon_json(g.g, 1, 4, &out.s) == KOSZUL_OK);
  CHECK(json::parse(out.s).at("colon_basis").size() == 3);
}

TEST_CASE("packaged checks") {
  for (const char* name : {"plucker", "tent", "betti_c4", "colon-formula"}) {
    Str detail;
    CHECK(koszul_check_suite(name, &detail.s) == KOSZUL_OK);
    CHECK(json::parse(detail.s).at("pass").get<bool>());
  }
  CHECK(koszul_check_suite("bogus", nullptr) == KOSZUL_ERR_ARG);
}

TEST_CASE("survey outputs") {
  Str csv;
  REQUIRE(koszul_survey(4, 0, "csv", &csv.s) == KOSZUL_OK);
  CHECK(std::string(csv.s).find("4,6,5,5,5,4,4,0") != std::string::npos);
  Str js;
  REQUIRE(koszul_survey(3, 1, "json", &js.s) == KOSZUL_OK);
  CHECK(json::parse(js.s).at("failures").empty());
  Str bad;
  CHECK(koszul_survey(3, 0, "xml", &bad.s) == KOSZUL_ERR_ARG);
  CHECK(koszul_survey(12, 0, "csv", &bad.s) == KOSZUL_ERR_GUARD);
}
