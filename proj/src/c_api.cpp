#include "koszul.h"

#include <cstdlib>
#include <cstring>
#include <numeric>
#include <string>

#include <nlohmann/json.hpp>

#include "koszul/bei.hpp"
#include "koszul/betti.hpp"
#include "koszul/classify.hpp"
#include "koszul/survey.hpp"

using json = nlohmann::ordered_json;

struct koszul_graph {
  koszul::Graph g;
};

namespace {

thread_local std::string last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

koszul_status fail(koszul_status code, const std::string& message) {
  last_error = message;
  return code;
}

// Runs the body, translating exceptions to status codes.
template <typename F>
koszul_status guarded(F&& body) {
  try {
    return body();
  } catch (const koszul::parse_error& e) {
    return fail(KOSZUL_ERR_PARSE, e.what());
  } catch (const koszul::guard_error& e) {
    return fail(KOSZUL_ERR_GUARD, e.what());
  } catch (const koszul::consistency_error& e) {
    return fail(KOSZUL_ERR_INTERNAL, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(KOSZUL_ERR_ARG, e.what());
  } catch (const std::exception& e) {
    return fail(KOSZUL_ERR_INTERNAL, e.what());
  }
}

koszul_status require(bool ok, const char* what) {
  return ok ? KOSZUL_OK : fail(KOSZUL_ERR_ARG, what);
}

std::vector<int> order_or_identity(const koszul::Graph& g, const int* order,
                                   int len) {
  int n = g.vertex_count();
  std::vector<int> seq;
  if (order == nullptr) {
    seq.resize(static_cast<size_t>(n));
    std::iota(seq.begin(), seq.end(), 1);
    return seq;
  }
  if (len != n) throw std::invalid_argument("order length must equal n");
  seq.assign(order, order + len);
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  for (int v : seq) {
    if (v < 1 || v > n || seen[static_cast<size_t>(v)])
      throw std::invalid_argument("order must be a permutation of 1..n");
    seen[static_cast<size_t>(v)] = true;
  }
  return seq;
}

json groebner_report(const koszul::Graph& g, const std::vector<int>& seq) {
  koszul::GroebnerBasis gb = koszul::buchberger(
      koszul::binomial_edge_ideal(g).generators,
      koszul::lex_from_vertex_order(seq));
  json j;
  j["vertex_order"] = seq;
  j["generators"] = json::array();
  for (const koszul::Polynomial& p :
       koszul::binomial_edge_ideal(g).generators)
    j["generators"].push_back(koszul::to_text(p));
  j["basis"] = json::array();
  for (const koszul::Polynomial& p : gb.elements)
    j["basis"].push_back(koszul::to_text(p));
  j["initial_ideal"] = json::array();
  for (const koszul::Monomial& m : koszul::initial_ideal(gb))
    j["initial_ideal"].push_back(koszul::to_text(koszul::Polynomial(m)));
  j["max_degree"] = gb.max_degree();
  j["quadratic"] = gb.max_degree() <= 2;
  return j;
}

json betti_json_from_table(const koszul::BettiTable& table) {
  json entries = json::array();
  for (const auto& [key, value] : table.entries) {
    json e;
    e["i"] = key.first;
    e["j"] = key.second;
    e["beta"] = value;
    entries.push_back(e);
  }
  json j;
  j["entries"] = entries;
  j["rendered"] = table.render();
  return j;
}

}  // namespace

extern "C" {

const char* koszul_last_error(void) { return last_error.c_str(); }

void koszul_string_free(char* s) { std::free(s); }

koszul_status koszul_graph_from_edge_list(const char* text,
                                          koszul_graph** out) {
  if (koszul_status s = require(text && out, "null argument")) return s;
  return guarded([&] {
    *out = new koszul_graph{koszul::parse_edge_list(text)};
    return KOSZUL_OK;
  });
}

koszul_status koszul_graph_from_graph6(const char* text, koszul_graph** out) {
  if (koszul_status s = require(text && out, "null argument")) return s;
  return guarded([&] {
    *out = new koszul_graph{koszul::parse_graph6(text)};
    return KOSZUL_OK;
  });
}

koszul_status koszul_graph_named(const char* name, int param,
                                 koszul_graph** out) {
  if (koszul_status s = require(name && out, "null argument")) return s;
  return guarded([&] {
    *out = new koszul_graph{koszul::named_graph(name, param)};
    return KOSZUL_OK;
  });
}

void koszul_graph_free(koszul_graph* g) { delete g; }

koszul_status koszul_graph_vertex_count(const koszul_graph* g, int* out) {
  if (koszul_status s = require(g && out, "null argument")) return s;
  *out = g->g.vertex_count();
  return KOSZUL_OK;
}

koszul_status koszul_graph_edge_count(const koszul_graph* g, int* out) {
  if (koszul_status s = require(g && out, "null argument")) return s;
  *out = g->g.edge_count();
  return KOSZUL_OK;
}

koszul_status koszul_graph_to_graph6(const koszul_graph* g, char** out) {
  if (koszul_status s = require(g && out, "null argument")) return s;
  return guarded([&] {
    *out = dup_string(koszul::encode_graph6(g->g));
    return KOSZUL_OK;
  });
}

koszul_status koszul_classify_json(const koszul_graph* g, char** json_out) {
  if (koszul_status s = require(g && json_out, "null argument")) return s;
  return guarded([&] {
    *json_out = dup_string(koszul::report_to_json(koszul::classify(g->g)));
    return KOSZUL_OK;
  });
}

koszul_status koszul_groebner_json(const koszul_graph* g, const int* order,
                                   int len, char** json_out) {
  if (koszul_status s = require(g && json_out, "null argument")) return s;
  return guarded([&] {
    std::vector<int> seq = order_or_identity(g->g, order, len);
    *json_out = dup_string(groebner_report(g->g, seq).dump(2));
    return KOSZUL_OK;
  });
}

koszul_status koszul_betti_json(const koszul_graph* g, const int* order,
                                int len, char** json_out) {
  if (koszul_status s = require(g && json_out, "null argument")) return s;
  return guarded([&] {
    std::vector<int> seq = order_or_identity(g->g, order, len);
    koszul::GroebnerBasis gb = koszul::buchberger(
        koszul::binomial_edge_ideal(g->g).generators,
        koszul::lex_from_vertex_order(seq));
    std::vector<koszul::Monomial> init = koszul::initial_ideal(gb);
    koszul::BettiTable table = koszul::betti_table_taylor(init);
    json j = betti_json_from_table(table);
    j["vertex_order"] = seq;
    *json_out = dup_string(j.dump(2));
    return KOSZUL_OK;
  });
}

koszul_status koszul_colon_json(const koszul_graph* g, int u, int v,
                                char** json_out) {
  if (koszul_status s = require(g && json_out, "null argument")) return s;
  return guarded([&]() -> koszul_status {
    if (!g->g.adjacent(u, v))
      return fail(KOSZUL_ERR_ARG,
                  "{" + std::to_string(u) + "," + std::to_string(v) +
                      "} is not an edge");
    koszul::Edge e(u, v);
    std::set<koszul::VarId> vars;
    for (int i = 1; i <= g->g.vertex_count(); ++i) {
      vars.insert(koszul::var_x(i));
      vars.insert(koszul::var_y(i));
    }
    koszul::GroebnerBasis colon = koszul::colon_by_element(
        koszul::binomial_edge_ideal(koszul::delete_edge(g->g, e)).generators,
        koszul::f_ij(e.u, e.v), koszul::canonical_order(vars));
    json j;
    j["edge"] = {e.u, e.v};
    j["colon_basis"] = json::array();
    for (const koszul::Polynomial& p : colon.elements)
      j["colon_basis"].push_back(koszul::to_text(p));
    *json_out = dup_string(j.dump(2));
    return KOSZUL_OK;
  });
}

koszul_status koszul_colon_check(const koszul_graph* g, int u, int v) {
  if (koszul_status s = require(g != nullptr, "null argument")) return s;
  return guarded([&]() -> koszul_status {
    if (!g->g.adjacent(u, v))
      return fail(KOSZUL_ERR_ARG,
                  "{" + std::to_string(u) + "," + std::to_string(v) +
                      "} is not an edge");
    if (koszul::verify_colon_formula(g->g, koszul::Edge(u, v)))
      return KOSZUL_OK;
    return fail(KOSZUL_ERR_CHECK, "colon identity failed");
  });
}

koszul_status koszul_check_suite(const char* name, char** detail_out) {
  if (koszul_status s = require(name != nullptr, "null argument")) return s;
  return guarded([&]() -> koszul_status {
    json j;
    bool pass = false;
    std::string which = name;
    if (which == "plucker") {
      pass = true;
      j["identities"] = json::array();
      const int tuples[][4] = {{1, 2, 3, 4}, {1, 3, 2, 5}, {2, 4, 6, 7}};
      for (const auto& t : tuples) {
        bool ok = koszul::plucker_check(t[0], t[1], t[2], t[3]);
        pass = pass && ok;
        j["identities"].push_back(
            {{"indices", {t[0], t[1], t[2], t[3]}}, {"holds", ok}});
      }
    } else if (which == "tent") {
      koszul::TentCheckReport r = koszul::tent_section4_checks();
      pass = r.all_pass();
      j["x3_f15_in_ideal"] = r.x3_f15_in_ideal;
      j["y3_f15_in_ideal"] = r.y3_f15_in_ideal;
      j["explicit_identity"] = r.explicit_identity;
      j["f15_not_in_extended"] = r.f15_not_in_extended;
      j["path_initial_ideal"] = r.path_initial_ideal;
      j["tent_initial_ideal"] = r.tent_initial_ideal;
      j["detail"] = r.detail;
    } else if (which == "colon-formula") {
      pass = true;
      j["cases"] = json::array();
      const struct {
        const char* name;
        int param;
        int u, v;
      } cases[] = {{"claw", 0, 1, 4},
                   {"complete", 3, 1, 2},
                   {"c4_chord", 0, 2, 3},
                   {"cycle", 4, 1, 2}};
      for (const auto& c : cases) {
        bool ok = koszul::verify_colon_formula(
            koszul::named_graph(c.name, c.param), koszul::Edge(c.u, c.v));
        pass = pass && ok;
        j["cases"].push_back(
            {{"graph", c.name}, {"edge", {c.u, c.v}}, {"holds", ok}});
      }
    } else if (which == "betti_c4" || which == "betti-c4") {
      long total = koszul::c4_betti_assembly();
      pass = (total == 9);
      j["koszul_summand"] = 6;
      j["monomial_summand"] = total - 6;
      j["total"] = total;
    } else {
      return fail(KOSZUL_ERR_ARG, "unknown check: " + which);
    }
    j["pass"] = pass;
    if (detail_out) *detail_out = dup_string(j.dump(2));
    return pass ? KOSZUL_OK
                : fail(KOSZUL_ERR_CHECK, "check failed: " + which);
  });
}

koszul_status koszul_survey(int max_n, int algebraic, const char* format,
                            char** out) {
  if (koszul_status s = require(format && out, "null argument")) return s;
  return guarded([&]() -> koszul_status {
    std::string fmt = format;
    if (fmt != "json" && fmt != "csv")
      return fail(KOSZUL_ERR_ARG, "format must be json or csv");
    koszul::SurveyReport report = koszul::run_survey(max_n, algebraic != 0);
    *out = dup_string(fmt == "json" ? report.to_json() : report.to_csv());
    if (!report.failures.empty())
      return fail(KOSZUL_ERR_CHECK, "survey found inconsistencies");
    return KOSZUL_OK;
  });
}

}  // extern "C"
