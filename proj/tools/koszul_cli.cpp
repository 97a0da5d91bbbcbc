// Command-line front end; talks to the library exclusively through the
// C interface in koszul.h.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "koszul.h"

using json = nlohmann::ordered_json;

namespace {

// Exit codes: 0 success, 1 failed check or internal inconsistency,
// 2 bad input, 3 cost guard.
int exit_code(koszul_status s) {
  switch (s) {
    case KOSZUL_OK:
      return 0;
    case KOSZUL_ERR_PARSE:
    case KOSZUL_ERR_ARG:
      return 2;
    case KOSZUL_ERR_GUARD:
      return 3;
    default:
      return 1;
  }
}

int report_error(koszul_status s) {
  std::cerr << "error: " << koszul_last_error() << "\n";
  return exit_code(s);
}

struct GraphInput {
  std::string named;
  int param = 0;
  std::string edges;
  std::string file;
  std::string graph6;

  void attach(CLI::App* cmd, bool required = true) {
    auto* group = cmd->add_option_group("input", "graph input (pick one)");
    group->add_option("--named", named,
                      "claw|tent|net|trampoline|cycle|path|complete|"
                      "tent_labeled|c4_chord|thick_net");
    cmd->add_option("--param", param, "parameter for trampoline/cycle/path/complete");
    group->add_option("--edges", edges, "inline edge list, e.g. \"1-2,2-3\"");
    group->add_option("--file", file, "edge-list file");
    group->add_option("--graph6", graph6, "graph6 string");
    if (required)
      group->require_option(1);
    else
      group->require_option(0, 1);
  }

  koszul_status build(koszul_graph** out) const {
    if (!named.empty()) return koszul_graph_named(named.c_str(), param, out);
    if (!graph6.empty()) return koszul_graph_from_graph6(graph6.c_str(), out);
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) {
        std::cerr << "error: cannot open " << file << "\n";
        return KOSZUL_ERR_ARG;
      }
      std::ostringstream text;
      text << in.rdbuf();
      return koszul_graph_from_edge_list(text.str().c_str(), out);
    }
    std::string text;
    for (char c : edges) text += (c == ',' ? '\n' : c == '-' ? ' ' : c);
    return koszul_graph_from_edge_list(text.c_str(), out);
  }
};

struct OwnedString {
  char* s = nullptr;
  ~OwnedString() { koszul_string_free(s); }
};

struct OwnedGraph {
  koszul_graph* g = nullptr;
  ~OwnedGraph() { koszul_graph_free(g); }
};

std::vector<int> parse_order_list(const std::string& text) {
  std::vector<int> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) out.push_back(std::stoi(item));
  return out;
}

void print_flags_text(const json& j) {
  for (const auto& [key, value] : j.at("flags").items())
    std::cout << key << ": " << (value.get<bool>() ? "yes" : "no") << "\n";
  std::cout << "clique_number: " << j.at("clique_number") << "\n";
  const json& certs = j.at("certificates");
  for (const char* key : {"peo", "seo", "closed_order"})
    if (certs.contains(key)) std::cout << key << ": " << certs.at(key).dump() << "\n";
  if (certs.contains("edge_order"))
    std::cout << "edge_order: " << certs.at("edge_order").dump() << "\n";
  for (const char* key : {"long_cycle", "claw", "tent", "net"})
    if (certs.contains(key))
      std::cout << key << " witness: " << certs.at(key).dump() << "\n";
  if (j.contains("blocks_all_closed"))
    std::cout << "blocks_all_closed: "
              << (j.at("blocks_all_closed").get<bool>() ? "yes" : "no") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Koszul property toolkit for binomial edge ideals"};
  app.require_subcommand(1);

  GraphInput classify_in, order_in, ideal_in, betti_in, colon_in;
  std::string format = "text";

  auto* classify_cmd =
      app.add_subcommand("classify", "decide Koszulness with certificates");
  classify_in.attach(classify_cmd);
  classify_cmd->add_option("--format", format, "text|json");

  auto* order_cmd = app.add_subcommand(
      "order", "extract one elimination order from the classification");
  order_in.attach(order_cmd);
  std::string order_kind = "strong";
  order_cmd->add_option("--kind", order_kind, "perfect|strong|closed|edge");

  auto* ideal_cmd = app.add_subcommand(
      "ideal", "lex Groebner basis and initial ideal of the edge ideal");
  ideal_in.attach(ideal_cmd);
  std::string ideal_action = "gb";
  ideal_cmd->add_option("action", ideal_action, "gens|gb|init|colon");
  std::string ideal_order;
  ideal_cmd->add_option("--order", ideal_order,
                        "vertex order as comma list, default 1..n");
  std::string ideal_edge;
  ideal_cmd->add_option("--edge", ideal_edge, "edge u,v (colon action only)");

  auto* betti_cmd =
      app.add_subcommand("betti", "Betti table of the lex initial ideal");
  betti_in.attach(betti_cmd);
  std::string betti_order;
  std::string betti_format = "text";
  betti_cmd->add_option("--order", betti_order,
                        "vertex order as comma list, default 1..n");
  betti_cmd->add_option("--format", betti_format, "text|json");

  auto* check_cmd =
      app.add_subcommand("check", "built-in algebraic identity checks");
  std::string check_name;
  check_cmd
      ->add_option("name", check_name,
                   "plucker|tent|colon-formula|betti-c4|colon")
      ->required();
  std::string colon_edge;
  check_cmd->add_option("--edge", colon_edge, "edge u,v (colon check only)");
  colon_in.attach(check_cmd, false);

  auto* survey_cmd = app.add_subcommand(
      "survey", "classify every connected graph up to a vertex bound");
  int survey_max_n = 6;
  bool survey_algebraic = false;
  std::string survey_format = "csv";
  survey_cmd->add_option("max_n", survey_max_n, "largest vertex count (<= 8)");
  survey_cmd->add_option("--max-n", survey_max_n, "same as the positional");
  survey_cmd->add_flag("--algebraic,--algebra", survey_algebraic,
                       "cross-check closedness by quadratic-basis search (n <= 5)");
  survey_cmd->add_option("--format", survey_format, "csv|json");

  CLI11_PARSE(app, argc, argv);

  if (classify_cmd->parsed()) {
    OwnedGraph g;
    if (koszul_status s = classify_in.build(&g.g)) return report_error(s);
    OwnedString out;
    if (koszul_status s = koszul_classify_json(g.g, &out.s))
      return report_error(s);
    if (format == "json") {
      std::cout << out.s << "\n";
    } else {
      print_flags_text(json::parse(out.s));
    }
    return 0;
  }

  if (order_cmd->parsed()) {
    OwnedGraph g;
    if (koszul_status s = order_in.build(&g.g)) return report_error(s);
    OwnedString out;
    if (koszul_status s = koszul_classify_json(g.g, &out.s))
      return report_error(s);
    json certs = json::parse(out.s).at("certificates");
    const std::string key =
        (order_kind == "perfect" || order_kind == "peo")  ? "peo"
        : (order_kind == "strong" || order_kind == "seo") ? "seo"
        : order_kind == "closed"                          ? "closed_order"
        : order_kind == "edge"                            ? "edge_order"
                                                          : "";
    if (key.empty()) {
      std::cerr << "error: unknown order kind " << order_kind << "\n";
      return 2;
    }
    if (!certs.contains(key)) {
      std::cout << "none\n";
      return 1;
    }
    std::cout << certs.at(key).dump() << "\n";
    return 0;
  }

  if (ideal_cmd->parsed()) {
    OwnedGraph g;
    if (koszul_status s = ideal_in.build(&g.g)) return report_error(s);
    if (ideal_action == "colon") {
      std::vector<int> uv = parse_order_list(ideal_edge);
      if (uv.size() != 2) {
        std::cerr << "error: --edge u,v required for the colon action\n";
        return 2;
      }
      OwnedString out;
      if (koszul_status s = koszul_colon_json(g.g, uv[0], uv[1], &out.s))
        return report_error(s);
      std::cout << out.s << "\n";
      return 0;
    }
    std::vector<int> order;
    if (!ideal_order.empty()) order = parse_order_list(ideal_order);
    OwnedString out;
    koszul_status s = koszul_groebner_json(
        g.g, order.empty() ? nullptr : order.data(),
        static_cast<int>(order.size()), &out.s);
    if (s) return report_error(s);
    json j = json::parse(out.s);
    if (ideal_action == "gens") {
      for (const auto& p : j.at("generators"))
        std::cout << p.get<std::string>() << "\n";
    } else if (ideal_action == "init") {
      for (const auto& m : j.at("initial_ideal"))
        std::cout << m.get<std::string>() << "\n";
    } else if (ideal_action == "gb") {
      std::cout << out.s << "\n";
    } else {
      std::cerr << "error: unknown ideal action " << ideal_action << "\n";
      return 2;
    }
    return 0;
  }

  if (betti_cmd->parsed()) {
    OwnedGraph g;
    if (koszul_status s = betti_in.build(&g.g)) return report_error(s);
    std::vector<int> order;
    if (!betti_order.empty()) order = parse_order_list(betti_order);
    OwnedString out;
    koszul_status s = koszul_betti_json(
        g.g, order.empty() ? nullptr : order.data(),
        static_cast<int>(order.size()), &out.s);
    if (s) return report_error(s);
    if (betti_format == "json")
      std::cout << out.s << "\n";
    else
      std::cout << json::parse(out.s).at("rendered").get<std::string>();
    return 0;
  }

  if (check_cmd->parsed()) {
    if (check_name == "colon") {
      OwnedGraph g;
      if (koszul_status s = colon_in.build(&g.g)) return report_error(s);
      std::vector<int> uv = parse_order_list(colon_edge);
      if (uv.size() != 2) {
        std::cerr << "error: --edge u,v required for the colon check\n";
        return 2;
      }
      if (koszul_status s = koszul_colon_check(g.g, uv[0], uv[1]))
        return report_error(s);
      std::cout << "colon identity holds for {" << uv[0] << "," << uv[1]
                << "}\n";
      return 0;
    }
    OwnedString out;
    koszul_status s = koszul_check_suite(check_name.c_str(), &out.s);
    if (out.s) std::cout << out.s << "\n";
    if (s) return report_error(s);
    return 0;
  }

  if (survey_cmd->parsed()) {
    OwnedString out;
    koszul_status s = koszul_survey(survey_max_n, survey_algebraic ? 1 : 0,
                                    survey_format.c_str(), &out.s);
    if (out.s) std::cout << out.s;
    if (s) return report_error(s);
    return 0;
  }

  return 2;
}
