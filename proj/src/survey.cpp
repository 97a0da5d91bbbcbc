#include "koszul/survey.hpp"

#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "koszul/bei.hpp"
#include "koszul/classify.hpp"

namespace koszul {

std::vector<Graph> enumerate_connected_graphs(int n) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  if (n > 8) throw guard_error("graph enumeration limited to n <= 8");
  std::vector<Graph> current = {Graph(1)};
  for (int size = 2; size <= n; ++size) {
    // Every connected graph arises from a connected graph one vertex
    // smaller by attaching the new top vertex to a nonempty subset
    // (remove any non-cut vertex to see this).
    std::map<std::string, Graph> next;
    for (const Graph& h : current) {
      std::vector<Edge> base = h.edges();
      unsigned long subsets = 1ul << (size - 1);
      for (unsigned long mask = 1; mask < subsets; ++mask) {
        std::vector<Edge> edges = base;
        for (int v = 1; v < size; ++v)
          if ((mask >> (v - 1)) & 1) edges.emplace_back(v, size);
        Graph g(size, edges);
        next.emplace(canonical_form(g), std::move(g));
      }
    }
    current.clear();
    current.reserve(next.size());
    for (auto& [key, g] : next) current.push_back(std::move(g));
  }
  return current;
}

SurveyReport run_survey(int max_n, bool algebraic, int algebraic_max_n) {
  if (max_n < 1) throw std::invalid_argument("need max_n >= 1");
  if (max_n > 8) throw guard_error("graph enumeration limited to n <= 8");
  SurveyReport report;
  for (int n = 1; n <= max_n; ++n) {
    SurveyRow row;
    row.n = n;
    for (const Graph& g : enumerate_connected_graphs(n)) {
      ClassificationReport c = classify(g);
      ++row.total;
      if (c.chordal) ++row.chordal;
      if (c.strongly_chordal) ++row.strongly_chordal;
      if (c.claw_free) ++row.claw_free;
      if (c.koszul) ++row.koszul;
      if (c.closed) ++row.closed;
      std::string g6 = encode_graph6(g);
      if (c.closed && !c.koszul)
        report.failures.push_back(g6 + ": closed but not Koszul");
      if (c.koszul && !c.strongly_chordal)
        report.failures.push_back(g6 + ": Koszul but not strongly chordal");
      if (c.strongly_chordal && !c.chordal)
        report.failures.push_back(g6 + ": strongly chordal but not chordal");
      if (c.koszul != c.edge_order.has_value())
        report.failures.push_back(g6 + ": edge order existence disagrees");
      if (c.koszul && !c.closed) {
        ++row.koszul_not_closed;
        report.koszul_not_closed_examples.push_back(g6);
      }
      if (algebraic && n <= algebraic_max_n &&
          quadratic_gb_exists(g) != c.closed)
        report.failures.push_back(g6 + ": quadratic basis search disagrees");
    }
    report.rows.push_back(row);
  }
  return report;
}

std::string SurveyReport::to_csv() const {
  std::ostringstream os;
  os << "n,connected,chordal,strongly_chordal,claw_free,koszul,closed,"
        "koszul_not_closed\n";
  for (const SurveyRow& r : rows)
    os << r.n << "," << r.total << "," << r.chordal << ","
       << r.strongly_chordal << "," << r.claw_free << "," << r.koszul << ","
       << r.closed << "," << r.koszul_not_closed << "\n";
  return os.str();
}

std::string SurveyReport::to_json() const {
  nlohmann::ordered_json j;
  j["rows"] = nlohmann::ordered_json::array();
  for (const SurveyRow& r : rows) {
    nlohmann::ordered_json row;
    row["n"] = r.n;
    row["connected"] = r.total;
    row["chordal"] = r.chordal;
    row["strongly_chordal"] = r.strongly_chordal;
    row["claw_free"] = r.claw_free;
    row["koszul"] = r.koszul;
    row["closed"] = r.closed;
    row["koszul_not_closed"] = r.koszul_not_closed;
    j["rows"].push_back(row);
  }
  j["koszul_not_closed_examples"] = koszul_not_closed_examples;
  j["failures"] = failures;
  return j.dump(2);
}

}  // namespace koszul
