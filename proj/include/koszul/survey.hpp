#ifndef KOSZUL_SURVEY_HPP
#define KOSZUL_SURVEY_HPP

#include <map>
#include <string>
#include <vector>

#include "koszul/graph.hpp"

namespace koszul {

// Connected graphs on 1..n up to isomorphism, one canonical representative
// each, built by attaching a new vertex to every nonempty subset of each
// connected (n-1)-graph. Guard n <= 8.
std::vector<Graph> enumerate_connected_graphs(int n);

struct SurveyRow {
  int n = 0;
  long total = 0;
  long chordal = 0;
  long strongly_chordal = 0;
  long claw_free = 0;
  long koszul = 0;
  long closed = 0;
  long koszul_not_closed = 0;
};

struct SurveyReport {
  std::vector<SurveyRow> rows;
  // graph6 forms of Koszul graphs that are not closed, smallest n first.
  std::vector<std::string> koszul_not_closed_examples;
  // Classification inconsistencies; must stay empty.
  std::vector<std::string> failures;

  std::string to_csv() const;
  std::string to_json() const;
};

// Classifies every connected graph with at most max_n vertices and checks
// the implication chain closed => Koszul => strongly chordal => chordal on
// each one. With algebraic = true, additionally cross-checks the closed
// flag against an exhaustive quadratic-lex-basis search for n <= algebraic
// limit (default 5).
SurveyReport run_survey(int max_n, bool algebraic = false,
                        int algebraic_max_n = 5);

}  // namespace koszul

#endif
