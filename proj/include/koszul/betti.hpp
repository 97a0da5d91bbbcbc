#ifndef KOSZUL_BETTI_HPP
#define KOSZUL_BETTI_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "koszul/poly.hpp"

namespace koszul {

// Abstract simplicial complex on a finite vertex set, stored by facets.
struct SimplicialComplex {
  std::vector<VarId> vertices;
  std::vector<std::set<VarId>> facets;  // maximal faces, no containments

  bool is_face(const std::set<VarId>& f) const;
  // Restriction to a vertex subset.
  SimplicialComplex restrict(const std::set<VarId>& subset) const;
};

// Stanley-Reisner complex of a squarefree monomial ideal: faces are the
// subsets containing no generator support.
SimplicialComplex stanley_reisner(const std::vector<Monomial>& generators,
                                  const std::set<VarId>& variables);

// Rank of reduced simplicial homology over the rationals in the given
// dimension (dim >= -1), by exact Gaussian elimination.
int reduced_homology_rank(const SimplicialComplex& complex, int dim);

struct BettiTable {
  // (homological degree i, internal degree j) -> beta_{i,j}
  std::map<std::pair<int, int>, long> entries;

  long get(int i, int j) const;
  // Paper layout: beta_{i,j} sits in row j - i, column i.
  std::string render() const;
};

// Multigraded Betti numbers of S/I for a squarefree monomial ideal I via
// Hochster's formula: beta_{i,j} sums reduced homology in degree j-i-1
// of the restrictions to j-subsets of the union of generator supports.
BettiTable betti_table_squarefree(const std::vector<Monomial>& generators,
                                  int ambient_variables);

// Independent oracle: Betti numbers from the multigraded strands of the
// Taylor complex; exponential in the number of generators (<= 12).
BettiTable betti_table_taylor(const std::vector<Monomial>& generators);

// Coefficients of the Hilbert-series numerator of S/I by
// inclusion-exclusion over generator lcms: coeff[j] = sum_T (-1)^{|T|}
// over subsets with deg lcm(T) = j.
std::vector<long> hilbert_numerator(const std::vector<Monomial>& generators);

// beta_{2,2} of the Koszul quotient plus beta_{2,4} of the chorded-C4
// initial ideal; must equal 9.
long c4_betti_assembly();

}  // namespace koszul

#endif
