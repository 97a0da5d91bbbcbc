#ifndef KOSZUL_POLY_HPP
#define KOSZUL_POLY_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "koszul/graph.hpp"

namespace koszul {

// Ring variable: x_i, y_i, or the single auxiliary eliminator t.
struct VarId {
  enum Kind : std::uint8_t { AUX = 0, X = 1, Y = 2 };
  Kind kind = X;
  int index = 0;  // vertex label for X/Y, always 0 for AUX

  auto operator<=>(const VarId&) const = default;
};

inline VarId var_x(int i) { return {VarId::X, i}; }
inline VarId var_y(int i) { return {VarId::Y, i}; }
inline VarId var_aux() { return {VarId::AUX, 0}; }

std::string var_name(const VarId& v);

// Sparse exponent vector with positive exponents, kept sorted by VarId.
class Monomial {
 public:
  Monomial() = default;
  static Monomial variable(const VarId& v, int exp = 1);

  int degree() const { return degree_; }
  bool is_one() const { return exps_.empty(); }
  int exponent(const VarId& v) const;
  const std::vector<std::pair<VarId, int>>& exponents() const { return exps_; }
  std::set<VarId> support() const;
  bool squarefree() const;

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  Monomial divide_by(const Monomial& other) const;  // *this / other
  static Monomial lcm(const Monomial& a, const Monomial& b);
  bool coprime(const Monomial& other) const;

  // Canonical container ordering; NOT a monomial order.
  auto operator<=>(const Monomial&) const = default;

 private:
  std::vector<std::pair<VarId, int>> exps_;
  int degree_ = 0;
};

// Pure lex order given by a variable priority sequence (highest first).
struct MonomialOrder {
  std::vector<VarId> priority;

  bool covers(const VarId& v) const;
  // -1 if a < b, 0 if equal, +1 if a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) < 0;
  }
};

// Lex order over every variable that can occur, used for canonical
// printing and ideal comparison: t, then x's ascending, then y's.
MonomialOrder canonical_order(const std::set<VarId>& vars);

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(const Monomial& m, const mpq_class& c = 1);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, mpq_class>& terms() const { return terms_; }
  std::set<VarId> variables() const;
  int total_degree() const;  // max term degree; -1 for the zero polynomial

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial scale(const mpq_class& c) const;

  bool operator==(const Polynomial& other) const { return terms_ == other.terms_; }

  std::pair<Monomial, mpq_class> leading_term(const MonomialOrder& order) const;
  Polynomial monic(const MonomialOrder& order) const;

  void add_term(const Monomial& m, const mpq_class& c);

 private:
  std::map<Monomial, mpq_class> terms_;
};

// Text form "x1*y2 - x2*y1" with integer or "p/q" coefficients and "^"
// exponents; parse/print round-trip exactly.
Polynomial parse_polynomial(const std::string& text);
std::string to_text(const Polynomial& p);

struct GroebnerBasis {
  MonomialOrder order;
  std::vector<Polynomial> elements;  // reduced, monic, sorted by leading monomial

  int max_degree() const;
};

// Deterministic multivariate division: always reduces the order-largest
// reducible monomial by the first applicable divisor in basis list order.
Polynomial normal_form(const Polynomial& f,
                       const std::vector<Polynomial>& basis,
                       const MonomialOrder& order);

// Classical Buchberger with coprimality and chain pruning; returns the
// unique reduced basis. Honors KOSZUL_MAX_GB_SECONDS (default 60).
GroebnerBasis buchberger(const std::vector<Polynomial>& gens,
                         const MonomialOrder& order);

// Minimal monomial generators of the initial ideal.
std::vector<Monomial> initial_ideal(const GroebnerBasis& gb);

bool ideal_membership(const Polynomial& f, const GroebnerBasis& gb);

// GB of the elimination ideal: lex with drop_vars first, then rest_order.
GroebnerBasis eliminate(const std::vector<Polynomial>& gens,
                        const std::set<VarId>& drop_vars,
                        const MonomialOrder& rest_order);

// (I : f) via intersection with (f) using the auxiliary variable, then
// exact division by f.
GroebnerBasis colon_by_element(const std::vector<Polynomial>& gens,
                               const Polynomial& f,
                               const MonomialOrder& order);

bool ideal_equal(const std::vector<Polynomial>& gens_a,
                 const std::vector<Polynomial>& gens_b);

}  // namespace koszul

#endif
