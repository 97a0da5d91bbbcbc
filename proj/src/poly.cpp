#include "koszul/poly.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <sstream>

namespace koszul {

std::string var_name(const VarId& v) {
  switch (v.kind) {
    case VarId::AUX:
      return "t";
    case VarId::X:
      return "x" + std::to_string(v.index);
    case VarId::Y:
      return "y" + std::to_string(v.index);
  }
  return "?";
}

Monomial Monomial::variable(const VarId& v, int exp) {
  if (exp < 0) throw std::invalid_argument("negative exponent");
  Monomial m;
  if (exp > 0) {
    m.exps_.push_back({v, exp});
    m.degree_ = exp;
  }
  return m;
}

int Monomial::exponent(const VarId& v) const {
  for (const auto& [w, e] : exps_)
    if (w == v) return e;
  return 0;
}

std::set<VarId> Monomial::support() const {
  std::set<VarId> s;
  for (const auto& [v, e] : exps_) s.insert(v);
  return s;
}

bool Monomial::squarefree() const {
  for (const auto& [v, e] : exps_)
    if (e > 1) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  auto a = exps_.begin(), b = other.exps_.begin();
  while (a != exps_.end() || b != other.exps_.end()) {
    if (b == other.exps_.end() || (a != exps_.end() && a->first < b->first))
      out.exps_.push_back(*a++);
    else if (a == exps_.end() || b->first < a->first)
      out.exps_.push_back(*b++);
    else {
      out.exps_.push_back({a->first, a->second + b->second});
      ++a;
      ++b;
    }
  }
  for (const auto& [v, e] : out.exps_) out.degree_ += e;
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  for (const auto& [v, e] : exps_)
    if (other.exponent(v) < e) return false;
  return true;
}

Monomial Monomial::divide_by(const Monomial& other) const {
  Monomial out;
  for (const auto& [v, e] : exps_) {
    int d = e - other.exponent(v);
    if (d < 0) throw std::invalid_argument("monomial division mismatch");
    if (d > 0) {
      out.exps_.push_back({v, d});
      out.degree_ += d;
    }
  }
  for (const auto& [v, e] : other.exps_)
    if (exponent(v) < e) throw std::invalid_argument("monomial division mismatch");
  return out;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial out;
  auto i = a.exps_.begin(), j = b.exps_.begin();
  while (i != a.exps_.end() || j != b.exps_.end()) {
    if (j == b.exps_.end() || (i != a.exps_.end() && i->first < j->first))
      out.exps_.push_back(*i++);
    else if (i == a.exps_.end() || j->first < i->first)
      out.exps_.push_back(*j++);
    else {
      out.exps_.push_back({i->first, std::max(i->second, j->second)});
      ++i;
      ++j;
    }
  }
  for (const auto& [v, e] : out.exps_) out.degree_ += e;
  return out;
}

bool Monomial::coprime(const Monomial& other) const {
  for (const auto& [v, e] : exps_)
    if (other.exponent(v) > 0) return false;
  return true;
}

bool MonomialOrder::covers(const VarId& v) const {
  return std::find(priority.begin(), priority.end(), v) != priority.end();
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  for (const VarId& v : priority) {
    int ea = a.exponent(v), eb = b.exponent(v);
    if (ea != eb) return ea > eb ? 1 : -1;
  }
  if (a != b)
    throw std::invalid_argument(
        "monomials contain a variable outside the monomial order");
  return 0;
}

MonomialOrder canonical_order(const std::set<VarId>& vars) {
  MonomialOrder order;
  for (const VarId& v : vars)
    if (v.kind == VarId::AUX) order.priority.push_back(v);
  for (const VarId& v : vars)
    if (v.kind == VarId::X) order.priority.push_back(v);
  for (const VarId& v : vars)
    if (v.kind == VarId::Y) order.priority.push_back(v);
  return order;
}

Polynomial::Polynomial(const Monomial& m, const mpq_class& c) {
  if (c != 0) terms_[m] = c;
}

void Polynomial::add_term(const Monomial& m, const mpq_class& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_[m] = c;
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::set<VarId> Polynomial::variables() const {
  std::set<VarId> s;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.exponents()) s.insert(v);
  return s;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  Polynomial out = *this;
  for (const auto& [m, c] : other.terms_) out.add_term(m, c);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out;
  for (const auto& [m, c] : terms_) out.terms_[m] = -c;
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  return *this + (-other);
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  Polynomial out;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : other.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Polynomial Polynomial::scale(const mpq_class& c) const {
  Polynomial out;
  if (c == 0) return out;
  for (const auto& [m, coef] : terms_) out.terms_[m] = coef * c;
  return out;
}

std::pair<Monomial, mpq_class> Polynomial::leading_term(
    const MonomialOrder& order) const {
  if (is_zero()) throw std::invalid_argument("leading term of zero polynomial");
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
    if (order.less(best->first, it->first)) best = it;
  return {best->first, best->second};
}

Polynomial Polynomial::monic(const MonomialOrder& order) const {
  if (is_zero()) return *this;
  auto [lm, lc] = leading_term(order);
  return scale(1 / lc);
}

// ---------------------------------------------------------------------------
// Text form.

namespace {

struct PolyParser {
  const std::string& s;
  size_t pos = 0;

  explicit PolyParser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  std::string read_int() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start) throw parse_error("expected integer in polynomial");
    return s.substr(start, pos - start);
  }

  // [coef] [* var[^e]]* with coef an integer or p/q fraction.
  Polynomial read_term(int sign) {
    mpq_class coef = sign;
    Monomial mono;
    bool saw_factor = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string num = read_int();
      std::string den = "1";
      if (peek() == '/') {
        ++pos;
        den = read_int();
      }
      mpq_class q(num + "/" + den);
      q.canonicalize();
      coef *= q;
      saw_factor = true;
    }
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos;
        c = peek();
      } else if (saw_factor && (c == 'x' || c == 'y' || c == 't')) {
        // allow implicit multiplication
      } else if (!saw_factor && (c == 'x' || c == 'y' || c == 't')) {
        // first factor
      } else {
        break;
      }
      if (c != 'x' && c != 'y' && c != 't')
        throw parse_error("expected variable in polynomial");
      ++pos;
      VarId v;
      if (c == 't') {
        v = var_aux();
      } else {
        int idx = std::stoi(read_int());
        v = (c == 'x') ? var_x(idx) : var_y(idx);
      }
      int exp = 1;
      if (peek() == '^') {
        ++pos;
        exp = std::stoi(read_int());
        if (exp < 1) throw parse_error("exponent must be positive");
      }
      mono = mono * Monomial::variable(v, exp);
      saw_factor = true;
    }
    if (!saw_factor) throw parse_error("empty term in polynomial");
    Polynomial p;
    p.add_term(mono, coef);
    return p;
  }

  Polynomial parse() {
    Polynomial out;
    if (eof()) throw parse_error("empty polynomial text");
    if (peek() == '0') {
      size_t save = pos;
      ++pos;
      if (eof()) return out;
      pos = save;
    }
    int sign = 1;
    if (peek() == '-') {
      sign = -1;
      ++pos;
    } else if (peek() == '+') {
      ++pos;
    }
    out = out + read_term(sign);
    while (!eof()) {
      char c = peek();
      if (c == '+')
        sign = 1;
      else if (c == '-')
        sign = -1;
      else
        throw parse_error("unexpected character in polynomial: " +
                          std::string(1, c));
      ++pos;
      out = out + read_term(sign);
    }
    return out;
  }
};

std::string coef_text(const mpq_class& c) {
  std::ostringstream os;
  os << c;
  return os.str();
}

}  // namespace

Polynomial parse_polynomial(const std::string& text) {
  PolyParser p(text);
  return p.parse();
}

std::string to_text(const Polynomial& p) {
  if (p.is_zero()) return "0";
  MonomialOrder order = canonical_order(p.variables());
  std::vector<std::pair<Monomial, mpq_class>> terms(p.terms().begin(),
                                                    p.terms().end());
  std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
    return order.less(b.first, a.first);
  });
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    mpq_class a = abs(c);
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    std::string mono;
    for (const auto& [v, e] : m.exponents()) {
      if (!mono.empty()) mono += "*";
      mono += var_name(v);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += coef_text(a);
    } else if (a == 1) {
      out += mono;
    } else {
      out += coef_text(a) + "*" + mono;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Division and Buchberger.

int GroebnerBasis::max_degree() const {
  int d = -1;
  for (const Polynomial& p : elements) d = std::max(d, p.total_degree());
  return d;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const MonomialOrder& order) {
  std::vector<std::pair<Monomial, mpq_class>> lead;
  for (const Polynomial& g : basis) {
    if (g.is_zero()) throw std::invalid_argument("zero polynomial in basis");
    lead.push_back(g.leading_term(order));
  }
  Polynomial r = f;
  while (true) {
    // Order-largest reducible monomial, first applicable divisor.
    const Monomial* target = nullptr;
    size_t divisor = 0;
    mpq_class coef;
    for (const auto& [m, c] : r.terms()) {
      for (size_t i = 0; i < lead.size(); ++i) {
        if (!lead[i].first.divides(m)) continue;
        if (target == nullptr || order.less(*target, m)) {
          target = &m;
          divisor = i;
          coef = c;
        }
        break;
      }
    }
    if (target == nullptr) break;
    Monomial shift = target->divide_by(lead[divisor].first);
    mpq_class factor = coef / lead[divisor].second;
    r = r - basis[divisor] * Polynomial(shift, factor);
  }
  return r;
}

namespace {

double gb_time_limit_seconds() {
  if (const char* env = std::getenv("KOSZUL_MAX_GB_SECONDS")) {
    double v = std::atof(env);
    if (v > 0) return v;
  }
  return 60.0;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        const MonomialOrder& order) {
  auto [lmf, lcf] = f.leading_term(order);
  auto [lmg, lcg] = g.leading_term(order);
  Monomial l = Monomial::lcm(lmf, lmg);
  Polynomial a = f * Polynomial(l.divide_by(lmf), 1 / lcf);
  Polynomial b = g * Polynomial(l.divide_by(lmg), 1 / lcg);
  return a - b;
}

}  // namespace

GroebnerBasis buchberger(const std::vector<Polynomial>& gens,
                         const MonomialOrder& order) {
  for (const Polynomial& g : gens)
    for (const VarId& v : g.variables())
      if (!order.covers(v))
        throw std::invalid_argument("generator variable " + var_name(v) +
                                    " not covered by monomial order");

  auto start = std::chrono::steady_clock::now();
  double limit = gb_time_limit_seconds();
  auto check_guard = [&]() {
    std::chrono::duration<double> elapsed =
        std::chrono::steady_clock::now() - start;
    if (elapsed.count() > limit)
      throw guard_error("Groebner basis computation exceeded " +
                        std::to_string(limit) + " seconds");
  };

  std::vector<Polynomial> basis;
  std::vector<Monomial> lm;
  for (const Polynomial& g : gens) {
    if (g.is_zero()) continue;
    Polynomial m = g.monic(order);
    basis.push_back(m);
    lm.push_back(m.leading_term(order).first);
  }

  std::set<std::pair<size_t, size_t>> queue;
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) queue.insert({i, j});

  auto in_queue = [&](size_t a, size_t b) {
    return queue.count({std::min(a, b), std::max(a, b)}) > 0;
  };

  while (!queue.empty()) {
    check_guard();
    // Normal strategy: minimal lcm degree first.
    auto best = queue.begin();
    int best_deg = Monomial::lcm(lm[best->first], lm[best->second]).degree();
    for (auto it = std::next(queue.begin()); it != queue.end(); ++it) {
      int d = Monomial::lcm(lm[it->first], lm[it->second]).degree();
      if (d < best_deg) {
        best = it;
        best_deg = d;
      }
    }
    auto [i, j] = *best;
    queue.erase(best);

    if (lm[i].coprime(lm[j])) continue;  // product criterion
    Monomial l = Monomial::lcm(lm[i], lm[j]);
    bool chained = false;
    for (size_t k = 0; k < basis.size() && !chained; ++k) {
      if (k == i || k == j) continue;
      if (lm[k].divides(l) && !in_queue(i, k) && !in_queue(j, k)) chained = true;
    }
    if (chained) continue;  // chain criterion

    Polynomial s = s_polynomial(basis[i], basis[j], order);
    Polynomial r = normal_form(s, basis, order);
    if (r.is_zero()) continue;
    r = r.monic(order);
    size_t idx = basis.size();
    basis.push_back(r);
    lm.push_back(r.leading_term(order).first);
    for (size_t k = 0; k < idx; ++k) queue.insert({k, idx});
  }

  // Minimize: drop elements whose leading monomial is divisible by
  // another's.
  std::vector<bool> keep(basis.size(), true);
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = 0; j < basis.size() && keep[i]; ++j) {
      if (i == j || !keep[j]) continue;
      if (lm[j].divides(lm[i]) && !(lm[i] == lm[j] && j > i)) keep[i] = false;
    }
  std::vector<Polynomial> minimal;
  for (size_t i = 0; i < basis.size(); ++i)
    if (keep[i]) minimal.push_back(basis[i]);

  // Tail-reduce each element against the others until stable.
  bool changed = true;
  while (changed) {
    changed = false;
    check_guard();
    for (size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Polynomial> others;
      for (size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      Polynomial r = others.empty()
                         ? minimal[i]
                         : normal_form(minimal[i], others, order);
      if (r.is_zero()) {
        minimal.erase(minimal.begin() + static_cast<long>(i));
        changed = true;
        break;
      }
      r = r.monic(order);
      if (!(r == minimal[i])) {
        minimal[i] = r;
        changed = true;
      }
    }
  }

  std::sort(minimal.begin(), minimal.end(),
            [&](const Polynomial& a, const Polynomial& b) {
              return order.less(b.leading_term(order).first,
                                a.leading_term(order).first);
            });
  return GroebnerBasis{order, minimal};
}

std::vector<Monomial> initial_ideal(const GroebnerBasis& gb) {
  std::vector<Monomial> out;
  for (const Polynomial& p : gb.elements)
    out.push_back(p.leading_term(gb.order).first);
  return out;
}

bool ideal_membership(const Polynomial& f, const GroebnerBasis& gb) {
  if (f.is_zero()) return true;
  if (gb.elements.empty()) return false;
  return normal_form(f, gb.elements, gb.order).is_zero();
}

GroebnerBasis eliminate(const std::vector<Polynomial>& gens,
                        const std::set<VarId>& drop_vars,
                        const MonomialOrder& rest_order) {
  MonomialOrder order;
  for (const VarId& v : drop_vars) order.priority.push_back(v);
  for (const VarId& v : rest_order.priority)
    if (!drop_vars.count(v)) order.priority.push_back(v);
  GroebnerBasis gb = buchberger(gens, order);
  GroebnerBasis out{rest_order, {}};
  for (const Polynomial& p : gb.elements) {
    bool pure = true;
    for (const VarId& v : p.variables())
      if (drop_vars.count(v)) pure = false;
    if (pure) out.elements.push_back(p);
  }
  return out;
}

namespace {

// Exact division; throws consistency_error when f does not divide g.
Polynomial divide_exact(const Polynomial& g, const Polynomial& f,
                        const MonomialOrder& order) {
  Polynomial rest = g, quotient;
  auto [lmf, lcf] = f.leading_term(order);
  while (!rest.is_zero()) {
    auto [lm, lc] = rest.leading_term(order);
    if (!lmf.divides(lm))
      throw consistency_error(
          "intersection element not divisible by the colon divisor");
    Polynomial step(lm.divide_by(lmf), lc / lcf);
    quotient = quotient + step;
    rest = rest - f * step;
  }
  return quotient;
}

}  // namespace

GroebnerBasis colon_by_element(const std::vector<Polynomial>& gens,
                               const Polynomial& f,
                               const MonomialOrder& order) {
  if (f.is_zero()) throw std::invalid_argument("colon by zero");
  Polynomial t(Monomial::variable(var_aux()), 1);
  Polynomial one(Monomial(), 1);
  std::vector<Polynomial> mixed;
  for (const Polynomial& g : gens)
    if (!g.is_zero()) mixed.push_back(t * g);
  mixed.push_back((one - t) * f);
  GroebnerBasis intersection = eliminate(mixed, {var_aux()}, order);
  std::vector<Polynomial> colon_gens;
  for (const Polynomial& p : intersection.elements)
    colon_gens.push_back(divide_exact(p, f, order));
  return buchberger(colon_gens, order);
}

bool ideal_equal(const std::vector<Polynomial>& gens_a,
                 const std::vector<Polynomial>& gens_b) {
  std::set<VarId> vars;
  for (const Polynomial& p : gens_a)
    for (const VarId& v : p.variables()) vars.insert(v);
  for (const Polynomial& p : gens_b)
    for (const VarId& v : p.variables()) vars.insert(v);
  MonomialOrder order = canonical_order(vars);
  GroebnerBasis ga = buchberger(gens_a, order);
  GroebnerBasis gb = buchberger(gens_b, order);
  bool same_basis = ga.elements == gb.elements;
  // Cross-check via mutual membership of generators.
  bool mutual = true;
  for (const Polynomial& p : gens_a)
    if (!ideal_membership(p, gb)) mutual = false;
  for (const Polynomial& p : gens_b)
    if (!ideal_membership(p, ga)) mutual = false;
  if (same_basis && !mutual)
    throw consistency_error("identical reduced bases but membership fails");
  return same_basis;
}

}  // namespace koszul
