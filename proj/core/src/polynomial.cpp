#include "rcb/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace rcb {

IntPolynomial IntPolynomial::constant(std::vector<std::string> variables, const BigInt& value) {
  IntPolynomial p(std::move(variables));
  p.add_term(Exponents(p.vars_.size(), 0), value);
  return p;
}

IntPolynomial IntPolynomial::variable(std::vector<std::string> variables, const std::string& name) {
  IntPolynomial p(std::move(variables));
  const auto it = std::find(p.vars_.begin(), p.vars_.end(), name);
  if (it == p.vars_.end()) throw ValidationError("unknown variable '" + name + "'");
  Exponents e(p.vars_.size(), 0);
  e[static_cast<std::size_t>(it - p.vars_.begin())] = 1;
  p.add_term(e, 1);
  return p;
}

IntPolynomial IntPolynomial::monomial(std::vector<std::string> variables, Exponents exps, const BigInt& coeff) {
  IntPolynomial p(std::move(variables));
  if (exps.size() != p.vars_.size()) throw ValidationError("exponent vector length mismatch");
  p.add_term(exps, coeff);
  return p;
}

unsigned IntPolynomial::total_degree() const {
  unsigned best = 0;
  for (const auto& [e, c] : terms_) {
    unsigned s = 0;
    for (unsigned k : e) s += k;
    best = std::max(best, s);
  }
  return best;
}

BigInt IntPolynomial::coefficient(const Exponents& exps) const {
  const auto it = terms_.find(exps);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void IntPolynomial::add_term(const Exponents& exps, const BigInt& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

void IntPolynomial::require_same_variables(const IntPolynomial& o) const {
  if (vars_ != o.vars_) throw ValidationError("polynomials over different variable lists");
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.is_zero()) return *this;
  if (vars_.empty() && terms_.empty()) vars_ = o.vars_;
  require_same_variables(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) { return *this += -o; }

IntPolynomial& IntPolynomial::operator*=(const BigInt& k) {
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= k;
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  a.require_same_variables(b);
  IntPolynomial r(a.vars_);
  IntPolynomial::Exponents e(a.vars_.size());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

IntPolynomial IntPolynomial::pow(unsigned n) const {
  IntPolynomial result = constant(vars_, 1);
  IntPolynomial base = *this;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1u;
    if (n > 0) base = base * base;
  }
  return result;
}

Rational IntPolynomial::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != vars_.size()) throw ValidationError("evaluation point has wrong dimension");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (unsigned k = 0; k < e[i]; ++k) term *= point[i];
    sum += term;
  }
  sum.canonicalize();
  return sum;
}

double IntPolynomial::evaluate(const std::vector<double>& point) const {
  if (point.size() != vars_.size()) throw ValidationError("evaluation point has wrong dimension");
  double sum = 0;
  for (const auto& [e, c] : terms_) {
    double term = c.get_d();
    for (std::size_t i = 0; i < e.size(); ++i)
      for (unsigned k = 0; k < e[i]; ++k) term *= point[i];
    sum += term;
  }
  return sum;
}

IntPolynomial IntPolynomial::with_variables(const std::vector<std::string>& variables) const {
  std::vector<std::size_t> target(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    const auto it = std::find(variables.begin(), variables.end(), vars_[i]);
    target[i] = it == variables.end() ? variables.size() : static_cast<std::size_t>(it - variables.begin());
  }
  IntPolynomial r(variables);
  for (const auto& [e, c] : terms_) {
    Exponents ne(variables.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (target[i] == variables.size()) throw ValidationError("variable '" + vars_[i] + "' not in target list");
      ne[target[i]] += e[i];
    }
    r.add_term(ne, c);
  }
  return r;
}

bool IntPolynomial::operator==(const IntPolynomial& o) const {
  if (vars_ == o.vars_) return terms_ == o.terms_;
  if (is_zero() && o.is_zero()) return true;
  return false;
}

std::string IntPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponents, BigInt>> ordered(terms_.begin(), terms_.end());
  auto degree = [](const Exponents& e) {
    unsigned s = 0;
    for (unsigned k : e) s += k;
    return s;
  };
  std::stable_sort(ordered.begin(), ordered.end(), [&](const auto& x, const auto& y) {
    const unsigned dx = degree(x.first), dy = degree(y.first);
    if (dx != dy) return dx > dy;
    return x.first > y.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : ordered) {
    const bool negative = c < 0;
    const BigInt mag = abs(c);
    if (first) os << (negative ? "-" : "");
    else os << (negative ? " - " : " + ");
    first = false;
    bool wrote = false;
    const bool constant_term = degree(e) == 0;
    if (mag != 1 || constant_term) {
      os << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << "*";
      os << vars_[i];
      if (e[i] > 1) os << "^" << e[i];
      wrote = true;
    }
  }
  return os.str();
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace rcb
