#include "rcb/conics.hpp"

#include <utility>

namespace rcb {
namespace {

const std::vector<std::string>& conic_variables() {
  static const std::vector<std::string> vars{"x", "y", "z"};
  return vars;
}

const std::vector<std::string>& family_variables() {
  static const std::vector<std::string> vars{"x", "y", "z", "s", "t"};
  return vars;
}

// Matrix position of a degree-two monomial in x, y, z.
std::pair<int, int> quadratic_slot(unsigned ex, unsigned ey, unsigned ez) {
  const unsigned e[3] = {ex, ey, ez};
  if (ex + ey + ez != 2) throw ValidationError("conic forms must be homogeneous quadratic in x, y, z");
  int first = -1;
  int second = -1;
  for (int i = 0; i < 3; ++i) {
    if (e[i] == 2) return {i, i};
    if (e[i] == 1) (first < 0 ? first : second) = i;
  }
  return {first, second};
}

Signature inertia(std::array<Rational, 9> m) {
  auto at = [&m](int i, int j) -> Rational& { return m[3 * i + j]; };
  auto swap_index = [&](int i, int j) {
    if (i == j) return;
    for (int k = 0; k < 3; ++k) std::swap(at(i, k), at(j, k));
    for (int k = 0; k < 3; ++k) std::swap(at(k, i), at(k, j));
  };
  Signature sig;
  for (int p = 0; p < 3; ++p) {
    int pivot = -1;
    for (int i = p; i < 3 && pivot < 0; ++i)
      if (sgn(at(i, i)) != 0) pivot = i;
    if (pivot < 0) {
      // Zero diagonal: x_i -> x_i + x_j turns a nonzero a_ij into a diagonal 2 a_ij.
      for (int i = p; i < 3 && pivot < 0; ++i)
        for (int j = i + 1; j < 3 && pivot < 0; ++j)
          if (sgn(at(i, j)) != 0) {
            for (int k = 0; k < 3; ++k) at(i, k) += at(j, k);
            for (int k = 0; k < 3; ++k) at(k, i) += at(k, j);
            pivot = i;
          }
      if (pivot < 0) break;
    }
    swap_index(p, pivot);
    const Rational piv = at(p, p);
    (sgn(piv) > 0 ? sig.positive : sig.negative) += 1;
    for (int r = p + 1; r < 3; ++r) {
      const Rational f = at(r, p) / piv;
      if (sgn(f) == 0) continue;
      for (int k = 0; k < 3; ++k) at(r, k) -= f * at(p, k);
      for (int k = 0; k < 3; ++k) at(k, r) -= f * at(k, p);
    }
  }
  return sig;
}

IntPolynomial det3(const std::array<IntPolynomial, 9>& m) {
  auto e = [&m](int i, int j) -> const IntPolynomial& { return m[3 * i + j]; };
  return e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0)) +
         e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
}

}  // namespace

std::string to_string(FiberType t) {
  switch (t) {
    case FiberType::SmoothWithRealPoints: return "smooth-real";
    case FiberType::SmoothEmpty: return "smooth-empty";
    case FiberType::TwoRealLines: return "two-real-lines";
    case FiberType::TwoConjugateLines: return "two-conjugate-lines";
    case FiberType::DoubleLine: return "double-line";
  }
  return "?";
}

ConicForm ConicForm::make(const std::vector<Rational>& entries) {
  if (entries.size() != 9) throw ValidationError("a conic needs 9 matrix entries");
  ConicForm q;
  bool zero = true;
  for (int i = 0; i < 9; ++i) {
    q.m_[i] = entries[i];
    q.m_[i].canonicalize();
    zero = zero && sgn(q.m_[i]) == 0;
  }
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (q(i, j) != q(j, i)) throw ValidationError("conic matrix is not symmetric");
  if (zero) throw ValidationError("zero quadratic form");
  return q;
}

ConicForm ConicForm::diagonal(const Rational& a, const Rational& b, const Rational& c) {
  return make({a, 0, 0, 0, b, 0, 0, 0, c});
}

ConicForm ConicForm::from_polynomial(const std::string& text) {
  const IntPolynomial p = parse_polynomial(text, conic_variables());
  std::vector<Rational> e(9, Rational(0));
  for (const auto& [exps, coeff] : p.terms()) {
    const auto [i, j] = quadratic_slot(exps[0], exps[1], exps[2]);
    if (i == j) {
      e[3 * i + i] = Rational(coeff);
    } else {
      e[3 * i + j] = Rational(coeff, 2);
      e[3 * j + i] = e[3 * i + j];
    }
  }
  return make(e);
}

ConicForm ConicForm::congruent(const std::array<std::int64_t, 9>& a) const {
  std::vector<Rational> out(9, Rational(0));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Rational acc = 0;
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l)
          acc += Rational(static_cast<long>(a[3 * k + i])) * (*this)(k, l) * Rational(static_cast<long>(a[3 * l + j]));
      out[3 * i + j] = acc;
    }
  return make(out);
}

Signature signature(const ConicForm& q) {
  std::array<Rational, 9> m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[3 * i + j] = q(i, j);
  return inertia(m);
}

FiberType classify_conic(const ConicForm& q) {
  const Signature sig = signature(q);
  const bool indefinite = sig.positive > 0 && sig.negative > 0;
  switch (sig.rank()) {
    case 3: return indefinite ? FiberType::SmoothWithRealPoints : FiberType::SmoothEmpty;
    case 2: return indefinite ? FiberType::TwoRealLines : FiberType::TwoConjugateLines;
    case 1: return FiberType::DoubleLine;
    default: throw ValidationError("zero quadratic form");
  }
}

FiberLocalModel FiberLocalModel::seifert_quotient(std::int64_t m, std::int64_t b) {
  if (m < 2) throw ValidationError("Seifert quotient model needs m >= 2");
  if (gcd(b, m) != 1) throw ValidationError("Seifert quotient model needs gcd(b, m) = 1");
  return {Kind::SeifertQuotient, m, floor_mod(b, m)};
}

std::string to_string(FiberLocalModel::Kind k) {
  switch (k) {
    case FiberLocalModel::Kind::S1Bundle: return "s1-bundle";
    case FiberLocalModel::Kind::EmptyFibers: return "empty-fibers";
    case FiberLocalModel::Kind::CollapsedEnd: return "collapsed-end";
    case FiberLocalModel::Kind::BlownUpS1Bundle: return "blown-up-s1-bundle";
    case FiberLocalModel::Kind::SeifertQuotient: return "seifert-quotient";
  }
  return "?";
}

const std::vector<std::string>& base_variables() {
  static const std::vector<std::string> vars{"s", "t"};
  return vars;
}

ConicFamily ConicFamily::checked(std::array<IntPolynomial, 9> m) {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (!(m[3 * i + j] == m[3 * j + i])) throw ValidationError("conic family matrix is not symmetric");
  ConicFamily f;
  f.m_ = std::move(m);
  if (discriminant_polynomial(f).is_zero()) throw ValidationError("conic family is degenerate everywhere");
  return f;
}

ConicFamily ConicFamily::make(const std::vector<std::string>& entries) {
  if (entries.size() != 9) throw ValidationError("a conic family needs 9 matrix entries");
  std::array<IntPolynomial, 9> m;
  for (int i = 0; i < 9; ++i) m[i] = parse_polynomial(entries[i], base_variables());
  return checked(std::move(m));
}

ConicFamily ConicFamily::from_form(const std::string& text) {
  const IntPolynomial p = parse_polynomial(text, family_variables());
  std::array<IntPolynomial, 9> m;
  m.fill(IntPolynomial(base_variables()));
  for (const auto& [exps, coeff] : p.terms()) {
    const auto [i, j] = quadratic_slot(exps[0], exps[1], exps[2]);
    BigInt c = coeff;
    if (i != j) {
      if (mpz_odd_p(c.get_mpz_t())) throw ValidationError("cross terms of a conic family need even coefficients");
      c /= 2;
    }
    m[3 * i + j].add_term({exps[3], exps[4]}, c);
    if (i != j) m[3 * j + i].add_term({exps[3], exps[4]}, c);
  }
  return checked(std::move(m));
}

ConicForm ConicFamily::at(const Rational& s, const Rational& t) const {
  std::vector<Rational> e;
  e.reserve(9);
  for (const auto& p : m_) e.push_back(p.evaluate({s, t}));
  return ConicForm::make(e);
}

IntPolynomial discriminant_polynomial(const ConicFamily& f) {
  std::array<IntPolynomial, 9> m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[3 * i + j] = f(i, j).with_variables(base_variables());
  return det3(m);
}

FiberType classify_family_over_point(const ConicFamily& f, const Rational& s, const Rational& t) {
  return classify_conic(f.at(s, t));
}

FiberLocalModel local_model_at(const ConicFamily& f, const Rational& s, const Rational& t) {
  using Kind = FiberLocalModel::Kind;
  switch (classify_family_over_point(f, s, t)) {
    case FiberType::SmoothWithRealPoints: return {Kind::S1Bundle};
    case FiberType::SmoothEmpty: return {Kind::EmptyFibers};
    case FiberType::TwoConjugateLines: return {Kind::CollapsedEnd};
    case FiberType::TwoRealLines: return {Kind::BlownUpS1Bundle};
    case FiberType::DoubleLine: break;
  }
  throw ValidationError("double line fiber: the local model depends on the group action, not on the fiber alone");
}

std::string DuValType::to_string() const {
  const std::string idx = std::to_string(n);
  switch (kind) {
    case Kind::APlus: return "A_" + idx + "^+";
    case Kind::AMinus: return "A_" + idx + "^-";
    case Kind::APlusPlus: return "A_" + idx + "^++";
    case Kind::DPlus: return "D_" + idx + "^+";
    case Kind::DMinus: return "D_" + idx + "^-";
    case Kind::E6Plus: return "E_6^+";
    case Kind::E6Minus: return "E_6^-";
    case Kind::E7: return "E_7";
    case Kind::E8: return "E_8";
  }
  return "?";
}

std::string DuValType::equation() const {
  const std::string k = std::to_string(n + 1);
  const std::string d = std::to_string(n - 1);
  switch (kind) {
    case Kind::APlus: return "x^2 + y^2 - z^" + k;
    case Kind::AMinus: return "x^2 - y^2 - z^" + k;
    case Kind::APlusPlus: return "x^2 + y^2 + z^" + k;
    case Kind::DPlus: return "x^2 + y^2*z + z^" + d;
    case Kind::DMinus: return "x^2 + y^2*z - z^" + d;
    case Kind::E6Plus: return "x^2 + y^3 + z^4";
    case Kind::E6Minus: return "x^2 + y^3 - z^4";
    case Kind::E7: return "x^2 + y^3 + y*z^3";
    case Kind::E8: return "x^2 + y^3 + z^5";
  }
  return "?";
}

DuValType duval_classify(const std::string& descriptor) {
  using Kind = DuValType::Kind;
  const IntPolynomial p = parse_polynomial(descriptor, conic_variables());
  const auto no_match = [&descriptor](const std::string& why) {
    return ValidationError("'" + descriptor + "' is not a Du Val normal form: " + why);
  };
  if (p.term_count() != 3) throw no_match("expected exactly three terms");
  if (p.coefficient({2, 0, 0}) != 1) throw no_match("expected the term x^2");

  // The two terms besides x^2, with unit coefficients.
  std::vector<std::pair<IntPolynomial::Exponents, int>> rest;
  for (const auto& [exps, coeff] : p.terms()) {
    if (exps == IntPolynomial::Exponents{2, 0, 0}) continue;
    if (coeff != 1 && coeff != -1) throw no_match("coefficients must be +1 or -1");
    rest.emplace_back(exps, coeff > 0 ? 1 : -1);
  }
  const auto sign_of = [&rest](const IntPolynomial::Exponents& e) {
    for (const auto& [exps, s] : rest)
      if (exps == e) return s;
    return 0;
  };
  const auto pure_z = [&rest]() -> std::pair<unsigned, int> {
    for (const auto& [exps, s] : rest)
      if (exps[0] == 0 && exps[1] == 0) return {exps[2], s};
    return {0, 0};
  };

  const auto [k, ez] = pure_z();
  if (const int ey = sign_of({0, 2, 0}); ey != 0) {
    if (k < 2) throw no_match("expected a pure power z^k with k >= 2");
    const std::int64_t n = k - 1;
    if (ey < 0) return n == 1 ? DuValType{Kind::APlus, 1} : DuValType{Kind::AMinus, n};
    if (ez < 0) return {Kind::APlus, n};
    if (k % 2 != 0)
      throw no_match("x^2 + y^2 + z^k requires k even (A_n^++ exists for n odd); use the A^+ form for odd k");
    return {Kind::APlusPlus, n};
  }
  if (sign_of({0, 2, 1}) == 1) {
    if (k < 3) throw no_match("D-type needs z^(n-1) with n >= 4");
    return {ez > 0 ? Kind::DPlus : Kind::DMinus, static_cast<std::int64_t>(k) + 1};
  }
  if (sign_of({0, 3, 0}) == 1) {
    if (sign_of({0, 1, 3}) == 1) return {Kind::E7, 7};
    if (k == 4) return {ez > 0 ? Kind::E6Plus : Kind::E6Minus, 6};
    if (k == 5 && ez > 0) return {Kind::E8, 8};
  }
  throw no_match("no matching A, D or E shape");
}

QuotientSingularity seifert_quotient_base_singularity(std::int64_t m) {
  if (m < 2) throw ValidationError("Seifert fibers have multiplicity m >= 2");
  const std::string e = std::to_string(m);
  return {"u^2 + v^2 - w^" + e, duval_classify("x^2 + y^2 - z^" + e), m % 2 == 0};
}

}  // namespace rcb
