#pragma once

#include <map>
#include <string>
#include <vector>

#include "rcb/integer.hpp"

namespace rcb {

/// Multivariate polynomial with arbitrary-precision integer coefficients over
/// an ordered list of variable names. Zero coefficients are never stored.
class IntPolynomial {
 public:
  using Exponents = std::vector<unsigned>;
  using Terms = std::map<Exponents, BigInt>;

  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<std::string> variables) : vars_(std::move(variables)) {}

  static IntPolynomial constant(std::vector<std::string> variables, const BigInt& value);
  static IntPolynomial variable(std::vector<std::string> variables, const std::string& name);
  static IntPolynomial monomial(std::vector<std::string> variables, Exponents exps, const BigInt& coeff);

  const std::vector<std::string>& variables() const { return vars_; }
  const Terms& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  unsigned total_degree() const;

  /// Coefficient of the given monomial (0 when absent).
  BigInt coefficient(const Exponents& exps) const;

  void add_term(const Exponents& exps, const BigInt& coeff);

  IntPolynomial operator-() const;
  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial& operator*=(const BigInt& k);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(IntPolynomial a, const BigInt& k) { return a *= k; }

  IntPolynomial pow(unsigned n) const;

  /// Exact evaluation; `point` is indexed like variables().
  Rational evaluate(const std::vector<Rational>& point) const;
  double evaluate(const std::vector<double>& point) const;

  /// Same polynomial over another variable list that contains every variable
  /// actually occurring here.
  IntPolynomial with_variables(const std::vector<std::string>& variables) const;

  bool operator==(const IntPolynomial& o) const;

  /// Human-readable form, highest total degree first: "s^3 - 3*s*t^2".
  std::string to_string() const;

 private:
  void require_same_variables(const IntPolynomial& o) const;

  std::vector<std::string> vars_;
  Terms terms_;
};

/// Binomial coefficient C(n, k) as a big integer.
BigInt binomial(unsigned n, unsigned k);

/// Parses +, -, *, ^ with non-negative integer exponents, parentheses, integer
/// literals and the given single-letter or named variables. Juxtaposition
/// multiplies ("2xy" or "2 x y"). Throws ValidationError on anything else.
IntPolynomial parse_polynomial(const std::string& text, const std::vector<std::string>& variables);

}  // namespace rcb
