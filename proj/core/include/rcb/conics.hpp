#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "rcb/integer.hpp"
#include "rcb/polynomial.hpp"

namespace rcb {

enum class FiberType { SmoothWithRealPoints, SmoothEmpty, TwoRealLines, TwoConjugateLines, DoubleLine };

std::string to_string(FiberType t);

struct Signature {
  int positive = 0;
  int negative = 0;
  int rank() const { return positive + negative; }
  bool operator==(const Signature&) const = default;
};

/// Symmetric 3x3 rational matrix of a ternary quadratic form, variables (x, y, z).
class ConicForm {
 public:
  /// Row-major entries; throws ValidationError unless symmetric and nonzero.
  static ConicForm make(const std::vector<Rational>& entries);
  static ConicForm diagonal(const Rational& a, const Rational& b, const Rational& c);
  /// From a homogeneous quadratic polynomial in x, y, z.
  static ConicForm from_polynomial(const std::string& text);

  const Rational& operator()(int i, int j) const { return m_[3 * i + j]; }

  /// A^T q A for an integer matrix A (row-major).
  ConicForm congruent(const std::array<std::int64_t, 9>& a) const;

 private:
  std::array<Rational, 9> m_{};
};

/// Rank and inertia by exact symmetric Gaussian reduction.
Signature signature(const ConicForm& q);

FiberType classify_conic(const ConicForm& q);

/// Local fiber models of a conic bundle near a point of the base.
struct FiberLocalModel {
  enum class Kind { S1Bundle, EmptyFibers, CollapsedEnd, BlownUpS1Bundle, SeifertQuotient };
  Kind kind = Kind::S1Bundle;
  std::int64_t m = 1;  // SeifertQuotient only
  std::int64_t b = 0;

  /// Requires m >= 2 and gcd(b, m) = 1.
  static FiberLocalModel seifert_quotient(std::int64_t m, std::int64_t b);
  bool operator==(const FiberLocalModel&) const = default;
};

std::string to_string(FiberLocalModel::Kind k);

/// Conic bundle over the (s,t)-plane: a symmetric matrix of polynomials in s, t.
class ConicFamily {
 public:
  /// Row-major polynomial strings in s, t; throws unless symmetric and not
  /// identically degenerate.
  static ConicFamily make(const std::vector<std::string>& entries);
  /// Quadratic form in x, y, z with coefficients in s, t, e.g. "z^2 + s x^2 + 2t x y - s y^2".
  /// Cross terms need even coefficients.
  static ConicFamily from_form(const std::string& text);

  const IntPolynomial& operator()(int i, int j) const { return m_[3 * i + j]; }
  ConicForm at(const Rational& s, const Rational& t) const;

 private:
  static ConicFamily checked(std::array<IntPolynomial, 9> m);
  std::array<IntPolynomial, 9> m_;
};

/// Variables {s, t} of the base.
const std::vector<std::string>& base_variables();

IntPolynomial discriminant_polynomial(const ConicFamily& f);

FiberType classify_family_over_point(const ConicFamily& f, const Rational& s, const Rational& t);

/// Local model of the family at a point whose fiber is not a double line:
/// smooth fibers give S1Bundle or EmptyFibers, a conjugate line pair gives a
/// collapsed end and a real line pair gives a blown up S1-bundle.
FiberLocalModel local_model_at(const ConicFamily& f, const Rational& s, const Rational& t);

struct DuValType {
  enum class Kind { APlus, AMinus, APlusPlus, DPlus, DMinus, E6Plus, E6Minus, E7, E8 };
  Kind kind = Kind::APlus;
  std::int64_t n = 1;

  bool operator==(const DuValType&) const = default;
  std::string to_string() const;  // "A_2^+", "D_5^-", "E_7"
  std::string equation() const;   // normal form in x, y, z
};

/// Recognizes the normal forms x^2 + e1 y^2 + e2 z^k, x^2 + y^2 z +- z^k and
/// the E-forms. A_1^- is reported as A_1^+.
DuValType duval_classify(const std::string& descriptor);

struct QuotientSingularity {
  std::string equation;  // in u, v, w
  DuValType duval;
  bool separating_capable = false;
};

/// Base point u^2 + v^2 - w^m of a Seifert fiber of multiplicity m >= 2.
QuotientSingularity seifert_quotient_base_singularity(std::int64_t m);

}  // namespace rcb
