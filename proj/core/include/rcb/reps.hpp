#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rcb/polynomial.hpp"

namespace rcb {

/// Irreducible real representation of Z_m: trivial 1+, sign 1- (m even), or
/// rotation R_{a,m} by angle 2*pi*a/m with a != 0, m/2 (mod m).
struct RealIrrep {
  enum class Kind { TrivialPlus, SignMinus, Rotation };
  Kind kind = Kind::TrivialPlus;
  std::int64_t index = 0;  // rotation index in [1, m/2), 0 otherwise

  auto operator<=>(const RealIrrep&) const = default;
};

/// Real representation of Z_m as multiplicities of irreducibles.
struct RepMultiset {
  std::int64_t modulus = 1;
  std::int64_t trivial = 0;
  std::int64_t sign = 0;
  std::map<std::int64_t, std::int64_t> rotations;  // reduced index -> multiplicity

  std::int64_t dimension() const;
  std::int64_t multiplicity(const RealIrrep& irrep) const;
  RepMultiset& operator+=(const RepMultiset& o);
  bool operator==(const RepMultiset&) const = default;

  /// "3 R_{2,5} + 2 R_{1,5} + 2 (1+)"
  std::string to_string() const;
};

/// R_{a,m} as a multiset: 1+ + 1+ if a = 0, 1- + 1- if a = m/2, otherwise the
/// irreducible R_{min(a, m-a), m}.
RepMultiset reduce_rotation(std::int64_t a, std::int64_t m);

/// R_{b,m} (x) S^2(1 + R_{a,m}) = 2 R_b + R_{a+b} + R_{a-b} + R_{2a+b} + R_{2a-b}.
RepMultiset decompose_tensor(std::int64_t a, std::int64_t b, std::int64_t m);

struct QuadricSummand {
  std::string label;                 // "1(z^2)", "R_{a,m}(zx,zy)", ...
  std::int64_t rotation_index = 0;   // unreduced index (0 for the 1-dimensional parts)
  std::vector<IntPolynomial> basis;  // over quadric_variables()
  RepMultiset rep;
  bool invariant = false;            // rep consists of 1+ only
};

struct InvariantQuadrics {
  std::int64_t a = 0;
  std::int64_t m = 1;
  std::vector<QuadricSummand> summands;
  std::vector<IntPolynomial> invariant_forms;  // basis of the Z_m-fixed quadratic forms
};

/// Variables {x, y, z}.
const std::vector<std::string>& quadric_variables();

/// Quadratic forms on 1(z) + R_{a,m}(x,y):
/// 1(z^2) + 1(x^2+y^2) + R_{a,m}(zx,zy) + R_{2a,m}(x^2-y^2, 2xy).
InvariantQuadrics invariant_quadrics(std::int64_t a, std::int64_t m);

struct CentralConicShape {
  bool admissible = true;
  std::string form;
  std::string reason;
};

/// Shape of an equivariant central conic that is not a product of two real
/// linear forms. With `isolated_fixed_points` every nonidentity element is
/// assumed to have only isolated fixed points on the conic, which forces
/// gcd(a,m) = 1 for m >= 3 and a odd for m = 2.
CentralConicShape admissible_central_conic(std::int64_t a, std::int64_t m, bool isolated_fixed_points);

enum class CentralConic { SmoothWithRealPoints, SmoothEmpty, LinePair, DoubleLine };

struct EquivariantNormalForm {
  enum class Kind { SmoothConic, DoubleLine, Impossible };
  Kind kind = Kind::Impossible;
  std::string equation;  // normal form of Y, empty when impossible
  std::string reason;
};

/// Normal form of a Z_m-equivariant conic bundle germ with V = 1(z) + R_{a,m}(x,y)
/// over the base R_{b,m}(s,t). Throws ValidationError unless m >= 2,
/// gcd(a,m) = 1 and gcd(b,m) = 1.
EquivariantNormalForm classify_equivariant_conic(std::int64_t m, std::int64_t a, std::int64_t b,
                                                 CentralConic central);

std::string to_string(CentralConic c);
CentralConic parse_central_conic(const std::string& name);
std::string to_string(EquivariantNormalForm::Kind k);

}  // namespace rcb

namespace rcb {

/// Largest |chi(g^k) - chi_dec(g^k)| over k in [0, m), where chi is the trace
/// of R_b (x) S^2(1 + R_a) from 2cos(2 pi b k/m) (chi_V(g^k)^2 + chi_V(g^2k))/2
/// and chi_dec is summed over decompose_tensor(a, b, m).
double tensor_character_residual(std::int64_t a, std::int64_t b, std::int64_t m);

}  // namespace rcb
