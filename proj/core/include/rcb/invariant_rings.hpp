#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rcb/polynomial.hpp"

namespace rcb {

/// Variables of the plane rotated by Z_n, in order {s, t}.
const std::vector<std::string>& plane_variables();

/// Real part of (s + i t)^n, as the alternating binomial sum over even powers of t.
IntPolynomial generator_xn(unsigned n);
/// Imaginary part of (s + i t)^n.
IntPolynomial generator_yn(unsigned n);
/// z = s^2 + t^2.
IntPolynomial generator_z();

/// True iff x_n^2 + y_n^2 - (s^2 + t^2)^n vanishes identically.
bool verify_relation(unsigned n);

enum class QuotientKind {
  Cyclic,             // Zhat -> Z_d, Z_2 -> 1
  ComplexifiedHalf,   // Zhat -> Z_{d/2}, Z_2 -> Z_2: real invariants inside a complexified cover
  NoRealPoints,       // Zhat -> Z_d, Z_2 -> the order 2 subgroup: cover without real points
};

struct CoverQuotient {
  QuotientKind kind;
  std::int64_t cyclic_order;  // order of the image of Zhat
  std::int64_t degree;        // order of the quotient group
  std::string label;
};

/// Finite quotients of Zhat + Z_2 whose order divides n, ordered by degree.
std::vector<CoverQuotient> cover_degree_tower(std::int64_t n);

}  // namespace rcb
