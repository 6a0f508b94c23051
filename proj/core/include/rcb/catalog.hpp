#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "rcb/integer.hpp"

namespace rcb {

/// Row-major 2x2 integer matrix [[a, b], [c, d]].
using Mat2 = std::array<std::int64_t, 4>;

Mat2 mat2_multiply(const Mat2& x, const Mat2& y);
std::int64_t mat2_det(const Mat2& x);

/// Least m in [1, 12] with A^m = I. Throws ValidationError if det A != +-1 or
/// no such m exists.
std::int64_t matrix_order(const Mat2& a);

struct TorusQuotient {
  std::int64_t order = 1;
  std::vector<std::int64_t> multiplicities;  // ascending
  std::int64_t reflector_circles = 0;        // fixed circles of reflections in the group
  Rational orbifold_euler;                   // 2 - sum (1 - 1/m_i)
};

/// Seifert data of (T^2 x S^1) / Z_m where the generator acts by A on T^2 and by
/// rotation through 2 pi / m on S^1. Requires matrix_order(A) >= 2.
TorusQuotient torus_quotient(const Mat2& a);

/// Multiplicities of torus_quotient(A), ascending.
std::vector<std::int64_t> torus_quotient_seifert_data(const Mat2& a);

/// 2 - sum_i (1 - 1/m_i). Throws on an empty tuple or m_i < 1.
Rational orbifold_euler_check(const std::vector<std::int64_t>& multiplicities);

/// Point of the Hopf fiber over s + it at angle theta:
/// x3 + i x4 = r e^{i theta}, r = (1 + s^2 + t^2)^{-1/2}, x1 + i x2 = (s + it)(x3 + i x4).
std::array<double, 4> hopf_fiber_point(double s, double t, double theta);

/// Exact variant with cos theta = (1 - l^2)/(1 + l^2), sin theta = 2l/(1 + l^2).
/// The point is r * scaled with r^2 = r_squared.
struct ExactHopfPoint {
  Rational r_squared;
  std::array<Rational, 4> scaled;
};
ExactHopfPoint hopf_fiber_point_exact(const Rational& s, const Rational& t, const Rational& lambda);

struct CatalogEntry {
  std::string group;
  std::string base;
  bool total_space_orientable = true;
  std::vector<std::int64_t> multiplicities;  // ascending
  Mat2 generator{};                           // zero for entries not given by one torus automorphism
};

/// Flat Seifert manifolds of the finite cyclic torus actions together with the
/// two Z_2 x Z_2 quotients fibered over RP^2.
std::vector<CatalogEntry> flat_catalog();

}  // namespace rcb
