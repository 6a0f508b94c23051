#include "rcb/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace rcb {

Mat2 mat2_multiply(const Mat2& x, const Mat2& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
          x[2] * y[1] + x[3] * y[3]};
}

std::int64_t mat2_det(const Mat2& x) { return x[0] * x[3] - x[1] * x[2]; }

namespace {

constexpr Mat2 kIdentity{1, 0, 0, 1};
constexpr std::int64_t kMaxOrder = 12;

Mat2 minus_identity(Mat2 x) {
  x[0] -= 1;
  x[3] -= 1;
  return x;
}

}  // namespace

std::int64_t matrix_order(const Mat2& a) {
  const std::int64_t det = mat2_det(a);
  if (det != 1 && det != -1) throw ValidationError("torus automorphisms need determinant +-1");
  Mat2 p = a;
  for (std::int64_t m = 1; m <= kMaxOrder; ++m) {
    if (p == kIdentity) return m;
    p = mat2_multiply(p, a);
  }
  throw ValidationError("matrix has no finite order <= 12");
}

TorusQuotient torus_quotient(const Mat2& a) {
  TorusQuotient out;
  out.order = matrix_order(a);
  const std::int64_t m = out.order;
  if (m < 2) throw ValidationError("torus quotient needs a nontrivial action");

  // shifted[k] = A^k - I; isolated fixed points of A^k have denominators dividing |det|.
  std::vector<Mat2> shifted(m);
  std::vector<bool> isolated(m, false);
  std::int64_t n = 1;
  Mat2 p = kIdentity;
  for (std::int64_t k = 0; k < m; ++k) {
    shifted[k] = minus_identity(p);
    const std::int64_t det = mat2_det(shifted[k]);
    if (k > 0 && det != 0) {
      isolated[k] = true;
      n = std::lcm(n, std::abs(det));
    } else if (k > 0) {
      const Mat2& b = shifted[k];
      out.reflector_circles += std::gcd(std::gcd(b[0], b[1]), std::gcd(b[2], b[3]));
    }
    p = mat2_multiply(p, a);
  }

  // Points x = (u, v) / n of the torus; x is fixed by A^k iff (A^k - I)(u, v) = 0 mod n.
  std::map<std::int64_t, std::int64_t> points_with_isotropy;
  for (std::int64_t u = 0; u < n; ++u)
    for (std::int64_t v = 0; v < n; ++v) {
      std::int64_t stabilizer = 0;
      bool has_isolated = false;
      for (std::int64_t k = 0; k < m; ++k) {
        const Mat2& b = shifted[k];
        if (floor_mod(b[0] * u + b[1] * v, n) == 0 && floor_mod(b[2] * u + b[3] * v, n) == 0) {
          ++stabilizer;
          has_isolated = has_isolated || isolated[k];
        }
      }
      if (stabilizer > 1 && has_isolated) ++points_with_isotropy[stabilizer];
    }
  for (const auto& [j, count] : points_with_isotropy) {
    const std::int64_t orbit = m / j;
    for (std::int64_t i = 0; i < count / orbit; ++i) out.multiplicities.push_back(j);
  }
  std::sort(out.multiplicities.begin(), out.multiplicities.end());
  out.orbifold_euler = out.multiplicities.empty() ? Rational(2) : orbifold_euler_check(out.multiplicities);
  return out;
}

std::vector<std::int64_t> torus_quotient_seifert_data(const Mat2& a) { return torus_quotient(a).multiplicities; }

Rational orbifold_euler_check(const std::vector<std::int64_t>& multiplicities) {
  if (multiplicities.empty()) throw ValidationError("empty multiplicity tuple");
  Rational chi = 2;
  for (const std::int64_t mi : multiplicities) {
    if (mi < 1) throw ValidationError("multiplicities must be positive");
    chi -= 1 - Rational(1, static_cast<unsigned long>(mi));
  }
  return chi;
}

std::array<double, 4> hopf_fiber_point(double s, double t, double theta) {
  const double r = 1.0 / std::sqrt(1.0 + s * s + t * t);
  const double x3 = r * std::cos(theta);
  const double x4 = r * std::sin(theta);
  return {s * x3 - t * x4, s * x4 + t * x3, x3, x4};
}

ExactHopfPoint hopf_fiber_point_exact(const Rational& s, const Rational& t, const Rational& lambda) {
  const Rational den = 1 + lambda * lambda;
  const Rational c = (1 - lambda * lambda) / den;
  const Rational sn = 2 * lambda / den;
  ExactHopfPoint out;
  out.r_squared = 1 / (1 + s * s + t * t);
  out.scaled = {s * c - t * sn, s * sn + t * c, c, sn};
  return out;
}

std::vector<CatalogEntry> flat_catalog() {
  std::vector<CatalogEntry> out;
  const std::vector<std::pair<std::string, Mat2>> generators{
      {"Z_6", {0, -1, 1, 1}}, {"Z_4", {0, -1, 1, 0}}, {"Z_3", {-1, -1, 1, 0}}, {"Z_2", {-1, 0, 0, -1}}};
  for (const auto& [name, a] : generators)
    out.push_back({name, "S^2", true, torus_quotient_seifert_data(a), a});
  out.push_back({"Z_2 x Z_2", "RP^2", true, {2, 2}, {}});
  out.push_back({"Z_2 x Z_2", "RP^2", false, {2, 2}, {}});
  return out;
}

}  // namespace rcb
