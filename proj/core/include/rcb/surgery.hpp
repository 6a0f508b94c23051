#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rcb/integer.hpp"
#include "rcb/lens.hpp"
#include "rcb/smith.hpp"

namespace rcb {

/// Isotopy class of a torus homeomorphism (u,z) -> (u^a z^b, u^c z^d).
struct TorusAutomorphism {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  /// Throws ValidationError unless ad - bc = +-1.
  static TorusAutomorphism make(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

  /// Solid torus homeomorphisms (u,z) -> (u^{+-1}, u^m z) and (u^{+-1}, u^m conj(z)).
  static TorusAutomorphism solid_torus(std::int64_t m, bool invert_u, bool conjugate_z);

  std::int64_t det() const { return a * d - b * c; }

  /// (this o other)(u,z) = this(other(u,z)).
  TorusAutomorphism compose(const TorusAutomorphism& other) const;
  TorusAutomorphism inverse() const;

  /// Exponents (c', d') of g o this where g(u,z) = u^c z^d.
  std::pair<std::int64_t, std::int64_t> pull_back(std::int64_t c, std::int64_t d) const;

  bool operator==(const TorusAutomorphism&) const = default;
};

/// Boundary-torus bundle map g_{c,d}(u,z) = u^c z^d. Canonical slopes have
/// gcd(c,d) = 1 and either 0 <= c < d or (c,d) = (1,0), the collapsed end.
struct Slope {
  std::int64_t c = 0;
  std::int64_t d = 1;

  bool collapsed() const { return d == 0; }
  auto operator<=>(const Slope&) const = default;
};

/// Least representative of the orbit of (c,d) under c -> c + md, c -> -c, d -> -d.
Slope canonicalize_slope(std::int64_t c, std::int64_t d);

std::int64_t fiber_multiplicity(const Slope& s);

/// Winding number of the first coordinate of t -> (t^d, t^{-c}) accumulated
/// from argument increments over `samples` equally spaced points of the circle.
/// Requires samples >= 4(|c| + |d| + 1).
std::int64_t winding_oracle(std::int64_t c, std::int64_t d, std::int64_t samples);

/// Twist x = c^{-1} mod d in [0, d) (x = 1 for the collapsed end, x = 0 for d = 1).
/// With the section curve q and fiber h of the boundary torus, the meridian of the
/// attached solid torus is d*q - x*h.
std::int64_t section_twist(const Slope& s);

/// Compact surface: orientable genus g, or nonorientable with g crosscaps.
struct BaseSurface {
  bool orientable = true;
  std::int64_t genus = 0;
  std::int64_t boundary_count = 0;

  static BaseSurface make(bool orientable, std::int64_t genus, std::int64_t boundary_count);

  std::int64_t euler_characteristic() const;
  BaseSurface capped() const { return {orientable, genus, 0}; }

  bool operator==(const BaseSurface&) const = default;
  std::string to_string() const;
};

/// Circle bundle over `base` with a solid torus glued to each of the first r
/// boundary components and a solid Klein bottle to each of the remaining s.
struct SurgeryProblem {
  BaseSurface base;
  std::vector<Slope> torus_gluings;
  std::int64_t klein_gluings = 0;

  /// Canonicalizes the slopes and checks r + s = boundary_count and s even.
  static SurgeryProblem make(const BaseSurface& base, const std::vector<std::pair<std::int64_t, std::int64_t>>& tori,
                             std::int64_t klein);
};

struct SeifertFibered {
  BaseSurface base;                     // closed
  std::vector<Slope> fibers;            // sorted, every d >= 2
  std::optional<Rational> euler_slope_sum;

  bool operator==(const SeifertFibered&) const = default;
};

struct ConnectedSum {
  std::vector<LensSpace> lens;          // sorted, no S^3 or S^1 x S^2 entries
  std::int64_t s1xs2_count = 0;
  std::int64_t twisted_s1xs2_count = 0;

  bool is_sphere() const { return lens.empty() && s1xs2_count == 0 && twisted_s1xs2_count == 0; }
  bool operator==(const ConnectedSum&) const = default;
};

using ManifoldType = std::variant<SeifertFibered, ConnectedSum>;

std::string to_string(const ManifoldType& m);

/// Genus-one Heegaard gluing: the meridian of one solid torus goes to
/// p * longitude + q * meridian of the other.
ManifoldType glue_two_solid_tori(std::int64_t p, std::int64_t q);

ManifoldType decompose(const SurgeryProblem& problem);

/// Rational Euler number sum_i x_i / d_i of a fiber list under the fixed trivialization.
Rational euler_of_fibers(const std::vector<Slope>& fibers);

AbelianGroup h1_of_manifold_type(const ManifoldType& m);

}  // namespace rcb
