#include "rcb/surgery.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

namespace rcb {

TorusAutomorphism TorusAutomorphism::make(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  TorusAutomorphism t{a, b, c, d};
  if (t.det() != 1 && t.det() != -1) throw ValidationError("torus automorphism must have determinant +-1");
  return t;
}

TorusAutomorphism TorusAutomorphism::solid_torus(std::int64_t m, bool invert_u, bool conjugate_z) {
  return {invert_u ? -1 : 1, 0, m, conjugate_z ? -1 : 1};
}

TorusAutomorphism TorusAutomorphism::compose(const TorusAutomorphism& o) const {
  // Exponent vectors transform by the matrix, so composition is matrix product.
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

TorusAutomorphism TorusAutomorphism::inverse() const {
  const std::int64_t e = det();
  return {d * e, -b * e, -c * e, a * e};
}

std::pair<std::int64_t, std::int64_t> TorusAutomorphism::pull_back(std::int64_t cc, std::int64_t dd) const {
  // (u^a z^b)^cc (u^c z^d)^dd
  return {a * cc + c * dd, b * cc + d * dd};
}

Slope canonicalize_slope(std::int64_t c, std::int64_t d) {
  if (c == 0 && d == 0) throw ValidationError("slope (0,0) is not a bundle map");
  if (gcd(c, d) != 1)
    throw ValidationError("slope (" + std::to_string(c) + "," + std::to_string(d) + ") is not coprime");
  if (d == 0) return {1, 0};
  const std::int64_t n = d < 0 ? -d : d;
  const std::int64_t r = floor_mod(c, n);
  return {std::min(r, floor_mod(-r, n)), n};
}

std::int64_t fiber_multiplicity(const Slope& s) { return s.d < 0 ? -s.d : s.d; }

std::int64_t winding_oracle(std::int64_t c, std::int64_t d, std::int64_t samples) {
  const std::int64_t need = 4 * (std::abs(c) + std::abs(d) + 1);
  if (samples < need)
    throw ValidationError("winding_oracle: need at least " + std::to_string(need) + " samples");
  using cd = std::complex<double>;
  auto first_coordinate = [&](std::int64_t k) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(samples);
    return std::polar(1.0, static_cast<double>(d) * theta);
  };
  double total = 0.0;
  cd prev = first_coordinate(0);
  for (std::int64_t k = 1; k <= samples; ++k) {
    const cd cur = first_coordinate(k);
    total += std::arg(cur / prev);
    prev = cur;
  }
  return static_cast<std::int64_t>(std::llround(total / (2.0 * std::numbers::pi)));
}

std::int64_t section_twist(const Slope& s) {
  if (s.d == 0) return 1;
  if (s.d == 1) return 0;
  const auto inv = mod_inverse(s.c, s.d);
  if (!inv) throw ValidationError("slope is not coprime");
  return *inv;
}

BaseSurface BaseSurface::make(bool orientable, std::int64_t genus, std::int64_t boundary_count) {
  if (genus < 0 || boundary_count < 0) throw ValidationError("surface genus and boundary count must be >= 0");
  if (!orientable && genus < 1) throw ValidationError("a nonorientable surface needs at least one crosscap");
  return {orientable, genus, boundary_count};
}

std::int64_t BaseSurface::euler_characteristic() const {
  return orientable ? 2 - 2 * genus - boundary_count : 2 - genus - boundary_count;
}

std::string BaseSurface::to_string() const {
  std::string closed;
  if (orientable) {
    if (genus == 0) closed = "S^2";
    else if (genus == 1) closed = "T^2";
    else closed = "#" + std::to_string(genus) + " T^2";
  } else {
    closed = genus == 1 ? "RP^2" : "#" + std::to_string(genus) + " RP^2";
  }
  if (boundary_count == 0) return closed;
  return closed + " minus " + std::to_string(boundary_count) + (boundary_count == 1 ? " disc" : " discs");
}

SurgeryProblem SurgeryProblem::make(const BaseSurface& base,
                                    const std::vector<std::pair<std::int64_t, std::int64_t>>& tori,
                                    std::int64_t klein) {
  const BaseSurface b = BaseSurface::make(base.orientable, base.genus, base.boundary_count);
  if (klein < 0) throw ValidationError("Klein bottle gluing count must be >= 0");
  if (static_cast<std::int64_t>(tori.size()) + klein != b.boundary_count)
    throw ValidationError("gluings (" + std::to_string(tori.size()) + " tori + " + std::to_string(klein) +
                          " Klein bottles) do not match " + std::to_string(b.boundary_count) +
                          " boundary components");
  // Boundary circles sum to zero in H_1(F; Z/2), so the fiber orientation flips
  // along an even number of them.
  if (klein % 2 != 0) throw ValidationError("the number of Klein bottle boundary components must be even");
  SurgeryProblem p{b, {}, klein};
  for (const auto& [c, d] : tori) p.torus_gluings.push_back(canonicalize_slope(c, d));
  return p;
}

Rational euler_of_fibers(const std::vector<Slope>& fibers) {
  Rational e = 0;
  for (const auto& f : fibers)
    if (f.d >= 1) e += Rational(section_twist(f), f.d);
  e.canonicalize();
  return e;
}

ManifoldType glue_two_solid_tori(std::int64_t p, std::int64_t q) {
  if (p == 0 && q == 0) throw ValidationError("meridian image (0,0) is not a curve");
  if (gcd(p, q) != 1) throw ValidationError("meridian image must be a primitive class");
  ConnectedSum out;
  const std::int64_t n = p < 0 ? -p : p;
  if (n == 0) out.s1xs2_count = 1;
  else if (n >= 2) out.lens.push_back(canonicalize_lens(n, q));
  return out;
}

ManifoldType decompose(const SurgeryProblem& problem) {
  const auto& tori = problem.torus_gluings;
  const bool has_collapsed = std::any_of(tori.begin(), tori.end(), [](const Slope& s) { return s.d == 0; });

  if (problem.klein_gluings == 0 && !has_collapsed) {
    SeifertFibered sf;
    sf.base = problem.base.capped();
    for (const auto& s : tori)
      if (s.d >= 2) sf.fibers.push_back(s);
    std::sort(sf.fibers.begin(), sf.fibers.end());
    sf.euler_slope_sum = euler_of_fibers(sf.fibers);
    return sf;
  }

  // Fibers collapse over k boundary circles of F^1. Cutting F^1 along arcs
  // down to discs with at most one multiple fiber each takes 1 - chi(F^1)
  // nonseparating cuts, each splitting off an S^2-bundle over S^1.
  ConnectedSum cs;
  std::int64_t collapsed = problem.klein_gluings;
  for (const auto& s : tori) {
    if (s.d == 0) ++collapsed;
    else if (s.d >= 2) cs.lens.push_back(canonicalize_lens(s.d, s.c));
  }
  std::sort(cs.lens.begin(), cs.lens.end());
  const std::int64_t chi_f1 = problem.base.capped().euler_characteristic() - collapsed;
  const std::int64_t handles = 1 - chi_f1;
  if (problem.klein_gluings == 0) cs.s1xs2_count = handles;
  else cs.twisted_s1xs2_count = handles;
  return cs;
}

namespace {

AbelianGroup seifert_h1(const SeifertFibered& sf) {
  if (!sf.euler_slope_sum) throw ValidationError("Seifert fibered input lacks Euler data");
  if (sf.base.boundary_count != 0) throw ValidationError("Seifert base surface must be closed");
  Rational shift = *sf.euler_slope_sum - euler_of_fibers(sf.fibers);
  shift.canonicalize();
  if (shift.get_den() != 1)
    throw ValidationError("Euler number " + to_string(*sf.euler_slope_sum) +
                          " is not an integral shift of the fiber invariants");
  const BigInt b = shift.get_num();

  // Generators: base classes, one per exceptional fiber, then the fiber h.
  const std::size_t nb = sf.base.orientable ? 2 * sf.base.genus : sf.base.genus;
  const std::size_t nf = sf.fibers.size();
  const std::size_t cols = nb + nf + 1;
  const std::size_t h = cols - 1;
  IntMatrix rel(0, cols);
  std::vector<BigInt> row(cols);

  auto reset = [&] { std::fill(row.begin(), row.end(), BigInt(0)); };
  reset();
  if (!sf.base.orientable)
    for (std::size_t j = 0; j < nb; ++j) row[j] = 2;
  for (std::size_t i = 0; i < nf; ++i) row[nb + i] = 1;
  row[h] = -b;
  rel.append_row(row);
  if (!sf.base.orientable) {
    reset();
    row[h] = 2;
    rel.append_row(row);
  }
  for (std::size_t i = 0; i < nf; ++i) {
    reset();
    row[nb + i] = sf.fibers[i].d;
    row[h] = -section_twist(sf.fibers[i]);
    rel.append_row(row);
  }
  return abelian_group_from_presentation(rel);
}

}  // namespace

AbelianGroup h1_of_manifold_type(const ManifoldType& m) {
  if (const auto* sf = std::get_if<SeifertFibered>(&m)) return seifert_h1(*sf);
  const auto& cs = std::get<ConnectedSum>(m);
  std::vector<std::int64_t> orders;
  for (const auto& l : cs.lens) orders.push_back(l.p);
  return direct_sum_of_cyclics(orders, static_cast<std::size_t>(cs.s1xs2_count + cs.twisted_s1xs2_count));
}

std::string to_string(const ManifoldType& m) {
  std::ostringstream os;
  if (const auto* sf = std::get_if<SeifertFibered>(&m)) {
    os << "Seifert fibered over " << sf->base.to_string();
    if (sf->fibers.empty()) os << ", no multiple fibers";
    else {
      os << ", fibers";
      for (const auto& f : sf->fibers) os << " (" << f.c << "," << f.d << ")";
    }
    if (sf->euler_slope_sum) os << ", e = " << to_string(*sf->euler_slope_sum);
    return os.str();
  }
  const auto& cs = std::get<ConnectedSum>(m);
  if (cs.is_sphere()) return "S^3";
  bool first = true;
  auto sep = [&] {
    if (!first) os << " # ";
    first = false;
  };
  for (const auto& l : cs.lens) {
    sep();
    os << l.to_string();
  }
  if (cs.s1xs2_count > 0) {
    sep();
    if (cs.s1xs2_count > 1) os << cs.s1xs2_count << "(S^1 x S^2)";
    else os << "S^1 x S^2";
  }
  if (cs.twisted_s1xs2_count > 0) {
    sep();
    if (cs.twisted_s1xs2_count > 1) os << cs.twisted_s1xs2_count << "(S^1 x~ S^2)";
    else os << "S^1 x~ S^2";
  }
  return os.str();
}

}  // namespace rcb
