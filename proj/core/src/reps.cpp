#include "rcb/reps.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace rcb {

std::int64_t RepMultiset::dimension() const {
  std::int64_t d = trivial + sign;
  for (const auto& [idx, mult] : rotations) d += 2 * mult;
  return d;
}

std::int64_t RepMultiset::multiplicity(const RealIrrep& irrep) const {
  switch (irrep.kind) {
    case RealIrrep::Kind::TrivialPlus: return trivial;
    case RealIrrep::Kind::SignMinus: return sign;
    case RealIrrep::Kind::Rotation: {
      const auto it = rotations.find(irrep.index);
      return it == rotations.end() ? 0 : it->second;
    }
  }
  return 0;
}

RepMultiset& RepMultiset::operator+=(const RepMultiset& o) {
  if (modulus != o.modulus) throw ValidationError("adding representations of different cyclic groups");
  trivial += o.trivial;
  sign += o.sign;
  for (const auto& [idx, mult] : o.rotations) rotations[idx] += mult;
  return *this;
}

std::string RepMultiset::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto put = [&](std::int64_t mult, const std::string& name) {
    if (mult == 0) return;
    if (!first) os << " + ";
    first = false;
    if (mult > 1) os << mult << " ";
    os << name;
  };
  for (auto it = rotations.rbegin(); it != rotations.rend(); ++it)
    put(it->second, "R_{" + std::to_string(it->first) + "," + std::to_string(modulus) + "}");
  put(trivial, "(1+)");
  put(sign, "(1-)");
  if (first) return "0";
  return os.str();
}

RepMultiset reduce_rotation(std::int64_t a, std::int64_t m) {
  if (m < 1) throw ValidationError("cyclic group order must be >= 1");
  RepMultiset r;
  r.modulus = m;
  const std::int64_t k = floor_mod(a, m);
  if (k == 0) r.trivial = 2;
  else if (m % 2 == 0 && k == m / 2) r.sign = 2;
  else r.rotations[std::min(k, m - k)] = 1;
  return r;
}

RepMultiset decompose_tensor(std::int64_t a, std::int64_t b, std::int64_t m) {
  RepMultiset out = reduce_rotation(b, m);
  out += reduce_rotation(b, m);
  out += reduce_rotation(a + b, m);
  out += reduce_rotation(a - b, m);
  out += reduce_rotation(2 * a + b, m);
  out += reduce_rotation(2 * a - b, m);
  return out;
}

const std::vector<std::string>& quadric_variables() {
  static const std::vector<std::string> vars{"x", "y", "z"};
  return vars;
}

namespace {

IntPolynomial quad(const std::string& text) { return parse_polynomial(text, quadric_variables()); }

bool only_trivial(const RepMultiset& r) { return r.sign == 0 && r.rotations.empty(); }

}  // namespace

InvariantQuadrics invariant_quadrics(std::int64_t a, std::int64_t m) {
  if (m < 1) throw ValidationError("cyclic group order must be >= 1");
  InvariantQuadrics out;
  out.a = a;
  out.m = m;

  RepMultiset one;
  one.modulus = m;
  one.trivial = 1;
  const std::string mod = std::to_string(m);

  out.summands.push_back({"1(z^2)", 0, {quad("z^2")}, one, true});
  out.summands.push_back({"1(x^2+y^2)", 0, {quad("x^2+y^2")}, one, true});
  const RepMultiset r1 = reduce_rotation(a, m);
  out.summands.push_back({"R_{" + std::to_string(a) + "," + mod + "}(zx,zy)", a, {quad("z*x"), quad("z*y")}, r1,
                          only_trivial(r1)});
  const RepMultiset r2 = reduce_rotation(2 * a, m);
  out.summands.push_back({"R_{" + std::to_string(2 * a) + "," + mod + "}(x^2-y^2,2xy)", 2 * a,
                          {quad("x^2-y^2"), quad("2*x*y")}, r2, only_trivial(r2)});

  for (const auto& s : out.summands)
    if (s.invariant) out.invariant_forms.insert(out.invariant_forms.end(), s.basis.begin(), s.basis.end());
  return out;
}

CentralConicShape admissible_central_conic(std::int64_t a, std::int64_t m, bool isolated_fixed_points) {
  if (m < 1) throw ValidationError("cyclic group order must be >= 1");
  CentralConicShape shape;
  if (!isolated_fixed_points) {
    std::string form = "alpha*z^2 + beta*(x^2+y^2)";
    if (floor_mod(a, m) == 0) form += " + z*l(x,y)";
    if (floor_mod(2 * a, m) == 0) form += " + q'(x,y)";
    shape.form = form;
    return shape;
  }
  if (m == 1) {
    shape.form = "q(x,y,z)";
    return shape;
  }
  if (m == 2) {
    if (floor_mod(a, 2) != 1) {
      shape.admissible = false;
      shape.reason = "the involution fixes the whole conic pointwise unless a is odd";
      return shape;
    }
    shape.form = "alpha*z^2 + q'(x,y)";
    return shape;
  }
  if (gcd(a, m) != 1) {
    shape.admissible = false;
    shape.reason = "a nonidentity element acts trivially on (x,y) and fixes a curve of the conic unless gcd(a,m) = 1";
    return shape;
  }
  shape.form = "alpha*z^2 + beta*(x^2+y^2)";
  return shape;
}

EquivariantNormalForm classify_equivariant_conic(std::int64_t m, std::int64_t a, std::int64_t b,
                                                 CentralConic central) {
  if (m < 2) throw ValidationError("equivariant normal forms need m >= 2");
  if (gcd(a, m) != 1) throw ValidationError("gcd(a,m) must be 1");
  if (gcd(b, m) != 1) throw ValidationError("gcd(b,m) must be 1");

  using Kind = EquivariantNormalForm::Kind;
  switch (central) {
    case CentralConic::SmoothWithRealPoints:
      return {Kind::SmoothConic, "z^2 - x^2 - y^2", "smooth central conic with real points"};
    case CentralConic::SmoothEmpty:
      return {Kind::Impossible, "", "the central fiber must have real points"};
    case CentralConic::LinePair:
      return {Kind::Impossible, "", "the real intersection point of the two lines is a fixed point of Z_m"};
    case CentralConic::DoubleLine: break;
  }

  const auto congruent = [m](std::int64_t x, std::int64_t y) { return floor_mod(x - y, m) == 0; };
  if (m % 2 == 0)
    return {Kind::Impossible, "",
            "an invariant linear term needs b = +-2a mod m, and m is odd since gcd(b,m) = 1"};
  if (congruent(b, 2 * a) || congruent(b, -2 * a))
    return {Kind::DoubleLine, "z^2 + s*x^2 + 2*t*x*y - s*y^2", "double line with b = +-2a mod m"};
  if (congruent(b, a) || congruent(b, -a))
    return {Kind::Impossible, "",
            "invariant linear terms are divisible by z, so the singularities along the central fiber are not "
            "isolated"};
  return {Kind::Impossible, "", "no Z_m-invariant term linear in (s,t) exists"};
}

std::string to_string(CentralConic c) {
  switch (c) {
    case CentralConic::SmoothWithRealPoints: return "smooth";
    case CentralConic::SmoothEmpty: return "smooth-empty";
    case CentralConic::LinePair: return "line-pair";
    case CentralConic::DoubleLine: return "double-line";
  }
  return "?";
}

CentralConic parse_central_conic(const std::string& name) {
  if (name == "smooth" || name == "smooth-definite-mixed" || name == "smooth-real") return CentralConic::SmoothWithRealPoints;
  if (name == "smooth-empty") return CentralConic::SmoothEmpty;
  if (name == "line-pair") return CentralConic::LinePair;
  if (name == "double-line") return CentralConic::DoubleLine;
  throw ValidationError("unknown central conic '" + name +
                        "' (expected smooth, smooth-empty, line-pair or double-line)");
}

std::string to_string(EquivariantNormalForm::Kind k) {
  switch (k) {
    case EquivariantNormalForm::Kind::SmoothConic: return "case1-smooth";
    case EquivariantNormalForm::Kind::DoubleLine: return "case2-double-line";
    case EquivariantNormalForm::Kind::Impossible: return "impossible";
  }
  return "?";
}

}  // namespace rcb

namespace rcb {
namespace {

double character(const RepMultiset& r, std::int64_t k) {
  constexpr double kTau = 6.283185307179586;
  double chi = static_cast<double>(r.trivial);
  chi += static_cast<double>(r.sign) * ((k % 2 == 0) ? 1.0 : -1.0);
  for (const auto& [idx, mult] : r.rotations)
    chi += static_cast<double>(mult) * 2.0 * std::cos(kTau * static_cast<double>(idx * k) / static_cast<double>(r.modulus));
  return chi;
}

}  // namespace

double tensor_character_residual(std::int64_t a, std::int64_t b, std::int64_t m) {
  constexpr double kTau = 6.283185307179586;
  const RepMultiset dec = decompose_tensor(a, b, m);
  const auto angle = [m](std::int64_t x) { return kTau * static_cast<double>(floor_mod(x, m)) / static_cast<double>(m); };
  double worst = 0.0;
  for (std::int64_t k = 0; k < m; ++k) {
    const double chi_v = 1.0 + 2.0 * std::cos(angle(a * k));
    const double chi_v2 = 1.0 + 2.0 * std::cos(angle(2 * a * k));
    const double chi = 2.0 * std::cos(angle(b * k)) * (chi_v * chi_v + chi_v2) / 2.0;
    worst = std::max(worst, std::abs(chi - character(dec, k)));
  }
  return worst;
}

}  // namespace rcb
