#include "rcb/assembler.hpp"

#include <algorithm>
#include <sstream>

namespace rcb {
namespace {

constexpr std::int64_t kPointBound = 6;

bool exempt(const SingularPoint& p) { return p.m == 2 && !p.separating; }

std::int64_t bounded_count(const ManifoldType& m) {
  if (const auto* sf = std::get_if<SeifertFibered>(&m)) return static_cast<std::int64_t>(sf->fibers.size());
  const auto& cs = std::get<ConnectedSum>(m);
  return std::count_if(cs.lens.begin(), cs.lens.end(), [](const LensSpace& l) { return l.p >= 3; });
}

}  // namespace

std::vector<Violation> validate_surface(const SurfaceComponentDescriptor& d) {
  std::vector<Violation> out;
  const BaseSurface& s = d.surface;
  if (d.rational_over_c && s.orientable && s.genus > 1)
    out.push_back({clause::kOrientableTopology,
                   "orientable component of genus " + std::to_string(s.genus) + " on a surface rational over C"});
  if (d.rational_over_c) {
    const auto n = std::count_if(d.points.begin(), d.points.end(), [](const SingularPoint& p) { return !exempt(p); });
    if (n > kPointBound)
      out.push_back({clause::kTooManyPoints,
                     std::to_string(n) + " singular points other than non-separating A_1^+ points (at most 6)"});
  }
  for (const auto& p : d.points)
    if (p.separating && p.m % 2 != 0)
      out.push_back({clause::kSeparatingOddExponent,
                     "point with odd exponent m = " + std::to_string(p.m) + " marked separating"});
  return out;
}

std::string to_string(const ComponentAssembly& c) {
  std::ostringstream os;
  os << to_string(c.manifold);
  if (c.rp3_count > 0) os << " # " << c.rp3_count << " RP^3";
  if (c.s1xs2_count > 0) os << " # " << c.s1xs2_count << " (S^1 x S^2)";
  return os.str();
}

Assembly assemble(const FibrationDescriptor& f) {
  Assembly out;
  for (std::size_t idx = 0; idx < f.components.size(); ++idx) {
    const ComponentDescriptor& comp = f.components[idx];
    const RegionData& region = comp.region;
    const auto where = " in component " + std::to_string(idx);
    if (comp.surface.surface.boundary_count != 0) throw ValidationError("component surface must be closed" + where);
    if (region.collapsed_ends < 0 || region.blown_up_curves < 0 || comp.rp3_count < 0 || comp.s1xs2_count < 0)
      throw ValidationError("negative count" + where);
    if (f.total_space_orientable && region.blown_up_curves > 0)
      throw ValidationError("blown-up curves force a nonorientable total space" + where);

    std::vector<std::pair<std::int64_t, std::int64_t>> tori;
    std::vector<bool> used(comp.surface.points.size(), false);
    SurfaceComponentDescriptor surface = comp.surface;
    ComponentAssembly result;
    for (const auto& sp : region.seifert_points) {
      const FiberLocalModel model = FiberLocalModel::seifert_quotient(sp.m, sp.b);
      tori.emplace_back(*mod_inverse(model.b, model.m), model.m);
      bool matched = false;
      for (std::size_t i = 0; i < used.size() && !matched; ++i)
        if (!used[i] && comp.surface.points[i].m == sp.m) used[i] = matched = true;
      if (!matched) {
        const SingularPoint induced{sp.m, sp.separating.value_or(sp.m % 2 == 0 && region.collapsed_ends == 0)};
        result.induced_points.push_back(induced);
        surface.points.push_back(induced);
      }
    }
    for (std::int64_t i = 0; i < region.collapsed_ends; ++i) tori.emplace_back(1, 0);

    const BaseSurface base =
        BaseSurface::make(region.orientable.value_or(comp.surface.surface.orientable),
                          region.genus.value_or(comp.surface.surface.genus),
                          static_cast<std::int64_t>(tori.size()) + region.blown_up_curves);
    result.problem = SurgeryProblem::make(base, tori, region.blown_up_curves);
    result.manifold = decompose(result.problem);
    result.rp3_count = comp.rp3_count;
    result.s1xs2_count = comp.s1xs2_count;
    if (!f.total_space_orientable) result.note = "Seifert pieces + lens summands; JSJ gluing undetermined";

    for (auto v : validate_surface(surface)) {
      v.component = static_cast<std::int64_t>(idx);
      out.violations.push_back(std::move(v));
    }
    if (surface.rational_over_c) {
      const std::int64_t n = bounded_count(result.manifold);
      if (n > kPointBound)
        out.violations.push_back({clause::kMultipleFiberBound,
                                  std::to_string(n) + " multiple fibers or lens summands of order >= 3 (at most 6)",
                                  static_cast<std::int64_t>(idx)});
    }
    out.components.push_back(std::move(result));
  }
  return out;
}

std::string to_string(BlowupEffect e) {
  return e == BlowupEffect::Homeomorphism ? "homeomorphism" : "connect-sum-rp2";
}

BlowupReport blowup_effect(std::int64_t m) {
  if (m < 1) throw ValidationError("blow-up weight m must be >= 1");
  return {m % 2 == 0 ? BlowupEffect::Homeomorphism : BlowupEffect::ConnectSumRP2, m >= 2};
}

std::vector<Violation> over_one_component_check(const FibrationDescriptor& f) {
  std::vector<Violation> out;
  for (std::size_t idx = 0; idx < f.components.size(); ++idx)
    for (const auto& sp : f.components[idx].region.seifert_points)
      if (sp.m % 2 == 0 && !sp.separating.value_or(false) && sp.sheets >= 2)
        out.push_back({clause::kPointOverOneComponent,
                       "non-separating point with m = " + std::to_string(sp.m) +
                           " has a region on both local sheets",
                       static_cast<std::int64_t>(idx)});
  return out;
}

}  // namespace rcb
