#include "rcb/json_io.hpp"

namespace rcb {
namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ValidationError(std::string("expected an object holding '") + key + "'");
  const auto it = j.find(key);
  if (it == j.end()) throw ValidationError(std::string("missing field '") + key + "'");
  return *it;
}

std::int64_t as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ValidationError(std::string("'") + what + "' must be an integer");
  return j.get<std::int64_t>();
}

bool as_bool(const Json& j, const char* what) {
  if (!j.is_boolean()) throw ValidationError(std::string("'") + what + "' must be a boolean");
  return j.get<bool>();
}

std::int64_t int_or(const Json& j, const char* key, std::int64_t fallback) {
  const auto it = j.find(key);
  return it == j.end() ? fallback : as_int(*it, key);
}

bool bool_or(const Json& j, const char* key, bool fallback) {
  const auto it = j.find(key);
  return it == j.end() ? fallback : as_bool(*it, key);
}

const Json& array_field(const Json& j, const char* key) {
  const Json& a = field(j, key);
  if (!a.is_array()) throw ValidationError(std::string("'") + key + "' must be an array");
  return a;
}

Json big(const BigInt& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

SingularPoint singular_point_from_json(const Json& j) {
  SingularPoint p{as_int(field(j, "m"), "m"), bool_or(j, "separating", false)};
  if (p.m < 2) throw ValidationError("singular point exponent m must be >= 2");
  return p;
}

SeifertPointData seifert_point_from_json(const Json& j) {
  SeifertPointData p;
  p.m = as_int(field(j, "m"), "m");
  p.b = as_int(field(j, "b"), "b");
  if (const auto it = j.find("separating"); it != j.end()) p.separating = as_bool(*it, "separating");
  p.sheets = static_cast<int>(int_or(j, "sheets", 1));
  if (p.sheets != 1 && p.sheets != 2) throw ValidationError("'sheets' must be 1 or 2");
  FiberLocalModel::seifert_quotient(p.m, p.b);
  return p;
}

RegionData region_from_json(const Json& j) {
  RegionData r;
  if (!j.is_object()) throw ValidationError("'region' must be an object");
  if (const auto it = j.find("genus"); it != j.end()) r.genus = as_int(*it, "genus");
  if (const auto it = j.find("orientable"); it != j.end()) r.orientable = as_bool(*it, "orientable");
  r.collapsed_ends = int_or(j, "collapsed_ends", 0);
  r.blown_up_curves = int_or(j, "blown_up_curves", 0);
  if (j.contains("seifert_points"))
    for (const auto& sp : array_field(j, "seifert_points")) r.seifert_points.push_back(seifert_point_from_json(sp));
  return r;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
}

BaseSurface base_surface_from_json(const Json& j) {
  return BaseSurface::make(as_bool(field(j, "orientable"), "orientable"), as_int(field(j, "genus"), "genus"),
                           int_or(j, "boundary", 0));
}

SurgeryProblem surgery_problem_from_json(const Json& j) {
  const BaseSurface base = base_surface_from_json(field(j, "base"));
  std::vector<std::pair<std::int64_t, std::int64_t>> tori;
  if (j.contains("tori"))
    for (const auto& t : array_field(j, "tori")) {
      if (!t.is_array() || t.size() != 2) throw ValidationError("each torus gluing must be a pair [c, d]");
      tori.emplace_back(as_int(t[0], "c"), as_int(t[1], "d"));
    }
  return SurgeryProblem::make(base, tori, int_or(j, "klein", 0));
}

SurfaceComponentDescriptor surface_component_from_json(const Json& j) {
  SurfaceComponentDescriptor d;
  d.surface = base_surface_from_json(field(j, "surface"));
  if (d.surface.boundary_count != 0) throw ValidationError("component surfaces are closed ('boundary' must be 0)");
  d.rational_over_c = bool_or(j, "rational_over_c", false);
  if (j.contains("points"))
    for (const auto& p : array_field(j, "points")) d.points.push_back(singular_point_from_json(p));
  return d;
}

FibrationDescriptor fibration_from_json(const Json& j) {
  FibrationDescriptor f;
  f.total_space_orientable = as_bool(field(j, "total_space_orientable"), "total_space_orientable");
  for (const auto& c : array_field(j, "components")) {
    ComponentDescriptor comp;
    comp.surface = surface_component_from_json(c);
    if (c.contains("region")) comp.region = region_from_json(c["region"]);
    comp.rp3_count = int_or(c, "rp3", 0);
    comp.s1xs2_count = int_or(c, "s1xs2", 0);
    f.components.push_back(std::move(comp));
  }
  return f;
}

Json to_json(const BaseSurface& b) {
  return {{"orientable", b.orientable}, {"genus", b.genus}, {"boundary", b.boundary_count}, {"name", b.to_string()}};
}

Json to_json(const SurgeryProblem& p) {
  Json tori = Json::array();
  for (const auto& s : p.torus_gluings) tori.push_back({s.c, s.d});
  return {{"base", to_json(p.base)}, {"tori", tori}, {"klein", p.klein_gluings}};
}

Json to_json(const LensSpace& l) { return Json::array({l.p, l.q}); }

Json to_json(const ManifoldType& m) {
  Json out;
  if (const auto* sf = std::get_if<SeifertFibered>(&m)) {
    Json fibers = Json::array();
    for (const auto& s : sf->fibers) fibers.push_back({s.c, s.d});
    out = {{"kind", "seifert"}, {"base", to_json(sf->base)}, {"fibers", fibers}};
    if (sf->euler_slope_sum) out["euler"] = to_string(*sf->euler_slope_sum);
  } else {
    const auto& cs = std::get<ConnectedSum>(m);
    Json lens = Json::array();
    for (const auto& l : cs.lens) lens.push_back(to_json(l));
    out = {{"kind", "connected_sum"}, {"lens", lens}, {"s1xs2", cs.s1xs2_count},
           {"twisted_s1xs2", cs.twisted_s1xs2_count}};
  }
  out["name"] = to_string(m);
  return out;
}

Json to_json(const AbelianGroup& g) {
  Json torsion = Json::array();
  for (const auto& t : g.torsion) torsion.push_back(big(t));
  return {{"torsion", torsion}, {"free_rank", g.free_rank}, {"name", g.to_string()}};
}

Json to_json(const RepMultiset& r) {
  Json rot = Json::object();
  for (const auto& [idx, mult] : r.rotations) rot[std::to_string(idx)] = mult;
  return {{"m", r.modulus}, {"trivial", r.trivial}, {"sign", r.sign}, {"rotations", rot},
          {"dimension", r.dimension()}, {"name", r.to_string()}};
}

Json to_json(const InvariantQuadrics& q) {
  Json summands = Json::array();
  for (const auto& s : q.summands) {
    Json basis = Json::array();
    for (const auto& p : s.basis) basis.push_back(p.to_string());
    summands.push_back({{"label", s.label}, {"basis", basis}, {"rep", to_json(s.rep)}, {"invariant", s.invariant}});
  }
  Json inv = Json::array();
  for (const auto& p : q.invariant_forms) inv.push_back(p.to_string());
  return {{"a", q.a}, {"m", q.m}, {"summands", summands}, {"invariant_forms", inv}};
}

Json to_json(const CoverQuotient& c) {
  return {{"label", c.label}, {"cyclic_order", c.cyclic_order}, {"degree", c.degree}};
}

Json to_json(const Violation& v) {
  Json out = {{"clause", v.clause}, {"message", v.message}};
  if (v.component >= 0) out["component"] = v.component;
  return out;
}

Json to_json(const Assembly& a) {
  Json comps = Json::array();
  for (const auto& c : a.components) {
    Json induced = Json::array();
    for (const auto& p : c.induced_points)
      induced.push_back({{"m", p.m}, {"separating", p.separating}, {"type", p.duval().to_string()}});
    Json jc = {{"problem", to_json(c.problem)}, {"manifold", to_json(c.manifold)},   {"rp3", c.rp3_count},
               {"s1xs2", c.s1xs2_count},        {"induced_points", induced},          {"name", to_string(c)}};
    if (c.note) jc["note"] = *c.note;
    comps.push_back(std::move(jc));
  }
  Json viol = Json::array();
  for (const auto& v : a.violations) viol.push_back(to_json(v));
  return {{"components", comps}, {"violations", viol}};
}

Json to_json(const TorusQuotient& t) {
  return {{"order", t.order},
          {"multiplicities", t.multiplicities},
          {"reflector_circles", t.reflector_circles},
          {"orbifold_euler", to_string(t.orbifold_euler)}};
}

}  // namespace rcb
