#include <doctest.h>

#include <algorithm>
#include <random>

#include "rcb/assembler.hpp"

using namespace rcb;

namespace {

SurfaceComponentDescriptor sphere(bool rational, std::vector<SingularPoint> pts = {}) {
  return {BaseSurface{true, 0, 0}, rational, std::move(pts)};
}

bool has_clause(const std::vector<Violation>& vs, const std::string& c) {
  return std::any_of(vs.begin(), vs.end(), [&](const Violation& v) { return v.clause == c; });
}

std::vector<std::int64_t> multiplicities(const ManifoldType& m) {
  std::vector<std::int64_t> out;
  for (const auto& f : std::get<SeifertFibered>(m).fibers) out.push_back(f.d);
  return out;
}

}  // namespace

TEST_CASE("validate_surface") {
  CHECK(has_clause(validate_surface({BaseSurface{true, 2, 0}, true, {}}), clause::kOrientableTopology));
  CHECK(validate_surface({BaseSurface{true, 2, 0}, false, {}}).empty());
  CHECK(validate_surface({BaseSurface{true, 1, 0}, true, {}}).empty());
  CHECK(validate_surface({BaseSurface{false, 5, 0}, true, {}}).empty());
  CHECK(has_clause(validate_surface(sphere(true, std::vector<SingularPoint>(7, {3, false}))), clause::kTooManyPoints));
  CHECK(validate_surface(sphere(true, std::vector<SingularPoint>(6, {3, false}))).empty());
  CHECK(validate_surface(sphere(false, std::vector<SingularPoint>(7, {3, false}))).empty());
  CHECK(validate_surface(sphere(true, std::vector<SingularPoint>(10, {2, false}))).empty());
  CHECK(has_clause(validate_surface(sphere(true, std::vector<SingularPoint>(7, {2, true}))), clause::kTooManyPoints));
  CHECK(has_clause(validate_surface(sphere(false, {{3, true}})), clause::kSeparatingOddExponent));
}

TEST_CASE("assemble: flat Z_6 quotient") {
  ComponentDescriptor c;
  c.surface = sphere(true);
  c.region.seifert_points = {{6, 1, {}}, {3, 1, {}}, {2, 1, {}}};
  const Assembly a = assemble({true, {c}});
  REQUIRE(a.components.size() == 1);
  const auto& m = a.components[0].manifold;
  REQUIRE(std::holds_alternative<SeifertFibered>(m));
  CHECK(multiplicities(m) == std::vector<std::int64_t>{2, 3, 6});
  CHECK(std::get<SeifertFibered>(m).base == BaseSurface{true, 0, 0});
  CHECK(a.violations.empty());
  CHECK(a.components[0].induced_points.size() == 3);
}

TEST_CASE("assemble: collapsed end with one quotient point") {
  ComponentDescriptor c;
  c.surface = sphere(true);
  c.region.collapsed_ends = 1;
  c.region.seifert_points = {{3, 1, {}}};
  const Assembly a = assemble({true, {c}});
  const auto& cs = std::get<ConnectedSum>(a.components[0].manifold);
  REQUIRE(cs.lens.size() == 1);
  CHECK(cs.lens[0].p == 3);
  CHECK(cs.s1xs2_count == 0);
  CHECK(h1_of_manifold_type(a.components[0].manifold).to_string() == "Z_3");
}

TEST_CASE("assemble: trivial bundle over the torus") {
  ComponentDescriptor c;
  c.surface = {BaseSurface{true, 1, 0}, false, {}};
  const Assembly a = assemble({true, {c}});
  const auto& sf = std::get<SeifertFibered>(a.components[0].manifold);
  CHECK(sf.base == BaseSurface{true, 1, 0});
  CHECK(sf.fibers.empty());
  CHECK(to_string(a.components[0]) == "Seifert fibered over T^2, no multiple fibers, e = 0");
}

TEST_CASE("assemble: prefix, notes and rejection") {
  ComponentDescriptor c;
  c.surface = sphere(false);
  c.region.blown_up_curves = 2;
  c.rp3_count = 2;
  CHECK_THROWS_AS(assemble({true, {c}}), ValidationError);
  const Assembly a = assemble({false, {c}});
  CHECK(a.components[0].note.has_value());
  CHECK(std::get<ConnectedSum>(a.components[0].manifold).twisted_s1xs2_count == 1);
  CHECK(to_string(a.components[0]) == "S^1 x~ S^2 # 2 RP^3");
  c.region.blown_up_curves = 1;
  CHECK_THROWS_AS(assemble({false, {c}}), ValidationError);
}

TEST_CASE("assemble: declared points are matched, extra Seifert points are induced") {
  ComponentDescriptor c;
  c.surface = sphere(true, {{3, false}, {5, false}});
  c.region.seifert_points = {{3, 1, {}}, {3, 2, {}}};
  const Assembly a = assemble({true, {c}});
  REQUIRE(a.components[0].induced_points.size() == 1);
  CHECK(a.components[0].induced_points[0] == SingularPoint{3, false});
}

TEST_CASE("assemble: the bound of 6 multiple fibers on rational components") {
  ComponentDescriptor c;
  c.surface = sphere(true);
  c.region.seifert_points = std::vector<SeifertPointData>(7, {3, 1, {}});
  const Assembly a = assemble({true, {c}});
  CHECK(has_clause(a.violations, clause::kMultipleFiberBound));
  CHECK(has_clause(a.violations, clause::kTooManyPoints));
  c.surface.rational_over_c = false;
  CHECK(assemble({true, {c}}).violations.empty());
}

TEST_CASE("assemble: properties over random descriptors") {
  std::mt19937 rng(44);
  std::uniform_int_distribution<int> count(0, 8), mult(2, 9), coin(0, 1), ends(0, 2);
  for (int trial = 0; trial < 200; ++trial) {
    ComponentDescriptor c;
    c.surface = sphere(coin(rng) == 1);
    if (coin(rng)) c.surface.surface = BaseSurface{true, 1, 0};
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
      const std::int64_t m = mult(rng);
      std::int64_t b = 1;
      while (gcd(b, m) != 1) ++b;
      c.region.seifert_points.push_back({m, b, {}});
    }
    c.region.collapsed_ends = ends(rng);
    const Assembly a = assemble({true, {c}});
    const ManifoldType& m = a.components[0].manifold;

    // Orientable input never produces twisted handles.
    if (const auto* cs = std::get_if<ConnectedSum>(&m)) CHECK(cs->twisted_s1xs2_count == 0);

    // Seifert multiplicities are exactly the quotient exponents.
    if (std::holds_alternative<SeifertFibered>(m)) {
      std::vector<std::int64_t> expected;
      for (const auto& sp : c.region.seifert_points) expected.push_back(sp.m);
      std::sort(expected.begin(), expected.end());
      CHECK(multiplicities(m) == expected);
      if (c.surface.rational_over_c && expected.size() > 6) CHECK(has_clause(a.violations, clause::kMultipleFiberBound));
    }

    // Permuting the quotient points changes nothing.
    auto shuffled = c;
    std::shuffle(shuffled.region.seifert_points.begin(), shuffled.region.seifert_points.end(), rng);
    const Assembly b = assemble({true, {shuffled}});
    CHECK(b.components[0].manifold == m);
    CHECK(b.violations.size() == a.violations.size());
  }
}

TEST_CASE("blow-up effects") {
  CHECK(blowup_effect(2).effect == BlowupEffect::Homeomorphism);
  CHECK(blowup_effect(3).effect == BlowupEffect::ConnectSumRP2);
  CHECK(blowup_effect(1).effect == BlowupEffect::ConnectSumRP2);
  CHECK_FALSE(blowup_effect(1).creates_nonseparating_point);
  CHECK(blowup_effect(4).creates_nonseparating_point);
  CHECK_THROWS_AS(blowup_effect(0), ValidationError);
}

TEST_CASE("over_one_component_check") {
  ComponentDescriptor c;
  c.surface = sphere(false);
  c.region.seifert_points = {{4, 1, false, 1}};
  CHECK(over_one_component_check({true, {c}}).empty());
  c.region.seifert_points = {{4, 1, false, 2}};
  CHECK(over_one_component_check({true, {c}}).size() == 1);
  c.region.seifert_points = {{3, 1, false, 2}};
  CHECK(over_one_component_check({true, {c}}).empty());
  c.region.seifert_points = {{4, 1, true, 2}};
  CHECK(over_one_component_check({true, {c}}).empty());
}
