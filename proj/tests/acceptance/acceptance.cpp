// Acceptance run: one PASS/FAIL line per criterion, with pinned tolerances and
// wall-clock limits. Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "rcb/assembler.hpp"
#include "rcb/catalog.hpp"
#include "rcb/conics.hpp"
#include "rcb/invariant_rings.hpp"
#include "rcb/reps.hpp"
#include "rcb/surgery.hpp"

using namespace rcb;

namespace {

constexpr double kCharacterTolerance = 1e-9;

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Accumulates failures; the first failure message is kept as the detail.
class Check {
 public:
  void expect(bool cond, const std::string& what) {
    ++count_;
    if (!cond && ok_) {
      ok_ = false;
      first_ = what;
    } else if (!cond) {
      ++extra_;
    }
  }
  Outcome done(const std::string& summary) const {
    if (ok_) return {true, summary + ", " + std::to_string(count_) + " checks"};
    return {false, "first failure: " + first_ + (extra_ ? " (+" + std::to_string(extra_) + " more)" : "")};
  }

 private:
  bool ok_ = true;
  int count_ = 0;
  int extra_ = 0;
  std::string first_;
};

Outcome invariant_ring_identity() {
  Check c;
  for (unsigned n = 1; n <= 24; ++n) {
    c.expect(verify_relation(n), "relation fails at n = " + std::to_string(n));
    const auto g = oracle::gaussian_power(n);
    const IntPolynomial x = generator_xn(n), y = generator_yn(n);
    for (unsigned k = 0; k <= n; ++k) {
      c.expect(x.coefficient({n - k, k}) == g.re[k], "x_" + std::to_string(n) + " coefficient of t^" + std::to_string(k));
      c.expect(y.coefficient({n - k, k}) == g.im[k], "y_" + std::to_string(n) + " coefficient of t^" + std::to_string(k));
    }
  }
  return c.done("n = 1..24 exact");
}

Outcome torus_quotients() {
  Check c;
  const struct {
    Mat2 a;
    std::vector<std::int64_t> expected;
  } cases[] = {{{0, -1, 1, 1}, {2, 3, 6}}, {{0, -1, 1, 0}, {2, 4, 4}}, {{-1, -1, 1, 0}, {3, 3, 3}},
               {{-1, 0, 0, -1}, {2, 2, 2, 2}}};
  std::ostringstream got;
  for (const auto& k : cases) {
    const auto t = torus_quotient(k.a);
    c.expect(t.multiplicities == k.expected, "multiplicities of order " + std::to_string(t.order) + " generator");
    c.expect(orbifold_euler_check(t.multiplicities) == 0, "orbifold Euler characteristic nonzero");
    got << "(";
    for (std::size_t i = t.multiplicities.size(); i-- > 0;) got << t.multiplicities[i] << (i ? "," : "");
    got << ")";
  }
  return c.done(got.str() + ", chi_orb = 0");
}

Outcome multiplicity_coherence() {
  Check c;
  int pairs = 0;
  for (std::int64_t cc = -12; cc <= 12; ++cc)
    for (std::int64_t d = -12; d <= 12; ++d) {
      if (gcd(cc, d) != 1) continue;
      ++pairs;
      const std::int64_t samples = 4 * (std::abs(cc) + std::abs(d) + 1);
      const std::int64_t w = winding_oracle(cc, d, samples);
      const std::int64_t mult = fiber_multiplicity(canonicalize_slope(cc, d));
      c.expect(w == d, "winding of (" + std::to_string(cc) + "," + std::to_string(d) + ")");
      c.expect(mult == std::abs(w), "multiplicity of (" + std::to_string(cc) + "," + std::to_string(d) + ")");
    }
  return c.done(std::to_string(pairs) + " coprime pairs");
}

Outcome decomposition_vs_homology() {
  Check c;
  std::mt19937 rng(20240917);
  int seifert = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const SurgeryProblem p = oracle::random_problem(rng, 3, 8);
    const ManifoldType m = decompose(p);
    seifert += std::holds_alternative<SeifertFibered>(m);
    const AbelianGroup lhs = h1_of_manifold_type(m);
    const AbelianGroup rhs = oracle::presentation_h1(p);
    c.expect(lhs == rhs, "problem " + std::to_string(trial) + " over " + p.base.to_string() + ": " + lhs.to_string() +
                             " vs " + rhs.to_string());
  }
  // Tabulated identifications.
  c.expect(std::get<ConnectedSum>(glue_two_solid_tori(1, 0)).is_sphere(), "L_{1,0} = S^3");
  c.expect(std::get<ConnectedSum>(glue_two_solid_tori(0, 1)).s1xs2_count == 1, "L_{0,1} = S^1 x S^2");
  c.expect(std::get<ConnectedSum>(glue_two_solid_tori(2, 1)).lens == std::vector<LensSpace>{{2, 1}}, "L_{2,1} = RP^3");
  return c.done("50 random problems (" + std::to_string(seifert) + " Seifert)");
}

Outcome representation_decomposition() {
  Check c;
  int triples = 0;
  double worst = 0.0;
  for (std::int64_t m = 1; m <= 12; ++m)
    for (std::int64_t a = 0; a < m; ++a) {
      if (gcd(a, m) != 1) continue;
      for (std::int64_t b = 0; b < m; ++b) {
        ++triples;
        const RepMultiset dec = decompose_tensor(a, b, m);
        const auto ch = oracle::decompose_by_characters(oracle::tensor_generator(a, b, m), m);
        worst = std::max(worst, ch.max_error);
        const std::string tag = "(a,b,m) = (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(m) + ")";
        c.expect(ch.max_error < kCharacterTolerance, "inner products not integral at " + tag);
        c.expect(dec.dimension() == 12, "dimension at " + tag);
        c.expect(ch.trivial == dec.trivial && ch.sign == dec.sign && ch.rotations == dec.rotations,
                 "multiplicities at " + tag);
      }
    }
  std::ostringstream os;
  os << triples << " triples, max deviation " << worst;
  return c.done(os.str());
}

Outcome conic_classification() {
  Check c;
  const auto type = [](const std::string& family, Rational s, Rational t) {
    return classify_family_over_point(ConicFamily::from_form(family), s, t);
  };
  using F = FiberType;
  using K = FiberLocalModel::Kind;
  const auto model = [](const std::string& family, Rational s, Rational t) {
    return local_model_at(ConicFamily::from_form(family), s, t).kind;
  };

  // The four local normal forms at the origin and nearby.
  c.expect(model("x^2 + y^2 - z^2", 0, 0) == K::S1Bundle, "S^1-bundle form");
  c.expect(model("x^2 + y^2 + z^2", 0, 0) == K::EmptyFibers, "empty-fiber form");
  c.expect(model("x^2 + y^2 + t z^2", 0, 0) == K::CollapsedEnd, "collapsed-end form");
  c.expect(type("x^2 + y^2 + t z^2", 0, -1) == F::SmoothWithRealPoints, "collapsed end, t < 0 side");
  c.expect(type("x^2 + y^2 + t z^2", 0, 1) == F::SmoothEmpty, "collapsed end, t > 0 side");
  c.expect(model("x^2 - y^2 + t z^2", 0, 0) == K::BlownUpS1Bundle, "blown-up form");
  c.expect(type("x^2 - y^2 + t z^2", 0, 1) == F::SmoothWithRealPoints, "blown-up form, t > 0 side");
  c.expect(type("x^2 - y^2 + t z^2", 0, -1) == F::SmoothWithRealPoints, "blown-up form, t < 0 side");

  // z^2 + s x^2 + 2t xy - s y^2: smooth total space, S^1-bundle off the origin.
  const std::string e1 = "z^2 + s x^2 + 2t x y - s y^2";
  c.expect(discriminant_polynomial(ConicFamily::from_form(e1)) == parse_polynomial("-(s^2 + t^2)", base_variables()),
           "discriminant -(s^2 + t^2)");
  c.expect(type(e1, 0, 0) == F::DoubleLine, "double line over the origin");
  for (const auto& [s, t] : std::vector<std::pair<int, int>>{{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {2, -3}})
    c.expect(type(e1, s, t) == F::SmoothWithRealPoints, "S^1-bundle off the origin");

  // z^2 + s x^2 + t y^2: quadrants and axes.
  const std::string e2 = "z^2 + s x^2 + t y^2";
  c.expect(type(e2, 1, 1) == F::SmoothEmpty, "empty over the positive quadrant");
  c.expect(type(e2, -1, 1) == F::SmoothWithRealPoints && type(e2, 1, -1) == F::SmoothWithRealPoints &&
               type(e2, -1, -1) == F::SmoothWithRealPoints,
           "S^1-bundle over the other quadrants");
  c.expect(model(e2, 1, 0) == K::CollapsedEnd && model(e2, 0, 1) == K::CollapsedEnd,
           "collapsed end along the positive axes");
  c.expect(model(e2, -1, 0) == K::BlownUpS1Bundle && model(e2, 0, -1) == K::BlownUpS1Bundle,
           "blown-up bundle along the negative axes");

  // z^2 + s x^2 + (t^2 - s^2) y^2.
  const std::string e3 = "z^2 + s x^2 + (t^2 - s^2) y^2";
  c.expect(type(e3, 1, 2) == F::SmoothEmpty && type(e3, 1, -2) == F::SmoothEmpty, "empty over 0 < s < |t|");
  c.expect(type(e3, 2, 1) == F::SmoothWithRealPoints && type(e3, -1, 3) == F::SmoothWithRealPoints,
           "S^1-bundle elsewhere");
  c.expect(model(e3, 1, 1) == K::CollapsedEnd && model(e3, 1, -1) == K::CollapsedEnd, "collapsed end on |t| = s");
  c.expect(model(e3, -1, 1) == K::BlownUpS1Bundle && model(e3, -1, -1) == K::BlownUpS1Bundle,
           "blown-up bundle on s + |t| = 0");

  // z^2 + s^2 x^2 + 2t xy + s^2 y^2.
  const std::string e4 = "z^2 + s^2 x^2 + 2t x y + s^2 y^2";
  c.expect(type(e4, 1, 2) == F::SmoothWithRealPoints && type(e4, 1, -2) == F::SmoothWithRealPoints,
           "real points over |t| > s^2");
  c.expect(type(e4, 1, 0) == F::SmoothEmpty, "empty over |t| < s^2");
  c.expect(model(e4, 1, 1) == K::CollapsedEnd && model(e4, 2, -4) == K::CollapsedEnd, "collapsed end on |t| = s^2");
  bool blown_up = false;
  for (int s = -4; s <= 4; ++s)
    for (int t = -20; t <= 20; ++t)
      blown_up = blown_up || type(e4, s, t) == F::TwoRealLines;
  c.expect(!blown_up, "no blown-up curve");

  // All five signature classes occur.
  c.expect(classify_conic(ConicForm::diagonal(1, 1, -1)) == F::SmoothWithRealPoints, "indefinite rank 3 class");
  c.expect(classify_conic(ConicForm::diagonal(1, 1, 1)) == F::SmoothEmpty, "definite rank 3 class");
  c.expect(classify_conic(ConicForm::diagonal(1, -1, 0)) == F::TwoRealLines, "indefinite rank 2 class");
  c.expect(classify_conic(ConicForm::diagonal(1, 1, 0)) == F::TwoConjugateLines, "definite rank 2 class");
  c.expect(classify_conic(ConicForm::diagonal(1, 0, 0)) == F::DoubleLine, "rank 1 class");
  return c.done("normal forms and four worked families");
}

Outcome constraint_validator() {
  Check c;
  const BaseSurface s2{true, 0, 0};
  const auto seven = validate_surface({s2, true, std::vector<SingularPoint>(7, {3, false})});
  c.expect(seven.size() == 1 && seven[0].clause == clause::kTooManyPoints, "7 A^+ points flagged");
  const auto genus2 = validate_surface({BaseSurface{true, 2, 0}, true, {}});
  c.expect(genus2.size() == 1 && genus2[0].clause == clause::kOrientableTopology, "genus 2 flagged");
  c.expect(validate_surface({s2, true, std::vector<SingularPoint>(10, {2, false})}).empty(),
           "10 non-separating A_1^+ points pass");
  return c.done("7 points flagged, genus 2 flagged, 10 A_1^+ pass");
}

Outcome equivariant_normal_forms() {
  Check c;
  using K = EquivariantNormalForm::Kind;
  const auto a = classify_equivariant_conic(5, 1, 3, CentralConic::SmoothWithRealPoints);
  c.expect(a.kind == K::SmoothConic && a.equation == "z^2 - x^2 - y^2", "m=5 smooth case");
  const auto b = classify_equivariant_conic(3, 1, 2, CentralConic::DoubleLine);
  c.expect(b.kind == K::DoubleLine && b.equation == "z^2 + s*x^2 + 2*t*x*y - s*y^2", "m=3 double line case");
  const auto d = classify_equivariant_conic(4, 1, 1, CentralConic::DoubleLine);
  c.expect(d.kind == K::Impossible, "m=4 double line rejected");
  return c.done("smooth / double line / even m rejected");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "invariant-ring identity", 1.0, invariant_ring_identity},
      {2, "torus-quotient Seifert data", 1.0, torus_quotients},
      {3, "multiplicity coherence", 5.0, multiplicity_coherence},
      {4, "decomposition vs homology oracle", 10.0, decomposition_vs_homology},
      {5, "representation decomposition", 5.0, representation_decomposition},
      {6, "conic classification", 1.0, conic_classification},
      {7, "constraint validator", 1.0, constraint_validator},
      {8, "equivariant normal forms", 1.0, equivariant_normal_forms},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = cr.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs > cr.limit_s) o = {false, "too slow"};
    failed += !o.ok;
    std::printf("%s criterion %d: %s (%s; %.3f s, limit %.0f s)\n", o.ok ? "PASS" : "FAIL", cr.id, cr.name,
                o.detail.c_str(), secs, cr.limit_s);
  }
  return failed;
}
