#include <doctest.h>

#include <cmath>
#include <random>

#include "rcb/catalog.hpp"

using namespace rcb;

namespace {

const Mat2 kZ6{0, -1, 1, 1};
const Mat2 kZ4{0, -1, 1, 0};
const Mat2 kZ3{-1, -1, 1, 0};
const Mat2 kZ2{-1, 0, 0, -1};

Mat2 random_unimodular(std::mt19937& rng) {
  Mat2 p{1, 0, 0, 1};
  std::uniform_int_distribution<int> k(-2, 2), coin(0, 1);
  for (int step = 0; step < 5; ++step) {
    const std::int64_t f = k(rng);
    const Mat2 e = coin(rng) ? Mat2{1, f, 0, 1} : Mat2{1, 0, f, 1};
    p = mat2_multiply(p, e);
  }
  return p;
}

Mat2 inverse(const Mat2& p) {
  const std::int64_t d = mat2_det(p);
  return {d * p[3], -d * p[1], -d * p[2], d * p[0]};
}

}  // namespace

TEST_CASE("matrix orders") {
  CHECK(matrix_order(kZ6) == 6);
  CHECK(matrix_order(kZ4) == 4);
  CHECK(matrix_order(kZ3) == 3);
  CHECK(matrix_order(kZ2) == 2);
  CHECK(matrix_order({1, 0, 0, 1}) == 1);
  CHECK(matrix_order({0, 1, 1, 0}) == 2);
  CHECK_THROWS_AS(matrix_order({1, 1, 0, 1}), ValidationError);
  CHECK_THROWS_AS(matrix_order({2, 0, 0, 1}), ValidationError);
}

TEST_CASE("flat torus quotients") {
  CHECK(torus_quotient_seifert_data(kZ6) == std::vector<std::int64_t>{2, 3, 6});
  CHECK(torus_quotient_seifert_data(kZ4) == std::vector<std::int64_t>{2, 4, 4});
  CHECK(torus_quotient_seifert_data(kZ3) == std::vector<std::int64_t>{3, 3, 3});
  CHECK(torus_quotient_seifert_data(kZ2) == std::vector<std::int64_t>{2, 2, 2, 2});
  for (const auto& a : {kZ6, kZ4, kZ3, kZ2}) CHECK(torus_quotient(a).orbifold_euler == 0);
  CHECK_THROWS_AS(torus_quotient({1, 0, 0, 1}), ValidationError);
}

TEST_CASE("reflections give reflector circles and no isolated fibers") {
  const auto diag = torus_quotient({1, 0, 0, -1});
  CHECK(diag.multiplicities.empty());
  CHECK(diag.reflector_circles == 2);
  const auto swap = torus_quotient({0, 1, 1, 0});
  CHECK(swap.multiplicities.empty());
  CHECK(swap.reflector_circles == 1);
}

TEST_CASE("torus quotient data is conjugation invariant") {
  std::mt19937 rng(31);
  for (const auto& a : {kZ6, kZ4, kZ3, kZ2}) {
    const auto expected = torus_quotient_seifert_data(a);
    for (int trial = 0; trial < 10; ++trial) {
      const Mat2 p = random_unimodular(rng);
      const Mat2 conj = mat2_multiply(mat2_multiply(p, a), inverse(p));
      CHECK(torus_quotient_seifert_data(conj) == expected);
    }
  }
}

TEST_CASE("orbifold Euler characteristic") {
  CHECK(orbifold_euler_check({6, 3, 2}) == 0);
  CHECK(orbifold_euler_check({2, 2, 2, 2}) == 0);
  CHECK(orbifold_euler_check({3, 3}) == Rational(2, 3));
  CHECK_THROWS_AS(orbifold_euler_check({}), ValidationError);
}

TEST_CASE("Hopf fibers") {
  const auto p0 = hopf_fiber_point(0, 0, 0);
  CHECK(p0[0] == doctest::Approx(0));
  CHECK(p0[2] == doctest::Approx(1));
  const auto p1 = hopf_fiber_point(1, 0, 1.5707963267948966);
  const double r = 1 / std::sqrt(2.0);
  CHECK(std::abs(p1[0]) < 1e-12);
  CHECK(std::abs(p1[1] - r) < 1e-12);
  CHECK(std::abs(p1[2]) < 1e-12);
  CHECK(std::abs(p1[3] - r) < 1e-12);

  std::mt19937 rng(8);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int i = 0; i < 200; ++i) {
    const double s = u(rng), t = u(rng), th = u(rng);
    const auto x = hopf_fiber_point(s, t, th);
    CHECK(std::abs(x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3] - 1) < 1e-12);
    // (x1 + i x2) / (x3 + i x4) = s + it
    const double den = x[2] * x[2] + x[3] * x[3];
    CHECK(std::abs((x[0] * x[2] + x[1] * x[3]) / den - s) < 1e-12);
    CHECK(std::abs((x[1] * x[2] - x[0] * x[3]) / den - t) < 1e-12);
  }
}

TEST_CASE("exact Hopf fibers at Pythagorean angles") {
  for (const Rational& s : {Rational(0), Rational(1, 2), Rational(-3, 5)})
    for (const Rational& t : {Rational(0), Rational(2), Rational(-1, 7)})
      for (const Rational& l : {Rational(0), Rational(1, 2), Rational(1, 3), Rational(-4)}) {
        const auto p = hopf_fiber_point_exact(s, t, l);
        const auto& x = p.scaled;
        CHECK(p.r_squared * (x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3]) == 1);
        CHECK(p.r_squared * (x[2] * x[2] + x[3] * x[3]) == 1 / (1 + s * s + t * t));
        CHECK(x[0] == s * x[2] - t * x[3]);
        CHECK(x[1] == s * x[3] + t * x[2]);
      }
}

TEST_CASE("flat catalog") {
  const auto entries = flat_catalog();
  REQUIRE(entries.size() == 6);
  CHECK(entries[0].multiplicities == std::vector<std::int64_t>{2, 3, 6});
  CHECK(entries[4].base == "RP^2");
  CHECK(entries[4].multiplicities == std::vector<std::int64_t>{2, 2});
  CHECK(entries[4].total_space_orientable != entries[5].total_space_orientable);
}
