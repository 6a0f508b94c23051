#include "rcb/invariant_rings.hpp"

namespace rcb {

const std::vector<std::string>& plane_variables() {
  static const std::vector<std::string> vars{"s", "t"};
  return vars;
}

namespace {

// sum_j (-1)^j C(n, 2j + parity) t^{2j + parity} s^{n - 2j - parity}
IntPolynomial alternating_binomial_sum(unsigned n, unsigned parity) {
  IntPolynomial p(plane_variables());
  for (unsigned j = 0; 2 * j + parity <= n; ++j) {
    const unsigned tk = 2 * j + parity;
    BigInt c = binomial(n, tk);
    if (j % 2 == 1) c = -c;
    p.add_term({n - tk, tk}, c);
  }
  return p;
}

}  // namespace

IntPolynomial generator_xn(unsigned n) {
  if (n == 0) throw ValidationError("generator index must be >= 1");
  return alternating_binomial_sum(n, 0);
}

IntPolynomial generator_yn(unsigned n) {
  if (n == 0) throw ValidationError("generator index must be >= 1");
  return alternating_binomial_sum(n, 1);
}

IntPolynomial generator_z() {
  IntPolynomial z(plane_variables());
  z.add_term({2, 0}, 1);
  z.add_term({0, 2}, 1);
  return z;
}

bool verify_relation(unsigned n) {
  const IntPolynomial x = generator_xn(n);
  const IntPolynomial y = generator_yn(n);
  return (x * x + y * y - generator_z().pow(n)).is_zero();
}

std::vector<CoverQuotient> cover_degree_tower(std::int64_t n) {
  if (n < 1) throw ValidationError("cover tower level must be >= 1");
  std::vector<CoverQuotient> out;
  for (std::int64_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back({QuotientKind::Cyclic, d, d, "Z_" + std::to_string(d)});
    if (d % 2 == 0) {
      const std::int64_t half = d / 2;
      out.push_back({QuotientKind::ComplexifiedHalf, half, d,
                     "Z_" + std::to_string(half) + " x Z_2 (complexified)"});
      out.push_back({QuotientKind::NoRealPoints, d, d, "Z_" + std::to_string(d) + " (no real points)"});
    }
  }
  return out;
}

}  // namespace rcb
