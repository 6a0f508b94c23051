#pragma once

#include <cstdint>
#include <string>

namespace rcb {

// Lens space L_{p,q}. Canonical values satisfy gcd(p,q) = 1 and 0 <= q <= p/2
// for p >= 2; (1,0) is S^3 and (0,1) is S^1 x S^2.
struct LensSpace {
  std::int64_t p = 1;
  std::int64_t q = 0;

  bool is_sphere() const { return p == 1; }
  bool is_s1xs2() const { return p == 0; }

  auto operator<=>(const LensSpace&) const = default;

  // "L_{7,2}", "S^3", "S^1 x S^2"; RP^3 is printed as "L_{2,1}".
  std::string to_string() const;
};

// Reduces q mod p and takes the least representative of {+-q, +-q^{-1}} mod p.
// Throws ValidationError if gcd(p, q) != 1.
LensSpace canonicalize_lens(std::int64_t p, std::int64_t q);

// Order of H_1; 0 encodes the infinite group of S^1 x S^2.
std::int64_t h1_order(const LensSpace& l);

}  // namespace rcb
