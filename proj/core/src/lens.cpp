#include "rcb/lens.hpp"

#include <algorithm>

#include "rcb/integer.hpp"

namespace rcb {

std::string LensSpace::to_string() const {
  if (p == 1) return "S^3";
  if (p == 0) return "S^1 x S^2";
  return "L_{" + std::to_string(p) + "," + std::to_string(q) + "}";
}

LensSpace canonicalize_lens(std::int64_t p, std::int64_t q) {
  if (p < 0) p = -p;
  if (gcd(p, q) != 1)
    throw ValidationError("lens space L_{" + std::to_string(p) + "," + std::to_string(q) +
                          "} requires gcd(p,q) = 1");
  if (p == 0) return {0, 1};
  if (p == 1) return {1, 0};
  const std::int64_t r = floor_mod(q, p);
  const std::int64_t inv = *mod_inverse(r, p);
  const std::int64_t best = std::min({r, p - r, inv, p - inv});
  return {p, best};
}

std::int64_t h1_order(const LensSpace& l) { return l.p; }

}  // namespace rcb
