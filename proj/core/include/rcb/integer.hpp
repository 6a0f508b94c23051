#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace rcb {

using BigInt = mpz_class;
using Rational = mpq_class;

// Thrown for inputs that violate an operation's preconditions.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t lcm(std::int64_t a, std::int64_t b);

// Representative of a in [0, |m|). m must be nonzero.
std::int64_t floor_mod(std::int64_t a, std::int64_t m);

// Inverse of a modulo m in [0, m), if gcd(a, m) = 1. m >= 1.
std::optional<std::int64_t> mod_inverse(std::int64_t a, std::int64_t m);

// Accepts "p", "-p", "p/q". Throws ValidationError on malformed text or q = 0.
Rational parse_rational(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);
std::string to_string(const BigInt& z);

}  // namespace rcb
