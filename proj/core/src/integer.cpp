#include "rcb/integer.hpp"

#include <cstdlib>
#include <numeric>

namespace rcb {

std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  if (m == 0) throw ValidationError("floor_mod: zero modulus");
  const std::int64_t n = m < 0 ? -m : m;
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

std::optional<std::int64_t> mod_inverse(std::int64_t a, std::int64_t m) {
  if (m <= 0) return std::nullopt;
  if (m == 1) return 0;
  // extended Euclid on (a mod m, m)
  std::int64_t old_r = floor_mod(a, m), r = m;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) return std::nullopt;
  return floor_mod(old_s, m);
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && (s.front() == ' ' || s.front() == '+')) s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (s.empty()) throw ValidationError("empty rational literal");
  const auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw ValidationError("malformed rational '" + s + "'");
  BigInt n(num), d(den);
  if (d == 0) throw ValidationError("zero denominator in '" + s + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_str();
}

std::string to_string(const BigInt& z) { return z.get_str(); }

}  // namespace rcb
