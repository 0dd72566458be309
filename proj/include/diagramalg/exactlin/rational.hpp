#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "diagramalg/errors.hpp"

namespace diagramalg {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const Integer& x) { return sgn(x) == 0; }

inline std::string to_string(const Rational& x) { return x.get_str(); }
inline std::string to_string(const Integer& x) { return x.get_str(); }

/// Parses "7", "-3", "1/2" or "-5/4" into a reduced rational.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty rational");
  const auto slash = s.find('/');
  auto valid_int = [](std::string_view digits) {
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (digits.empty()) return false;
    for (char c : digits)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+')
    throw ParseError("not a rational: " + s);
  if (num.front() == '+') num.erase(0, 1);
  Integer d(den);
  if (sgn(d) == 0) throw ParseError("zero denominator: " + s);
  Rational r{Integer(num), d};
  r.canonicalize();
  return r;
}

inline Integer pow(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

inline Rational pow(const Rational& base, unsigned long exponent) {
  Rational out{pow(base.get_num(), exponent), pow(base.get_den(), exponent)};
  return out;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

inline Integer exact_div(const Integer& a, const Integer& b) {
  Integer out;
  mpz_divexact(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

}  // namespace diagramalg
