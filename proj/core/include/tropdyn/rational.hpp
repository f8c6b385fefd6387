#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tropdyn {

// Exact arithmetic throughout: arbitrary-precision integers and rationals.
// mpq_class keeps values canonical (lowest terms, positive denominator) as
// long as they are produced through arithmetic or parse_rational below.
using Int = mpz_class;
using Rational = mpq_class;

struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct dynamics_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "p", "p/q" and plain decimal strings like "-0.25".
Rational parse_rational(const std::string& text);

// Exact conversion; every binary64 value is a dyadic rational.
inline Rational rational_from_double(double x) { return Rational(x); }

inline double to_double(const Rational& r) { return r.get_d(); }

// Shortest-ish decimal with `digits` significant digits, no locale surprises.
std::string decimal_string(const Rational& r, int digits = 12);
std::string decimal_string(double x, int digits = 12);

// "p/q" (or "p" when integral); parses back to the identical value.
std::string exact_string(const Rational& r);

inline Rational rational_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Largest integer <= r.
inline Int rational_floor(const Rational& r) {
  return floor_div(r.get_num(), r.get_den());
}

// r - floor(r), in [0,1).
inline Rational fractional_part(const Rational& r) {
  return r - Rational(rational_floor(r));
}

inline size_t bit_size(const Rational& r) {
  return mpz_sizeinbase(r.get_num().get_mpz_t(), 2) +
         mpz_sizeinbase(r.get_den().get_mpz_t(), 2);
}

using PointQ = std::vector<Rational>;
using SlopeVec = std::vector<long long>;

// gmpxx has no long long constructor; funnel integer slopes through here.
inline Rational qi(long long v) { return Rational(static_cast<long>(v)); }

inline Rational dot(const SlopeVec& s, const PointQ& p) {
  Rational acc = 0;
  for (size_t i = 0; i < s.size(); ++i) acc += qi(s[i]) * p[i];
  return acc;
}

}  // namespace tropdyn
