#include "tropdyn/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>

namespace tropdyn {

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw domain_error("empty rational literal");

  auto dot = s.find('.');
  auto exp = s.find_first_of("eE");
  if (dot != std::string::npos || exp != std::string::npos) {
    // Decimal literal: mantissa scaled by a power of ten, exactly.
    std::string mant = exp == std::string::npos ? s : s.substr(0, exp);
    long e10 = 0;
    if (exp != std::string::npos) e10 = std::stol(s.substr(exp + 1));
    dot = mant.find('.');
    if (dot != std::string::npos) {
      e10 -= static_cast<long>(mant.size() - dot - 1);
      mant.erase(dot, 1);
    }
    if (mant.empty() || mant == "-" || mant == "+")
      throw domain_error("bad rational literal: " + text);
    Rational r{Int(mant)};
    Int pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(e10)));
    if (e10 >= 0)
      r *= Rational(pow10);
    else
      r /= Rational(pow10);
    r.canonicalize();
    return r;
  }

  Rational r;
  if (r.set_str(s, 10) != 0) throw domain_error("bad rational literal: " + text);
  if (r.get_den() == 0) throw domain_error("zero denominator: " + text);
  r.canonicalize();
  return r;
}

std::string decimal_string(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, x);
  return buf;
}

std::string decimal_string(const Rational& r, int digits) {
  return decimal_string(r.get_d(), digits);
}

std::string exact_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace tropdyn
