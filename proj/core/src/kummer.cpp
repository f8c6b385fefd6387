#include "tropdyn/kummer.hpp"

#include <cmath>
#include <sstream>

#include "tropdyn/potential.hpp"
#include "tropdyn/util.hpp"

namespace tropdyn {

Rational double_cover(const Rational& a) {
  Rational f = fractional_part(a);
  Rational dist = std::min(f, Rational(1 - f));
  return 4 * dist - 1;
}

PointQ kummer_map(const TorusPoint& p) {
  return PointQ{double_cover(p.a), double_cover(p.b), double_cover(p.a + p.b)};
}

KummerInvolutions kummer_involution_matrices() {
  return KummerInvolutions{
      Mat2{{{1, 2}, {0, -1}}},
      Mat2{{{-1, 0}, {2, 1}}},
      Mat2{{{-1, 0}, {0, 1}}},
  };
}

TorusPoint apply_involution(const Mat2& m, const TorusPoint& p) {
  return TorusPoint(qi(m[0][0]) * p.a + qi(m[0][1]) * p.b,
                    qi(m[1][0]) * p.a + qi(m[1][1]) * p.b);
}

SurfaceSpec kummer_surface() {
  TropicalPolynomial poly;
  poly.forms = {
      AffineForm{{-1, 1, 1}, Rational(0)},
      AffineForm{{1, -1, 1}, Rational(0)},
      AffineForm{{1, 1, -1}, Rational(0)},
      AffineForm{{-1, -1, -1}, Rational(0)},
  };
  return SurfaceSpec{poly, Rational(-1)};
}

std::string SemiconjugacyReport::to_json() const {
  std::ostringstream os;
  os << "{\"samples\":" << samples << ",\"mismatches\":" << mismatches
     << ",\"max_deviation\":" << decimal_string(max_deviation)
     << ",\"orbit_steps\":" << orbit_steps
     << ",\"orbit_mismatches\":" << orbit_mismatches
     << ",\"spectral_ratio_gap\":" << decimal_string(spectral_ratio_gap) << "}";
  return os.str();
}

SemiconjugacyReport check_semiconjugacy(size_t samples, uint64_t seed, size_t orbit_steps) {
  SurfaceSpec spec = kummer_surface();
  KummerInvolutions inv = kummer_involution_matrices();
  const std::array<std::pair<Mat2, Axis>, 3> pairs{
      std::pair{inv.ix, Axis::X}, std::pair{inv.iy, Axis::Y}, std::pair{inv.iz, Axis::Z}};

  SemiconjugacyReport report;
  Rng rng(seed);
  const long den = 720;
  for (size_t s = 0; s < samples; ++s) {
    TorusPoint p(rat(rng.uniform_int(0, den - 1), den),
                 rat(rng.uniform_int(0, den - 1), den));
    for (const auto& [m, axis] : pairs) {
      PointQ lhs = kummer_map(apply_involution(m, p));
      PointQ rhs = vieta_reflection(spec, axis, kummer_map(p));
      ++report.samples;
      if (lhs != rhs) {
        ++report.mismatches;
        for (size_t i = 0; i < 3; ++i)
          report.max_deviation =
              std::max(report.max_deviation, std::abs(to_double(lhs[i] - rhs[i])));
      }
    }
  }

  // word orbit: iota_x iota_y iota_z upstairs against sigma_x sigma_y sigma_z
  Word word = parse_word("xyz");
  TorusPoint t(Rational(3, 100), Rational(1, 7));
  PointQ q = kummer_map(t);
  report.orbit_steps = orbit_steps;
  for (size_t k = 0; k < orbit_steps; ++k) {
    t = apply_involution(inv.ix, apply_involution(inv.iy, apply_involution(inv.iz, t)));
    q = apply_word(spec, word, q);
    if (kummer_map(t) != q) ++report.orbit_mismatches;
  }

  // diagnostic: the squared spectral radius of the torus word against the
  // leading homogeneity eigenvalue of the reflection word
  Mat2 prod{};
  {
    auto mul = [](const Mat2& a, const Mat2& b) {
      Mat2 c{};
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
      return c;
    };
    prod = mul(mul(inv.ix, inv.iy), inv.iz);
  }
  double tr = static_cast<double>(prod[0][0] + prod[1][1]);
  double det = static_cast<double>(prod[0][0] * prod[1][1] - prod[0][1] * prod[1][0]);
  double rho = (std::abs(tr) + std::sqrt(tr * tr - 4 * det)) / 2;
  double lambda = leading_eigendata(homogeneity_matrix(word)).lambda;
  report.spectral_ratio_gap = std::abs(rho * rho - lambda) / lambda;
  return report;
}

}  // namespace tropdyn
