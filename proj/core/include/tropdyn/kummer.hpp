#pragma once

#include <array>
#include <string>

#include "tropdyn/dynamics3d.hpp"

namespace tropdyn {

// Point of the square torus with canonical representatives in [0,1).
struct TorusPoint {
  Rational a, b;

  TorusPoint(Rational a_, Rational b_) : a(fractional_part(a_)), b(fractional_part(b_)) {}
  bool operator==(const TorusPoint& o) const { return a == o.a && b == o.b; }
};

// Folded double cover of the circle onto [-1, 1].
Rational double_cover(const Rational& a);

// (a, b) -> (c(a), c(b), c(a+b)); the image lies on the tetrahedron level set.
PointQ kummer_map(const TorusPoint& p);

using Mat2 = std::array<std::array<long long, 2>, 2>;

// The three torus involutions whose images under the double cover are the
// axis reflections of the tetrahedron.
struct KummerInvolutions {
  Mat2 ix, iy, iz;
};
KummerInvolutions kummer_involution_matrices();

TorusPoint apply_involution(const Mat2& m, const TorusPoint& p);

struct SemiconjugacyReport {
  size_t samples = 0;
  size_t mismatches = 0;
  double max_deviation = 0;       // 0 expected; exact comparisons throughout
  size_t orbit_steps = 0;
  size_t orbit_mismatches = 0;
  double spectral_ratio_gap = 0;  // diagnostic: |rho(ixyz)^2 - lambda_xyz| / lambda
  std::string to_json() const;
};

// Exact two-sided check of kummer_map o involution == reflection o kummer_map
// on random rational samples, plus a word-orbit comparison.
SemiconjugacyReport check_semiconjugacy(size_t samples, uint64_t seed = 2024,
                                        size_t orbit_steps = 100);

// The tetrahedron surface the Kummer construction maps onto.
SurfaceSpec kummer_surface();

}  // namespace tropdyn
