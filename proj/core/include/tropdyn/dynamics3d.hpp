#pragma once

#include <array>
#include <string>
#include <vector>

#include "tropdyn/trop_core.hpp"

namespace tropdyn {

// Surface data: the level-set polynomial (slopes in {-1,0,1}^3 \ {0}) and
// the level cutting out the skeleton.
struct SurfaceSpec {
  TropicalPolynomial poly;
  Rational level;

  void validate() const;
};

enum class Axis : int { X = 0, Y = 1, Z = 2 };

// Sequence of axis reflections; the leftmost letter acts last, so
// "xyz" means sigma_x after sigma_y after sigma_z.
using Word = std::vector<Axis>;

Word parse_word(const std::string& letters);
std::string word_string(const Word& word);
Word inverse_word(const Word& word);

// Reflection along one axis: the moved coordinate becomes
// h_{axis,-1}(rest) - h_{axis,+1}(rest) - p[axis]. Works in any dimension
// whose polynomial has both side groups along the axis.
PointQ vieta_reflect(const TropicalPolynomial& poly, size_t axis, const PointQ& p);

PointQ vieta_reflection(const SurfaceSpec& spec, Axis axis, const PointQ& p);
PointQ apply_word(const SurfaceSpec& spec, const Word& word, const PointQ& p);

struct OrbitOptions {
  bool exact = true;
  double float_band = 1e-9;     // |h(p) - level| tolerance in float mode
  size_t max_bits = 1 << 16;    // rational size guard per coordinate
};

// N+1 points starting at p0; every point keeps the value of h. In exact
// mode a rational-size blowup raises dynamics_error, in float mode leaving
// the tolerance band around the level does.
std::vector<PointQ> orbit(const SurfaceSpec& spec, const Word& word, const PointQ& p0,
                          size_t steps, const OrbitOptions& opts = {});

std::vector<std::array<double, 3>> orbit_float(const SurfaceSpec& spec, const Word& word,
                                               const std::array<double, 3>& p0, size_t steps,
                                               double band = 1e-9);

// Point of the rank-3 bundle over the skeleton, stored as the pair of rows
// (a1 | a0) with projection a1 - a0 per axis.
struct LiftedPoint {
  std::array<Rational, 3> a1;
  std::array<Rational, 3> a0;

  PointQ project() const;
};

LiftedPoint section(const PointQ& p);

// Value of the homogenized polynomial at a lifted point: each slope s of a
// form contributes 2*a0, a0+a1 or 2*a1 for s = -1, 0, +1.
Rational homogenized_value(const TropicalPolynomial& poly, const LiftedPoint& P);

// Membership in the bundle locus: homogenized value equals
// level + sum of (a0 + a1) over the three axes.
bool on_bundle_locus(const SurfaceSpec& spec, const LiftedPoint& P);

LiftedPoint homogeneous_lift_reflection(const SurfaceSpec& spec, Axis axis,
                                        const LiftedPoint& P);
LiftedPoint apply_word_lifted(const SurfaceSpec& spec, const Word& word,
                              const LiftedPoint& P);

// Alternative sign-free lift (kept for experimentation; not an involution).
LiftedPoint homogeneous_lift_reflection_pos(const SurfaceSpec& spec, Axis axis,
                                            const LiftedPoint& P);

// Row vector c with lift(section(p)) - section(word(p)) = [1;1] * c.
// Both rows of the difference must agree exactly; a mismatch means a bug.
std::array<Rational, 3> cocycle(const SurfaceSpec& spec, const Word& word, const PointQ& p);

}  // namespace tropdyn
