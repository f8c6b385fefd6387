#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tropdyn/geometry.hpp"
#include "tropdyn/trop_core.hpp"

namespace tropdyn {

// Plane curve data: level-set polynomial with slopes in {-1,0,1}^2 \ {0}.
struct CurveSpec {
  TropicalPolynomial poly;
  Rational level;

  void validate() const;
};

// Closed convex cycle {h >= level} boundary with its lattice metric.
// Vertices run counterclockwise; edge k joins vertex k to k+1 (mod size)
// and has the stated lattice length. total equals the tropical j-invariant.
struct SkeletonCycle {
  std::vector<PointQ> vertices;
  std::vector<Rational> edge_lengths;
  Rational total;
};

SkeletonCycle skeleton_cycle(const CurveSpec& curve);

// Axis reflection on the plane (same rule as the surface reflections).
PointQ reflection(const CurveSpec& curve, size_t axis, const PointQ& p);

// Cumulative lattice length from vertex 0, counterclockwise; error off cycle.
Rational arc_coordinate(const SkeletonCycle& cycle, const PointQ& p);

// Rotation number of (reflection 0) o (reflection 1) acting on the cycle, as
// the exact arc displacement over the total length, cross-checked at
// `checks` base points (a rigid rotation displaces every point equally).
Rational rotation_number(const CurveSpec& curve, size_t checks = 10);

struct TwistSample {
  Rational level;
  std::optional<Rational> rotation;
  std::string error;
};
std::vector<TwistSample> twist_profile(const TropicalPolynomial& poly,
                                       const std::vector<Rational>& levels);

// Rotation number at levels refined geometrically toward the maximum of h,
// returned once two consecutive refinements agree exactly.
std::optional<Rational> rotation_number_near_max(const TropicalPolynomial& poly,
                                                 int max_refinements = 40);

// e2-offsets of the two left tentacle rays (and cyclic analogues): the break
// rays outside a large box, two per cardinal direction.
struct TentacleOffsets {
  // offsets[d] holds the two tied-coordinate values for rays going
  // left (d=0), right (d=1), down (d=2), up (d=3)
  std::array<std::array<Rational, 2>, 4> offsets;
};
TentacleOffsets tentacle_offsets(const BreakCurve& curve);

}  // namespace tropdyn
