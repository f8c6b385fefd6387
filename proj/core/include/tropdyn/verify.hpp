#pragma once

#include <string>
#include <vector>

#include "tropdyn/dynamics3d.hpp"

namespace tropdyn {

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::vector<std::string> lines;
};

// Exact semiconjugacy of the torus involutions with the tetrahedron
// reflections: sample and word-orbit checks with zero mismatches.
SuiteResult verify_kummer();

// Tent-map closed forms: potential against the quadratic/affine closed form
// and the flat unit-mass measure.
SuiteResult verify_tent();

// Reflections preserve the level of h exactly and square to the identity on
// sampled skeleton points of seeded random surfaces.
SuiteResult verify_skeleton(size_t surfaces = 10, size_t points_per_surface = 1000);

std::vector<SuiteResult> verify_all();

}  // namespace tropdyn
