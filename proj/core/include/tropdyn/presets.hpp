#pragma once

#include <optional>
#include <string>

#include "tropdyn/dynamics3d.hpp"
#include "tropdyn/pl1d.hpp"

namespace tropdyn {

// Tetrahedron surface (all four diagonal forms, level -1).
SurfaceSpec kummer_surface();

// min(-|x|, -|y|, -|z|, -(x+y+z)+1) at the given level c = -s: the level set
// is a cube for s in (0,1/2], a cube with one corner cut for s in (1/2,1],
// and fully coupled beyond.
SurfaceSpec rubik_surface(const Rational& level = Rational(-3) / 4);

// Degree-4 homogenization of the interval tent map.
PLMap1D tent_map();

std::optional<SurfaceSpec> surface_preset(const std::string& name);

}  // namespace tropdyn
