#pragma once

#include <string>
#include <variant>

#include "tropdyn/dynamics3d.hpp"
#include "tropdyn/elliptic.hpp"
#include "tropdyn/pl1d.hpp"

namespace tropdyn {

// Surface/curve config file: one JSON object
//   {"coefficients": {"i,j,k": "p/q" | number, ...}, "level": "p/q" | number}
// Keys have 3 components for surfaces and 2 for plane curves; each component
// lies in {-1,0,1}; the all-zero key is rejected (the level plays its role);
// absent keys mean the monomial is omitted.
std::variant<SurfaceSpec, CurveSpec> parse_spec_config(const std::string& json_text);

SurfaceSpec parse_surface_config(const std::string& json_text);
CurveSpec parse_curve_config(const std::string& json_text);

std::string write_surface_config(const SurfaceSpec& spec);
std::string write_curve_config(const CurveSpec& spec);

// Full-support random surface: all 26 outer coefficients drawn from the
// denominator-64 grid in [-range, range]; the emitted level is
// (min coefficient) - 1, which always lies below the maximum of h.
SurfaceSpec random_surface(uint64_t seed, const Rational& range);

// Full-support random plane curve, same grid; level (min coefficient) - 1.
CurveSpec random_curve(uint64_t seed, const Rational& range);

// 1D map config: {"degree": n, "f0": [[a,b,"c"],...], "f1": [...]}
PLMap1D parse_map_config(const std::string& json_text);
std::string write_map_config(const PLMap1D& map);

std::string measure_json(const PiecewiseMeasure& m);

}  // namespace tropdyn
