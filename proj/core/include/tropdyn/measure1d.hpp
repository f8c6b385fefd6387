#pragma once

#include <functional>

#include "tropdyn/pl1d.hpp"

namespace tropdyn {

// Measure extraction for an arbitrary exact concave evaluator. The grid is
// the uniform subdivision refined at the hint points; one-sided slopes use
// a per-point step small enough to stay inside the adjacent cells, and the
// reported parts telescope exactly to slope(lo) - slope(hi).
PiecewiseMeasure measure_from_function(const std::function<Rational(const Rational&)>& g,
                                       const std::vector<Rational>& break_hints,
                                       const Rational& lo, const Rational& hi, size_t cells);

}  // namespace tropdyn
