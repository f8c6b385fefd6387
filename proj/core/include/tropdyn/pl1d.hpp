#pragma once

#include <optional>
#include <vector>

#include "tropdyn/trop_core.hpp"

namespace tropdyn {

// One homogeneous term a*X0 + b*X1 + c with a + b = degree.
struct Term1D {
  long long a = 0;
  long long b = 0;
  Rational c;
};

// Degree-n homogenized PL line map F = (F0 : F1), each component a min of
// terms. Dehomogenized: f(x) = min_j(b1^j x + c1^j) - min_j(b0^j x + c0^j).
struct PLMap1D {
  long long degree = 0;
  std::vector<Term1D> f0;
  std::vector<Term1D> f1;

  void validate() const;
};

Rational eval_component(const std::vector<Term1D>& terms, const Rational& x);
Rational eval_component_homog(const std::vector<Term1D>& terms, const Rational& x0,
                              const Rational& x1);
Rational evaluate_map(const PLMap1D& f, const Rational& x);

// c(x) = (f1(x) + f0(x))/2 - n x / 2, the section defect of the lift.
Rational cocycle1d(const PLMap1D& f, const Rational& x);

// Break points and slopes of the dehomogenized map: slope piece k covers
// (breaks[k-1], breaks[k]) with the stated (integer-valued) slope.
struct MapProfile {
  std::vector<Rational> breaks;
  std::vector<Rational> slopes;
};
MapProfile map_profile(const PLMap1D& f);

// Symbolic pullback of xi = a*X0 + b*X1 + c (a, b >= 0) through F; every
// resulting term again has nonnegative slopes.
std::vector<Term1D> pullback_form(const PLMap1D& f, long long a, long long b,
                                  const Rational& c);
Rational eval_form_homog(const std::vector<Term1D>& terms, const Rational& x0,
                         const Rational& x1);

enum class Monotonicity { Monotonic, NonMonotonic };
Monotonicity monotonicity_check(const PLMap1D& f);

// Truncated orbit-sum potential
//   g_N(x) = sum_{k<N} n^{-(k+1)} c(f^k(x)) + n^{-N} g0(f^N(x)),
// seeded with g0(x) = -|x|/2; exactly concave with slopes in [-1/2, 1/2]
// and exact affine tails of slope +-1/2 beyond tail_start.
struct Potential1D {
  PLMap1D map;
  int depth = 0;
  Rational tail_start;       // |x| >= tail_start lies on an exact tail
  Rational tail_const_pos;   // g(x) = -x/2 + tail_const_pos on the right
  Rational tail_const_neg;   // g(x) = +x/2 + tail_const_neg on the left

  Rational eval(const Rational& x) const;
  double eval_double(const Rational& x) const { return to_double(eval(x)); }
};

Potential1D solve_potential(const PLMap1D& f, double tol = 1e-9);
Potential1D solve_potential_depth(const PLMap1D& f, int depth);

struct MeasureAtom {
  Rational x;
  double mass = 0;
};
struct DensityCell {
  Rational x0, x1;
  double value = 0;
};
struct PiecewiseMeasure {
  std::vector<MeasureAtom> atoms;
  std::vector<DensityCell> density;
  double total_mass = 0;
};

// Distributional -g'' on [lo, hi] from exact difference quotients: the grid
// refines at all break points of the map and their first 10 forward images;
// atoms are accepted only when stable across a shrinking ladder of
// one-sided steps. The cell masses and total telescope exactly.
PiecewiseMeasure measure_from_potential(const Potential1D& g, const Rational& lo,
                                        const Rational& hi, size_t cells);

// Natural support window [-(tail_start+1), tail_start+1].
PiecewiseMeasure measure_from_potential(const Potential1D& g, size_t cells = 256);

// Purely atomic measure -c'' with exact masses (half the slope drop of
// f1 / f0 at each of their envelope breaks).
PiecewiseMeasure cocycle_measure_atoms(const PLMap1D& f);

// Atom created at a fold/kink by pulling a concave g back through f, by the
// sign pattern of the one-sided slopes of f.
Rational pullback_measure_constant(const Rational& f_left, const Rational& f_right,
                                   const Rational& g_left, const Rational& g_right);

struct AtomAuditReport {
  std::vector<MeasureAtom> atoms;
  std::vector<MeasureAtom> off_break_atoms;
  bool stable_under_refinement = false;
};
AtomAuditReport atom_audit(const PLMap1D& f, const Potential1D& g, double tolerance);

}  // namespace tropdyn
