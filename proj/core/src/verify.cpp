#include "tropdyn/verify.hpp"

#include <cmath>
#include <sstream>

#include "tropdyn/config.hpp"
#include "tropdyn/kummer.hpp"
#include "tropdyn/measure1d.hpp"
#include "tropdyn/potential.hpp"
#include "tropdyn/presets.hpp"

namespace tropdyn {

namespace {

std::string fmt(double x) { return decimal_string(x, 6); }

}  // namespace

SuiteResult verify_kummer() {
  SuiteResult suite{"kummer", true, {}};
  auto report = check_semiconjugacy(1000, 2024, 100);
  std::ostringstream os;
  os << "semiconjugacy: " << report.samples << " samples, " << report.mismatches
     << " mismatches; orbit: " << report.orbit_steps << " steps, "
     << report.orbit_mismatches << " mismatches";
  suite.lines.push_back(os.str());
  suite.lines.push_back("spectral diagnostic gap: " + fmt(report.spectral_ratio_gap));
  suite.passed = report.mismatches == 0 && report.orbit_mismatches == 0;
  return suite;
}

SuiteResult verify_tent() {
  SuiteResult suite{"tent", true, {}};
  PLMap1D tent = tent_map();
  Potential1D g = solve_potential_depth(tent, 40);

  // closed form: -x^2/2 + 1/24 inside |x| <= 1/2, -|x|/2 + 1/6 outside
  Rational worst = 0;
  for (int k = 0; k <= 2000; ++k) {
    Rational x = rat(-2) + rat(k, 500);
    Rational closed = rational_abs(x) <= rat(1, 2) ? rat(1, 24) - x * x / 2
                                                   : rat(1, 6) - rational_abs(x) / 2;
    Rational err = rational_abs(g.eval(x) - closed);
    if (err > worst) worst = err;
  }
  bool potential_ok = worst <= rat(1, 1000000000);
  suite.lines.push_back("potential closed-form max error: " + fmt(to_double(worst)));

  Potential1D g26 = solve_potential_depth(tent, 26);
  PiecewiseMeasure mu = measure_from_potential(g26, 256);
  double density_err = 0;
  for (const auto& cell : mu.density) {
    if (cell.x0 < rat(-45, 100) || cell.x1 > rat(45, 100)) continue;
    density_err = std::max(density_err, std::abs(cell.value - 1.0));
  }
  double max_atom = 0;
  for (const auto& atom : mu.atoms) max_atom = std::max(max_atom, atom.mass);
  bool measure_ok = density_err <= 1e-6 && max_atom < 1e-6 &&
                    std::abs(mu.total_mass - 1.0) <= 1e-9;
  suite.lines.push_back("flat density error: " + fmt(density_err) +
                        ", max atom: " + fmt(max_atom) +
                        ", total mass: " + fmt(mu.total_mass));
  suite.passed = potential_ok && measure_ok;
  return suite;
}

SuiteResult verify_skeleton(size_t surfaces, size_t points_per_surface) {
  SuiteResult suite{"skeleton", true, {}};
  size_t bad_level = 0, bad_involution = 0, total = 0;
  for (size_t s = 0; s < surfaces; ++s) {
    SurfaceSpec spec = random_surface(1000 + s, Rational(2));
    auto mesh = skeleton_mesh(level_set_polytope(spec.poly, spec.level));
    Rng rng(500 + s);
    auto pts = sample_skeleton_points(mesh, points_per_surface, rng);
    for (const auto& p : pts) {
      for (Axis axis : {Axis::X, Axis::Y, Axis::Z}) {
        PointQ q = vieta_reflection(spec, axis, p);
        if (evaluate(spec.poly, q) != evaluate(spec.poly, p)) ++bad_level;
        if (vieta_reflection(spec, axis, q) != p) ++bad_involution;
        ++total;
      }
    }
  }
  std::ostringstream os;
  os << total << " reflection checks on " << surfaces << " surfaces: " << bad_level
     << " level violations, " << bad_involution << " involution violations";
  suite.lines.push_back(os.str());
  suite.passed = bad_level == 0 && bad_involution == 0;
  return suite;
}

std::vector<SuiteResult> verify_all() {
  return {verify_kummer(), verify_tent(), verify_skeleton()};
}

}  // namespace tropdyn
