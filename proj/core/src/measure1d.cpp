#include "tropdyn/measure1d.hpp"

#include <algorithm>
#include <cmath>

namespace tropdyn {

namespace {

struct PointProbe {
  Rational left_slope;   // chord over [x-h, x]
  Rational right_slope;  // chord over [x, x+h]
  Rational kink;         // left_slope - right_slope, >= 0 for concave g
  bool is_atom = false;
};

}  // namespace

PiecewiseMeasure measure_from_function(const std::function<Rational(const Rational&)>& g,
                                       const std::vector<Rational>& break_hints,
                                       const Rational& lo, const Rational& hi, size_t cells) {
  if (cells < 2 || hi <= lo) throw std::invalid_argument("bad measure window");

  std::vector<Rational> grid;
  Rational width = (hi - lo) / static_cast<long>(cells);
  for (size_t k = 0; k <= cells; ++k) grid.push_back(lo + width * static_cast<long>(k));
  for (const auto& b : break_hints)
    if (b > lo && b < hi) grid.push_back(b);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  const size_t n = grid.size();

  const Rational spec_step(1, 10000);  // base of the shrinking-step ladder
  std::vector<PointProbe> probes(n);
  for (size_t j = 0; j < n; ++j) {
    Rational wmin = hi - lo;
    if (j > 0) wmin = std::min(wmin, grid[j] - grid[j - 1]);
    if (j + 1 < n) wmin = std::min(wmin, grid[j + 1] - grid[j]);
    Rational s = std::min(spec_step, wmin / 4);

    // classification ladder: an atom keeps its size as the step shrinks,
    // plain curvature scales linearly with it
    Rational a_mid, a_small;
    {
      const Rational& x = grid[j];
      auto kink_at = [&](const Rational& h) {
        return (2 * g(x) - g(x - h) - g(x + h)) / h;
      };
      Rational a_big = kink_at(s);
      a_mid = kink_at(s / 10);
      a_small = kink_at(s / 100);
      (void)a_big;
      double gap = std::abs(to_double(a_mid - a_small));
      double scale = std::abs(to_double(a_small));
      probes[j].is_atom = gap <= std::max(1e-9, 0.02 * scale) && scale > 1e-12;
    }

    Rational h = s / 100;
    probes[j].left_slope = (g(grid[j]) - g(grid[j] - h)) / h;
    probes[j].right_slope = (g(grid[j] + h) - g(grid[j])) / h;
    probes[j].kink = probes[j].left_slope - probes[j].right_slope;
  }

  PiecewiseMeasure out;
  // exact accounting: cell masses plus interior kinks telescope to
  //   right_slope(x_0) - left_slope(x_last);
  // gated kinks become atoms, ungated ones split into the adjacent cells
  auto interior = [&](size_t j) { return j > 0 && j + 1 < n; };
  for (size_t i = 0; i + 1 < n; ++i) {
    Rational cell = probes[i].right_slope - probes[i + 1].left_slope;
    if (interior(i) && !probes[i].is_atom) cell += probes[i].kink / 2;
    if (interior(i + 1) && !probes[i + 1].is_atom) cell += probes[i + 1].kink / 2;
    Rational w = grid[i + 1] - grid[i];
    out.density.push_back(DensityCell{grid[i], grid[i + 1], to_double(cell / w)});
  }
  for (size_t j = 1; j + 1 < n; ++j) {
    if (!probes[j].is_atom) continue;
    Rational mass = probes[j].kink;
    if (mass < 0) {
      if (to_double(mass) < -1e-9)
        throw dynamics_error("negative atom: evaluator is not concave");
      mass = 0;
    }
    out.atoms.push_back(MeasureAtom{grid[j], to_double(mass)});
  }
  out.total_mass = to_double(probes.front().right_slope - probes.back().left_slope);
  return out;
}

PiecewiseMeasure measure_from_potential(const Potential1D& g, const Rational& lo,
                                        const Rational& hi, size_t cells) {
  std::vector<Rational> hints;
  MapProfile prof = map_profile(g.map);
  for (const auto& b : prof.breaks) {
    hints.push_back(b);
    Rational q = b;
    for (int k = 0; k < 10; ++k) {
      q = evaluate_map(g.map, q);
      hints.push_back(q);
    }
  }
  return measure_from_function([&](const Rational& x) { return g.eval(x); }, hints, lo, hi,
                               cells);
}

PiecewiseMeasure measure_from_potential(const Potential1D& g, size_t cells) {
  Rational reach = g.tail_start + 1;
  return measure_from_potential(g, -reach, reach, cells);
}

PiecewiseMeasure cocycle_measure_atoms(const PLMap1D& f) {
  f.validate();
  PiecewiseMeasure out;
  std::vector<std::pair<Rational, Rational>> atoms;  // (location, mass)
  for (const auto* comp : {&f.f0, &f.f1}) {
    std::vector<Rational> coeffs, offs;
    for (const auto& t : *comp) {
      coeffs.push_back(qi(t.b));
      offs.push_back(t.c);
    }
    LineEnvelope env = lower_envelope(coeffs, offs);
    for (size_t k = 0; k < env.breaks.size(); ++k)
      atoms.push_back({env.breaks[k], (env.slopes[k] - env.slopes[k + 1]) / 2});
  }
  std::sort(atoms.begin(), atoms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (size_t i = 0; i < atoms.size(); ++i) {
    Rational mass = atoms[i].second;
    while (i + 1 < atoms.size() && atoms[i + 1].first == atoms[i].first) {
      mass += atoms[i + 1].second;
      ++i;
    }
    out.atoms.push_back(MeasureAtom{atoms[i].first, to_double(mass)});
    out.total_mass += to_double(mass);
  }
  return out;
}

AtomAuditReport atom_audit(const PLMap1D& f, const Potential1D& g, double tolerance) {
  AtomAuditReport report;
  auto run = [&](size_t cells) {
    return measure_from_potential(g, cells);
  };
  PiecewiseMeasure coarse = run(256);
  PiecewiseMeasure fine = run(512);

  MapProfile prof = map_profile(f);
  auto off_break = [&](const Rational& x) {
    for (const auto& b : prof.breaks)
      if (b == x) return false;
    return true;
  };
  for (const auto& atom : coarse.atoms) {
    if (atom.mass <= tolerance) continue;
    report.atoms.push_back(atom);
    if (off_break(atom.x)) report.off_break_atoms.push_back(atom);
  }
  // refinement stability: each reported atom reappears with matching mass
  report.stable_under_refinement = true;
  for (const auto& atom : report.atoms) {
    bool matched = false;
    for (const auto& other : fine.atoms)
      if (other.x == atom.x && std::abs(other.mass - atom.mass) <= tolerance + 0.05 * atom.mass)
        matched = true;
    if (!matched) report.stable_under_refinement = false;
  }
  return report;
}

}  // namespace tropdyn
