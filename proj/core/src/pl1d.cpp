#include "tropdyn/pl1d.hpp"

#include <algorithm>

namespace tropdyn {

void PLMap1D::validate() const {
  if (degree < 2) throw domain_error("map degree must be at least 2");
  if (f0.empty() || f1.empty()) throw domain_error("empty map component");
  bool has_b_n = false, has_b_0 = false;
  for (const auto* comp : {&f0, &f1}) {
    for (const auto& t : *comp) {
      if (t.a < 0 || t.b < 0 || t.a + t.b != degree)
        throw domain_error("term slopes must be nonnegative and sum to the degree");
      if (t.b == degree) has_b_n = true;
      if (t.b == 0) has_b_0 = true;
    }
  }
  if (!has_b_n || !has_b_0)
    throw domain_error("degree is reducible: need a pure-X0 and a pure-X1 term");
}

Rational eval_component(const std::vector<Term1D>& terms, const Rational& x) {
  bool first = true;
  Rational best = 0;
  for (const auto& t : terms) {
    Rational v = qi(t.b) * x + t.c;
    if (first || v < best) best = v, first = false;
  }
  return best;
}

Rational eval_component_homog(const std::vector<Term1D>& terms, const Rational& x0,
                              const Rational& x1) {
  bool first = true;
  Rational best = 0;
  for (const auto& t : terms) {
    Rational v = qi(t.a) * x0 + qi(t.b) * x1 + t.c;
    if (first || v < best) best = v, first = false;
  }
  return best;
}

Rational evaluate_map(const PLMap1D& f, const Rational& x) {
  return eval_component(f.f1, x) - eval_component(f.f0, x);
}

Rational cocycle1d(const PLMap1D& f, const Rational& x) {
  return (eval_component(f.f1, x) + eval_component(f.f0, x)) / 2 -
         qi(f.degree) * x / 2;
}

namespace {

LineEnvelope component_envelope(const std::vector<Term1D>& terms) {
  std::vector<Rational> coeffs, offs;
  for (const auto& t : terms) {
    coeffs.push_back(qi(t.b));
    offs.push_back(t.c);
  }
  return lower_envelope(coeffs, offs);
}

}  // namespace

MapProfile map_profile(const PLMap1D& f) {
  LineEnvelope e1 = component_envelope(f.f1);
  LineEnvelope e0 = component_envelope(f.f0);
  std::vector<Rational> breaks = e1.breaks;
  breaks.insert(breaks.end(), e0.breaks.begin(), e0.breaks.end());
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  MapProfile prof;
  prof.breaks = breaks;
  auto slope_at = [](const LineEnvelope& env, const Rational& t) {
    size_t piece = 0;
    while (piece < env.breaks.size() && t >= env.breaks[piece]) ++piece;
    return env.slopes[piece];
  };
  // sample a point inside each interval to read off both components' slopes
  for (size_t k = 0; k <= breaks.size(); ++k) {
    Rational probe;
    if (breaks.empty())
      probe = 0;
    else if (k == 0)
      probe = breaks.front() - 1;
    else if (k == breaks.size())
      probe = breaks.back() + 1;
    else
      probe = (breaks[k - 1] + breaks[k]) / 2;
    prof.slopes.push_back(slope_at(e1, probe) - slope_at(e0, probe));
  }
  return prof;
}

std::vector<Term1D> pullback_form(const PLMap1D& f, long long a, long long b,
                                  const Rational& c) {
  if (a < 0 || b < 0) throw domain_error("pullback requires nonnegative slopes");
  std::vector<Term1D> out;
  if (a == 0 && b == 0) {
    out.push_back(Term1D{0, 0, c});
    return out;
  }
  if (a == 0) {
    for (const auto& t : f.f1) out.push_back(Term1D{b * t.a, b * t.b, b * t.c + c});
    return out;
  }
  if (b == 0) {
    for (const auto& t : f.f0) out.push_back(Term1D{a * t.a, a * t.b, a * t.c + c});
    return out;
  }
  for (const auto& s : f.f0)
    for (const auto& t : f.f1)
      out.push_back(Term1D{a * s.a + b * t.a, a * s.b + b * t.b,
                           qi(a) * s.c + qi(b) * t.c + c});
  return out;
}

Rational eval_form_homog(const std::vector<Term1D>& terms, const Rational& x0,
                         const Rational& x1) {
  return eval_component_homog(terms, x0, x1);
}

Monotonicity monotonicity_check(const PLMap1D& f) {
  MapProfile prof = map_profile(f);
  bool nonneg = true, nonpos = true;
  Rational maxabs = 0;
  for (const auto& s : prof.slopes) {
    if (s < 0) nonneg = false;
    if (s > 0) nonpos = false;
    Rational a = rational_abs(s);
    if (a > maxabs) maxabs = a;
  }
  bool monotone = nonneg || nonpos;
  if (maxabs == f.degree && !monotone)
    throw dynamics_error("slope-degree map scanned as non-monotonic");
  return monotone ? Monotonicity::Monotonic : Monotonicity::NonMonotonic;
}

Rational Potential1D::eval(const Rational& x) const {
  Rational acc = 0;
  Rational pw = 1;
  Rational q = x;
  for (int k = 0; k < depth; ++k) {
    pw /= map.degree;
    acc += pw * cocycle1d(map, q);
    q = evaluate_map(map, q);
  }
  // pw is now degree^-depth; seed contributes n^-N g0(f^N(x))
  acc -= pw * rational_abs(q) / 2;
  return acc;
}

namespace {

Rational chord(const Potential1D& g, const Rational& a, const Rational& b) {
  return (g.eval(b) - g.eval(a)) / (b - a);
}

// Exact tails: a concave function with slopes in [-1/2, 1/2] that attains
// chord slope -1/2 on a unit interval is affine with that slope beyond it.
void attach_tails(Potential1D& g) {
  Rational reach = 1;
  for (const auto* comp : {&g.map.f0, &g.map.f1}) {
    LineEnvelope env = lower_envelope(
        [&] {
          std::vector<Rational> cs;
          for (const auto& t : *comp) cs.push_back(qi(t.b));
          return cs;
        }(),
        [&] {
          std::vector<Rational> os;
          for (const auto& t : *comp) os.push_back(t.c);
          return os;
        }());
    for (const auto& b : env.breaks) {
      Rational a = rational_abs(b);
      if (a > reach) reach = a;
    }
  }
  Rational B = reach + 1;
  const Rational half(1, 2);
  for (int i = 0; i < 600; ++i) {
    if (chord(g, B, B + 1) == -half && chord(g, -B - 1, -B) == half) {
      g.tail_start = B;
      g.tail_const_pos = g.eval(B) + B / 2;
      g.tail_const_neg = g.eval(-B) + B / 2;
      return;
    }
    B *= 2;
  }
  throw dynamics_error("potential tails did not stabilize");
}

}  // namespace

Potential1D solve_potential_depth(const PLMap1D& f, int depth) {
  f.validate();
  Potential1D g;
  g.map = f;
  g.depth = depth;
  attach_tails(g);
  return g;
}

namespace {

// Exact roots of the dehomogenized map (break points of |f|).
std::vector<Rational> map_zeros(const PLMap1D& f, const MapProfile& prof) {
  std::vector<Rational> zeros;
  for (size_t k = 0; k < prof.slopes.size(); ++k) {
    Rational lo, hi;
    bool has_lo = k > 0, has_hi = k < prof.breaks.size();
    if (has_lo) lo = prof.breaks[k - 1];
    if (has_hi) hi = prof.breaks[k];
    Rational anchor = has_lo ? lo : (has_hi ? hi : Rational(0));
    Rational v = evaluate_map(f, anchor);
    if (prof.slopes[k] == 0) continue;
    Rational root = anchor - v / prof.slopes[k];
    if ((!has_lo || root >= lo) && (!has_hi || root <= hi)) zeros.push_back(root);
  }
  return zeros;
}

}  // namespace

Potential1D solve_potential(const PLMap1D& f, double tol) {
  f.validate();
  // One contraction step applied to the seed bounds the fixed-point
  // distance: |g - g0| <= n/(n-1) sup|T g0 - g0|. The defect is PL, so its
  // supremum sits on a break of c, of g0 o f, or at the far tails.
  Potential1D seed;
  seed.map = f;
  seed.depth = 0;
  MapProfile prof = map_profile(f);
  std::vector<Rational> probes = prof.breaks;
  auto zeros = map_zeros(f, prof);
  probes.insert(probes.end(), zeros.begin(), zeros.end());
  probes.push_back(Rational(0));
  Rational far = 2;
  for (const auto& b : probes) {
    Rational a = rational_abs(b);
    if (a + 2 > far) far = a + 2;
  }
  probes.push_back(far);
  probes.push_back(-far);
  double defect = 0;
  for (const auto& x : probes) {
    Rational tg = (seed.eval(evaluate_map(f, x)) + cocycle1d(f, x)) / f.degree;
    defect = std::max(defect, std::abs(to_double(tg - seed.eval(x))));
  }
  double n = static_cast<double>(f.degree);
  double dist = 1.25 * defect * n / (n - 1) + tol;
  int depth = std::max(4, static_cast<int>(std::ceil(std::log(dist / tol) / std::log(n))) + 1);
  return solve_potential_depth(f, depth);
}

Rational pullback_measure_constant(const Rational& f_left, const Rational& f_right,
                                   const Rational& g_left, const Rational& g_right) {
  if (f_left >= 0 && f_right >= 0) return f_left * g_left - f_right * g_right;
  if (f_left >= 0 && f_right <= 0) return (f_left - f_right) * g_left;
  if (f_left <= 0 && f_right >= 0) return (f_left - f_right) * g_right;
  return f_left * g_right - f_right * g_left;
}

}  // namespace tropdyn
