#include "tropdyn/dynamics3d.hpp"

#include <algorithm>
#include <cmath>

namespace tropdyn {

void SurfaceSpec::validate() const {
  poly.validate();
  if (poly.dim() != 3) throw std::invalid_argument("surface polynomial must be 3-dimensional");
  for (const auto& f : poly.forms) {
    bool zero = true;
    for (long long s : f.slope) {
      if (s < -1 || s > 1) throw domain_error("slope outside {-1,0,1}");
      if (s != 0) zero = false;
    }
    if (zero) throw domain_error("central form is not part of the level polynomial");
  }
  for (size_t axis = 0; axis < 3; ++axis) {
    auto g = group_by_axis(poly, axis);
    if (!g.neg || !g.pos)
      throw domain_error("reflections need forms on both sides of every axis");
  }
}

Word parse_word(const std::string& letters) {
  Word w;
  for (char c : letters) {
    switch (c) {
      case 'x': case 'X': w.push_back(Axis::X); break;
      case 'y': case 'Y': w.push_back(Axis::Y); break;
      case 'z': case 'Z': w.push_back(Axis::Z); break;
      case ' ': case ',': break;
      default:
        throw domain_error(std::string("bad word letter '") + c + "'");
    }
  }
  if (w.empty()) throw domain_error("empty word");
  return w;
}

std::string word_string(const Word& word) {
  std::string s;
  for (Axis a : word) s += "xyz"[static_cast<int>(a)];
  return s;
}

Word inverse_word(const Word& word) {
  Word w(word.rbegin(), word.rend());
  return w;
}

PointQ vieta_reflect(const TropicalPolynomial& poly, size_t axis, const PointQ& p) {
  if (p.size() != poly.dim()) throw std::invalid_argument("dimension mismatch");
  auto groups = group_by_axis(poly, axis);
  if (!groups.neg || !groups.pos)
    throw domain_error("empty side group along reflection axis");
  PointQ rest;
  rest.reserve(p.size() - 1);
  for (size_t i = 0; i < p.size(); ++i)
    if (i != axis) rest.push_back(p[i]);
  Rational hneg = evaluate(*groups.neg, rest);
  Rational hpos = evaluate(*groups.pos, rest);
  PointQ out = p;
  out[axis] = hneg - hpos - p[axis];
  return out;
}

PointQ vieta_reflection(const SurfaceSpec& spec, Axis axis, const PointQ& p) {
  return vieta_reflect(spec.poly, static_cast<size_t>(axis), p);
}

PointQ apply_word(const SurfaceSpec& spec, const Word& word, const PointQ& p) {
  PointQ q = p;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    q = vieta_reflection(spec, *it, q);
  return q;
}

std::vector<PointQ> orbit(const SurfaceSpec& spec, const Word& word, const PointQ& p0,
                          size_t steps, const OrbitOptions& opts) {
  if (!opts.exact) {
    std::array<double, 3> s{to_double(p0[0]), to_double(p0[1]), to_double(p0[2])};
    auto fl = orbit_float(spec, word, s, steps, opts.float_band);
    std::vector<PointQ> out;
    out.reserve(fl.size());
    for (const auto& q : fl)
      out.push_back(PointQ{rational_from_double(q[0]), rational_from_double(q[1]),
                           rational_from_double(q[2])});
    return out;
  }
  std::vector<PointQ> out;
  out.reserve(steps + 1);
  out.push_back(p0);
  for (size_t k = 0; k < steps; ++k) {
    out.push_back(apply_word(spec, word, out.back()));
    for (const auto& c : out.back())
      if (bit_size(c) > opts.max_bits)
        throw dynamics_error("rational orbit exceeded the size bound; use float mode");
  }
  return out;
}

std::vector<std::array<double, 3>> orbit_float(const SurfaceSpec& spec, const Word& word,
                                               const std::array<double, 3>& p0, size_t steps,
                                               double band) {
  // flattened double copies of the form data
  struct FForm {
    std::array<double, 3> slope;
    double c;
  };
  std::vector<FForm> forms;
  for (const auto& f : spec.poly.forms)
    forms.push_back({{double(f.slope[0]), double(f.slope[1]), double(f.slope[2])},
                     to_double(f.constant)});
  const double level = to_double(spec.level);

  auto side_value = [&](size_t axis, int side, const std::array<double, 3>& p) {
    double best = 0;
    bool first = true;
    for (size_t i = 0; i < forms.size(); ++i) {
      if (static_cast<int>(spec.poly.forms[i].slope[axis]) != side) continue;
      double v = forms[i].c;
      for (size_t j = 0; j < 3; ++j)
        if (j != axis) v += forms[i].slope[j] * p[j];
      if (first || v < best) best = v, first = false;
    }
    return best;
  };
  auto hval = [&](const std::array<double, 3>& p) {
    double best = forms[0].c;
    for (size_t j = 0; j < 3; ++j) best += forms[0].slope[j] * p[j];
    for (size_t i = 1; i < forms.size(); ++i) {
      double v = forms[i].c;
      for (size_t j = 0; j < 3; ++j) v += forms[i].slope[j] * p[j];
      best = std::min(best, v);
    }
    return best;
  };

  std::vector<std::array<double, 3>> out;
  out.reserve(steps + 1);
  out.push_back(p0);
  for (size_t k = 0; k < steps; ++k) {
    std::array<double, 3> q = out.back();
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      size_t axis = static_cast<size_t>(*it);
      q[axis] = side_value(axis, -1, q) - side_value(axis, +1, q) - q[axis];
    }
    if (std::abs(hval(q) - level) > band)
      throw dynamics_error("float orbit left the level tolerance band");
    out.push_back(q);
  }
  return out;
}

PointQ LiftedPoint::project() const {
  return PointQ{a1[0] - a0[0], a1[1] - a0[1], a1[2] - a0[2]};
}

LiftedPoint section(const PointQ& p) {
  if (p.size() != 3) throw std::invalid_argument("section needs a 3-vector");
  LiftedPoint P;
  for (size_t i = 0; i < 3; ++i) {
    P.a1[i] = p[i] / 2;
    P.a0[i] = -p[i] / 2;
  }
  return P;
}

Rational homogenized_value(const TropicalPolynomial& poly, const LiftedPoint& P) {
  if (poly.dim() != 3) throw std::invalid_argument("homogenization needs dimension 3");
  bool first = true;
  Rational best = 0;
  for (const auto& f : poly.forms) {
    Rational v = f.constant;
    for (size_t i = 0; i < 3; ++i) {
      switch (f.slope[i]) {
        case -1: v += 2 * P.a0[i]; break;
        case 0: v += P.a0[i] + P.a1[i]; break;
        case 1: v += 2 * P.a1[i]; break;
        default: throw domain_error("slope outside {-1,0,1}");
      }
    }
    if (first || v < best) best = v, first = false;
  }
  return best;
}

bool on_bundle_locus(const SurfaceSpec& spec, const LiftedPoint& P) {
  Rational sum = 0;
  for (size_t i = 0; i < 3; ++i) sum += P.a0[i] + P.a1[i];
  return homogenized_value(spec.poly, P) == spec.level + sum;
}

namespace {

// min over the forms of a side group, homogenized on the remaining axes.
Rational side_group_value(const SurfaceSpec& spec, size_t axis, int side,
                          const LiftedPoint& P) {
  bool first = true;
  Rational best = 0;
  for (const auto& f : spec.poly.forms) {
    if (static_cast<int>(f.slope[axis]) != side) continue;
    Rational v = f.constant;
    for (size_t i = 0; i < 3; ++i) {
      if (i == axis) continue;
      switch (f.slope[i]) {
        case -1: v += 2 * P.a0[i]; break;
        case 0: v += P.a0[i] + P.a1[i]; break;
        default: v += 2 * P.a1[i]; break;
      }
    }
    if (first || v < best) best = v, first = false;
  }
  if (first) throw domain_error("empty side group along lift axis");
  return best;
}

}  // namespace

LiftedPoint homogeneous_lift_reflection(const SurfaceSpec& spec, Axis axis,
                                        const LiftedPoint& P) {
  if (!on_bundle_locus(spec, P))
    throw dynamics_error("lift applied off the bundle locus");
  size_t ax = static_cast<size_t>(axis);
  Rational hpos = side_group_value(spec, ax, +1, P);
  Rational hneg = side_group_value(spec, ax, -1, P);
  LiftedPoint Q = P;
  Q.a0[ax] = hpos - P.a0[ax];
  Q.a1[ax] = hneg - P.a1[ax];
  return Q;
}

LiftedPoint homogeneous_lift_reflection_pos(const SurfaceSpec& spec, Axis axis,
                                            const LiftedPoint& P) {
  size_t ax = static_cast<size_t>(axis);
  Rational hpos = side_group_value(spec, ax, +1, P);
  Rational hneg = side_group_value(spec, ax, -1, P);
  LiftedPoint Q = P;
  Q.a0[ax] = P.a1[ax] + hpos;
  Q.a1[ax] = P.a0[ax] + hneg;
  return Q;
}

LiftedPoint apply_word_lifted(const SurfaceSpec& spec, const Word& word,
                              const LiftedPoint& P) {
  LiftedPoint Q = P;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    Q = homogeneous_lift_reflection(spec, *it, Q);
  return Q;
}

std::array<Rational, 3> cocycle(const SurfaceSpec& spec, const Word& word, const PointQ& p) {
  LiftedPoint lifted = apply_word_lifted(spec, word, section(p));
  LiftedPoint base = section(apply_word(spec, word, p));
  std::array<Rational, 3> row;
  for (size_t i = 0; i < 3; ++i) {
    Rational top = lifted.a1[i] - base.a1[i];
    Rational bot = lifted.a0[i] - base.a0[i];
    if (top != bot)
      throw dynamics_error("cocycle rows disagree; lift is inconsistent");
    row[i] = top;
  }
  return row;
}

}  // namespace tropdyn
