#include "tropdyn/trop_core.hpp"

#include <algorithm>
#include <cstdlib>

namespace tropdyn {

size_t TropicalPolynomial::dim() const {
  if (forms.empty()) throw domain_error("empty tropical polynomial");
  return forms.front().slope.size();
}

void TropicalPolynomial::validate() const {
  if (forms.empty()) throw domain_error("empty tropical polynomial");
  const size_t n = forms.front().slope.size();
  for (const auto& f : forms)
    if (f.slope.size() != n)
      throw std::invalid_argument("tropical polynomial with mixed dimensions");
  for (size_t i = 0; i < forms.size(); ++i)
    for (size_t j = i + 1; j < forms.size(); ++j)
      if (forms[i] == forms[j])
        throw std::invalid_argument("duplicate affine form");
}

static void check_dim(const TropicalPolynomial& poly, const PointQ& p) {
  if (poly.dim() != p.size())
    throw std::invalid_argument("point dimension does not match polynomial");
}

Rational evaluate(const TropicalPolynomial& poly, const PointQ& p) {
  check_dim(poly, p);
  Rational best = poly.forms.front().value_at(p);
  for (size_t i = 1; i < poly.forms.size(); ++i) {
    Rational v = poly.forms[i].value_at(p);
    if (v < best) best = v;
  }
  return best;
}

std::set<size_t> active_forms(const TropicalPolynomial& poly, const PointQ& p) {
  check_dim(poly, p);
  std::set<size_t> idx;
  Rational best = poly.forms.front().value_at(p);
  idx.insert(0);
  for (size_t i = 1; i < poly.forms.size(); ++i) {
    Rational v = poly.forms[i].value_at(p);
    if (v < best) {
      best = v;
      idx.clear();
      idx.insert(i);
    } else if (v == best) {
      idx.insert(i);
    }
  }
  return idx;
}

AxisGrouping group_by_axis(const TropicalPolynomial& poly, size_t axis) {
  const size_t n = poly.dim();
  if (axis >= n) throw std::invalid_argument("axis out of range");
  AxisGrouping g;
  auto push = [&](std::optional<TropicalPolynomial>& group, const AffineForm& f) {
    AffineForm reduced;
    reduced.constant = f.constant;
    for (size_t i = 0; i < n; ++i)
      if (i != axis) reduced.slope.push_back(f.slope[i]);
    if (!group) group = TropicalPolynomial{};
    group->forms.push_back(std::move(reduced));
  };
  for (const auto& f : poly.forms) {
    long long s = f.slope[axis];
    if (s < -1 || s > 1)
      throw domain_error("axis slope outside {-1,0,1}");
    if (s == -1)
      push(g.neg, f);
    else if (s == 0)
      push(g.zero, f);
    else
      push(g.pos, f);
  }
  return g;
}

Rational LineEnvelope::value_at(const Rational& t) const {
  size_t piece = 0;
  while (piece < breaks.size() && t > breaks[piece]) ++piece;
  return slopes[piece] * t + offsets[piece];
}

LineEnvelope lower_envelope(const std::vector<Rational>& coeffs,
                            const std::vector<Rational>& offsets) {
  if (coeffs.empty()) throw domain_error("envelope of no lines");
  // Sort by slope descending, keeping the lowest offset among equal slopes.
  std::vector<size_t> order(coeffs.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    if (coeffs[a] != coeffs[b]) return coeffs[a] > coeffs[b];
    return offsets[a] < offsets[b];
  });

  // Incremental hull: lines enter with decreasing slope; a new line removes
  // predecessors that it undercuts at (or before) their entry break.
  std::vector<Rational> s, o, brk;  // slopes, offsets, entry break of piece k>0
  for (size_t idx : order) {
    Rational a = coeffs[idx], b = offsets[idx];
    if (!s.empty() && a == s.back()) continue;  // parallel, dominated
    while (!s.empty()) {
      // crossing with current last piece
      Rational t = (o.back() - b) / (a - s.back());
      if (brk.empty() || t > brk.back()) {
        brk.push_back(t);
        break;
      }
      s.pop_back();
      o.pop_back();
      if (!brk.empty()) brk.pop_back();
    }
    s.push_back(a);
    o.push_back(b);
  }
  return LineEnvelope{std::move(brk), std::move(s), std::move(o)};
}

SegmentProfile restrict_to_segment(const TropicalPolynomial& poly,
                                   const PointQ& p, const PointQ& q) {
  check_dim(poly, p);
  check_dim(poly, q);
  if (p == q) throw std::invalid_argument("degenerate segment");

  PointQ d(p.size());
  for (size_t i = 0; i < p.size(); ++i) d[i] = q[i] - p[i];

  std::vector<Rational> coeffs, offs;
  coeffs.reserve(poly.forms.size());
  for (const auto& f : poly.forms) {
    coeffs.push_back(dot(f.slope, d));
    offs.push_back(f.value_at(p));
  }
  LineEnvelope env = lower_envelope(coeffs, offs);

  SegmentProfile out;
  std::vector<size_t> keep;  // envelope pieces intersecting (0,1)
  for (size_t k = 0; k < env.slopes.size(); ++k) {
    Rational lo = k == 0 ? Rational(0) : env.breaks[k - 1];
    Rational hi = k == env.slopes.size() - 1 ? Rational(1) : env.breaks[k];
    if (lo >= 1 || hi <= 0) continue;
    keep.push_back(k);
  }
  for (size_t j = 0; j < keep.size(); ++j) {
    size_t k = keep[j];
    out.slopes.push_back(env.slopes[k]);
    if (j > 0) out.breaks.push_back(env.breaks[k - 1]);
  }
  out.values.push_back(env.value_at(0));
  for (const auto& t : out.breaks) out.values.push_back(env.value_at(t));
  out.values.push_back(env.value_at(1));
  return out;
}

}  // namespace tropdyn
