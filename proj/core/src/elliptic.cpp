#include "tropdyn/elliptic.hpp"

#include <algorithm>

#include "tropdyn/dynamics3d.hpp"
#include "tropdyn/util.hpp"

namespace tropdyn {

void CurveSpec::validate() const {
  poly.validate();
  if (poly.dim() != 2) throw std::invalid_argument("curve polynomial must be 2-dimensional");
  for (const auto& f : poly.forms) {
    bool zero = true;
    for (long long s : f.slope) {
      if (s < -1 || s > 1) throw domain_error("slope outside {-1,0,1}");
      if (s != 0) zero = false;
    }
    if (zero) throw domain_error("central form is not part of the level polynomial");
  }
  for (size_t axis = 0; axis < 2; ++axis) {
    auto g = group_by_axis(poly, axis);
    if (!g.neg || !g.pos)
      throw domain_error("reflections need forms on both sides of every axis");
  }
}

SkeletonCycle skeleton_cycle(const CurveSpec& curve) {
  curve.validate();
  ConvexPolytope region = level_set_polytope(curve.poly, curve.level);
  if (region.vertices.empty() || region.degenerate || !region.bounded) {
    auto mx = maximum_of(curve.poly);
    std::string top = mx ? exact_string(mx->value) : std::string("unbounded");
    throw domain_error("no interior cycle at level " + exact_string(curve.level) +
                       " (maximum " + top + ")");
  }

  // counterclockwise angular order around the exact centroid
  PointQ cen(2, Rational(0));
  for (const auto& v : region.vertices) {
    cen[0] += v[0];
    cen[1] += v[1];
  }
  cen[0] /= Rational(static_cast<long>(region.vertices.size()));
  cen[1] /= Rational(static_cast<long>(region.vertices.size()));

  std::vector<PointQ> verts = region.vertices;
  auto half = [&](const PointQ& p) {
    Rational y = p[1] - cen[1], x = p[0] - cen[0];
    return (y < 0 || (y == 0 && x < 0)) ? 1 : 0;
  };
  std::sort(verts.begin(), verts.end(), [&](const PointQ& a, const PointQ& b) {
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    Rational cr = (a[0] - cen[0]) * (b[1] - cen[1]) - (a[1] - cen[1]) * (b[0] - cen[0]);
    return cr > 0;
  });

  SkeletonCycle cycle;
  cycle.vertices = std::move(verts);
  cycle.total = 0;
  for (size_t i = 0; i < cycle.vertices.size(); ++i) {
    const PointQ& a = cycle.vertices[i];
    const PointQ& b = cycle.vertices[(i + 1) % cycle.vertices.size()];
    Rational len = lattice_length(a, b);
    cycle.edge_lengths.push_back(len);
    cycle.total += len;
  }
  return cycle;
}

PointQ reflection(const CurveSpec& curve, size_t axis, const PointQ& p) {
  return vieta_reflect(curve.poly, axis, p);
}

Rational arc_coordinate(const SkeletonCycle& cycle, const PointQ& p) {
  Rational walked = 0;
  const size_t n = cycle.vertices.size();
  for (size_t i = 0; i < n; ++i) {
    const PointQ& a = cycle.vertices[i];
    const PointQ& b = cycle.vertices[(i + 1) % n];
    // p on segment [a,b]: collinear and between
    Rational cr = (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0]);
    if (cr == 0) {
      Rational t;
      bool on = false;
      if (b[0] != a[0]) {
        t = (p[0] - a[0]) / (b[0] - a[0]);
        on = true;
      } else if (b[1] != a[1]) {
        t = (p[1] - a[1]) / (b[1] - a[1]);
        on = true;
      }
      if (on && t >= 0 && t < 1) return walked + t * cycle.edge_lengths[i];
      if (on && t == 1 && i == n - 1) return Rational(0);  // wrapped to vertex 0
    }
    walked += cycle.edge_lengths[i];
  }
  throw domain_error("point not on the skeleton cycle");
}

namespace {

Rational mod_total(Rational x, const Rational& total) {
  Rational q = x / total;
  x -= Rational(rational_floor(q)) * total;
  if (x < 0) x += total;
  if (x >= total) x -= total;
  return x;
}

}  // namespace

Rational rotation_number(const CurveSpec& curve, size_t checks) {
  SkeletonCycle cycle = skeleton_cycle(curve);

  // sample base points: vertices and edge midpoints, up to `checks`
  std::vector<PointQ> samples;
  const size_t n = cycle.vertices.size();
  for (size_t i = 0; i < n && samples.size() < checks; ++i) {
    samples.push_back(cycle.vertices[i]);
    const PointQ& a = cycle.vertices[i];
    const PointQ& b = cycle.vertices[(i + 1) % n];
    if (samples.size() < checks)
      samples.push_back(PointQ{(a[0] + b[0]) / 2, (a[1] + b[1]) / 2});
  }

  std::optional<Rational> disp;
  for (const auto& p : samples) {
    PointQ q = reflection(curve, 1, p);
    q = reflection(curve, 0, q);
    Rational d = mod_total(arc_coordinate(cycle, q) - arc_coordinate(cycle, p), cycle.total);
    if (!disp)
      disp = d;
    else if (*disp != d)
      throw dynamics_error("arc displacement depends on the base point");
  }
  Rational rho = *disp / cycle.total;
  rho.canonicalize();
  return rho;
}

std::vector<TwistSample> twist_profile(const TropicalPolynomial& poly,
                                       const std::vector<Rational>& levels) {
  std::vector<TwistSample> out(levels.size());
  parallel_for(levels.size(), [&](size_t i) {
    out[i].level = levels[i];
    try {
      out[i].rotation = rotation_number(CurveSpec{poly, levels[i]});
    } catch (const std::exception& e) {
      out[i].error = e.what();
    }
  });
  return out;
}

std::optional<Rational> rotation_number_near_max(const TropicalPolynomial& poly,
                                                 int max_refinements) {
  auto mx = maximum_of(poly);
  if (!mx) return std::nullopt;

  // initial gap: smallest positive slack of an inactive form at the maximizer
  Rational gap = 0;
  bool have_gap = false;
  for (const auto& f : poly.forms) {
    Rational s = f.value_at(mx->argmax) - mx->value;
    if (s > 0 && (!have_gap || s < gap)) {
      gap = s;
      have_gap = true;
    }
  }
  if (!have_gap) gap = 1;

  Rational delta = gap / 4;
  std::optional<Rational> prev;
  for (int k = 0; k < max_refinements; ++k) {
    try {
      Rational rho = rotation_number(CurveSpec{poly, mx->value - delta});
      if (prev && *prev == rho) return rho;
      prev = rho;
    } catch (const std::exception&) {
      prev.reset();
    }
    delta /= 2;
  }
  return std::nullopt;
}

TentacleOffsets tentacle_offsets(const BreakCurve& curve) {
  TentacleOffsets out;
  std::array<std::vector<Rational>, 4> hits;
  for (const auto& ray : curve.rays) {
    const auto& d = ray.direction;
    const PointQ& v = curve.vertices[ray.vertex];
    if (d[1] == 0 && d[0] < 0) hits[0].push_back(v[1]);
    if (d[1] == 0 && d[0] > 0) hits[1].push_back(v[1]);
    if (d[0] == 0 && d[1] < 0) hits[2].push_back(v[0]);
    if (d[0] == 0 && d[1] > 0) hits[3].push_back(v[0]);
  }
  for (int dir = 0; dir < 4; ++dir) {
    if (hits[dir].size() != 2)
      throw domain_error("expected two tentacles per cardinal direction");
    std::sort(hits[dir].begin(), hits[dir].end());
    out.offsets[dir] = {hits[dir][0], hits[dir][1]};
  }
  return out;
}

}  // namespace tropdyn
