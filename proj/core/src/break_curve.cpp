#include <algorithm>
#include <map>

#include "tropdyn/geometry.hpp"
#include "tropdyn/util.hpp"

namespace tropdyn {

namespace {

size_t intern_vertex(std::vector<PointQ>& verts, std::map<std::vector<std::string>, size_t>& keys,
                     const PointQ& p) {
  std::vector<std::string> key;
  for (const auto& c : p) key.push_back(exact_string(c));
  auto it = keys.find(key);
  if (it != keys.end()) return it->second;
  verts.push_back(p);
  keys[key] = verts.size() - 1;
  return verts.size() - 1;
}

}  // namespace

BreakCurve build_break_curve(const TropicalPolynomial& poly) {
  poly.validate();
  if (poly.dim() != 2) throw std::invalid_argument("break curve requires dimension 2");
  const auto& forms = poly.forms;
  const size_t m = forms.size();

  BreakCurve curve;
  std::map<std::vector<std::string>, size_t> vkeys;

  for (size_t i = 0; i < m; ++i) {
    for (size_t j = i + 1; j < m; ++j) {
      SlopeVec dn{forms[i].slope[0] - forms[j].slope[0],
                  forms[i].slope[1] - forms[j].slope[1]};
      if (dn[0] == 0 && dn[1] == 0) continue;  // parallel forms never tie transversally

      // base point on {form_i = form_j} and primitive direction of the line
      Rational rhs = forms[j].constant - forms[i].constant;
      PointQ p0(2);
      if (dn[0] != 0) {
        p0[0] = rhs / qi(dn[0]);
        p0[1] = 0;
      } else {
        p0[0] = 0;
        p0[1] = rhs / qi(dn[1]);
      }
      SlopeVec d{-dn[1], dn[0]};
      long long g = vec_gcd(d);
      d[0] /= g;
      d[1] /= g;

      // clip to the region where the tied pair is minimal
      bool lo_inf = true, hi_inf = true, empty = false;
      Rational lo = 0, hi = 0;
      for (size_t k = 0; k < m && !empty; ++k) {
        if (k == i || k == j) continue;
        SlopeVec rel{forms[k].slope[0] - forms[i].slope[0],
                     forms[k].slope[1] - forms[i].slope[1]};
        Rational a0 = dot(rel, p0) + forms[k].constant - forms[i].constant;
        Rational a1 = qi(rel[0]) * d[0] + qi(rel[1]) * d[1];
        if (a1 == 0) {
          if (a0 < 0) empty = true;
          continue;
        }
        Rational bound = -a0 / a1;
        if (a1 > 0) {
          if (lo_inf || bound > lo) lo = bound;
          lo_inf = false;
        } else {
          if (hi_inf || bound < hi) hi = bound;
          hi_inf = false;
        }
        if (!lo_inf && !hi_inf && lo > hi) empty = true;
      }
      if (empty) continue;
      if (!lo_inf && !hi_inf && lo == hi) continue;  // pair meets only at a point
      if (lo_inf && hi_inf)
        throw domain_error("break locus contains a full line");

      auto at = [&](const Rational& t) {
        return PointQ{p0[0] + t * d[0], p0[1] + t * d[1]};
      };
      if (!lo_inf && !hi_inf) {
        size_t a = intern_vertex(curve.vertices, vkeys, at(lo));
        size_t b = intern_vertex(curve.vertices, vkeys, at(hi));
        curve.edges.push_back(CurveEdge{a, b, d});
      } else if (!lo_inf) {
        size_t a = intern_vertex(curve.vertices, vkeys, at(lo));
        curve.rays.push_back(CurveRay{a, d});
      } else {
        size_t b = intern_vertex(curve.vertices, vkeys, at(hi));
        curve.rays.push_back(CurveRay{b, SlopeVec{-d[0], -d[1]}});
      }
    }
  }
  return curve;
}

bool check_balancing(const BreakCurve& curve) {
  std::vector<std::pair<long long, long long>> sums(curve.vertices.size(), {0, 0});
  for (const auto& e : curve.edges) {
    sums[e.a].first += e.direction[0];
    sums[e.a].second += e.direction[1];
    sums[e.b].first -= e.direction[0];
    sums[e.b].second -= e.direction[1];
  }
  for (const auto& r : curve.rays) {
    sums[r.vertex].first += r.direction[0];
    sums[r.vertex].second += r.direction[1];
  }
  for (const auto& [sx, sy] : sums)
    if (sx != 0 || sy != 0) return false;
  return true;
}

}  // namespace tropdyn
