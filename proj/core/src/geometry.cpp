#include "tropdyn/geometry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "tropdyn/util.hpp"

namespace tropdyn {

void Halfspace::normalize() {
  long long g = vec_gcd(normal);
  if (g == 0) throw domain_error("halfspace with zero normal");
  if (g == 1) return;
  for (auto& c : normal) c /= g;
  offset /= g;
}

namespace {

bool lex_less(const PointQ& a, const PointQ& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

SlopeVec cross(const SlopeVec& a, const SlopeVec& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

bool is_zero(const SlopeVec& v) {
  return std::all_of(v.begin(), v.end(), [](long long c) { return c == 0; });
}

// Candidate extreme/line directions of the recession cone {d : n.d >= 0}.
std::vector<SlopeVec> recession_candidates(const std::vector<Halfspace>& hs,
                                           size_t dim) {
  std::vector<SlopeVec> cands;
  auto add = [&](SlopeVec v) {
    if (is_zero(v)) return;
    long long g = vec_gcd(v);
    for (auto& c : v) c /= g;
    cands.push_back(v);
    SlopeVec neg = v;
    for (auto& c : neg) c = -c;
    cands.push_back(neg);
  };
  for (size_t k = 0; k < dim; ++k) {
    SlopeVec e(dim, 0);
    e[k] = 1;
    add(e);
  }
  if (dim == 2) {
    for (const auto& h : hs) {
      add({-h.normal[1], h.normal[0]});
      add(h.normal);
    }
  } else {
    for (size_t i = 0; i < hs.size(); ++i) {
      add(hs[i].normal);
      // two independent vectors orthogonal to normal i
      for (size_t k = 0; k < 3; ++k) {
        SlopeVec e(3, 0);
        e[k] = 1;
        add(cross(hs[i].normal, e));
      }
      for (size_t j = i + 1; j < hs.size(); ++j)
        add(cross(hs[i].normal, hs[j].normal));
    }
  }
  return cands;
}

bool has_recession_direction(const std::vector<Halfspace>& hs, size_t dim) {
  for (const auto& d : recession_candidates(hs, dim)) {
    bool ok = true;
    for (const auto& h : hs) {
      Rational acc = 0;
      for (size_t i = 0; i < dim; ++i) acc += qi(h.normal[i]) * qi(d[i]);
      if (acc < 0) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

void combinations(size_t n, size_t k, const std::function<void(const std::vector<size_t>&)>& fn) {
  std::vector<size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  while (true) {
    fn(idx);
    size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<PointQ> enumerate_vertices(const std::vector<Halfspace>& halfspaces,
                                       size_t dim) {
  if (dim != 2 && dim != 3) throw std::invalid_argument("dimension must be 2 or 3");
  for (const auto& h : halfspaces)
    if (h.normal.size() != dim) throw std::invalid_argument("halfspace dimension mismatch");

  const size_t m = halfspaces.size();
  std::vector<std::vector<size_t>> tuples;
  combinations(m, dim, [&](const std::vector<size_t>& idx) { tuples.push_back(idx); });

  std::vector<std::optional<PointQ>> found(tuples.size());
  parallel_for(tuples.size(), [&](size_t t) {
    const auto& idx = tuples[t];
    std::vector<std::vector<Rational>> a(dim, std::vector<Rational>(dim));
    std::vector<Rational> b(dim);
    for (size_t r = 0; r < dim; ++r) {
      for (size_t c = 0; c < dim; ++c) a[r][c] = qi(halfspaces[idx[r]].normal[c]);
      b[r] = -halfspaces[idx[r]].offset;
    }
    auto p = solve_linear(std::move(a), std::move(b));
    if (!p) return;
    for (const auto& h : halfspaces)
      if (h.slack(*p) < 0) return;
    found[t] = std::move(*p);
  });

  std::vector<PointQ> verts;
  for (auto& f : found)
    if (f) verts.push_back(std::move(*f));
  std::sort(verts.begin(), verts.end(), lex_less);
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  return verts;
}

std::optional<TropicalMax> maximum_of(const TropicalPolynomial& poly) {
  const size_t dim = poly.dim();
  const size_t m = poly.forms.size();
  std::optional<TropicalMax> best;

  // Basic solutions of: maximize t subject to slope_a . p + c_a >= t.
  // k active forms plus (dim + 1 - k) pinned coordinates square the system.
  for (size_t k = 1; k <= std::min(m, dim + 1); ++k) {
    size_t pins = dim + 1 - k;
    combinations(m, k, [&](const std::vector<size_t>& fidx) {
      combinations(dim, pins, [&](const std::vector<size_t>& cidx) {
        size_t n = dim + 1;
        std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n, Rational(0)));
        std::vector<Rational> b(n, Rational(0));
        for (size_t r = 0; r < k; ++r) {
          const auto& f = poly.forms[fidx[r]];
          for (size_t c = 0; c < dim; ++c) a[r][c] = qi(f.slope[c]);
          a[r][dim] = -1;
          b[r] = -f.constant;
        }
        for (size_t r = 0; r < pins; ++r) a[k + r][cidx[r]] = 1;
        auto sol = solve_linear(std::move(a), std::move(b));
        if (!sol) return;
        PointQ p(sol->begin(), sol->begin() + dim);
        Rational t = (*sol)[dim];
        if (evaluate(poly, p) != t) return;  // some form dips below t
        if (!best || t > best->value) best = TropicalMax{t, std::move(p)};
      });
    });
  }
  return best;
}

ConvexPolytope level_set_polytope(const TropicalPolynomial& poly,
                                  const Rational& level) {
  poly.validate();
  const size_t dim = poly.dim();
  if (dim != 2 && dim != 3)
    throw std::invalid_argument("level sets supported in dimension 2 or 3");

  ConvexPolytope poly_out;
  for (const auto& f : poly.forms) {
    Halfspace h{f.slope, f.constant - level};
    if (vec_gcd(h.normal) == 0)
      throw domain_error("constant form in level-set polynomial");
    h.normalize();
    poly_out.halfspaces.push_back(std::move(h));
  }

  poly_out.vertices = enumerate_vertices(poly_out.halfspaces, dim);
  poly_out.bounded = !has_recession_direction(poly_out.halfspaces, dim);

  if (poly_out.vertices.empty()) {
    auto mx = maximum_of(poly);
    if (mx && mx->value < level) {
      throw domain_error("empty level set: level " + exact_string(level) +
                         " above maximum " + exact_string(mx->value));
    }
    // nonempty but vertex-free (unbounded degeneracy)
    poly_out.degenerate = true;
    return poly_out;
  }

  PointQ centroid(dim, Rational(0));
  for (const auto& v : poly_out.vertices)
    for (size_t i = 0; i < dim; ++i) centroid[i] += v[i];
  for (size_t i = 0; i < dim; ++i)
    centroid[i] /= Rational(static_cast<long>(poly_out.vertices.size()));
  poly_out.degenerate = evaluate(poly, centroid) == level;

  poly_out.on_facets.resize(poly_out.vertices.size());
  for (size_t v = 0; v < poly_out.vertices.size(); ++v)
    for (size_t h = 0; h < poly_out.halfspaces.size(); ++h)
      if (poly_out.halfspaces[h].slack(poly_out.vertices[v]) == 0)
        poly_out.on_facets[v].push_back(h);
  return poly_out;
}

namespace {

// Strict angular order around the origin for distinct nonzero 2D directions.
bool angle_less(const std::pair<Rational, Rational>& a,
                const std::pair<Rational, Rational>& b) {
  auto half = [](const std::pair<Rational, Rational>& p) {
    return (p.second < 0 || (p.second == 0 && p.first < 0)) ? 1 : 0;
  };
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  Rational cr = a.first * b.second - a.second * b.first;
  return cr > 0;
}

}  // namespace

SkeletonMesh skeleton_mesh(const ConvexPolytope& polytope) {
  if (polytope.dim() != 3) throw std::invalid_argument("mesh requires dimension 3");
  if (!polytope.bounded || polytope.degenerate || polytope.vertices.size() < 4)
    throw domain_error("degenerate or unbounded polytope has no closed mesh");

  SkeletonMesh mesh;
  mesh.vertices = polytope.vertices;

  std::map<std::pair<size_t, size_t>, int> edge_use;
  for (size_t h = 0; h < polytope.halfspaces.size(); ++h) {
    const auto& hs = polytope.halfspaces[h];
    std::vector<size_t> on;
    for (size_t v = 0; v < mesh.vertices.size(); ++v)
      if (hs.slack(mesh.vertices[v]) == 0) on.push_back(v);
    if (on.size() < 3) continue;

    // planar chart: u = first edge, w = normal x u (orthogonal in-plane pair)
    PointQ u(3), cen(3, Rational(0));
    for (size_t i = 0; i < 3; ++i) u[i] = mesh.vertices[on[1]][i] - mesh.vertices[on[0]][i];
    for (size_t v : on)
      for (size_t i = 0; i < 3; ++i) cen[i] += mesh.vertices[v][i];
    for (size_t i = 0; i < 3; ++i) cen[i] /= Rational(static_cast<long>(on.size()));
    PointQ w(3);
    w[0] = qi(hs.normal[1]) * u[2] - qi(hs.normal[2]) * u[1];
    w[1] = qi(hs.normal[2]) * u[0] - qi(hs.normal[0]) * u[2];
    w[2] = qi(hs.normal[0]) * u[1] - qi(hs.normal[1]) * u[0];

    std::vector<std::pair<std::pair<Rational, Rational>, size_t>> chart;
    bool planar2d = false;
    for (size_t v : on) {
      Rational alpha = 0, beta = 0;
      for (size_t i = 0; i < 3; ++i) {
        Rational d = mesh.vertices[v][i] - cen[i];
        alpha += u[i] * d;
        beta += w[i] * d;
      }
      if (beta != 0) planar2d = true;
      chart.push_back({{alpha, beta}, v});
    }
    if (!planar2d) continue;  // collinear contact, not a 2D face

    std::sort(chart.begin(), chart.end(),
              [](const auto& a, const auto& b) { return angle_less(a.first, b.first); });

    MeshFace face;
    face.normal = hs.normal;
    face.halfspace = h;
    for (const auto& [xy, v] : chart) face.cycle.push_back(v);
    // angular sort is counterclockwise in the (u, w, normal) right-handed
    // chart, i.e. seen from the +normal side; outside is the -normal side.
    std::reverse(face.cycle.begin(), face.cycle.end());
    mesh.faces.push_back(std::move(face));

    for (size_t i = 0; i < on.size(); ++i) {
      size_t a = mesh.faces.back().cycle[i];
      size_t b = mesh.faces.back().cycle[(i + 1) % on.size()];
      edge_use[{std::min(a, b), std::max(a, b)}] += 1;
    }
  }

  for (const auto& [key, count] : edge_use) {
    if (count != 2)
      throw domain_error("boundary complex is not a closed surface");
    PointQ d(3);
    for (size_t i = 0; i < 3; ++i)
      d[i] = mesh.vertices[key.second][i] - mesh.vertices[key.first][i];
    auto prim = primitive_direction(d);
    if (!prim) throw domain_error("zero-length mesh edge");
    mesh.edges.push_back(MeshEdge{key.first, key.second, prim->direction});
  }

  long chi = static_cast<long>(mesh.vertices.size()) -
             static_cast<long>(mesh.edges.size()) +
             static_cast<long>(mesh.faces.size());
  if (chi != 2) throw domain_error("mesh Euler characteristic is not 2");
  return mesh;
}

Rational lattice_length(const PointQ& p, const PointQ& q) {
  if (p.size() != q.size()) throw std::invalid_argument("dimension mismatch");
  PointQ d(p.size());
  for (size_t i = 0; i < p.size(); ++i) d[i] = q[i] - p[i];
  auto prim = primitive_direction(d);
  if (!prim) return Rational(0);
  return prim->scale;
}

std::string obj_string(const SkeletonMesh& mesh) {
  std::ostringstream os;
  for (const auto& v : mesh.vertices) {
    os << "v";
    for (const auto& c : v) os << " " << decimal_string(c);
    os << "\n";
  }
  for (const auto& f : mesh.faces) {
    os << "f";
    for (size_t idx : f.cycle) os << " " << (idx + 1);
    os << "\n";
  }
  return os.str();
}

}  // namespace tropdyn
