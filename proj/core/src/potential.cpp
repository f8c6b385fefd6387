#include "tropdyn/potential.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace tropdyn {

Mat3 mat3_identity() {
  Mat3 m{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = (i == j) ? 1 : 0;
  return m;
}

Mat3 mat3_mul(const Mat3& a, const Mat3& b) {
  Mat3 c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Int acc = 0;
      for (int k = 0; k < 3; ++k) acc += a[i][k] * b[k][j];
      c[i][j] = acc;
    }
  return c;
}

std::array<Rational, 3> row_times_mat(const std::array<Rational, 3>& t, const Mat3& m) {
  std::array<Rational, 3> out{};
  for (int j = 0; j < 3; ++j) {
    Rational acc = 0;
    for (int i = 0; i < 3; ++i) acc += t[i] * Rational(m[i][j]);
    out[j] = acc;
  }
  return out;
}

Mat3 letter_matrix(Axis axis) {
  // reflection along x shifts (t_x, t_y, t_z) to (-t_x + 2t_y + 2t_z, t_y, t_z)
  switch (axis) {
    case Axis::X:
      return Mat3{{{Int(-1), Int(0), Int(0)}, {Int(2), Int(1), Int(0)}, {Int(2), Int(0), Int(1)}}};
    case Axis::Y:
      return Mat3{{{Int(1), Int(2), Int(0)}, {Int(0), Int(-1), Int(0)}, {Int(0), Int(2), Int(1)}}};
    default:
      return Mat3{{{Int(1), Int(0), Int(2)}, {Int(0), Int(1), Int(2)}, {Int(0), Int(0), Int(-1)}}};
  }
}

Mat3 homogeneity_matrix(const Word& word) {
  Mat3 m = mat3_identity();
  for (Axis a : word) m = mat3_mul(letter_matrix(a), m);
  return m;
}

std::array<Int, 4> char_poly(const Mat3& m) {
  Int tr = m[0][0] + m[1][1] + m[2][2];
  Int m2 = m[0][0] * m[1][1] - m[0][1] * m[1][0] + m[0][0] * m[2][2] -
           m[0][2] * m[2][0] + m[1][1] * m[2][2] - m[1][2] * m[2][1];
  Int det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
            m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
            m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  return {Int(1), -tr, m2, -det};
}

namespace {

struct Root {
  double value = 0;       // real part when complex
  double modulus = 0;
  bool real = false;
  int multiplicity = 1;
};

double eval_poly(const std::vector<double>& c, double t) {
  double acc = 0;
  for (double ci : c) acc = acc * t + ci;
  return acc;
}

double newton_polish(const std::vector<double>& c, double t0) {
  std::vector<double> d(c.size() - 1);
  for (size_t i = 0; i + 1 < c.size(); ++i)
    d[i] = c[i] * static_cast<double>(c.size() - 1 - i);
  double t = t0;
  for (int it = 0; it < 60; ++it) {
    double f = eval_poly(c, t), df = eval_poly(d, t);
    if (df == 0) break;
    double next = t - f / df;
    if (std::abs(next - t) <= 1e-15 * std::max(1.0, std::abs(t))) return next;
    t = next;
  }
  return t;
}

// All roots of a monic integer polynomial of degree <= 3.
std::vector<Root> poly_roots(std::array<Int, 4> coeff) {
  std::vector<Int> c(coeff.begin(), coeff.end());
  std::vector<Root> roots;

  // integer roots divide the constant term (monic, integer coefficients)
  auto try_integer_roots = [&]() {
    bool progress = true;
    while (progress && c.size() > 1) {
      progress = false;
      Int a0 = c.back();
      if (a0 == 0) {
        // root zero; deflate
        roots.push_back(Root{0.0, 0.0, true, 1});
        c.pop_back();
        progress = true;
        continue;
      }
      std::vector<Int> divisors;
      Int bound = abs(a0);
      if (bound <= 1000000) {
        for (Int d = 1; d * d <= bound; ++d)
          if (bound % d == 0) {
            divisors.push_back(d);
            divisors.push_back(bound / d);
          }
      } else {
        divisors.push_back(Int(1));
      }
      for (const Int& dv : divisors) {
        for (int sign : {1, -1}) {
          Int r = sign * dv;
          // synthetic evaluation/division
          Int acc = 0;
          std::vector<Int> q;
          for (const Int& ci : c) {
            acc = acc * r + ci;
            q.push_back(acc);
          }
          if (acc == 0) {
            q.pop_back();
            c = q;
            bool merged = false;
            for (auto& rt : roots)
              if (rt.real && rt.value == r.get_d()) {
                ++rt.multiplicity;
                merged = true;
              }
            if (!merged)
              roots.push_back(Root{r.get_d(), std::abs(r.get_d()), true, 1});
            progress = true;
            break;
          }
        }
        if (progress) break;
      }
    }
  };
  try_integer_roots();

  std::vector<double> cd;
  for (const Int& ci : c) cd.push_back(ci.get_d());

  if (c.size() == 2) {
    double r = -cd[1] / cd[0];
    roots.push_back(Root{r, std::abs(r), true, 1});
  } else if (c.size() == 3) {
    // monic quadratic with exact integer discriminant
    Int D = c[1] * c[1] - 4 * c[0] * c[2];
    if (D < 0) {
      double mod = std::sqrt(std::abs(c[2].get_d() / c[0].get_d()));
      roots.push_back(Root{-cd[1] / (2 * cd[0]), mod, false, 2});
    } else if (D == 0) {
      double r = -cd[1] / (2 * cd[0]);
      roots.push_back(Root{r, std::abs(r), true, 2});
    } else {
      double sq = std::sqrt(D.get_d());
      for (double r : {(-cd[1] + sq) / 2, (-cd[1] - sq) / 2}) {
        r = newton_polish(cd, r);
        roots.push_back(Root{r, std::abs(r), true, 1});
      }
    }
  } else if (c.size() == 4) {
    // no rational root left, so the discriminant cannot vanish
    Int p = c[1], q = c[2], r = c[3];
    Int disc = 18 * p * q * r - 4 * p * p * p * r + p * p * q * q -
               4 * q * q * q - 27 * r * r;
    if (disc < 0) {
      // one real root, one complex pair
      double bound = 1;
      for (size_t i = 1; i < cd.size(); ++i) bound = std::max(bound, std::abs(cd[i]));
      bound += 1;
      double t = eval_poly(cd, 0) < 0 ? bound : -bound;
      t = newton_polish(cd, t);
      roots.push_back(Root{t, std::abs(t), true, 1});
      double pair_mod = std::sqrt(std::abs(r.get_d() / t));
      roots.push_back(Root{0, pair_mod, false, 2});
    } else {
      // three distinct real roots via the trigonometric form, then polish
      double b = cd[1], cc = cd[2], dd = cd[3];
      double pp = cc - b * b / 3;
      double qq = 2 * b * b * b / 27 - b * cc / 3 + dd;
      double mphi = std::sqrt(std::max(0.0, -4.0 * pp / 3.0));
      double arg = std::clamp(3.0 * qq / (pp * mphi), -1.0, 1.0);
      double phi = std::acos(arg) / 3;
      for (int k = 0; k < 3; ++k) {
        double t = mphi * std::cos(phi - 2 * M_PI * k / 3) - b / 3;
        t = newton_polish(cd, t);
        roots.push_back(Root{t, std::abs(t), true, 1});
      }
    }
  }
  return roots;
}

std::string eigen_report(const std::vector<Root>& roots) {
  std::ostringstream os;
  os << "eigenvalues:";
  for (const auto& r : roots) {
    if (r.real)
      os << " " << decimal_string(r.value, 6);
    else
      os << " complex(|.|=" << decimal_string(r.modulus, 6) << ")";
    if (r.multiplicity > 1) os << "^" << r.multiplicity;
  }
  return os.str();
}

}  // namespace

Eigendata leading_eigendata(const Mat3& m) {
  auto roots = poly_roots(char_poly(m));
  double rho = 0;
  for (const auto& r : roots) rho = std::max(rho, r.modulus);

  const double tol = 1e-9;
  const Root* leading = nullptr;
  for (const auto& r : roots) {
    if (r.modulus < rho * (1 - 1e-12)) continue;
    if (!r.real || r.multiplicity > 1 || r.value <= 1 + tol || leading != nullptr) {
      throw dynamics_error("not hyperbolic; " + eigen_report(roots));
    }
    leading = &r;
  }
  if (!leading || leading->value <= 1 + tol)
    throw dynamics_error("not hyperbolic; " + eigen_report(roots));

  const double lambda = leading->value;
  // eigenvector from the cross product of two rows of (M - lambda I)
  double a[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      a[i][j] = m[i][j].get_d() - (i == j ? lambda : 0.0);
  std::array<double, 3> best{};
  double best_norm = -1;
  for (int r1 = 0; r1 < 3; ++r1)
    for (int r2 = r1 + 1; r2 < 3; ++r2) {
      std::array<double, 3> v{a[r1][1] * a[r2][2] - a[r1][2] * a[r2][1],
                              a[r1][2] * a[r2][0] - a[r1][0] * a[r2][2],
                              a[r1][0] * a[r2][1] - a[r1][1] * a[r2][0]};
      double n = std::abs(v[0]) + std::abs(v[1]) + std::abs(v[2]);
      if (n > best_norm) {
        best_norm = n;
        best = v;
      }
    }
  if (best_norm <= 0) throw dynamics_error("defective leading eigenvalue");
  for (auto& c : best) c /= best_norm;
  for (int i = 0; i < 3; ++i) {
    if (std::abs(best[i]) > 1e-12) {
      if (best[i] < 0)
        for (auto& c : best) c = -c;
      break;
    }
  }

  // residual gate, relative to |v|_inf
  double vinf = 0, rinf = 0;
  for (int i = 0; i < 3; ++i) {
    double mv = 0;
    for (int j = 0; j < 3; ++j) mv += m[i][j].get_d() * best[j];
    rinf = std::max(rinf, std::abs(mv - lambda * best[i]));
    vinf = std::max(vinf, std::abs(best[i]));
  }
  if (rinf > 1e-10 * vinf)
    throw dynamics_error("eigenvector residual too large");
  return Eigendata{lambda, best};
}

std::vector<std::array<Rational, 3>> cocycle_series(const SurfaceSpec& spec,
                                                    const Word& word, const PointQ& p,
                                                    size_t count) {
  std::vector<std::array<Rational, 3>> rows;
  rows.reserve(count);
  PointQ q = p;
  for (size_t k = 0; k < count; ++k) {
    rows.push_back(cocycle(spec, word, q));
    q = apply_word(spec, word, q);
  }
  return rows;
}

int depth_for_tolerance(double cocycle_bound, double lambda, double tol) {
  double n = std::log(cocycle_bound / ((lambda - 1) * tol)) / std::log(lambda);
  return std::max(1, static_cast<int>(std::ceil(n)));
}

std::vector<PointQ> sample_skeleton_points(const SkeletonMesh& mesh, size_t count, Rng& rng) {
  // triangulate faces by fans, pick triangles by double area, then exact
  // rational barycentric coordinates keep the point on the face plane
  struct Tri {
    const PointQ* a;
    const PointQ* b;
    const PointQ* c;
    double area2;
  };
  std::vector<Tri> tris;
  double total = 0;
  for (const auto& f : mesh.faces) {
    for (size_t i = 1; i + 1 < f.cycle.size(); ++i) {
      const PointQ& a = mesh.vertices[f.cycle[0]];
      const PointQ& b = mesh.vertices[f.cycle[i]];
      const PointQ& c = mesh.vertices[f.cycle[i + 1]];
      double u[3], w[3];
      for (int k = 0; k < 3; ++k) {
        u[k] = to_double(b[k] - a[k]);
        w[k] = to_double(c[k] - a[k]);
      }
      double cx = u[1] * w[2] - u[2] * w[1];
      double cy = u[2] * w[0] - u[0] * w[2];
      double cz = u[0] * w[1] - u[1] * w[0];
      double area2 = std::sqrt(cx * cx + cy * cy + cz * cz);
      tris.push_back(Tri{&a, &b, &c, area2});
      total += area2;
    }
  }
  if (tris.empty()) throw domain_error("mesh without faces");

  std::vector<PointQ> out;
  out.reserve(count);
  const long den = 1 << 12;
  for (size_t s = 0; s < count; ++s) {
    double pick = rng.uniform(0, total);
    size_t t = 0;
    while (t + 1 < tris.size() && pick > tris[t].area2) pick -= tris[t].area2, ++t;
    Rational u(rng.uniform_int(0, den), den), v(rng.uniform_int(0, den), den);
    u.canonicalize();
    v.canonicalize();
    if (u + v > 1) {
      u = 1 - u;
      v = 1 - v;
    }
    PointQ p(3);
    for (int k = 0; k < 3; ++k)
      p[k] = (*tris[t].a)[k] + u * ((*tris[t].b)[k] - (*tris[t].a)[k]) +
             v * ((*tris[t].c)[k] - (*tris[t].a)[k]);
    out.push_back(std::move(p));
  }
  return out;
}

PotentialField make_potential_field(const SurfaceSpec& spec, const Word& word,
                                    double tol, size_t samples, uint64_t seed) {
  spec.validate();
  PotentialField field;
  field.spec = spec;
  field.word = word;
  field.matrix = homogeneity_matrix(word);
  field.eig = leading_eigendata(field.matrix);
  field.tol = tol;

  auto mesh = skeleton_mesh(level_set_polytope(spec.poly, spec.level));
  Rng rng(seed);
  std::vector<PointQ> pts(mesh.vertices.begin(), mesh.vertices.end());
  auto extra = sample_skeleton_points(mesh, samples, rng);
  pts.insert(pts.end(), extra.begin(), extra.end());

  double mc = 0;
  for (const auto& p : pts) {
    auto row = cocycle(spec, word, p);
    double pair = 0;
    for (int i = 0; i < 3; ++i) pair += to_double(row[i]) * field.eig.v[i];
    mc = std::max(mc, std::abs(pair));
  }
  field.cocycle_bound = 2 * std::max(mc, 1e-30);
  field.depth = depth_for_tolerance(field.cocycle_bound, field.eig.lambda, tol);
  return field;
}

double evaluate_potential(const PotentialField& field, const PointQ& p) {
  auto rows = cocycle_series(field.spec, field.word, p, field.depth);
  double acc = 0;
  double scale = 1.0 / field.eig.lambda;
  for (const auto& row : rows) {
    double pair = 0;
    for (int i = 0; i < 3; ++i) pair += to_double(row[i]) * field.eig.v[i];
    acc -= scale * pair;
    scale /= field.eig.lambda;
  }
  return acc;
}

double potential_residual(const PotentialField& field, const PointQ& p) {
  auto row = cocycle(field.spec, field.word, p);
  double pair = 0;
  for (int i = 0; i < 3; ++i) pair += to_double(row[i]) * field.eig.v[i];
  PointQ fp = apply_word(field.spec, field.word, p);
  return std::abs(evaluate_potential(field, fp) - field.eig.lambda * evaluate_potential(field, p) -
                  pair);
}

ConcavityProbe probe_face_concavity(const PotentialField& field, const SkeletonMesh& mesh,
                                    size_t samples_per_face, uint64_t seed) {
  Rng rng(seed);
  ConcavityProbe probe;
  bool first = true;
  for (const auto& face : mesh.faces) {
    for (size_t s = 0; s < samples_per_face; ++s) {
      // two random points inside the face, compared with their midpoint
      const long den = 1 << 10;
      PointQ pts[2];
      for (auto& p : pts) {
        Rational acc_w = 0;
        std::vector<Rational> weights;
        for (size_t i = 0; i < face.cycle.size(); ++i) {
          Rational w(rng.uniform_int(1, den), den);
          w.canonicalize();
          weights.push_back(w);
          acc_w += w;
        }
        p.assign(3, Rational(0));
        for (size_t i = 0; i < face.cycle.size(); ++i)
          for (int k = 0; k < 3; ++k)
            p[k] += weights[i] / acc_w * mesh.vertices[face.cycle[i]][k];
      }
      PointQ mid(3);
      for (int k = 0; k < 3; ++k) mid[k] = (pts[0][k] + pts[1][k]) / 2;
      double second = evaluate_potential(field, mid) -
                      (evaluate_potential(field, pts[0]) + evaluate_potential(field, pts[1])) / 2;
      if (first || second < probe.min_second_difference) probe.min_second_difference = second;
      if (first || second > probe.max_second_difference) probe.max_second_difference = second;
      first = false;
      ++probe.samples;
    }
  }
  probe.samples = samples_per_face * mesh.faces.size();
  return probe;
}

}  // namespace tropdyn
