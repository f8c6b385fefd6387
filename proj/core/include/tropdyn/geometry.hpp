#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tropdyn/trop_core.hpp"

namespace tropdyn {

// {p : normal.p + offset >= 0} with primitive integer normal.
struct Halfspace {
  SlopeVec normal;
  Rational offset;

  Rational slack(const PointQ& p) const { return dot(normal, p) + offset; }
  void normalize();  // divide by gcd of the normal entries
};

struct ConvexPolytope {
  std::vector<Halfspace> halfspaces;
  std::vector<PointQ> vertices;                 // lexicographically sorted
  std::vector<std::vector<size_t>> on_facets;   // per vertex: tight halfspaces
  bool bounded = false;
  bool degenerate = false;  // nonempty but without a full-dimensional interior

  size_t dim() const { return halfspaces.empty() ? 0 : halfspaces.front().normal.size(); }
};

// All points where dim-many independent hyperplanes meet and every halfspace
// holds, deduplicated exactly. Empty result means no vertex exists.
std::vector<PointQ> enumerate_vertices(const std::vector<Halfspace>& halfspaces,
                                       size_t dim);

// The region {h >= c} for a concave min-plus polynomial h (dimension 2 or 3).
// Throws domain_error when the region is empty (c above the maximum of h);
// a maximum-level region degenerates to a point/segment and is only flagged.
ConvexPolytope level_set_polytope(const TropicalPolynomial& poly, const Rational& level);

// Exact maximum of a concave min-plus polynomial, with one maximizer.
// nullopt when the polynomial is unbounded above (degenerate spec).
struct TropicalMax {
  Rational value;
  PointQ argmax;
};
std::optional<TropicalMax> maximum_of(const TropicalPolynomial& poly);

struct MeshEdge {
  size_t a, b;          // vertex indices, a < b
  SlopeVec direction;   // primitive integer direction of b - a
};
struct MeshFace {
  std::vector<size_t> cycle;  // counterclockwise seen from outside
  SlopeVec normal;            // slope of the unique active form on the face
  size_t halfspace;           // index into the polytope's halfspace list
};

// Closed oriented boundary complex of a bounded 3D polytope; V - E + F = 2.
struct SkeletonMesh {
  std::vector<PointQ> vertices;
  std::vector<MeshEdge> edges;
  std::vector<MeshFace> faces;
};
SkeletonMesh skeleton_mesh(const ConvexPolytope& polytope);

// Length of q - p in the lattice normalization: q - p = t * v with v a
// primitive integer vector gives t. Zero for p == q.
Rational lattice_length(const PointQ& p, const PointQ& q);

std::string obj_string(const SkeletonMesh& mesh);

// 1-dimensional break locus of a min-plus polynomial in the plane.
struct CurveEdge {
  size_t a, b;         // vertex indices
  SlopeVec direction;  // primitive, oriented a -> b
};
struct CurveRay {
  size_t vertex;
  SlopeVec direction;  // primitive, outgoing
};
struct BreakCurve {
  std::vector<PointQ> vertices;
  std::vector<CurveEdge> edges;
  std::vector<CurveRay> rays;
};
BreakCurve build_break_curve(const TropicalPolynomial& poly);

// Balancing: at every vertex the primitive outgoing edge/ray directions sum
// to zero (multiplicity one, smooth case).
bool check_balancing(const BreakCurve& curve);

}  // namespace tropdyn
