#pragma once

#include <array>
#include <optional>
#include <string>

#include "tropdyn/dynamics3d.hpp"
#include "tropdyn/geometry.hpp"
#include "tropdyn/util.hpp"

namespace tropdyn {

// Integer matrices act on row vectors from the right: t -> t * M, so
// composition of maps multiplies matrices as M_{A after B} = M_B * M_A.
using Mat3 = std::array<std::array<Int, 3>, 3>;

Mat3 mat3_identity();
Mat3 mat3_mul(const Mat3& a, const Mat3& b);
std::array<Rational, 3> row_times_mat(const std::array<Rational, 3>& t, const Mat3& m);

Mat3 letter_matrix(Axis axis);
Mat3 homogeneity_matrix(const Word& word);

// det(tI - M) as coefficients [1, c2, c1, c0].
std::array<Int, 4> char_poly(const Mat3& m);

struct Eigendata {
  double lambda = 0;            // leading eigenvalue, > 1
  std::array<double, 3> v{};    // eigenvector, |v|_1 = 1, sign-normalized
};

// Leading eigendata of an integer 3x3 matrix. Throws dynamics_error with an
// eigenvalue report when the spectral radius is not achieved by a real
// simple eigenvalue > 1 (the non-hyperbolic case).
Eigendata leading_eigendata(const Mat3& m);

struct PotentialField {
  SurfaceSpec spec;
  Word word;
  Mat3 matrix;
  Eigendata eig;
  double cocycle_bound = 0;  // safety-factored bound on |c_F . v| on the skeleton
  int depth = 0;
  double tol = 1e-9;
};

// Samples the skeleton (mesh vertices plus `samples` random face points)
// for the cocycle pairing bound, then sizes the series depth from tol.
PotentialField make_potential_field(const SurfaceSpec& spec, const Word& word,
                                    double tol = 1e-9, size_t samples = 1000,
                                    uint64_t seed = 7);

int depth_for_tolerance(double cocycle_bound, double lambda, double tol);

// Exact cocycle rows along the orbit: c_F(f^k(p)) for k = 0..count-1.
std::vector<std::array<Rational, 3>> cocycle_series(const SurfaceSpec& spec,
                                                    const Word& word, const PointQ& p,
                                                    size_t count);

// Truncated contraction series
//   g_N(p) = -sum_{k<N} lambda^{-(k+1)} c_F(f^k(p)) . v
// with tail error <= cocycle_bound * lambda^-N / (lambda - 1).
double evaluate_potential(const PotentialField& field, const PointQ& p);

// |g(f(p)) - lambda g(p) - c_F(p) . v|
double potential_residual(const PotentialField& field, const PointQ& p);

// Diagnostic only: second differences of g along random in-face segments.
// Sign is reported, never asserted.
struct ConcavityProbe {
  double min_second_difference = 0;
  double max_second_difference = 0;
  size_t samples = 0;
};
ConcavityProbe probe_face_concavity(const PotentialField& field, const SkeletonMesh& mesh,
                                    size_t samples_per_face, uint64_t seed = 11);

// Area-weighted exact rational points of the boundary mesh.
std::vector<PointQ> sample_skeleton_points(const SkeletonMesh& mesh, size_t count, Rng& rng);

}  // namespace tropdyn
