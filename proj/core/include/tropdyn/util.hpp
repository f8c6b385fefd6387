#pragma once

#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "tropdyn/rational.hpp"

namespace tropdyn {

// Exact Gaussian elimination. Returns nullopt when the system is singular.
std::optional<PointQ> solve_linear(std::vector<std::vector<Rational>> a,
                                   std::vector<Rational> b);

// gcd of absolute values, 0 for the all-zero vector.
long long vec_gcd(const SlopeVec& v);

// Direction of a nonzero rational vector as a primitive integer vector,
// together with the positive scale t such that d = t * primitive.
struct PrimitiveDirection {
  SlopeVec direction;
  Rational scale;
};
std::optional<PrimitiveDirection> primitive_direction(const PointQ& d);

// Thread count honoring the TROPDYN_THREADS cap.
unsigned worker_count();

// Deterministic data-parallel loop: fn(i) for i in [0, n), any order.
// Callers must write results into preallocated per-index slots.
void parallel_for(size_t n, const std::function<void(size_t)>& fn);

// Deterministic seeded rng helpers used by sampling code and tests.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t raw() { return gen_(); }

  long long uniform_int(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(gen_);
  }

  double uniform(double lo = 0.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(gen_);
  }

  // Uniform on the grid {k/den : lo*den <= k <= hi*den}.
  Rational uniform_rational(const Rational& lo, const Rational& hi, long den) {
    Rational span = (hi - lo) * den;
    long long n = static_cast<long long>(span.get_d());
    long long k = uniform_int(0, n);
    Rational step(k, den);
    step.canonicalize();
    return lo + step;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace tropdyn
