#include "tropdyn/util.hpp"

#include <cstdlib>
#include <numeric>
#include <thread>

namespace tropdyn {

std::optional<PointQ> solve_linear(std::vector<std::vector<Rational>> a,
                                   std::vector<Rational> b) {
  const size_t n = b.size();
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      Rational f = a[row][col] / a[col][col];
      for (size_t k = col; k < n; ++k) a[row][k] -= f * a[col][k];
      b[row] -= f * b[col];
    }
  }
  PointQ x(n);
  for (size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

long long vec_gcd(const SlopeVec& v) {
  long long g = 0;
  for (long long c : v) g = std::gcd(g, c < 0 ? -c : c);
  return g;
}

std::optional<PrimitiveDirection> primitive_direction(const PointQ& d) {
  Int lcm = 1;
  bool zero = true;
  for (const auto& c : d) {
    if (c != 0) zero = false;
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  if (zero) return std::nullopt;
  std::vector<Int> w(d.size());
  Int g = 0;
  for (size_t i = 0; i < d.size(); ++i) {
    Rational scaled = d[i] * Rational(lcm);
    w[i] = scaled.get_num();  // scaled is integral
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w[i].get_mpz_t());
  }
  SlopeVec prim(d.size());
  for (size_t i = 0; i < d.size(); ++i) {
    Int q = w[i] / g;
    if (!q.fits_slong_p()) throw domain_error("primitive direction overflow");
    prim[i] = q.get_si();
  }
  Rational scale = Rational(g) / Rational(lcm);
  scale.canonicalize();
  return PrimitiveDirection{prim, scale};
}

unsigned worker_count() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* cap = std::getenv("TROPDYN_THREADS")) {
    long v = std::atol(cap);
    if (v >= 1 && static_cast<unsigned>(v) < hw) hw = static_cast<unsigned>(v);
  }
  return hw;
}

void parallel_for(size_t n, const std::function<void(size_t)>& fn) {
  unsigned workers = worker_count();
  if (workers <= 1 || n < 2 * workers) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([w, workers, n, &fn] {
      for (size_t i = w; i < n; i += workers) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace tropdyn
