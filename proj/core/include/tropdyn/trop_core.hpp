#pragma once

#include <optional>
#include <set>
#include <vector>

#include "tropdyn/rational.hpp"

namespace tropdyn {

// One affine term of a min-plus polynomial: slope . p + constant.
struct AffineForm {
  SlopeVec slope;
  Rational constant;

  Rational value_at(const PointQ& p) const { return dot(slope, p) + constant; }
  bool operator==(const AffineForm& o) const {
    return slope == o.slope && constant == o.constant;
  }
};

// Pointwise minimum of finitely many affine forms. Monomials with
// coefficient +infinity are simply absent from the list.
struct TropicalPolynomial {
  std::vector<AffineForm> forms;

  size_t dim() const;
  void validate() const;  // nonempty, equal dimensions, no duplicate forms
};

Rational evaluate(const TropicalPolynomial& poly, const PointQ& p);

// Indices of all forms attaining the minimum, never empty.
std::set<size_t> active_forms(const TropicalPolynomial& poly, const PointQ& p);

// Partition by the slope along one axis, dropping that coordinate.
// An absent group stands for the +infinity polynomial (never minimal).
struct AxisGrouping {
  std::optional<TropicalPolynomial> neg;   // axis slope -1
  std::optional<TropicalPolynomial> zero;  // axis slope 0
  std::optional<TropicalPolynomial> pos;   // axis slope +1
};
AxisGrouping group_by_axis(const TropicalPolynomial& poly, size_t axis);

// Exact concave profile of t -> poly(p + t (q - p)) on [0, 1].
// breaks are the interior parameters where the active set changes;
// piece k covers [t_k, t_{k+1}] with d(value)/dt = slopes[k], and
// values[k] is the value at the k-th grid point (0, breaks..., 1).
struct SegmentProfile {
  std::vector<Rational> breaks;
  std::vector<Rational> slopes;
  std::vector<Rational> values;
};
SegmentProfile restrict_to_segment(const TropicalPolynomial& poly,
                                   const PointQ& p, const PointQ& q);

// Lower envelope of lines t -> coeff*t + offset over all of R; slopes come
// out strictly decreasing. Shared by segment restriction and the 1D maps.
struct LineEnvelope {
  std::vector<Rational> breaks;            // ascending, size = pieces - 1
  std::vector<Rational> slopes;            // strictly decreasing
  std::vector<Rational> offsets;           // per piece
  Rational value_at(const Rational& t) const;
};
LineEnvelope lower_envelope(const std::vector<Rational>& coeffs,
                            const std::vector<Rational>& offsets);

}  // namespace tropdyn
