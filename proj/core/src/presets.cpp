#include "tropdyn/presets.hpp"

namespace tropdyn {

SurfaceSpec rubik_surface(const Rational& level) {
  TropicalPolynomial poly;
  poly.forms = {
      AffineForm{{-1, 0, 0}, Rational(0)}, AffineForm{{1, 0, 0}, Rational(0)},
      AffineForm{{0, -1, 0}, Rational(0)}, AffineForm{{0, 1, 0}, Rational(0)},
      AffineForm{{0, 0, -1}, Rational(0)}, AffineForm{{0, 0, 1}, Rational(0)},
      AffineForm{{-1, -1, -1}, Rational(1)},
  };
  return SurfaceSpec{poly, level};
}

PLMap1D tent_map() {
  PLMap1D f;
  f.degree = 4;
  f.f0 = {Term1D{2, 2, Rational(0)}};
  f.f1 = {Term1D{4, 0, Rational(1, 2)}, Term1D{0, 4, Rational(1, 2)}};
  return f;
}

std::optional<SurfaceSpec> surface_preset(const std::string& name) {
  if (name == "kummer") return kummer_surface();
  if (name == "rubik") return rubik_surface();
  if (name.rfind("rubik:", 0) == 0)
    return rubik_surface(parse_rational(name.substr(6)));
  return std::nullopt;
}

}  // namespace tropdyn
