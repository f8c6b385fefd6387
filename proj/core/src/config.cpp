#include "tropdyn/config.hpp"

#include <json.hpp>
#include <sstream>

#include "tropdyn/util.hpp"

namespace tropdyn {

using nlohmann::json;

namespace {

Rational rational_from_json(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_number_float()) return rational_from_double(v.get<double>());
  throw domain_error("coefficient must be a string or number");
}

SlopeVec parse_key(const std::string& key) {
  SlopeVec slope;
  std::stringstream ss(key);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part != "-1" && part != "0" && part != "1")
      throw domain_error("coefficient key component must be -1, 0 or 1: " + key);
    slope.push_back(std::stoll(part));
  }
  if (slope.size() != 2 && slope.size() != 3)
    throw domain_error("coefficient key must have 2 or 3 components: " + key);
  bool all_zero = true;
  for (long long s : slope)
    if (s != 0) all_zero = false;
  if (all_zero)
    throw domain_error("central coefficient is not allowed; it is the level");
  return slope;
}

TropicalPolynomial parse_poly(const json& doc, size_t* dim_out) {
  if (!doc.contains("coefficients") || !doc["coefficients"].is_object())
    throw domain_error("config needs a \"coefficients\" object");
  TropicalPolynomial poly;
  size_t dim = 0;
  for (const auto& [key, value] : doc["coefficients"].items()) {
    SlopeVec slope = parse_key(key);
    if (dim == 0) dim = slope.size();
    if (slope.size() != dim) throw domain_error("mixed key dimensions in config");
    poly.forms.push_back(AffineForm{std::move(slope), rational_from_json(value)});
  }
  if (poly.forms.empty()) throw domain_error("config has no coefficients");
  *dim_out = dim;
  return poly;
}

Rational parse_level(const json& doc) {
  if (!doc.contains("level")) throw domain_error("config needs a \"level\"");
  return rational_from_json(doc["level"]);
}

std::string key_of(const SlopeVec& slope) {
  std::string key;
  for (size_t i = 0; i < slope.size(); ++i) {
    if (i) key += ",";
    key += std::to_string(slope[i]);
  }
  return key;
}

json poly_to_json(const TropicalPolynomial& poly, const Rational& level) {
  json coeffs = json::object();
  for (const auto& f : poly.forms) coeffs[key_of(f.slope)] = exact_string(f.constant);
  return json{{"coefficients", coeffs}, {"level", exact_string(level)}};
}

}  // namespace

std::variant<SurfaceSpec, CurveSpec> parse_spec_config(const std::string& json_text) {
  json doc = json::parse(json_text);
  size_t dim = 0;
  TropicalPolynomial poly = parse_poly(doc, &dim);
  Rational level = parse_level(doc);
  if (dim == 3) {
    SurfaceSpec spec{std::move(poly), std::move(level)};
    spec.validate();
    return spec;
  }
  CurveSpec spec{std::move(poly), std::move(level)};
  spec.validate();
  return spec;
}

SurfaceSpec parse_surface_config(const std::string& json_text) {
  auto parsed = parse_spec_config(json_text);
  if (auto* s = std::get_if<SurfaceSpec>(&parsed)) return *s;
  throw domain_error("expected a 3-variable surface config");
}

CurveSpec parse_curve_config(const std::string& json_text) {
  auto parsed = parse_spec_config(json_text);
  if (auto* c = std::get_if<CurveSpec>(&parsed)) return *c;
  throw domain_error("expected a 2-variable curve config");
}

std::string write_surface_config(const SurfaceSpec& spec) {
  return poly_to_json(spec.poly, spec.level).dump(2) + "\n";
}

std::string write_curve_config(const CurveSpec& spec) {
  return poly_to_json(spec.poly, spec.level).dump(2) + "\n";
}

namespace {

template <typename SpecT>
SpecT random_spec(uint64_t seed, const Rational& range, size_t dim) {
  Rng rng(seed);
  TropicalPolynomial poly;
  std::vector<SlopeVec> slopes;
  SlopeVec cur(dim, -1);
  while (true) {
    bool all_zero = true;
    for (long long s : cur)
      if (s != 0) all_zero = false;
    if (!all_zero) slopes.push_back(cur);
    size_t i = 0;
    while (i < dim && cur[i] == 1) cur[i++] = -1;
    if (i == dim) break;
    ++cur[i];
  }
  Rational min_c;
  bool first = true;
  for (const auto& s : slopes) {
    Rational c = rng.uniform_rational(-range, range, 64);
    if (first || c < min_c) min_c = c, first = false;
    poly.forms.push_back(AffineForm{s, std::move(c)});
  }
  SpecT spec{std::move(poly), min_c - 1};
  spec.validate();
  return spec;
}

}  // namespace

SurfaceSpec random_surface(uint64_t seed, const Rational& range) {
  return random_spec<SurfaceSpec>(seed, range, 3);
}

CurveSpec random_curve(uint64_t seed, const Rational& range) {
  return random_spec<CurveSpec>(seed, range, 2);
}

PLMap1D parse_map_config(const std::string& json_text) {
  json doc = json::parse(json_text);
  PLMap1D map;
  if (!doc.contains("degree") || !doc["degree"].is_number_integer())
    throw domain_error("map config needs an integer \"degree\"");
  map.degree = doc["degree"].get<long long>();
  auto read_terms = [&](const char* name, std::vector<Term1D>& out) {
    if (!doc.contains(name) || !doc[name].is_array())
      throw domain_error(std::string("map config needs array \"") + name + "\"");
    for (const auto& t : doc[name]) {
      if (!t.is_array() || t.size() != 3)
        throw domain_error("map term must be [a, b, c]");
      out.push_back(Term1D{t[0].get<long long>(), t[1].get<long long>(),
                           rational_from_json(t[2])});
    }
  };
  read_terms("f0", map.f0);
  read_terms("f1", map.f1);
  map.validate();
  return map;
}

std::string write_map_config(const PLMap1D& map) {
  auto terms = [](const std::vector<Term1D>& ts) {
    json arr = json::array();
    for (const auto& t : ts) arr.push_back(json::array({t.a, t.b, exact_string(t.c)}));
    return arr;
  };
  json doc{{"degree", map.degree}, {"f0", terms(map.f0)}, {"f1", terms(map.f1)}};
  return doc.dump(2) + "\n";
}

std::string measure_json(const PiecewiseMeasure& m) {
  json atoms = json::array();
  for (const auto& a : m.atoms)
    atoms.push_back(json{{"x", to_double(a.x)}, {"mass", a.mass}});
  json cells = json::array();
  for (const auto& d : m.density)
    cells.push_back(json{{"x0", to_double(d.x0)}, {"x1", to_double(d.x1)}, {"value", d.value}});
  json doc{{"atoms", atoms}, {"density", cells}, {"total_mass", m.total_mass}};
  return doc.dump(2) + "\n";
}

}  // namespace tropdyn
