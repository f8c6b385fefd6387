// Command-line front end: skeleton/orbit/potential/measure/twist exports for
// the tropical dynamics library, plus scenario presets and verify suites.
//
// Exit codes: 0 ok, 1 usage, 2 domain error, 3 dynamics precondition error.

#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "tropdyn/config.hpp"
#include "tropdyn/export.hpp"
#include "tropdyn/kummer.hpp"
#include "tropdyn/measure1d.hpp"
#include "tropdyn/potential.hpp"
#include "tropdyn/presets.hpp"
#include "tropdyn/verify.hpp"

using namespace tropdyn;

namespace {

SurfaceSpec load_surface(const std::string& config, const std::string& preset,
                         const std::string& level_override) {
  SurfaceSpec spec;
  if (!preset.empty()) {
    auto p = surface_preset(preset);
    if (!p) throw domain_error("unknown preset: " + preset);
    spec = *p;
  } else if (!config.empty()) {
    spec = parse_surface_config(read_file(config));
  } else {
    throw domain_error("need --config or --preset");
  }
  if (!level_override.empty()) spec.level = parse_rational(level_override);
  spec.validate();
  return spec;
}

PointQ parse_point3(const std::string& text) {
  std::stringstream ss(text);
  std::string part;
  PointQ p;
  while (std::getline(ss, part, ',')) p.push_back(parse_rational(part));
  if (p.size() != 3) throw domain_error("point must be x,y,z");
  return p;
}

void emit(const std::string& out, const std::string& content) {
  if (out.empty() || out == "-")
    std::cout << content;
  else
    write_file(out, content);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tropdyn - piecewise-linear dynamics on tropical surfaces and the line"};
  app.require_subcommand(1);

  std::string config, preset, level, out, word_text = "xyz", format = "obj";
  std::string start, points_arg = "grid:100", svg_path, mode = "exact", levels_arg;
  uint64_t seed = 1;
  size_t steps = 100;
  double tol = 1e-9;
  size_t grid = 256;
  std::string range_text = "2";
  std::string suite = "all";

  auto* cmd_skeleton = app.add_subcommand("skeleton", "export the level-set boundary mesh");
  cmd_skeleton->add_option("--config", config, "surface config JSON");
  cmd_skeleton->add_option("--preset", preset, "kummer | rubik | rubik:<level>");
  cmd_skeleton->add_option("--level", level, "override the level");
  cmd_skeleton->add_option("--format", format, "obj | csv")->check(CLI::IsMember({"obj", "csv"}));
  cmd_skeleton->add_option("--out", out, "output path (default stdout)");

  auto* cmd_orbit = app.add_subcommand("orbit", "iterate a reflection word");
  cmd_orbit->add_option("--config", config);
  cmd_orbit->add_option("--preset", preset);
  cmd_orbit->add_option("--level", level);
  cmd_orbit->add_option("--word", word_text, "letters over x,y,z; leftmost acts last");
  cmd_orbit->add_option("--start", start, "start point x,y,z (default: sampled)");
  cmd_orbit->add_option("--steps", steps);
  cmd_orbit->add_option("--mode", mode)->check(CLI::IsMember({"exact", "float"}));
  cmd_orbit->add_option("--seed", seed);
  cmd_orbit->add_option("--out", out);
  cmd_orbit->add_option("--svg", svg_path, "also write a scatter SVG");

  auto* cmd_random = app.add_subcommand("random-surface", "write a random full-support config");
  cmd_random->add_option("--seed", seed);
  cmd_random->add_option("--coeff-range", range_text, "coefficient grid range");
  cmd_random->add_option("--out", out);

  auto* cmd_potential = app.add_subcommand("potential", "evaluate the dynamical potential");
  cmd_potential->add_option("--config", config);
  cmd_potential->add_option("--preset", preset);
  cmd_potential->add_option("--level", level);
  cmd_potential->add_option("--word", word_text);
  cmd_potential->add_option("--points", points_arg, "grid:<n> or a CSV file of x,y,z rows");
  cmd_potential->add_option("--tol", tol);
  cmd_potential->add_option("--seed", seed);
  cmd_potential->add_option("--out", out);

  auto* cmd_measure = app.add_subcommand("measure1d", "line-map invariant-potential measure");
  cmd_measure->add_option("--config", config, "map config JSON");
  cmd_measure->add_option("--preset", preset, "tent");
  cmd_measure->add_option("--grid", grid, "density cells");
  cmd_measure->add_option("--out", out);

  auto* cmd_elliptic = app.add_subcommand("elliptic", "rotation-number sweep over levels");
  cmd_elliptic->add_option("--config", config, "curve config JSON (2 variables)");
  cmd_elliptic->add_option("--levels", levels_arg, "a:b:step inclusive sweep")->required();
  cmd_elliptic->add_option("--out", out);

  auto* cmd_verify = app.add_subcommand("verify", "run acceptance-style suites");
  cmd_verify->add_option("--suite", suite, "kummer | tent | skeleton | all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 1 : 0;
  }

  try {
    if (cmd_skeleton->parsed()) {
      SurfaceSpec spec = load_surface(config, preset, level);
      SkeletonMesh mesh = skeleton_mesh(level_set_polytope(spec.poly, spec.level));
      emit(out, format == "obj" ? obj_string(mesh) : mesh_csv(mesh));
    } else if (cmd_orbit->parsed()) {
      SurfaceSpec spec = load_surface(config, preset, level);
      Word word = parse_word(word_text);
      SkeletonMesh mesh = skeleton_mesh(level_set_polytope(spec.poly, spec.level));
      PointQ p0;
      if (!start.empty()) {
        p0 = parse_point3(start);
        if (mode == "exact" && evaluate(spec.poly, p0) != spec.level)
          throw domain_error("start point is off the skeleton (h = " +
                             exact_string(evaluate(spec.poly, p0)) + ", level " +
                             exact_string(spec.level) + ")");
      } else {
        Rng rng(seed);
        p0 = sample_skeleton_points(mesh, 1, rng).front();
      }
      if (mode == "exact") {
        auto pts = orbit(spec, word, p0, steps);
        emit(out, orbit_csv(pts));
        if (!svg_path.empty()) {
          std::vector<std::array<double, 3>> fl;
          for (const auto& p : pts)
            fl.push_back({to_double(p[0]), to_double(p[1]), to_double(p[2])});
          write_file(svg_path, orbit_svg(fl, mesh));
        }
      } else {
        std::array<double, 3> q0{to_double(p0[0]), to_double(p0[1]), to_double(p0[2])};
        auto pts = orbit_float(spec, word, q0, steps);
        emit(out, orbit_csv(pts));
        if (!svg_path.empty()) write_file(svg_path, orbit_svg(pts, mesh));
      }
    } else if (cmd_random->parsed()) {
      SurfaceSpec spec = random_surface(seed, parse_rational(range_text));
      emit(out, write_surface_config(spec));
    } else if (cmd_potential->parsed()) {
      SurfaceSpec spec = load_surface(config, preset, level);
      Word word = parse_word(word_text);
      PotentialField field = make_potential_field(spec, word, tol, 1000, seed);
      std::vector<PointQ> pts;
      if (points_arg.rfind("grid:", 0) == 0) {
        size_t count = std::stoul(points_arg.substr(5));
        SkeletonMesh mesh = skeleton_mesh(level_set_polytope(spec.poly, spec.level));
        Rng rng(seed + 1);
        pts = sample_skeleton_points(mesh, count, rng);
      } else {
        std::stringstream ss(read_file(points_arg));
        std::string line;
        while (std::getline(ss, line)) {
          if (line.empty() || line.rfind("x", 0) == 0) continue;
          pts.push_back(parse_point3(line));
        }
      }
      std::ostringstream os;
      os << "x,y,z,g,residual\n";
      for (const auto& p : pts) {
        double g = evaluate_potential(field, p);
        double r = potential_residual(field, p);
        os << decimal_string(p[0]) << "," << decimal_string(p[1]) << ","
           << decimal_string(p[2]) << "," << decimal_string(g) << "," << decimal_string(r)
           << "\n";
      }
      emit(out, os.str());
    } else if (cmd_measure->parsed()) {
      PLMap1D map;
      if (preset == "tent")
        map = tent_map();
      else if (!config.empty())
        map = parse_map_config(read_file(config));
      else
        throw domain_error("need --config or --preset tent");
      Potential1D g = solve_potential(map, 1e-12);
      emit(out, measure_json(measure_from_potential(g, grid)));
    } else if (cmd_elliptic->parsed()) {
      if (config.empty()) throw domain_error("need --config");
      CurveSpec curve = parse_curve_config(read_file(config));
      auto colon1 = levels_arg.find(':');
      auto colon2 = levels_arg.find(':', colon1 + 1);
      if (colon1 == std::string::npos || colon2 == std::string::npos)
        throw domain_error("levels must be a:b:step");
      Rational a = parse_rational(levels_arg.substr(0, colon1));
      Rational b = parse_rational(levels_arg.substr(colon1 + 1, colon2 - colon1 - 1));
      Rational step = parse_rational(levels_arg.substr(colon2 + 1));
      if (step <= 0) throw domain_error("step must be positive");
      std::vector<Rational> levels;
      for (Rational t = a; t <= b; t += step) levels.push_back(t);
      emit(out, twist_csv(twist_profile(curve.poly, levels)));
    } else if (cmd_verify->parsed()) {
      std::vector<SuiteResult> results;
      if (suite == "all")
        results = verify_all();
      else if (suite == "kummer")
        results = {verify_kummer()};
      else if (suite == "tent")
        results = {verify_tent()};
      else if (suite == "skeleton")
        results = {verify_skeleton()};
      else
        throw domain_error("unknown suite: " + suite);
      int failed = 0;
      for (const auto& r : results) {
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << "\n";
        for (const auto& line : r.lines) std::cout << "  " << line << "\n";
        if (!r.passed) ++failed;
      }
      return failed;
    }
  } catch (const dynamics_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
