#include "tropdyn/export.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace tropdyn {

std::string orbit_csv(const std::vector<PointQ>& points) {
  std::ostringstream os;
  os << "step,x,y,z\n";
  for (size_t i = 0; i < points.size(); ++i) {
    os << i;
    for (const auto& c : points[i]) os << "," << decimal_string(c);
    os << "\n";
  }
  return os.str();
}

std::string orbit_csv(const std::vector<std::array<double, 3>>& points) {
  std::ostringstream os;
  os << "step,x,y,z\n";
  for (size_t i = 0; i < points.size(); ++i) {
    os << i;
    for (double c : points[i]) os << "," << decimal_string(c);
    os << "\n";
  }
  return os.str();
}

std::string twist_csv(const std::vector<TwistSample>& profile) {
  std::ostringstream os;
  os << "level,rotation_number\n";
  for (const auto& s : profile) {
    if (!s.rotation) continue;
    os << decimal_string(s.level) << "," << decimal_string(*s.rotation) << "\n";
  }
  return os.str();
}

std::string mesh_csv(const SkeletonMesh& mesh) {
  std::ostringstream os;
  os << "kind,a,b,c\n";
  for (const auto& v : mesh.vertices) {
    os << "v";
    for (const auto& c : v) os << "," << decimal_string(c);
    os << "\n";
  }
  for (const auto& e : mesh.edges) os << "e," << e.a << "," << e.b << ",\n";
  return os.str();
}

namespace {

// fixed orthographic camera along (1,1,1)
std::array<double, 2> project_point(const std::array<double, 3>& p) {
  static const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  static const double inv_sqrt6 = 1.0 / std::sqrt(6.0);
  return {(p[0] - p[1]) * inv_sqrt2, (p[0] + p[1] - 2 * p[2]) * inv_sqrt6};
}

}  // namespace

std::string orbit_svg(const std::vector<std::array<double, 3>>& points,
                      const SkeletonMesh& mesh, int size) {
  std::vector<std::array<double, 2>> pts;
  pts.reserve(points.size());
  double lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
  bool first = true;
  auto track = [&](const std::array<double, 2>& q) {
    if (first) {
      lo_x = hi_x = q[0];
      lo_y = hi_y = q[1];
      first = false;
    } else {
      lo_x = std::min(lo_x, q[0]);
      hi_x = std::max(hi_x, q[0]);
      lo_y = std::min(lo_y, q[1]);
      hi_y = std::max(hi_y, q[1]);
    }
  };
  for (const auto& p : points) {
    pts.push_back(project_point(p));
    track(pts.back());
  }
  std::vector<std::vector<std::array<double, 2>>> outlines;
  for (const auto& f : mesh.faces) {
    std::vector<std::array<double, 2>> poly;
    for (size_t idx : f.cycle) {
      const auto& v = mesh.vertices[idx];
      poly.push_back(project_point({to_double(v[0]), to_double(v[1]), to_double(v[2])}));
      track(poly.back());
    }
    outlines.push_back(std::move(poly));
  }
  double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
  double margin = 0.05 * span;
  lo_x -= margin;
  lo_y -= margin;
  span += 2 * margin;
  double scale = size / span;
  auto sx = [&](double x) { return (x - lo_x) * scale; };
  auto sy = [&](double y) { return size - (y - lo_y) * scale; };

  double radius = std::max(0.4, 0.35 * size / std::sqrt(std::max<size_t>(points.size(), 1)));
  radius = std::min(radius, 4.0);

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
     << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
  for (const auto& poly : outlines) {
    os << "<polygon fill=\"none\" stroke=\"#888\" stroke-width=\"1\" points=\"";
    for (const auto& q : poly) os << decimal_string(sx(q[0]), 8) << "," << decimal_string(sy(q[1]), 8) << " ";
    os << "\"/>\n";
  }
  for (const auto& q : pts)
    os << "<circle cx=\"" << decimal_string(sx(q[0]), 8) << "\" cy=\""
       << decimal_string(sy(q[1]), 8) << "\" r=\"" << decimal_string(radius, 4)
       << "\" fill=\"#1a4f8a\" fill-opacity=\"0.75\"/>\n";
  os << "</svg>\n";
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw domain_error("cannot open for writing: " + path);
  out << content;
  if (!out) throw domain_error("write failed: " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw domain_error("cannot open: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace tropdyn
