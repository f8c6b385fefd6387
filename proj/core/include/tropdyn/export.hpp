#pragma once

#include <array>
#include <string>
#include <vector>

#include "tropdyn/elliptic.hpp"
#include "tropdyn/geometry.hpp"

namespace tropdyn {

// CSV with header step,x,y,z; 12 significant digits.
std::string orbit_csv(const std::vector<PointQ>& points);
std::string orbit_csv(const std::vector<std::array<double, 3>>& points);

// CSV with header level,rotation_number; failed levels are skipped.
std::string twist_csv(const std::vector<TwistSample>& profile);

// CSV with header kind,a,b,c: one v row per vertex, one e row per edge.
std::string mesh_csv(const SkeletonMesh& mesh);

// Orthographic scatter along the fixed (1,1,1) camera with the mesh face
// outlines; point radius scales with 1/sqrt(count).
std::string orbit_svg(const std::vector<std::array<double, 3>>& points,
                      const SkeletonMesh& mesh, int size = 760);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace tropdyn
