// Copyright 2026 The swlag Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SWLAG_EXPORT_HPP
#define SWLAG_EXPORT_HPP

// Report serialization and mesh export.

#include <Eigen/Core>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "swlag/surface.hpp"

namespace swlag {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "swlag-report/1";

/// Writes JSON with every floating value printed as %.17g; non-finite values become null.
void write_json(std::ostream& out, const Json& value, int indent = 2);
std::string to_json_string(const Json& value, int indent = 2);

/// A double formatted with 17 significant digits ("nan" for NaN).
std::string format_double(double value);

/// Polar sampling grid of the disc: rows of constant radius, columns of
/// constant angle, theta_c = 2 pi c / n_angular.
struct PolarGrid {
  std::vector<double> radii;  ///< increasing; radii[0] = 0
  int n_angular = 0;
};

/// n_radial rows on [0, r_max] graded toward the boundary, with the rows
/// closest to |p_k| (for each p_k inside the grid) moved onto |p_k|.
PolarGrid make_polar_grid(const DampedBlaschke& phi, int n_radial, int n_angular, double r_max);

/// Grid point (row, col). Columns at theta = pi are placed exactly on the real axis.
Complex grid_point(const PolarGrid& grid, int row, int col);

enum class Projection { DropCoordinate, Stereographic };

struct MeshOptions {
  Projection projection = Projection::DropCoordinate;
  int drop = 3;  ///< coordinate of Phi removed by DropCoordinate
};

struct SurfaceMesh {
  std::vector<SurfaceSample> samples;  ///< row-major over the grid
  Eigen::Matrix<double, Eigen::Dynamic, 3> vertices;
  std::vector<std::array<int, 3>> faces;  ///< 0-based
};

/// Samples Phi on the grid and triangulates it. The centre row holds
/// n_angular coincident vertices closed by a fan of triangles.
SurfaceMesh build_mesh(const MapParams& params, const PolarGrid& grid, const MeshOptions& options, int threads = 1);

/// Projects R^4 to R^3. Stereographic uses the sphere of radius 2 max|Phi|
/// and the pole on the last axis.
Eigen::Matrix<double, Eigen::Dynamic, 3> project(const std::vector<SurfaceSample>& samples,
                                                 const MeshOptions& options);

void write_obj(std::ostream& out, const SurfaceMesh& mesh);
/// "vertex,lagrangian_angle,conf_factor"; the angle is arg(conj g), "nan" where undefined.
void write_vertex_attributes(std::ostream& out, const SurfaceMesh& mesh);
/// "x,y,Phi1,Phi2,Phi3,Phi4,angle,conf_factor" for each sample.
void write_sample_csv(std::ostream& out, const std::vector<SurfaceSample>& samples);

}  // namespace swlag

#endif  // SWLAG_EXPORT_HPP
