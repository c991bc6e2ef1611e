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

#include "swlag/export.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <sstream>

#include "swlag/parallel.hpp"

namespace swlag {

namespace {

void newline(std::ostream& out, int indent, int depth) {
  if (indent < 0) return;
  out << '\n' << std::string(static_cast<std::size_t>(indent * depth), ' ');
}

void emit(std::ostream& out, const Json& v, int indent, int depth) {
  switch (v.type()) {
    case Json::value_t::number_float: {
      const double d = v.get<double>();
      out << (std::isfinite(d) ? format_double(d) : "null");
      return;
    }
    case Json::value_t::array: {
      if (v.empty()) {
        out << "[]";
        return;
      }
      out << '[';
      bool first = true;
      for (const Json& item : v) {
        if (!first) out << ',';
        first = false;
        newline(out, indent, depth + 1);
        emit(out, item, indent, depth + 1);
      }
      newline(out, indent, depth);
      out << ']';
      return;
    }
    case Json::value_t::object: {
      if (v.empty()) {
        out << "{}";
        return;
      }
      out << '{';
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) out << ',';
        first = false;
        newline(out, indent, depth + 1);
        out << Json(it.key()).dump() << (indent < 0 ? ":" : ": ");
        emit(out, it.value(), indent, depth + 1);
      }
      newline(out, indent, depth);
      out << '}';
      return;
    }
    default:
      out << v.dump();
  }
}

}  // namespace

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_json(std::ostream& out, const Json& value, int indent) {
  emit(out, value, indent, 0);
  out << '\n';
}

std::string to_json_string(const Json& value, int indent) {
  std::ostringstream out;
  write_json(out, value, indent);
  return out.str();
}

PolarGrid make_polar_grid(const DampedBlaschke& phi, int n_radial, int n_angular, double r_max) {
  if (n_radial < 3) throw DomainError("mesh: n_radial must be >= 3");
  if (n_angular < 8 || n_angular % 2 != 0) throw DomainError("mesh: n_angular must be even and >= 8");
  if (!(r_max > 0 && r_max < 1)) throw DomainError("mesh: r_max must lie in (0, 1)");
  PolarGrid grid;
  grid.n_angular = n_angular;
  for (int i = 0; i < n_radial; ++i) {
    const double t = static_cast<double>(i) / (n_radial - 1);
    grid.radii.push_back(r_max * (1 - (1 - t) * (1 - t)));
  }
  std::vector<bool> claimed(n_radial, false);
  for (int k = 1; k <= phi.K(); ++k) {
    const double target = std::abs(zero_location(k));
    if (!(target < r_max)) break;
    int best = -1;
    for (int i = 1; i + 1 < n_radial; ++i)
      if (!claimed[i] && (best < 0 || std::abs(grid.radii[i] - target) < std::abs(grid.radii[best] - target))) best = i;
    if (best < 0) break;
    claimed[best] = true;
    grid.radii[best] = target;
  }
  std::sort(grid.radii.begin(), grid.radii.end());
  return grid;
}

Complex grid_point(const PolarGrid& grid, int row, int col) {
  const double r = grid.radii.at(row);
  if (2 * col == grid.n_angular) return {-r, 0.0};
  return std::polar(r, 2 * std::numbers::pi * col / grid.n_angular);
}

Eigen::Matrix<double, Eigen::Dynamic, 3> project(const std::vector<SurfaceSample>& samples,
                                                 const MeshOptions& options) {
  Eigen::Matrix<double, Eigen::Dynamic, 3> out(samples.size(), 3);
  if (options.projection == Projection::DropCoordinate) {
    if (options.drop < 0 || options.drop > 3) throw DomainError("mesh: drop must lie in 0..3");
    for (std::size_t i = 0; i < samples.size(); ++i) {
      int c = 0;
      for (int d = 0; d < 4; ++d)
        if (d != options.drop) out(i, c++) = samples[i].Phi(d);
    }
    return out;
  }
  double radius = 0;
  for (const SurfaceSample& s : samples) radius = std::max(radius, s.Phi.norm());
  radius = radius > 0 ? 2 * radius : 1;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const Vector4& x = samples[i].Phi;
    out.row(i) = (radius / (radius - x(3))) * x.head<3>().transpose();
  }
  return out;
}

SurfaceMesh build_mesh(const MapParams& params, const PolarGrid& grid, const MeshOptions& options, int threads) {
  const int rows = static_cast<int>(grid.radii.size());
  const int cols = grid.n_angular;
  SurfaceMesh mesh;
  mesh.samples.resize(static_cast<std::size_t>(rows) * cols);
  parallel_for(mesh.samples.size(), threads, [&](std::size_t i) {
    const Complex z = grid_point(grid, static_cast<int>(i) / cols, static_cast<int>(i) % cols);
    mesh.samples[i] = surface(params, z);
  });
  mesh.vertices = project(mesh.samples, options);
  auto id = [cols](int r, int c) { return r * cols + (c % cols); };
  for (int c = 0; c < cols; ++c) mesh.faces.push_back({id(0, c), id(1, c), id(1, c + 1)});
  for (int r = 1; r + 1 < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      mesh.faces.push_back({id(r, c), id(r + 1, c), id(r + 1, c + 1)});
      mesh.faces.push_back({id(r, c), id(r + 1, c + 1), id(r, c + 1)});
    }
  return mesh;
}

void write_obj(std::ostream& out, const SurfaceMesh& mesh) {
  out << "# swlag surface mesh\n";
  for (Eigen::Index i = 0; i < mesh.vertices.rows(); ++i)
    out << "v " << format_double(mesh.vertices(i, 0)) << ' ' << format_double(mesh.vertices(i, 1)) << ' '
        << format_double(mesh.vertices(i, 2)) << '\n';
  for (const auto& f : mesh.faces) out << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << '\n';
}

void write_vertex_attributes(std::ostream& out, const SurfaceMesh& mesh) {
  out << "vertex,lagrangian_angle,conf_factor\n";
  for (std::size_t i = 0; i < mesh.samples.size(); ++i) {
    const SurfaceSample& s = mesh.samples[i];
    out << i << ',' << format_double(s.angle ? std::arg(*s.angle) : std::nan("")) << ','
        << format_double(s.conf_factor) << '\n';
  }
}

void write_sample_csv(std::ostream& out, const std::vector<SurfaceSample>& samples) {
  out << "x,y,Phi1,Phi2,Phi3,Phi4,angle,conf_factor\n";
  for (const SurfaceSample& s : samples) {
    out << format_double(s.z.real()) << ',' << format_double(s.z.imag());
    for (int d = 0; d < 4; ++d) out << ',' << format_double(s.Phi(d));
    out << ',' << format_double(s.angle ? std::arg(*s.angle) : std::nan("")) << ',' << format_double(s.conf_factor)
        << '\n';
  }
}

}  // namespace swlag
