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

#ifndef SWLAG_DIFFGEO_HPP
#define SWLAG_DIFFGEO_HPP

// Verification machinery for the identities of the construction: weak
// divergence residuals against compactly supported test functions, winding
// numbers and delta-mass fluxes of the S^1-valued map g, and the pointwise
// conformality / Lagrangian / quaternionic relations of Phi.

#include <array>
#include <functional>
#include <optional>
#include <string>

#include "swlag/complex.hpp"
#include "swlag/holo.hpp"
#include "swlag/surface.hpp"

namespace swlag {

enum class BumpProfile {
  Cubic,  ///< tau(z) = (1 - |z - c|^2 / R^2)^3 inside the cell, C^2 across its boundary
};

struct TestCell {
  Complex center;
  double radius = 0.1;
  BumpProfile bump = BumpProfile::Cubic;
  int n_radial = 32;
  int n_angular = 64;
  /// When set, quadrature is polar about this point and graded toward it.
  std::optional<Complex> singularity;
};

struct ResidualReport {
  std::string identity_name;
  TestCell cell;
  double residual = 0;  ///< |int F . grad tau|
  double scale = 0;     ///< int |F| |grad tau|
  int nodes_used = 0;

  double relative() const { return residual / scale; }
};

/// (F_x, F_y), each component complex.
using VectorField = std::function<std::array<Complex, 2>(const Complex&)>;

double bump_value(const TestCell& cell, const Complex& z);
std::array<double, 2> bump_gradient(const TestCell& cell, const Complex& z);

/// |int_cell F . grad tau| by tensor Gauss-Legendre (radial) x trapezoid
/// (angular) quadrature. Cells with a singularity use polar coordinates about
/// it with radial nodes graded as t^3.
ResidualReport weak_residual_div(const VectorField& field, const TestCell& cell, std::string identity_name = {});

/// g grad u.
VectorField field_g_grad_u(const MapParams& params);
/// i conj(g) grad g (= -grad arg phi).
VectorField field_i_gbar_grad_g(const DampedBlaschke& phi);
/// grad^perp G with G = log rho.
VectorField field_perp_grad_G(const DampedBlaschke& phi);

struct WindingResult {
  int winding = 0;
  double defect = 0;  ///< |total / 2 pi - winding|
  int steps = 0;
};

using CircleMap = std::function<Complex(const Complex&)>;

/// Degree of an S^1-valued map along the circle |z - center| = radius. The
/// step count is doubled while consecutive samples differ by >= pi/2 in
/// argument or the rounding defect exceeds 0.1.
WindingResult winding_number(const CircleMap& map, const Complex& center, double radius, int n_steps);

/// Winding of g = phi/|phi|. The circle must stay radius/10 away from every p_k.
WindingResult winding_of_g(const DampedBlaschke& phi, const Complex& center, double radius, int n_steps = 256);

/// Flux int d_nu G ds over the circle: 2 pi times the number of enclosed
/// zeros. Trapezoidal rule with step doubling until converged. The circle
/// must stay radius/100 away from every p_k.
double delta_mass(const DampedBlaschke& phi, const Complex& center, double radius, int n_steps = 256);

/// |d_x Phi - conj(g) J d_y Phi| / |d_x Phi|. Throws AngleUndefined at branch points.
double quaternionic_check(const SurfaceSample& sample);

/// Pointwise defects of weak conformality and of the Lagrangian condition.
struct ConformalResiduals {
  double inner;     ///< <d_x Phi, d_y Phi>
  double norm_gap;  ///< |d_x Phi|^2 - |d_y Phi|^2
  double omega;     ///< omega(d_x Phi, d_y Phi)
};
ConformalResiduals conformal_residuals(const SurfaceSample& sample);

}  // namespace swlag

#endif  // SWLAG_DIFFGEO_HPP
