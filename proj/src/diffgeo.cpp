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

#include "swlag/diffgeo.hpp"

#include <cmath>
#include <numbers>

#include "swlag/detail/summation.hpp"
#include "swlag/quadrature.hpp"

namespace swlag {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;
constexpr int kMaxSteps = 1 << 20;

void check_cell(const TestCell& cell) {
  require_finite(cell.center, "TestCell");
  if (!(cell.radius > 0)) throw DomainError("TestCell: radius must be positive");
  if (!(std::abs(cell.center) + cell.radius < 1.0)) throw DomainError("TestCell: closure must lie inside the unit disc");
  if (cell.n_radial < 8 || cell.n_angular < 8) throw QuadratureError("TestCell: at least 8x8 nodes are required");
  if (cell.singularity && !(std::abs(*cell.singularity - cell.center) < cell.radius))
    throw DomainError("TestCell: singularity must lie inside the cell");
}

void check_circle(const DampedBlaschke& phi, const Complex& center, double radius, double clearance) {
  require_finite(center, "circle");
  if (!(radius > 0)) throw DomainError("circle: radius must be positive");
  if (!(std::abs(center) + radius < 1.0)) throw DomainError("circle: must lie inside the unit disc");
  for (int k = 1; k <= phi.K(); ++k)
    if (std::abs(std::abs(zero_location(k) - center) - radius) < clearance * radius)
      throw DomainError("circle passes too close to p_" + std::to_string(k));
}

}  // namespace

double bump_value(const TestCell& cell, const Complex& z) {
  const double q = std::norm(z - cell.center) / (cell.radius * cell.radius);
  if (q >= 1) return 0;
  const double a = 1 - q;
  return a * a * a;
}

std::array<double, 2> bump_gradient(const TestCell& cell, const Complex& z) {
  const Complex d = z - cell.center;
  const double r2 = cell.radius * cell.radius;
  const double q = std::norm(d) / r2;
  if (q >= 1) return {0, 0};
  const double c = -6 * (1 - q) * (1 - q) / r2;
  return {c * d.real(), c * d.imag()};
}

ResidualReport weak_residual_div(const VectorField& field, const TestCell& cell, std::string identity_name) {
  check_cell(cell);
  const GaussRule& rule = gauss_legendre(cell.n_radial);
  const double dtheta = kTwoPi / cell.n_angular;
  detail::CompensatedSum re, im, scale;

  auto accumulate = [&](const Complex& z, double weight) {
    const auto F = field(z);
    const auto grad = bump_gradient(cell, z);
    const Complex dot = F[0] * grad[0] + F[1] * grad[1];
    re.add(weight * dot.real());
    im.add(weight * dot.imag());
    scale.add(weight * std::sqrt(std::norm(F[0]) + std::norm(F[1])) * std::hypot(grad[0], grad[1]));
  };

  for (int m = 0; m < cell.n_angular; ++m) {
    const Complex dir = std::polar(1.0, m * dtheta);
    if (!cell.singularity) {
      for (int i = 0; i < cell.n_radial; ++i) {
        const double r = 0.5 * cell.radius * (rule.nodes(i) + 1);
        accumulate(cell.center + r * dir, 0.5 * cell.radius * rule.weights(i) * r * dtheta);
      }
    } else {
      // ray from the singularity to the cell boundary
      const Complex d = *cell.singularity - cell.center;
      const double b = (std::conj(d) * dir).real();
      const double rho_max = -b + std::sqrt(b * b + cell.radius * cell.radius - std::norm(d));
      for (int i = 0; i < cell.n_radial; ++i) {
        const double t = 0.5 * (rule.nodes(i) + 1);
        const double rho = rho_max * t * t * t;
        const double jac = 0.5 * rule.weights(i) * 3 * rho_max * t * t;
        accumulate(*cell.singularity + rho * dir, jac * rho * dtheta);
      }
    }
  }

  ResidualReport out;
  out.identity_name = std::move(identity_name);
  out.cell = cell;
  out.residual = std::hypot(re.value(), im.value());
  out.scale = scale.value();
  out.nodes_used = cell.n_radial * cell.n_angular;
  return out;
}

VectorField field_g_grad_u(const MapParams& params) {
  return [params](const Complex& z) -> std::array<Complex, 2> {
    const HoloEval h = eval(params.phi, z);
    const Wirtinger u = u_eval(params, h);
    return {h.g * u.dx(), h.g * u.dy()};
  };
}

VectorField field_i_gbar_grad_g(const DampedBlaschke& phi) {
  return [phi](const Complex& z) -> std::array<Complex, 2> {
    const Complex L = eval(phi, z).log_deriv();
    return {-L.imag(), -L.real()};
  };
}

VectorField field_perp_grad_G(const DampedBlaschke& phi) {
  return [phi](const Complex& z) -> std::array<Complex, 2> {
    const Complex L = eval(phi, z).log_deriv();
    return {L.imag(), L.real()};
  };
}

WindingResult winding_number(const CircleMap& map, const Complex& center, double radius, int n_steps) {
  if (n_steps < 4) throw DomainError("winding_number: n_steps must be >= 4");
  for (int n = n_steps;; n *= 2) {
    if (n > kMaxSteps) throw UnwrapError("winding_number: step doubling exceeded 2^20 steps");
    const Complex first = map(center + radius);
    Complex prev = first;
    double total = 0;
    bool too_coarse = false;
    for (int m = 1; m <= n && !too_coarse; ++m) {
      const Complex cur = m == n ? first : map(center + std::polar(radius, m * kTwoPi / n));
      if (cur == Complex(0.0, 0.0)) throw DomainError("winding_number: map vanishes on the circle");
      const double step = std::arg(cur / prev);
      if (std::abs(step) >= std::numbers::pi / 2) too_coarse = true;
      total += step;
      prev = cur;
    }
    if (too_coarse) continue;
    const double turns = total / kTwoPi;
    const double rounded = std::round(turns);
    const double defect = std::abs(turns - rounded);
    if (defect > 0.1) continue;
    return {static_cast<int>(rounded), defect, n};
  }
}

WindingResult winding_of_g(const DampedBlaschke& phi, const Complex& center, double radius, int n_steps) {
  check_circle(phi, center, radius, 0.1);
  return winding_number([&](const Complex& z) { return eval(phi, z).g; }, center, radius, n_steps);
}

double delta_mass(const DampedBlaschke& phi, const Complex& center, double radius, int n_steps) {
  check_circle(phi, center, radius, 0.01);
  if (n_steps < 4) throw DomainError("delta_mass: n_steps must be >= 4");
  auto flux = [&](int n) {
    detail::CompensatedSum sum;
    for (int m = 0; m < n; ++m) {
      const Complex dir = std::polar(1.0, m * kTwoPi / n);
      sum.add((eval(phi, center + radius * dir).log_deriv() * dir).real());
    }
    return sum.value() * radius * kTwoPi / n;
  };
  double previous = flux(n_steps);
  for (int n = 2 * n_steps; n <= kMaxSteps; n *= 2) {
    const double current = flux(n);
    if (std::abs(current - previous) <= 1e-13 * std::max(1.0, std::abs(current))) return current;
    previous = current;
  }
  throw UnwrapError("delta_mass: trapezoidal flux did not converge within 2^20 steps");
}

double quaternionic_check(const SurfaceSample& sample) {
  const Complex angle = sample.lagrangian_angle();
  const Quaternion x = to_quaternion(sample.dx());
  const Quaternion rhs = complex_left_mul(angle, quat_apply_J(to_quaternion(sample.dy())));
  return (x.coeffs() - rhs.coeffs()).norm() / x.coeffs().norm();
}

ConformalResiduals conformal_residuals(const SurfaceSample& sample) {
  const C2 x = sample.dx(), y = sample.dy();
  const Complex herm = std::conj(x.z1) * y.z1 + std::conj(x.z2) * y.z2;
  return {herm.real(), std::norm(x.z1) + std::norm(x.z2) - std::norm(y.z1) - std::norm(y.z2), herm.imag()};
}

}  // namespace swlag
