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

#include "swlag/surface.hpp"

#include <cmath>

namespace swlag {

namespace {

// rho^alpha e^{i n arg phi} with the Wirtinger derivatives of the exponent pair
// (alpha + n)/2 log phi + (alpha - n)/2 conj(log phi).
Wirtinger power_map(const HoloEval& h, double alpha, int n, const Complex& prefactor) {
  if (h.is_zero()) return {};
  const double mod = std::exp(alpha * h.G);
  const Complex value = prefactor * std::polar(mod, static_cast<double>(n * h.value.arg));
  const Complex L = h.dlog;
  return {value, value * (0.5 * (alpha + n)) * L, value * (0.5 * (alpha - n)) * std::conj(L)};
}

}  // namespace

Complex SurfaceSample::lagrangian_angle() const {
  if (!angle) throw AngleUndefined("Lagrangian angle undefined where the conformal factor vanishes");
  return *angle;
}

Wirtinger u_eval(const MapParams& params, const HoloEval& h) {
  return power_map(h, params.alpha(), params.j, 1.0);
}

Wirtinger v_eval(const MapParams& params, const HoloEval& h) {
  const double c = std::sqrt(static_cast<double>(params.j) / (params.j + 1));
  return power_map(h, params.alpha(), params.j + 1, Complex(0, c));
}

Wirtinger u_eval(const MapParams& params, const Complex& z) { return u_eval(params, eval(params.phi, z)); }
Wirtinger v_eval(const MapParams& params, const Complex& z) { return v_eval(params, eval(params.phi, z)); }

SurfaceSample assemble_sample(const Complex& z, const C2& position, const C2& dx, const C2& dy) {
  SurfaceSample out;
  out.z = z;
  out.Phi << position.z1.real(), position.z1.imag(), position.z2.real(), position.z2.imag();
  out.jac << dx.z1.real(), dx.z1.imag(), dx.z2.real(), dx.z2.imag(),  //
      dy.z1.real(), dy.z1.imag(), dy.z2.real(), dy.z2.imag();
  out.conf_factor = 0.5 * out.jac.squaredNorm();
  if (out.conf_factor > 0) out.angle = (dx.z1 * dy.z2 - dx.z2 * dy.z1) / out.conf_factor;
  return out;
}

SurfaceSample surface(const MapParams& params, const HoloEval& h, const Complex& z) {
  const Wirtinger u = u_eval(params, h);
  const Wirtinger v = v_eval(params, h);
  return assemble_sample(z, {u.value, -std::conj(v.value)}, {u.dx(), -std::conj(v.dx())},
                         {u.dy(), -std::conj(v.dy())});
}

SurfaceSample surface(const MapParams& params, const Complex& z) { return surface(params, eval(params.phi, z), z); }

ConeValue cone(const ConeParams& c, double r, double theta) {
  if (!(r >= 0)) throw DomainError("cone: r must be >= 0");
  const double scale = std::pow(r, c.exponent()) / std::sqrt(static_cast<double>(c.p + c.q));
  return {{std::polar(scale * std::sqrt(static_cast<double>(c.q)), c.p * theta),
           Complex(0, 1) * std::polar(scale * std::sqrt(static_cast<double>(c.p)), -c.q * theta)},
          std::polar(1.0, (c.p - c.q) * theta)};
}

SurfaceSample cone_sample(const ConeParams& c, const Complex& z) {
  const double r = std::abs(z);
  if (r == 0) return assemble_sample(z, {}, {}, {});
  const double theta = std::arg(z);
  const C2 Phi = cone(c, r, theta).Phi;
  const double a = c.exponent();
  const C2 d_r{a / r * Phi.z1, a / r * Phi.z2};
  const C2 d_theta{Complex(0, c.p) * Phi.z1, Complex(0, -c.q) * Phi.z2};
  const double ct = std::cos(theta), st = std::sin(theta);
  const C2 dx{ct * d_r.z1 - st / r * d_theta.z1, ct * d_r.z2 - st / r * d_theta.z2};
  const C2 dy{st * d_r.z1 + ct / r * d_theta.z1, st * d_r.z2 + ct / r * d_theta.z2};
  return assemble_sample(z, Phi, dx, dy);
}

bool is_safe_point(const DampedBlaschke& phi, const Complex& z) {
  if (!(std::norm(z) < 1.0) || std::abs(z + 1.0) < 0.05) return false;
  for (int k = 1; k <= phi.K(); ++k)
    if (std::abs(z - zero_location(k)) < 0.02) return false;
  return true;
}

}  // namespace swlag
