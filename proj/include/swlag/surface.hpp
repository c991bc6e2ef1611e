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

#ifndef SWLAG_SURFACE_HPP
#define SWLAG_SURFACE_HPP

// The maps of the construction: u = rho^alpha g^j, v = i sqrt(j/(j+1)) rho^alpha g^{j+1},
// Phi = (u, -conj v) with alpha = sqrt(j^2 + j), and the Schoen-Wolfson cones.
// All first derivatives are analytic (Wirtinger form).

#include <Eigen/Core>

#include <cmath>
#include <complex>
#include <numeric>
#include <optional>

#include "swlag/complex.hpp"
#include "swlag/holo.hpp"

namespace swlag {

struct MapParams {
  int j = 1;
  DampedBlaschke phi;

  MapParams() = default;
  MapParams(int j_, DampedBlaschke phi_) : j(j_), phi(phi_) {
    if (j < 1) throw DomainError("MapParams: j must be >= 1");
  }
  double alpha() const { return std::sqrt(static_cast<double>(j) * j + j); }
};

struct ConeParams {
  int p = 1;
  int q = 2;

  ConeParams() = default;
  ConeParams(int p_, int q_) : p(p_), q(q_) {
    if (p < 1 || q < 1 || std::gcd(p, q) != 1) throw DomainError("ConeParams: p, q must be coprime positive integers");
  }
  double exponent() const { return std::sqrt(static_cast<double>(p) * q); }
};

/// A complex function with its Wirtinger derivatives d/dz and d/dzbar.
struct Wirtinger {
  Complex value;
  Complex dz;
  Complex dzbar;

  Complex dx() const { return dz + dzbar; }
  Complex dy() const { return Complex(0, 1) * (dz - dzbar); }
};

using Vector4 = Eigen::Vector4d;
using Jacobian = Eigen::Matrix<double, 2, 4>;  // rows: d/dx, d/dy

struct SurfaceSample {
  Complex z;
  Vector4 Phi = Vector4::Zero();         ///< (Re u, Im u, Re(-conj v), Im(-conj v))
  std::optional<Complex> angle;          ///< conj(g); empty where conf_factor = 0
  double conf_factor = 0;                ///< |d_x Phi|^2 = |d_y Phi|^2
  Jacobian jac = Jacobian::Zero();

  /// The Lagrangian angle. Throws AngleUndefined at branch and singular points.
  Complex lagrangian_angle() const;
  C2 dx() const { return {Complex(jac(0, 0), jac(0, 1)), Complex(jac(0, 2), jac(0, 3))}; }
  C2 dy() const { return {Complex(jac(1, 0), jac(1, 1)), Complex(jac(1, 2), jac(1, 3))}; }
  C2 position() const { return {Complex(Phi(0), Phi(1)), Complex(Phi(2), Phi(3))}; }
};

/// mu_j(x) = |x|^{alpha - j} x^j.
template <typename Scalar>
std::complex<Scalar> mu(int j, const std::complex<Scalar>& x) {
  if (x == std::complex<Scalar>(0)) return {};
  const Scalar alpha = std::sqrt(Scalar(j) * j + j);
  return std::polar(std::pow(std::abs(x), alpha), Scalar(j) * std::arg(x));
}

/// nu_j(x) = |x|^{alpha - (j+1)} x^{j+1}.
template <typename Scalar>
std::complex<Scalar> nu(int j, const std::complex<Scalar>& x) {
  if (x == std::complex<Scalar>(0)) return {};
  const Scalar alpha = std::sqrt(Scalar(j) * j + j);
  return std::polar(std::pow(std::abs(x), alpha), Scalar(j + 1) * std::arg(x));
}

Wirtinger u_eval(const MapParams& params, const HoloEval& h);
Wirtinger v_eval(const MapParams& params, const HoloEval& h);
Wirtinger u_eval(const MapParams& params, const Complex& z);
Wirtinger v_eval(const MapParams& params, const Complex& z);

/// Assembles Phi = (u, -conj v), its Jacobian, conformal factor and angle.
SurfaceSample surface(const MapParams& params, const Complex& z);
SurfaceSample surface(const MapParams& params, const HoloEval& h, const Complex& z);

/// Builds a sample from the derivatives of the two C^2 components.
SurfaceSample assemble_sample(const Complex& z, const C2& position, const C2& dx, const C2& dy);

/// Phi_{p,q}(r e^{i theta}) = r^{sqrt(pq)} / sqrt(p+q) (sqrt(q) e^{i p theta}, i sqrt(p) e^{-i q theta}).
struct ConeValue {
  C2 Phi;
  Complex angle;  ///< e^{i (p - q) theta}
};
ConeValue cone(const ConeParams& c, double r, double theta);

/// The cone as a surface sample at z, with analytic Jacobian.
SurfaceSample cone_sample(const ConeParams& c, const Complex& z);

/// Distance >= 0.02 from every p_k (k <= K) and |z + 1| >= 0.05.
bool is_safe_point(const DampedBlaschke& phi, const Complex& z);

}  // namespace swlag

#endif  // SWLAG_SURFACE_HPP
