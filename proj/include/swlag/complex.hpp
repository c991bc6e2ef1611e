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

#ifndef SWLAG_COMPLEX_HPP
#define SWLAG_COMPLEX_HPP

// Complex and quaternion arithmetic shared by every other module: the
// principal s-power, single Blaschke factors of the zero family
// p_k = -1 + e^{-k}, the log-polar value type and the C^2 <-> H dictionary.

#include <Eigen/Geometry>

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "swlag/errors.hpp"

namespace swlag {

using Complex = std::complex<double>;
using Quaternion = Eigen::Quaternion<double>;

/// A point of C^2, the first and second complex coordinates.
struct C2 {
  Complex z1;
  Complex z2;
};

template <typename Scalar>
bool is_finite(const std::complex<Scalar>& z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline void require_finite(const Complex& z, const char* what) {
  if (!is_finite(z)) throw DomainError(std::string(what) + ": non-finite complex input");
}

/// Wraps an angle into (-pi, pi].
template <typename Scalar>
Scalar normalize_angle(Scalar a) {
  constexpr Scalar two_pi = 2 * std::numbers::pi_v<Scalar>;
  Scalar r = std::remainder(a, two_pi);
  if (r <= -std::numbers::pi_v<Scalar>) r += two_pi;
  return r;
}

/// A complex number stored as (log |z|, arg z). log_mod = -inf encodes an
/// exact zero, in which case arg is meaningless.
template <typename Scalar>
struct LogPolar {
  Scalar log_mod = -std::numeric_limits<Scalar>::infinity();
  Scalar arg = 0;

  static LogPolar zero() { return {}; }

  static LogPolar from_complex(const std::complex<double>& z) {
    if (z == std::complex<double>(0.0, 0.0)) return zero();
    const Scalar re = z.real(), im = z.imag();
    return {std::log(std::hypot(re, im)), std::atan2(im, re)};
  }

  bool is_zero() const { return log_mod == -std::numeric_limits<Scalar>::infinity(); }

  /// e^{log_mod + i arg}; underflows to 0 gracefully.
  std::complex<double> to_complex() const {
    if (is_zero()) return {0.0, 0.0};
    const Scalar m = std::exp(log_mod);
    return {static_cast<double>(m * std::cos(arg)), static_cast<double>(m * std::sin(arg))};
  }

  /// The unit-modulus phase e^{i arg}; zero for the zero value.
  std::complex<double> phase() const {
    if (is_zero()) return {0.0, 0.0};
    return {static_cast<double>(std::cos(arg)), static_cast<double>(std::sin(arg))};
  }

  LogPolar normalized() const { return is_zero() ? zero() : LogPolar{log_mod, normalize_angle(arg)}; }

  LogPolar& operator*=(const LogPolar& o) {
    if (is_zero() || o.is_zero()) return *this = zero();
    log_mod += o.log_mod;
    arg += o.arg;
    return *this;
  }
  friend LogPolar operator*(LogPolar a, const LogPolar& b) { return a *= b; }

  /// Real power |z|^a e^{i b arg z}: the building block of mu_j and nu_j.
  LogPolar scaled(Scalar modulus_power, Scalar phase_power) const {
    if (is_zero()) return zero();
    return {modulus_power * log_mod, phase_power * arg};
  }
};

// Extended precision for the stored logarithm keeps the round trip within a
// few ulp even for |z| far from 1.
using LogPolarValue = LogPolar<long double>;

/// Principal branch w^s = exp(s (log|w| + i Arg w)), cut along (-inf, 0].
/// On the positive axis the real power is used so the two agree exactly.
template <typename Scalar>
std::complex<Scalar> s_power_principal(const std::complex<Scalar>& w, Scalar s) {
  if (!is_finite(w) || !std::isfinite(s)) throw DomainError("s_power_principal: non-finite input");
  if (!(s > 0 && s < 1)) throw DomainError("s_power_principal: exponent must lie in (0, 1)");
  if (w.imag() == 0) {
    if (w.real() > 0) return {std::pow(w.real(), s), Scalar(0)};
    throw BranchCutError("s_power_principal: argument on the branch cut (-inf, 0]");
  }
  return std::exp(s * std::log(w));
}

/// e^{-k}: distance of the k-th zero from -1. Exact to double rounding for
/// every k, unlike -1 + e^{-k} which collapses to -1 beyond k ~ 37.
inline double zero_offset(int k) { return std::exp(-static_cast<double>(k)); }

/// p_k = -1 + e^{-k}.
inline Complex zero_location(int k) {
  if (k < 1) throw DomainError("zero_location: k must be positive");
  return {-1.0 + zero_offset(k), 0.0};
}

/// (z - p_k) / (1 - p_k z) for |z| <= 1. The denominator is evaluated as
/// (1 + z)(1 - e^{-k}) + e^{-k}, which has no cancellation near z = -1.
template <typename Scalar>
std::complex<Scalar> blaschke_factor(const std::complex<Scalar>& z, int k) {
  if (k < 1) throw DomainError("blaschke_factor: k must be positive");
  if (!is_finite(z)) throw DomainError("blaschke_factor: non-finite input");
  if (std::abs(z) > Scalar(1) + 8 * std::numeric_limits<Scalar>::epsilon())
    throw DomainError("blaschke_factor: |z| > 1");
  const Scalar eps = std::exp(-Scalar(k));
  const Scalar pk = Scalar(-1) + eps;
  const std::complex<Scalar> w = z + Scalar(1);
  return (z - pk) / (w * (Scalar(1) - eps) + eps);
}

// Quaternions. C^2 is identified with H through
//   (z1, z2)  <->  z1 - z2 J,
// so that I acts as multiplication by i on both coordinates and left
// multiplication by J reads J(z1, z2) = (conj z2, -conj z1). With this
// orientation the relation dPhi/dx = conj(g) J dPhi/dy holds for Phi = (u, -conj v)
// and its Lagrangian angle conj(g) agrees with the determinant formula.

inline Quaternion to_quaternion(const C2& v) {
  return Quaternion(v.z1.real(), v.z1.imag(), -v.z2.real(), -v.z2.imag());
}

inline C2 from_quaternion(const Quaternion& q) {
  return {Complex(q.w(), q.x()), Complex(-q.y(), -q.z())};
}

inline Quaternion quat_mul(const Quaternion& a, const Quaternion& b) { return a * b; }

inline Quaternion quat_apply_J(const Quaternion& v) { return Quaternion(0, 0, 1, 0) * v; }

/// c v with c = a + bI.
inline Quaternion complex_left_mul(const Complex& c, const Quaternion& v) {
  return Quaternion(c.real(), c.imag(), 0, 0) * v;
}

}  // namespace swlag

#endif  // SWLAG_COMPLEX_HPP
