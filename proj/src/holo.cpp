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

#include "swlag/holo.hpp"

#include <cmath>
#include <numbers>

#include "swlag/detail/summation.hpp"

namespace swlag {

namespace {

using detail::CompensatedSum;

/// Accumulates log B_k = log(1 + t_k), t_k = -e^{-k}(2 - w) / den_k.
void add_factor_log(const Complex& num, const Complex& den, const Complex& t, CompensatedSum& log_mod,
                    CompensatedSum& arg) {
  if (std::abs(t) <= 0.5) {
    log_mod.add(0.5 * std::log1p(t.real() * (2.0 + t.real()) + t.imag() * t.imag()));
    arg.add(std::atan2(t.imag(), 1.0 + t.real()));
  } else {
    log_mod.add(std::log(std::abs(num)) - std::log(std::abs(den)));
    arg.add(std::arg(num) - std::arg(den));
  }
}

// `numerator(k, e^{-k})` returns z - p_k in whichever form is exact for the caller.
template <typename Numerator>
HoloEval evaluate(const DampedBlaschke& phi, const Complex& w, Numerator numerator) {
  HoloEval out;
  CompensatedSum log_mod, arg;
  Complex dlog = 0;
  for (int k = phi.K(); k >= 1; --k) {
    const double eps = zero_offset(k);
    const Complex num = numerator(k, eps);
    if (num == Complex(0.0, 0.0)) {
      out.zero_index = k;
      continue;
    }
    const Complex den = w * (1.0 - eps) + eps;
    add_factor_log(num, den, -eps * (2.0 - w) / den, log_mod, arg);
    dlog += eps * (2.0 - eps) / (num * den);
  }

  const double s = phi.s();
  const double abs_w = std::abs(w);
  out.phase_trusted = abs_w >= 10.0 * zero_offset(phi.K());
  out.underflow = -std::cos(s * std::numbers::pi / 2) * std::pow(abs_w, -s) < -745.0;
  if (out.zero_index) {
    out.value = LogPolarValue::zero();
    out.g = 0;
    out.G = -std::numeric_limits<double>::infinity();
    return out;
  }

  const Complex w_minus_s = 1.0 / s_power_principal(w, s);
  log_mod.add(-w_minus_s.real());
  arg.add(-w_minus_s.imag());
  dlog += s * w_minus_s / w;

  out.value = LogPolarValue{log_mod.value(), arg.value()}.normalized();
  out.g = out.value.phase();
  out.G = log_mod.value();
  out.dlog = dlog;
  return out;
}

}  // namespace

DampedBlaschke::DampedBlaschke(double s, int K, double r_cert) : s_(s), K_(K), r_cert_(r_cert) {
  if (!(s > 0 && s < 1)) throw DomainError("DampedBlaschke: s must lie in (0, 1)");
  if (K < 1) throw DomainError("DampedBlaschke: K must be positive");
  if (!(r_cert > 0 && r_cert < 1)) throw DomainError("DampedBlaschke: r_cert must lie in (0, 1)");
  tail_bound_ = truncation_tail_bound(K, r_cert);
}

DampedBlaschke DampedBlaschke::certified(double s, double r_cert, double epsilon) {
  return DampedBlaschke(s, certified_truncation(r_cert, epsilon), r_cert);
}

double truncation_tail_bound(int K, double r_cert) {
  return 2.0 * std::exp(-static_cast<double>(K)) / ((std::numbers::e - 1.0) * (1.0 - r_cert));
}

int certified_truncation(double r_cert, double epsilon) {
  if (!(r_cert > 0 && r_cert < 1)) throw DomainError("certified_truncation: r_cert must lie in (0, 1)");
  if (!(epsilon > 0)) throw DomainError("certified_truncation: epsilon must be positive");
  int K = 1;
  while (truncation_tail_bound(K, r_cert) > epsilon) ++K;
  return K;
}

Complex HoloEval::log_deriv() const {
  if (zero_index) throw SingularPointError("phi'/phi requested at the zero p_" + std::to_string(*zero_index));
  return dlog;
}

HoloEval eval(const DampedBlaschke& phi, const Complex& z) {
  require_finite(z, "holo::eval");
  if (!(std::norm(z) < 1.0)) throw DomainError("holo::eval: |z| must be < 1");
  return evaluate(phi, z + 1.0, [&](int k, double) { return z - zero_location(k); });
}

HoloEval eval_offset(const DampedBlaschke& phi, const Complex& w) {
  require_finite(w, "holo::eval_offset");
  // |w - 1| < 1  <=>  |w|^2 < 2 Re w
  if (!(std::norm(w) < 2.0 * w.real())) throw DomainError("holo::eval_offset: z = w - 1 must satisfy |z| < 1");
  return evaluate(phi, w, [&](int, double eps) { return w - eps; });
}

Complex log_derivative_offset(const DampedBlaschke& phi, const Complex& w) {
  require_finite(w, "holo::log_derivative_offset");
  if (!(std::norm(w) < 2.0 * w.real())) throw DomainError("holo::log_derivative_offset: z = w - 1 must satisfy |z| < 1");
  Complex dlog = 0;
  for (int k = phi.K(); k >= 1; --k) {
    const double eps = zero_offset(k);
    const Complex num = w - eps;
    if (num == Complex(0.0, 0.0)) throw SingularPointError("phi'/phi requested at the zero p_" + std::to_string(k));
    dlog += eps * (2.0 - eps) / (num * (w * (1.0 - eps) + eps));
  }
  return dlog + phi.s() / (s_power_principal(w, phi.s()) * w);
}

BoundaryLogPolar boundary_log_polar(const DampedBlaschke& phi, double x) {
  if (!(x >= -std::numbers::pi && x < std::numbers::pi) || x == 0.0)
    throw DomainError("boundary_log_polar: offset must lie in [-pi, pi) \\ {0}");
  // w = 1 + e^{i(pi + x)} = 1 - e^{ix}
  const double half = std::sin(0.5 * x);
  const Complex w(2.0 * half * half, -std::sin(x));
  const double s = phi.s();
  const double mod_pow = std::pow(2.0 * std::abs(half), -s);
  const double arg_w = std::atan2(w.imag(), w.real());

  CompensatedSum unused, phase;
  for (int k = phi.K(); k >= 1; --k) {
    const double eps = zero_offset(k);
    const Complex num = w - eps;
    const Complex den = w * (1.0 - eps) + eps;
    add_factor_log(num, den, -eps * (2.0 - w) / den, unused, phase);
  }
  phase.add(mod_pow * std::sin(s * arg_w));
  return {-mod_pow * std::cos(s * arg_w), phase.value()};
}

Complex eval_boundary_offset(const DampedBlaschke& phi, double x, double delta) {
  if (!(delta >= 0)) throw DomainError("eval_boundary: delta must be >= 0");
  if (x == 0.0) {
    if (delta > 0) return 0.0;
    throw PhaseUndefined("eval_boundary: the phase of phi has no limit at theta = pi");
  }
  const BoundaryLogPolar b = boundary_log_polar(phi, x);
  return std::polar(delta == 0 ? 1.0 : std::exp(delta * b.log_rho), b.phase);
}

Complex eval_boundary(const DampedBlaschke& phi, double theta, double delta) {
  if (!(theta >= 0 && theta < 2 * std::numbers::pi)) throw DomainError("eval_boundary: theta must lie in [0, 2 pi)");
  return eval_boundary_offset(phi, theta - std::numbers::pi, delta);
}

}  // namespace swlag
