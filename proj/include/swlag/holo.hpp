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

#ifndef SWLAG_HOLO_HPP
#define SWLAG_HOLO_HPP

// The holomorphic function
//
//   phi(z) = exp(-(z + 1)^{-s}) * prod_{k=1}^{K} (z - p_k) / (1 - p_k z),
//
// evaluated in log-polar form so that the modulus may underflow near z = -1
// while the phase g = phi / |phi| and G = log |phi| stay available.

#include <optional>
#include <string>

#include "swlag/complex.hpp"

namespace swlag {

/// Damped Blaschke product with zeros p_k = -1 + e^{-k}, truncated at K.
class DampedBlaschke {
 public:
  static constexpr double kDefaultS = 0.25;
  static constexpr int kDefaultK = 60;
  static constexpr double kDefaultRCert = 0.995;

  DampedBlaschke() : DampedBlaschke(kDefaultS, kDefaultK) {}
  DampedBlaschke(double s, int K, double r_cert = kDefaultRCert);

  /// Smallest K whose closed-form tail certificate on |z| <= r_cert is <= epsilon.
  static DampedBlaschke certified(double s, double r_cert, double epsilon);

  double s() const { return s_; }
  int K() const { return K_; }
  double r_cert() const { return r_cert_; }
  /// sum_{k>K} sup_{|z|<=r_cert} |1 - B_k(z)|, bounded by 2 e^{-K} / ((e-1)(1-r_cert)).
  double tail_bound() const { return tail_bound_; }

 private:
  double s_;
  int K_;
  double r_cert_;
  double tail_bound_;
};

/// 2 e^{-K} / ((e - 1)(1 - r_cert)).
double truncation_tail_bound(int K, double r_cert);

/// Smallest K >= 1 with truncation_tail_bound(K, r_cert) <= epsilon.
int certified_truncation(double r_cert, double epsilon);

struct HoloEval {
  LogPolarValue value;   ///< phi
  Complex g;             ///< phi / |phi|; 0 at a zero
  double G = 0;          ///< log |phi|; -inf at a zero
  std::optional<int> zero_index;  ///< k when the point is exactly p_k
  bool phase_trusted = true;      ///< |z + 1| >= 10 e^{-K}
  bool underflow = false;         ///< damping bound below e^{-745}

  bool is_zero() const { return zero_index.has_value(); }
  Complex dlog;  ///< phi'/phi, unchecked; zero at a zero of phi

  /// phi'/phi. Throws SingularPointError at a zero.
  Complex log_deriv() const;
};

/// phi at |z| < 1.
HoloEval eval(const DampedBlaschke& phi, const Complex& z);

/// phi at z = w - 1, where w = z + 1 is given exactly. Resolves points
/// arbitrarily close to -1 (the zeros p_k for large k sit at w = e^{-k}).
HoloEval eval_offset(const DampedBlaschke& phi, const Complex& w);

/// phi'/phi at z = w - 1 without the log-polar value. Throws SingularPointError at a zero.
Complex log_derivative_offset(const DampedBlaschke& phi, const Complex& w);

/// log rho and the phase angle of phi on the unit circle at theta = pi + x,
/// x in [-pi, pi), x != 0. |P| = 1 there, so only the damping term and the
/// phase of the truncated product enter.
struct BoundaryLogPolar {
  double log_rho;
  double phase;
};
BoundaryLogPolar boundary_log_polar(const DampedBlaschke& phi, double x);

/// rho^delta g at e^{i theta}, theta in [0, 2 pi). At theta = pi returns 0 if
/// delta > 0 and throws PhaseUndefined if delta = 0.
Complex eval_boundary(const DampedBlaschke& phi, double theta, double delta);

/// Same as eval_boundary with theta = pi + x; exact in x near the accumulation point.
Complex eval_boundary_offset(const DampedBlaschke& phi, double x, double delta);

}  // namespace swlag

#endif  // SWLAG_HOLO_HPP
