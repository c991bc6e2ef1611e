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

#ifndef SWLAG_TESTS_ORACLE_HPP
#define SWLAG_TESTS_ORACLE_HPP

// 50-digit reference implementations written directly from the closed forms,
// independent of the library's log-polar evaluation.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <complex>

namespace oracle {

using Real = boost::multiprecision::cpp_bin_float_50;
using Cplx = boost::multiprecision::cpp_complex_50;

inline Cplx hp(const std::complex<double>& z) { return Cplx(Real(z.real()), Real(z.imag())); }
inline std::complex<double> lo(const Cplx& z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

inline Real p_k(int k) { return Real(-1) + exp(Real(-k)); }

/// (z - p_k) / (1 - p_k z).
inline Cplx blaschke(const Cplx& z, int k) {
  const Real p = p_k(k);
  return (z - p) / (Real(1) - p * z);
}

/// Principal (z + 1)^{-s} via exp(-s log(z + 1)).
inline Cplx damping_exponent(const Cplx& z, double s) { return exp(-Real(s) * log(z + Real(1))); }

/// phi(z) = exp(-(z + 1)^{-s}) prod_{k <= K} B_k(z).
inline Cplx phi(const std::complex<double>& z, double s, int K) {
  const Cplx Z = hp(z);
  Cplx out = exp(-damping_exponent(Z, s));
  for (int k = 1; k <= K; ++k) out *= blaschke(Z, k);
  return out;
}

/// log |phi(z)| as a sum of logs (no underflow).
inline Real log_rho(const std::complex<double>& z, double s, int K) {
  const Cplx Z = hp(z);
  Real out = -damping_exponent(Z, s).real();
  for (int k = 1; k <= K; ++k) out += log(abs(blaschke(Z, k)));
  return out;
}

/// phi'/phi = s (z + 1)^{-s-1} + sum (1 - p_k^2) / ((z - p_k)(1 - p_k z)).
inline Cplx log_derivative(const std::complex<double>& z, double s, int K) {
  const Cplx Z = hp(z);
  Cplx out = Real(s) * damping_exponent(Z, s) / (Z + Real(1));
  for (int k = 1; k <= K; ++k) {
    const Real p = p_k(k);
    out += (Real(1) - p * p) / ((Z - p) * (Real(1) - p * Z));
  }
  return out;
}

/// sum_{k > K} 2 e^{-k} / (1 - r), summed term by term to 400 terms.
inline Real tail_sum(int K, double r) {
  Real out = 0;
  for (int k = K + 1; k <= K + 400; ++k) out += Real(2) * exp(Real(-k)) / (Real(1) - Real(r));
  return out;
}

}  // namespace oracle

#endif  // SWLAG_TESTS_ORACLE_HPP
