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

#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "oracle.hpp"
#include "swlag/complex.hpp"

using namespace swlag;

TEST_CASE("s-power on the positive axis is the real power") {
  CHECK(s_power_principal(Complex(1, 0), 0.25) == Complex(1, 0));
  CHECK(s_power_principal(Complex(4, 0), 0.5) == Complex(2, 0));
  CHECK(s_power_principal(Complex(7.3, 0), 0.3).real() == std::pow(7.3, 0.3));
}

TEST_CASE("s-power of i matches the polar form") {
  const Complex w = s_power_principal(Complex(0, 1), 0.5);
  const oracle::Cplx ref = exp(oracle::Real("0.5") * log(oracle::Cplx(0, 1)));
  CHECK(std::abs(w - oracle::lo(ref)) < 1e-15);
  CHECK(std::abs(w - Complex(std::sqrt(0.5), std::sqrt(0.5))) < 1e-15);
}

TEST_CASE("s-power commutes with conjugation and rejects the cut") {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> n;
  for (int i = 0; i < 1000; ++i) {
    const Complex w(n(rng), n(rng));
    const double s = 0.05 + 0.9 * std::abs(std::sin(n(rng)));
    CHECK(std::abs(s_power_principal(std::conj(w), s) - std::conj(s_power_principal(w, s))) <=
          4 * std::numeric_limits<double>::epsilon() * std::abs(s_power_principal(w, s)));
  }
  CHECK_THROWS_AS(s_power_principal(Complex(-2, 0), 0.5), BranchCutError);
  CHECK_THROWS_AS(s_power_principal(Complex(0, 0), 0.5), BranchCutError);
  CHECK_THROWS_AS(s_power_principal(Complex(1, 1), 1.0), DomainError);
  CHECK_THROWS_AS(s_power_principal(Complex(1, 1), 0.0), DomainError);
  CHECK_THROWS_AS(s_power_principal(Complex(std::nan(""), 1), 0.5), DomainError);
}

TEST_CASE("blaschke factor values") {
  CHECK(std::abs(blaschke_factor(Complex(0, 0), 1) - Complex(1 - std::exp(-1.0), 0)) < 1e-15);
  CHECK(blaschke_factor(zero_location(1), 1) == Complex(0, 0));
  const Complex z = std::polar(1.0, std::numbers::pi / 3);
  CHECK(std::abs(std::abs(blaschke_factor(z, 2)) - 1) < 1e-14);
  CHECK(std::abs(blaschke_factor(z, 2) - oracle::lo(oracle::blaschke(oracle::hp(z), 2))) < 1e-15);
  CHECK_THROWS_AS(blaschke_factor(Complex(1.1, 0), 1), DomainError);
}

TEST_CASE("blaschke factors are unimodular on the circle") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> theta(0, 2 * std::numbers::pi);
  double worst = 0;
  for (int i = 0; i < 1000; ++i)
    for (int k = 1; k <= 40; ++k) worst = std::max(worst, std::abs(std::abs(blaschke_factor(std::polar(1.0, theta(rng)), k)) - 1));
  CHECK(worst <= 1e-13);
}

TEST_CASE("quaternion table") {
  const Quaternion I(0, 1, 0, 0), J(0, 0, 1, 0), K(0, 0, 0, 1);
  CHECK(quat_mul(I, J).coeffs().isApprox(K.coeffs()));
  CHECK(quat_mul(J, J).coeffs().isApprox(Quaternion(-1, 0, 0, 0).coeffs()));
  CHECK(quat_mul(K, K).coeffs().isApprox(Quaternion(-1, 0, 0, 0).coeffs()));
  CHECK(quat_mul(quat_mul(I, J), K).coeffs().isApprox(Quaternion(-1, 0, 0, 0).coeffs()));
}

TEST_CASE("apply_J sends (1, 0) to the vector whose quaternion is J") {
  const Quaternion q = quat_apply_J(to_quaternion(C2{1.0, 0.0}));
  CHECK(q.coeffs().isApprox(Quaternion(0, 0, 1, 0).coeffs()));
  const C2 v = from_quaternion(q);
  CHECK(v.z1 == Complex(0, 0));
  CHECK(v.z2 == Complex(-1, 0));
}

TEST_CASE("C^2 dictionary: I is multiplication by i and J acts antilinearly") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> n;
  for (int i = 0; i < 100; ++i) {
    const C2 v{Complex(n(rng), n(rng)), Complex(n(rng), n(rng))};
    const C2 iv = from_quaternion(complex_left_mul(Complex(0, 1), to_quaternion(v)));
    CHECK(std::abs(iv.z1 - Complex(0, 1) * v.z1) < 1e-14);
    CHECK(std::abs(iv.z2 - Complex(0, 1) * v.z2) < 1e-14);
    const C2 jv = from_quaternion(quat_apply_J(to_quaternion(v)));
    CHECK(std::abs(jv.z1 - std::conj(v.z2)) < 1e-14);
    CHECK(std::abs(jv.z2 + std::conj(v.z1)) < 1e-14);
  }
}

TEST_CASE("quaternion product is associative") {
  std::mt19937_64 rng(4);
  std::normal_distribution<double> n;
  auto random_q = [&] { return Quaternion(n(rng), n(rng), n(rng), n(rng)); };
  double worst = 0;
  for (int i = 0; i < 10000; ++i) {
    const Quaternion a = random_q(), b = random_q(), c = random_q();
    worst = std::max(worst, (quat_mul(quat_mul(a, b), c).coeffs() - quat_mul(a, quat_mul(b, c)).coeffs()).cwiseAbs().maxCoeff());
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("log-polar round trip") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> e(-300, 300), a(-std::numbers::pi, std::numbers::pi);
  for (int i = 0; i < 1000; ++i) {
    const Complex z = std::polar(std::pow(10.0, e(rng) / 3), a(rng));
    const Complex back = LogPolarValue::from_complex(z).to_complex();
    CHECK(std::abs(back - z) <= 4 * std::numeric_limits<double>::epsilon() * std::abs(z));
  }
  CHECK(LogPolarValue::from_complex(Complex(0, 0)).is_zero());
  CHECK(LogPolarValue::zero().to_complex() == Complex(0, 0));
  const LogPolarValue v{-1e6L, 0.5L};
  CHECK(v.to_complex() == Complex(0, 0));
  CHECK(std::abs(v.phase() - std::polar(1.0, 0.5)) < 1e-15);
}

TEST_CASE("angles normalize into (-pi, pi]") {
  CHECK(normalize_angle(std::numbers::pi) == doctest::Approx(std::numbers::pi));
  CHECK(normalize_angle(-std::numbers::pi) == doctest::Approx(std::numbers::pi));
  CHECK(normalize_angle(3 * std::numbers::pi / 2) == doctest::Approx(-std::numbers::pi / 2));
  CHECK(normalize_angle(0.25) == 0.25);
}
