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
#include <numbers>
#include <random>

#include "oracle.hpp"
#include "swlag/surface.hpp"

using namespace swlag;

namespace {

Complex random_safe_point(std::mt19937_64& rng, const DampedBlaschke& phi) {
  std::uniform_real_distribution<double> u(0, 1);
  for (;;) {
    const Complex z = std::polar(0.99 * std::sqrt(u(rng)), 2 * std::numbers::pi * u(rng));
    if (is_safe_point(phi, z)) return z;
  }
}

// u and v from the 50-digit product by direct composition.
std::pair<Complex, Complex> uv_oracle(int j, const Complex& z) {
  using oracle::Real;
  const oracle::Cplx f = oracle::phi(z, 0.25, 60);
  const Real rho = abs(f), alpha = sqrt(Real(j * j + j));
  const oracle::Cplx g = f / rho;
  const oracle::Cplx u = pow(rho, alpha) * pow(g, j);
  const oracle::Cplx v = oracle::Cplx(0, sqrt(Real(j) / (j + 1))) * pow(rho, alpha) * pow(g, j + 1);
  return {oracle::lo(u), oracle::lo(v)};
}

double gram(const Jacobian& J, int a, int b) { return J.row(a).dot(J.row(b)); }

double omega(const Jacobian& J) {
  return J(0, 0) * J(1, 1) - J(0, 1) * J(1, 0) + J(0, 2) * J(1, 3) - J(0, 3) * J(1, 2);
}

}  // namespace

TEST_CASE("mu and nu") {
  CHECK(mu(1, Complex(1, 0)) == Complex(1, 0));
  CHECK(mu(1, Complex(0, 0)) == Complex(0, 0));
  CHECK(nu(1, Complex(0, 0)) == Complex(0, 0));
  const double ref = static_cast<double>(pow(oracle::Real("0.5"), sqrt(oracle::Real(2))));
  for (double theta : {0.0, 0.7, 2.5, -1.9}) {
    CHECK(std::abs(mu(1, std::polar(0.5, theta))) == doctest::Approx(ref).epsilon(1e-15));
    CHECK(std::abs(nu(2, std::polar(1.0, theta)) - std::polar(1.0, 3 * theta)) < 1e-15);
  }
  CHECK(ref == doctest::Approx(0.3752142).epsilon(1e-6));
  CHECK(std::abs(mu(1, Complex(1e-12, 0))) < 1e-16);
}

TEST_CASE("u and v vanish at the zeros") {
  const MapParams params;
  for (int k = 1; k <= 30; ++k) {
    const Wirtinger u = u_eval(params, zero_location(k)), v = v_eval(params, zero_location(k));
    CHECK(u.value == Complex(0, 0));
    CHECK(u.dz == Complex(0, 0));
    CHECK(u.dzbar == Complex(0, 0));
    CHECK(v.value == Complex(0, 0));
    CHECK(v.dz == Complex(0, 0));
  }
}

TEST_CASE("u at the origin") {
  const MapParams params;
  const Wirtinger u = u_eval(params, Complex(0, 0));
  const double rho0 = std::exp(eval(params.phi, Complex(0, 0)).G);
  CHECK(std::abs(u.value) == doctest::Approx(std::pow(rho0, std::sqrt(2.0))).epsilon(1e-14));
  CHECK(std::abs(std::arg(u.value)) < 1e-15);
}

TEST_CASE("u and v agree with direct composition") {
  std::mt19937_64 rng(21);
  for (int j : {1, 2, 3}) {
    const MapParams params(j, DampedBlaschke());
    for (int i = 0; i < 100; ++i) {
      const Complex z = random_safe_point(rng, params.phi);
      const auto [u_ref, v_ref] = uv_oracle(j, z);
      CHECK(std::abs(u_eval(params, z).value - u_ref) <= 1e-12 * std::abs(u_ref));
      CHECK(std::abs(v_eval(params, z).value - v_ref) <= 1e-12 * std::abs(v_ref));
    }
  }
}

TEST_CASE("v prefactor and modulus for j = 1") {
  const MapParams params;
  std::mt19937_64 rng(22);
  for (int i = 0; i < 100; ++i) {
    const Complex z = random_safe_point(rng, params.phi);
    const HoloEval h = eval(params.phi, z);
    const Complex v = v_eval(params, z).value;
    const double rho_a = std::exp(std::sqrt(2.0) * h.G);
    CHECK(std::abs(v) == doctest::Approx(rho_a / std::sqrt(2.0)).epsilon(1e-13));
    CHECK(std::abs(v / (Complex(0, 1 / std::sqrt(2.0)) * rho_a * h.g * h.g) - 1.0) < 1e-13);
  }
}

TEST_CASE("Wirtinger derivatives match central differences") {
  std::mt19937_64 rng(23);
  const double h = 1e-6;
  for (int j : {1, 2}) {
    const MapParams params(j, DampedBlaschke());
    for (int i = 0; i < 1000; ++i) {
      const Complex z = random_safe_point(rng, params.phi);
      using Eval = Wirtinger (*)(const MapParams&, const Complex&);
      for (Eval f : {static_cast<Eval>(&u_eval), static_cast<Eval>(&v_eval)}) {
        auto value = [&](const Complex& w) { return f(params, w).value; };
        const Wirtinger w = f(params, z);
        const Complex fx = (value(z + h) - value(z - h)) / (2 * h);
        const Complex fy = (value(z + Complex(0, h)) - value(z - Complex(0, h))) / (2 * h);
        const double scale = std::abs(w.dz) + std::abs(w.dzbar);
        CHECK(std::abs(w.dx() - fx) <= 1e-6 * scale);
        CHECK(std::abs(w.dy() - fy) <= 1e-6 * scale);
      }
    }
  }
}

TEST_CASE("perpendicular gradient of v equals g times gradient of u") {
  std::mt19937_64 rng(24);
  for (int j : {1, 2, 3}) {
    const MapParams params(j, DampedBlaschke());
    for (int i = 0; i < 1000; ++i) {
      const Complex z = random_safe_point(rng, params.phi);
      const HoloEval h = eval(params.phi, z);
      const Wirtinger u = u_eval(params, h), v = v_eval(params, h);
      const double scale = std::abs(u.dx()) + std::abs(u.dy());
      CHECK(std::abs(-v.dy() - h.g * u.dx()) <= 1e-10 * scale);
      CHECK(std::abs(v.dx() - h.g * u.dy()) <= 1e-10 * scale);
    }
  }
}

TEST_CASE("surface samples") {
  const MapParams params;
  std::mt19937_64 rng(25);
  for (int i = 0; i < 1000; ++i) {
    const Complex z = random_safe_point(rng, params.phi);
    const SurfaceSample s = surface(params, z);
    REQUIRE(s.angle.has_value());
    CHECK(std::abs(s.lagrangian_angle() * eval(params.phi, z).g - 1.0) <= 1e-9);
    const Wirtinger u = u_eval(params, z);
    CHECK(s.conf_factor == doctest::Approx(std::norm(u.dx()) + std::norm(u.dy())).epsilon(1e-12));
    const auto [u_ref, v_ref] = uv_oracle(1, z);
    CHECK(std::abs(Complex(s.Phi(0), s.Phi(1)) - u_ref) <= 1e-12 * std::abs(u_ref));
    CHECK(std::abs(Complex(s.Phi(2), s.Phi(3)) + std::conj(v_ref)) <= 1e-12 * std::abs(v_ref));
  }
  for (int k = 1; k <= 20; ++k) {
    const SurfaceSample s = surface(params, zero_location(k));
    CHECK(s.Phi.isZero(0));
    CHECK(s.conf_factor == 0);
    CHECK_FALSE(s.angle.has_value());
    CHECK_THROWS_AS(s.lagrangian_angle(), AngleUndefined);
  }
}

TEST_CASE("conformal and Lagrangian at random safe points") {
  std::mt19937_64 rng(26);
  for (int j : {1, 2}) {
    const MapParams params(j, DampedBlaschke());
    for (int i = 0; i < 10000; ++i) {
      const SurfaceSample s = surface(params, random_safe_point(rng, params.phi));
      const double c = s.conf_factor;
      CHECK(std::abs(gram(s.jac, 0, 1)) <= 1e-9 * c);
      CHECK(std::abs(gram(s.jac, 0, 0) - gram(s.jac, 1, 1)) <= 1e-9 * c);
      CHECK(std::abs(omega(s.jac)) <= 1e-9 * c);
      CHECK(gram(s.jac, 0, 0) == doctest::Approx(c).epsilon(1e-9));
    }
  }
}

TEST_CASE("cone values") {
  const ConeValue a = cone(ConeParams(1, 2), 1.0, 0.0);
  CHECK(std::abs(a.Phi.z1 - Complex(std::sqrt(2.0 / 3), 0)) < 1e-15);
  CHECK(std::abs(a.Phi.z2 - Complex(0, 1 / std::sqrt(3.0))) < 1e-15);
  CHECK(a.Phi.z1.real() == doctest::Approx(0.81649658).epsilon(1e-8));
  CHECK(a.Phi.z2.imag() == doctest::Approx(0.57735027).epsilon(1e-8));
  const double ref = static_cast<double>(pow(oracle::Real("0.5"), sqrt(oracle::Real(2))));
  for (double theta : {0.0, 1.0, -2.2}) {
    const ConeValue b = cone(ConeParams(1, 2), 0.5, theta);
    CHECK(std::sqrt(std::norm(b.Phi.z1) + std::norm(b.Phi.z2)) == doctest::Approx(ref).epsilon(1e-15));
  }
  const ConeValue o = cone(ConeParams(2, 3), 0.0, 1.0);
  CHECK(o.Phi.z1 == Complex(0, 0));
  CHECK(o.Phi.z2 == Complex(0, 0));
  CHECK_THROWS_AS(ConeParams(2, 4), DomainError);
}

TEST_CASE("cone samples are conformal and Lagrangian") {
  std::mt19937_64 rng(27);
  std::uniform_real_distribution<double> u(0, 1);
  for (auto [p, q] : {std::pair{1, 2}, std::pair{2, 3}, std::pair{1, 3}}) {
    const ConeParams c(p, q);
    for (int i = 0; i < 1000; ++i) {
      const double r = 0.01 + 0.98 * u(rng), theta = 2 * std::numbers::pi * u(rng);
      const SurfaceSample s = cone_sample(c, std::polar(r, theta));
      const double cf = s.conf_factor;
      CHECK(cf > 0);
      CHECK(std::abs(gram(s.jac, 0, 1)) <= 1e-9 * cf);
      CHECK(std::abs(gram(s.jac, 0, 0) - gram(s.jac, 1, 1)) <= 1e-9 * cf);
      CHECK(std::abs(omega(s.jac)) <= 1e-9 * cf);
      CHECK(std::abs(s.lagrangian_angle() - cone(c, r, theta).angle) <= 1e-9);
      CHECK(std::abs(s.lagrangian_angle() - std::polar(1.0, (p - q) * theta)) <= 1e-9);
    }
  }
}

TEST_CASE("branch points occur only at critical points of phi") {
  const MapParams params;
  std::mt19937_64 rng(28);
  for (int i = 0; i < 2000; ++i) {
    const Complex z = random_safe_point(rng, params.phi);
    const SurfaceSample s = surface(params, z);
    const HoloEval h = eval(params.phi, z);
    CHECK((s.conf_factor > 0) == (std::abs(h.log_deriv()) > 0));
  }
}
