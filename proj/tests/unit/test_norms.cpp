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

#include <boost/math/quadrature/gauss.hpp>

#include <cmath>
#include <numbers>
#include <vector>

#include "swlag/norms.hpp"

using namespace swlag;

namespace {

constexpr double kPi = std::numbers::pi;

// int_{D^2} |(z - a)/|z - a|^2 - (z - b)/|z - b|^2|^p for real a in D^2, b = 1/a,
// in polar coordinates about a with r = R(theta) v^{1/(2-p)}. The field is
// |b - a| / (|z - a| |z - b|); symmetric under conjugation. Composite
// 20-point Gauss-Legendre on n_theta uniform panels and v-panels graded
// toward both ends (b sits 2 e^{-k} from a).
double dipole_oracle(int k, double p, int n_theta = 256, int n_v = 30) {
  using Rule = boost::math::quadrature::gauss<double, 20>;
  auto panel = [](auto&& f, double lo, double hi) { return Rule::integrate(f, lo, hi); };
  const double a = -1 + std::exp(-double(k)), b = 1 / a, e = 1 / (2 - p);
  auto inner = [&](double theta) {
    const Complex dir = std::polar(1.0, theta);
    // |a + R dir| = 1
    const double c = a * dir.real();
    const double R = -c + std::sqrt(c * c + 1 - a * a);
    auto f = [&](double v) {
      const Complex z = a + R * std::pow(v, e) * dir;
      return std::pow(std::abs(b - a) / std::abs(z - b), p);
    };
    std::vector<double> edges{0.0};
    for (int i = n_v; i >= 2; --i) edges.push_back(std::ldexp(1.0, -i));
    for (int i = 1; i <= n_v; ++i) edges.push_back(1 - std::ldexp(1.0, -i));
    edges.push_back(1.0);
    double sum = 0;
    for (std::size_t i = 1; i < edges.size(); ++i) sum += panel(f, edges[i - 1], edges[i]);
    return std::pow(R, 2 - p) * e * sum;
  };
  double sum = 0;
  for (int i = 0; i < n_theta; ++i) sum += panel(inner, kPi * i / n_theta, kPi * (i + 1) / n_theta);
  return 2 * sum;
}

std::vector<double> geometric(double a, double b, int n) {
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = a * std::pow(b / a, double(i) / (n - 1));
  return out;
}

}  // namespace

TEST_CASE("log-log fit") {
  const std::vector<double> x{1e-3, 1e-2, 1e-1, 1};
  std::vector<double> y;
  for (double t : x) y.push_back(3 * std::pow(t, 1.7));
  const FitReport f = fit_loglog(x, y);
  CHECK(f.slope == doctest::Approx(1.7).epsilon(1e-13));
  CHECK(f.intercept == doctest::Approx(std::log(3.0)).epsilon(1e-12));
  CHECK(f.r_squared == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(f.window.first == 1e-3);
  CHECK(f.window.second == 1);
  CHECK_THROWS_AS(fit_loglog(std::vector<double>{1, 2}, std::vector<double>{1, 2}), FitError);
  CHECK_THROWS_AS(fit_loglog(std::vector<double>{1, 2, 3}, std::vector<double>{1, 0, 2}), FitError);
}

TEST_CASE("exclusion schedules") {
  const DampedBlaschke phi(0.25, 12);
  const ExclusionSchedule s = default_schedule(phi);
  CHECK(s.discs.size() == 12);
  CHECK(s.discs[0].radius == 1e-4);
  CHECK(s.discs[11].radius == doctest::Approx(std::exp(-12.0) / 10).epsilon(1e-15));
  CHECK(s.boundary_margin == doctest::Approx(std::exp(-150.0)));
  CHECK_NOTHROW(s.validate(PolarFrame::at_minus_one()));
  CHECK(s.refined(1).discs[3].radius == doctest::Approx(s.discs[3].radius / 4).epsilon(1e-15));
  ExclusionSchedule bad;
  bad.discs = {{Complex(0.5, 0), 0.1}, {Complex(0.55, 0), 0.1}};
  CHECK_THROWS_AS(bad.validate(PolarFrame::at(Complex(0, 0))), DomainError);
  ExclusionSchedule outside;
  outside.discs = {{Complex(0.95, 0), 0.1}};
  CHECK_THROWS_AS(outside.validate(PolarFrame::at(Complex(0, 0))), DomainError);
}

TEST_CASE("vortex reproduces the closed-form integral") {
  ExclusionSchedule schedule;
  schedule.discs = {{Complex(0, 0), 1e-2}};
  for (double p : {1.0, 1.25, 1.5, 1.75}) {
    const SobolevResult r =
        sobolev_w1p([](const Complex& w) { return 1 / std::abs(w); }, PolarFrame::at(Complex(0, 0)), p, schedule);
    CHECK(r.estimate == doctest::Approx(2 * kPi / (2 - p)).epsilon(1e-2));
    CHECK_FALSE(r.nonconvergence);
  }
  CHECK_THROWS(sobolev_w1p([](const Complex& w) { return 1 / std::abs(w); }, PolarFrame::at(Complex(0, 0)), 1.5,
                           schedule, 2));
}

TEST_CASE("constructed g has a stable and K-monotone integral") {
  const SobolevResult a = sobolev_w1p(DampedBlaschke(0.25, 10), 1.5);
  const SobolevResult m = sobolev_w1p(DampedBlaschke(0.25, 15), 1.5);
  const SobolevResult b = sobolev_w1p(DampedBlaschke(0.25, 20), 1.5);
  CHECK(std::isfinite(b.estimate));
  CHECK(b.stability <= 0.05);
  CHECK_FALSE(b.nonconvergence);
  CHECK(b.level_values.size() == 3);
  CHECK(b.extrapolated.size() == 2);
  CHECK(a.estimate < m.estimate);
  CHECK(m.estimate < b.estimate);
  CHECK(b.estimate - m.estimate < m.estimate - a.estimate);
}

TEST_CASE("parameter constraint") {
  CHECK_THROWS_AS(sobolev_w1p(DampedBlaschke(0.25, 10), 1.9), ParameterWarning);
  CHECK_THROWS_AS(sobolev_w1p(DampedBlaschke(0.25, 10), 2.0), DomainError);
}

TEST_CASE("dipole integrals against an independent quadrature") {
  for (auto [k, p] : {std::pair{1, 1.5}, std::pair{2, 1.5}, std::pair{4, 1.5}, std::pair{8, 1.0}}) {
    const DipoleBound d = dipole_bound_check(k, p);
    const double ref = dipole_oracle(k, p);
    CHECK(dipole_oracle(k, p, 512, 40) == doctest::Approx(ref).epsilon(1e-7));
    CHECK(d.lhs == doctest::Approx(ref).epsilon(1e-5));
    CHECK(d.rhs == doctest::Approx(16 * std::exp(-(2 - p) * k)).epsilon(1e-15));
    CHECK(d.ok == (d.lhs <= d.rhs));
  }
}

TEST_CASE("weak L2 of the vortex") {
  const std::vector<double> lambdas = geometric(1, 100, 9);
  const WeakL2Result r = weak_l2([](const Complex& z) { return 1 / std::abs(z); }, Disc{Complex(0, 0), 1}, lambdas);
  CHECK(r.sup_value == doctest::Approx(kPi).epsilon(0.02));
  REQUIRE(r.profile.size() == lambdas.size());
  for (const auto& [lambda, value] : r.profile) CHECK(value == doctest::Approx(kPi).epsilon(0.02));
}

TEST_CASE("weak L2 of the constructed g plateaus near a zero") {
  const std::vector<double> lambdas = geometric(10, 1000, 9);
  const WeakL2Result r = weak_l2(DampedBlaschke(0.25, 20), Disc{zero_location(1), 0.1}, lambdas);
  const double first = r.profile[4].second, last = r.profile.back().second;
  CHECK(r.profile[4].first == doctest::Approx(100));
  CHECK(last / first >= 0.8);
  CHECK(last / first <= 1.2);
  CHECK(last == doctest::Approx(kPi).epsilon(0.1));
  CHECK(std::isfinite(r.sup_value));
}

TEST_CASE("weak L2 of a bounded gradient vanishes at large lambda") {
  // |grad e^{i (p - q) theta}| = |p - q| / r on the annulus 0.5 <= r <= 0.9
  const auto field = [](const Complex& z) { return std::abs(z) >= 0.5 && std::abs(z) <= 0.9 ? 1 / std::abs(z) : 0.0; };
  const std::vector<double> lambdas = geometric(3, 300, 5);
  const WeakL2Result r = weak_l2(field, Disc{Complex(0, 0), 0.95}, lambdas);
  for (const auto& [lambda, value] : r.profile) CHECK(value == 0);
}

TEST_CASE("Hoelder exponents") {
  const std::vector<double> radii = geometric(1e-4, 1e-2, 6);
  const MapParams j1;
  const FitReport a = holder_fit([&](const Complex& z) { return surface(j1, z).Phi; }, zero_location(1), radii);
  CHECK(a.slope == doctest::Approx(std::sqrt(2.0)).epsilon(0.02));
  const MapParams j3(3, DampedBlaschke());
  const std::vector<double> radii3 = geometric(1e-4, 1e-2, 6);
  const FitReport c = holder_fit([&](const Complex& z) { return surface(j3, z).Phi; }, zero_location(2), radii3);
  CHECK(c.slope == doctest::Approx(std::sqrt(12.0)).epsilon(0.02));
  const FitReport cone12 = holder_fit([](const Complex& z) { return cone_sample(ConeParams(1, 2), z).Phi; },
                                      Complex(0, 0), geometric(1e-3, 0.5, 8));
  CHECK(std::abs(cone12.slope - std::sqrt(2.0)) <= 1e-6);
  CHECK(cone12.r_squared == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("Hoelder fit rejects a poor fit") {
  const auto jumpy = [](const Complex& z) {
    const double r = std::abs(z);
    const double m = static_cast<int>(std::floor(-std::log10(r))) % 2 ? r : r * r * r;
    return Vector4(m, 0, 0, 0);
  };
  CHECK_THROWS_AS(holder_fit(jumpy, Complex(0, 0), geometric(2e-6, 2e-1, 6)), FitError);
}

TEST_CASE("boundary trace probes") {
  const DampedBlaschke phi;
  const TraceProbeReport g = boundary_trace_probe(phi, 0.0, 1);
  CHECK(g.diverging);
  CHECK_FALSE(g.bounded);
  CHECK(g.growth_slope < -1);
  const TraceProbeReport rho_g = boundary_trace_probe(phi, 1.0, 3);
  CHECK(rho_g.bounded);
  CHECK_FALSE(rho_g.diverging);
  CHECK(std::isfinite(rho_g.max_derivative));
  const TraceProbeReport v_trace = boundary_trace_probe(phi, std::sqrt(2.0), 3);
  CHECK(v_trace.bounded);
  const TraceProbeReport rho =
      boundary_trace_probe([&](double x) { return Complex(std::exp(boundary_log_polar(phi, x).log_rho), 0); }, 3);
  CHECK(rho.bounded);
}

TEST_CASE("probe on explicit traces") {
  const TraceProbeReport smooth = boundary_trace_probe([](double x) { return std::exp(Complex(0, std::sin(x))); }, 3);
  CHECK(smooth.max_derivative == doctest::Approx(2.0).epsilon(0.02));
  CHECK(smooth.bounded);
  CHECK_FALSE(smooth.diverging);
  const TraceProbeReport blowup =
      boundary_trace_probe([](double x) { return std::exp(Complex(0, std::pow(std::abs(x), -0.5))); }, 1);
  CHECK(blowup.diverging);
  CHECK(blowup.growth_slope == doctest::Approx(-1.5).epsilon(0.05));
}

TEST_CASE("infinite order zero at -1") {
  const std::vector<int> orders{1, 2, 3, 4, 5};
  for (const ZeroOrderReport& z : infinite_order_zero_check(DampedBlaschke(), orders)) {
    CHECK(z.passes);
    CHECK(z.peak_index <= 40);
    CHECK(z.log_ratios.back() < -30);
    for (std::size_t m = z.peak_index; m < z.log_ratios.size(); ++m)
      CHECK(z.log_ratios[m] < z.log_ratios[m - 1]);
  }
  // (z + 1)^3 has |1 + e^{i(pi + x)}|^3 = (2 |sin(x/2)|)^3
  const auto cubic = [](double x) { return 3 * std::log(2 * std::abs(std::sin(x / 2))); };
  const std::vector<int> four{3, 4};
  const auto control = infinite_order_zero_check(cubic, four);
  CHECK_FALSE(control[0].passes);
  CHECK_FALSE(control[1].passes);
  CHECK(control[1].tail_fit.slope == doctest::Approx(-1).epsilon(1e-6));
}

TEST_CASE("decay ordering in s near the accumulation point") {
  const DampedBlaschke quarter(0.25, 60), half(0.5, 60);
  for (double x : {0.3, 0.1, 1e-2, 1e-4}) {
    const double a = boundary_log_polar(quarter, x).log_rho, b = boundary_log_polar(half, x).log_rho;
    CHECK(b < a);
    CHECK(a == doctest::Approx(-std::pow(x, -0.25) * std::cos(0.25 * (kPi - x) / 2) /
                                   std::pow(2 * std::sin(x / 2) / x, 0.25)).epsilon(1e-12));
  }
}
