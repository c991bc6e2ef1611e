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

#include "swlag/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include "swlag/detail/summation.hpp"
#include "swlag/quadrature.hpp"

namespace swlag {

namespace {

constexpr double kPi = std::numbers::pi;

FitReport fit_linear(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (!(sxx > 0)) throw FitError("fit: abscissae are degenerate");
  FitReport out;
  out.slope = sxy / sxx;
  out.intercept = my - out.slope * mx;
  out.r_squared = syy > 0 ? std::clamp(sxy * sxy / (sxx * syy), 0.0, 1.0) : 1.0;
  return out;
}

// Distance from the frame origin to the unit circle along e^{i theta}.
double exit_distance(const PolarFrame& frame, const Complex& dir) {
  const Complex& a = frame.anchor;
  const double c0 = 2 * a.real() - std::norm(a);  // 1 - |origin|^2
  const double b = (std::conj(a) * dir).real() - dir.real();
  const double root = std::sqrt(std::max(0.0, b * b + c0));
  return b > 0 ? c0 / (b + root) : root - b;
}

struct RayInterval {
  double lo, hi;
};

// Radii along the ray inside the exclusion disc, if any.
std::optional<RayInterval> ray_hits(const Exclusion& e, const Complex& dir) {
  const double b = (std::conj(e.offset) * dir).real();
  const double c = std::norm(e.offset) - e.radius * e.radius;
  const double disc = b * b - c;
  if (disc <= 0) return std::nullopt;
  const double root = std::sqrt(disc);
  const double hi = b + root;
  if (hi <= 0) return std::nullopt;
  const double lo = c > 0 ? c / hi : b - root;
  return RayInterval{std::max(lo, 0.0), hi};
}

std::vector<double> angular_breakpoints(const ExclusionSchedule& schedule, double lo, double hi) {
  std::vector<double> out;
  auto push = [&](double t) {
    t = normalize_angle(t);
    if (t > lo && t < hi) out.push_back(t);
  };
  for (const Exclusion& e : schedule.discs) {
    const double dist = std::abs(e.offset);
    if (dist <= e.radius) continue;
    const double center = std::arg(e.offset);
    const double half = std::asin(e.radius / dist);
    push(center);
    for (double m : {1.0, 2.0, 4.0, 16.0}) {
      if (m * half >= kPi) break;
      push(center + m * half);
      push(center - m * half);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end(), [](double a, double b) { return b - a < 1e-15; }), out.end());
  return out;
}

}  // namespace

FitReport fit_loglog(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 3) throw FitError("fit_loglog: need at least 3 matching points");
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0 && y[i] > 0)) throw FitError("fit_loglog: data must be positive");
    lx.push_back(std::log(x[i]));
    ly.push_back(std::log(y[i]));
  }
  FitReport out = fit_linear(lx, ly);
  const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
  out.window = {*lo, *hi};
  return out;
}

void ExclusionSchedule::validate(const PolarFrame& frame) const {
  if (!(boundary_margin >= 0)) throw DomainError("ExclusionSchedule: margin must be >= 0");
  if (frame.on_boundary() && !(boundary_margin > 0))
    throw DomainError("ExclusionSchedule: a frame on the boundary needs a positive margin");
  for (std::size_t i = 0; i < discs.size(); ++i) {
    const Exclusion& e = discs[i];
    if (!(e.radius > 0)) throw DomainError("ExclusionSchedule: radii must be positive");
    const Complex w = frame.anchor + e.offset;  // center + 1
    const double one_minus_norm2 = 2 * w.real() - std::norm(w);
    const double gap = one_minus_norm2 / (1 + std::sqrt(std::max(0.0, 1 - one_minus_norm2)));
    if (!(e.radius < gap)) throw DomainError("ExclusionSchedule: disc " + std::to_string(i) + " leaves the unit disc");
    for (std::size_t j = 0; j < i; ++j)
      if (!(std::abs(e.offset - discs[j].offset) > e.radius + discs[j].radius))
        throw DomainError("ExclusionSchedule: discs " + std::to_string(j) + " and " + std::to_string(i) + " overlap");
  }
}

ExclusionSchedule ExclusionSchedule::refined(int level) const {
  const double f = std::pow(4.0, -level);
  ExclusionSchedule out = *this;
  for (Exclusion& e : out.discs) e.radius *= f;
  if (discs.empty()) out.boundary_margin *= f;
  return out;
}

ExclusionSchedule default_schedule(const DampedBlaschke& phi) {
  ExclusionSchedule out;
  for (int k = 1; k <= phi.K(); ++k) {
    const double eps = zero_offset(k);
    out.discs.push_back({Complex(eps, 0.0), std::min(1e-4, eps / 10)});
  }
  out.boundary_margin = std::exp(-150.0);
  return out;
}

RegionIntegral integrate_excluded(const OffsetField& magnitude, const PolarFrame& frame, double p,
                                  const ExclusionSchedule& schedule, const RegionOptions& options) {
  if (!(p >= 1)) throw DomainError("integrate_excluded: p must be >= 1");
  const bool boundary = frame.on_boundary();
  if (!boundary && !(std::norm(frame.origin()) < 1)) throw DomainError("integrate_excluded: frame origin outside D^2");
  schedule.validate(frame);

  const double lo = boundary ? -kPi / 2 : -kPi;
  const double hi = boundary ? kPi / 2 : kPi;
  const std::vector<double> outer_breaks = angular_breakpoints(schedule, lo, hi);
  std::vector<double> radial_marks;
  for (const Exclusion& e : schedule.discs)
    if (std::abs(e.offset) > e.radius) radial_marks.push_back(std::abs(e.offset));

  bool inner_converged = true;
  auto ray = [&](double theta) {
    const Complex dir = std::polar(1.0, theta);
    const double r_exit = exit_distance(frame, dir);
    const double r_min = schedule.boundary_margin;
    if (!(r_exit > r_min)) return 0.0;

    std::vector<RayInterval> cuts;
    for (const Exclusion& e : schedule.discs)
      if (auto hit = ray_hits(e, dir)) cuts.push_back(*hit);
    std::sort(cuts.begin(), cuts.end(), [](const RayInterval& a, const RayInterval& b) { return a.lo < b.lo; });

    auto integrand = [&](double t) {
      const double r = std::exp(t);
      const double f = magnitude(r * dir);
      return std::pow(f, p) * r * r;
    };
    AdaptiveOptions inner;
    inner.rel_tol = options.inner_rel_tol;
    inner.abs_tol = 0;
    inner.max_intervals = options.max_intervals;

    detail::CompensatedSum total;
    double start = r_min;
    auto piece = [&](double a, double b) {
      if (!(b > a)) return;
      std::vector<double> marks;
      for (double m : radial_marks)
        if (m > a && m < b) marks.push_back(std::log(m));
      std::sort(marks.begin(), marks.end());
      const AdaptiveResult res = integrate_adaptive(integrand, std::log(a), std::log(b), inner, marks);
      inner_converged = inner_converged && res.converged;
      total.add(res.value);
    };
    for (const RayInterval& c : cuts) {
      if (c.lo >= r_exit) break;
      piece(start, std::min(c.lo, r_exit));
      start = std::max(start, c.hi);
    }
    piece(start, r_exit);
    return total.value();
  };

  AdaptiveOptions outer;
  outer.rel_tol = options.rel_tol;
  outer.abs_tol = 0;
  outer.max_intervals = options.max_intervals;
  const AdaptiveResult res = integrate_adaptive(ray, lo, hi, outer, outer_breaks);
  return {res.value, res.error, res.converged && inner_converged};
}

SobolevResult sobolev_w1p(const OffsetField& gradient_magnitude, const PolarFrame& frame, double p,
                          const ExclusionSchedule& schedule, int refinement_levels, const RegionOptions& options) {
  if (!(p >= 1 && p < 2)) throw DomainError("sobolev_w1p: p must lie in [1, 2)");
  if (refinement_levels < 3) throw DomainError("sobolev_w1p: at least 3 refinement levels are required");
  SobolevResult out;
  bool converged = true;
  const double ratio = std::pow(4.0, -(2 - p));
  for (int level = 0; level < refinement_levels; ++level) {
    const RegionIntegral r = integrate_excluded(gradient_magnitude, frame, p, schedule.refined(level), options);
    converged = converged && r.converged;
    out.level_values.push_back(r.value);
    if (level > 0) out.extrapolated.push_back((r.value - ratio * out.level_values[level - 1]) / (1 - ratio));
  }
  const double last = out.extrapolated.back();
  const double prev = out.extrapolated[out.extrapolated.size() - 2];
  out.estimate = last;
  out.stability = std::abs(last - prev) / std::abs(last);
  out.nonconvergence = !converged || out.stability > 0.05;
  return out;
}

SobolevResult sobolev_w1p(const DampedBlaschke& phi, double p, int refinement_levels, const RegionOptions& options) {
  if (!(p >= 1 && p < 2)) throw DomainError("sobolev_w1p: p must lie in [1, 2)");
  if (!(phi.s() < 2 / p - 1))
    throw ParameterWarning("sobolev_w1p: s = " + std::to_string(phi.s()) + " violates s < 2/p - 1 = " +
                           std::to_string(2 / p - 1) + "; |grad g|^p is not integrable at -1");
  auto field = [&phi](const Complex& w) { return std::abs(log_derivative_offset(phi, w)); };
  return sobolev_w1p(field, PolarFrame::at_minus_one(), p, default_schedule(phi), refinement_levels, options);
}

DipoleBound dipole_bound_check(int k, double p) {
  if (k < 1) throw DomainError("dipole_bound_check: k must be >= 1");
  if (!(p >= 1 && p < 2)) throw DomainError("dipole_bound_check: p must lie in [1, 2)");
  const double eps = zero_offset(k);
  // z - 1/p_k = (z - p_k) + shift
  const double shift = eps * (2 - eps) / (1 - eps);
  auto field = [shift](const Complex& d) { return shift / (std::abs(d) * std::abs(d + shift)); };
  ExclusionSchedule schedule;
  schedule.boundary_margin = eps * 1e-24;
  RegionOptions options;
  options.rel_tol = 1e-8;
  const RegionIntegral r = integrate_excluded(field, PolarFrame{Complex(eps, 0.0)}, p, schedule, options);
  DipoleBound out;
  out.lhs = r.value;
  out.rhs = 16 * std::exp(-(2 - p) * k);
  out.ok = out.lhs <= out.rhs;
  return out;
}

WeakL2Result weak_l2(const std::function<double(const Complex&)>& magnitude, const Disc& region,
                     std::span<const double> lambdas, std::optional<Complex> focus, const WeakL2Options& options) {
  if (!(region.radius > 0)) throw DomainError("weak_l2: region radius must be positive");
  if (lambdas.empty()) throw DomainError("weak_l2: empty lambda grid");
  if (options.annuli < 1 || options.angular_strata < 1 || options.radial_strata < 1)
    throw DomainError("weak_l2: strata counts must be positive");
  const Complex f0 = focus.value_or(region.center);
  const double r_out = region.radius + std::abs(f0 - region.center);

  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<detail::CompensatedSum> measure(lambdas.size());

  for (int i = 0; i < options.annuli; ++i) {
    const double r1 = r_out * std::ldexp(1.0, -i);
    // the innermost annulus also covers the leftover disc about the focus
    const double r0 = i + 1 == options.annuli ? 0.0 : 0.5 * r1;
    const double cell_area = kPi * (r1 * r1 - r0 * r0) / (options.angular_strata * options.radial_strata);
    for (int a = 0; a < options.angular_strata; ++a) {
      for (int b = 0; b < options.radial_strata; ++b) {
        const double theta = 2 * kPi * (a + unit(rng)) / options.angular_strata;
        const double area_frac = (b + unit(rng)) / options.radial_strata;
        const double r = std::sqrt(r0 * r0 + area_frac * (r1 * r1 - r0 * r0));
        const Complex z = f0 + std::polar(r, theta);
        if (std::abs(z - region.center) > region.radius) continue;
        const double value = magnitude(z);
        for (std::size_t l = 0; l < lambdas.size(); ++l)
          if (value > lambdas[l]) measure[l].add(cell_area);
      }
    }
  }

  WeakL2Result out;
  for (std::size_t l = 0; l < lambdas.size(); ++l) {
    const double v = lambdas[l] * lambdas[l] * measure[l].value();
    out.profile.emplace_back(lambdas[l], v);
    out.sup_value = std::max(out.sup_value, v);
  }
  return out;
}

WeakL2Result weak_l2(const DampedBlaschke& phi, const Disc& region, std::span<const double> lambdas,
                     const WeakL2Options& options) {
  if (!(std::abs(region.center) + region.radius < 1)) throw DomainError("weak_l2: region must lie inside D^2");
  std::optional<Complex> focus;
  for (int k = 1; k <= phi.K(); ++k)
    if (std::abs(zero_location(k) - region.center) < region.radius) {
      focus = zero_location(k);
      break;
    }
  auto field = [&phi](const Complex& z) {
    try {
      return std::abs(log_derivative_offset(phi, z + 1.0));
    } catch (const SingularPointError&) {
      return std::numeric_limits<double>::infinity();
    }
  };
  return weak_l2(field, region, lambdas, focus, options);
}

FitReport holder_fit(const std::function<Vector4(const Complex&)>& map_eval, const Complex& center,
                     std::span<const double> radii, int n_theta) {
  if (n_theta < 8) throw DomainError("holder_fit: n_theta must be >= 8");
  const Vector4 base = map_eval(center);
  std::vector<double> sup;
  for (double r : radii) {
    double m = 0;
    for (int i = 0; i < n_theta; ++i)
      m = std::max(m, (map_eval(center + std::polar(r, 2 * kPi * i / n_theta)) - base).norm());
    sup.push_back(m);
  }
  FitReport out = fit_loglog(radii, sup);
  if (out.r_squared < 0.99)
    throw FitError("holder_fit: r^2 = " + std::to_string(out.r_squared) + " is below 0.99");
  return out;
}

TraceProbeReport boundary_trace_probe(const std::function<Complex(double)>& trace, int order,
                                      const ProbeWindows& windows) {
  if (order < 1 || order > 3) throw DomainError("boundary_trace_probe: order must lie in 1..3");
  if (!(windows.outer > windows.inner && windows.inner > 0 && windows.outer <= 1) || windows.samples < 2)
    throw DomainError("boundary_trace_probe: bad window specification");

  // one-sided stencils for orders 1..3 on nodes x, x + h, ..., x + 4h
  static constexpr double kStencil[3][5] = {{-25.0 / 12, 4, -3, 4.0 / 3, -0.25},
                                            {35.0 / 12, -26.0 / 3, 9.5, -14.0 / 3, 11.0 / 12},
                                            {-2.5, 9, -12, 7, -1.5}};

  TraceProbeReport out;
  for (double edge = windows.outer; edge > windows.inner * 1.0000001; edge /= 10) {
    double window_max = 0;
    for (int i = 0; i < windows.samples; ++i) {
      const double mag = edge * std::pow(0.1, (i + 0.5) / windows.samples);
      for (double sign : {1.0, -1.0}) {
        // nodes run away from x = 0
        const double x = sign * mag;
        Complex f[5];
        f[0] = trace(x);
        const double scale = std::abs(f[0]);
        if (scale == 0) continue;
        double h = 1e-2;
        for (int it = 0; it < 200; ++it, h *= 0.5) {
          f[1] = trace(x + sign * h);
          if (std::abs(f[1] - f[0]) <= 2e-2 * scale) break;
        }
        for (int m = 2; m < 5; ++m) f[m] = trace(x + sign * m * h);
        double hn = 1;
        for (int n = 1; n <= order; ++n) {
          hn *= sign * h;
          Complex d = 0;
          for (int m = 0; m < 5; ++m) d += kStencil[n - 1][m] * f[m];
          window_max = std::max(window_max, std::abs(d / hn));
        }
      }
    }
    out.windows.emplace_back(edge, window_max);
    out.max_derivative = std::max(out.max_derivative, window_max);
  }

  const std::size_t n = out.windows.size();
  if (n >= 3) {
    std::vector<double> x, y;
    bool settled = true, increasing = true;
    for (std::size_t i = n - 3; i < n; ++i) {
      x.push_back(out.windows[i].first);
      y.push_back(std::max(out.windows[i].second, std::numeric_limits<double>::min()));
      if (i > n - 3) {
        settled = settled && out.windows[i].second <= 1.05 * out.windows[i - 1].second;
        increasing = increasing && out.windows[i].second > out.windows[i - 1].second;
      }
    }
    out.growth_slope = fit_loglog(x, y).slope;
    out.bounded = settled;
    out.diverging = increasing && out.growth_slope < 0;
  }
  return out;
}

TraceProbeReport boundary_trace_probe(const DampedBlaschke& phi, double delta, int order,
                                      const ProbeWindows& windows) {
  if (!(delta >= 0)) throw DomainError("boundary_trace_probe: delta must be >= 0");
  return boundary_trace_probe([&](double x) { return eval_boundary_offset(phi, x, delta); }, order, windows);
}

std::vector<ZeroOrderReport> infinite_order_zero_check(const std::function<double(double)>& log_modulus,
                                                       std::span<const int> orders, int m_max) {
  if (m_max < 25) throw DomainError("infinite_order_zero_check: m_max must be >= 25");
  std::vector<double> log_f, log_x;
  for (int m = 1; m <= m_max; ++m) {
    const double x = std::ldexp(1.0, -m);
    log_x.push_back(std::log(x));
    log_f.push_back(log_modulus(x));
  }
  std::vector<ZeroOrderReport> out;
  for (int n : orders) {
    if (n < 1) throw DomainError("infinite_order_zero_check: orders must be positive");
    ZeroOrderReport rep;
    rep.order = n;
    for (int i = 0; i < m_max; ++i) rep.log_ratios.push_back(log_f[i] - n * log_x[i]);
    const auto peak = std::max_element(rep.log_ratios.begin(), rep.log_ratios.end());
    rep.peak_index = static_cast<int>(peak - rep.log_ratios.begin()) + 1;
    bool decreasing = true;
    for (auto it = peak + 1; it != rep.log_ratios.end(); ++it) decreasing = decreasing && *it < *(it - 1);
    rep.passes = rep.peak_index <= m_max - 20 && decreasing && rep.log_ratios.back() < -30;
    const std::span<const double> tail_x(log_x.end() - 20, log_x.end());
    const std::span<const double> tail_y(rep.log_ratios.end() - 20, rep.log_ratios.end());
    rep.tail_fit = fit_linear(tail_x, tail_y);
    rep.tail_fit.window = {std::exp(log_x.back()), std::exp(log_x[m_max - 20])};
    out.push_back(std::move(rep));
  }
  return out;
}

std::vector<ZeroOrderReport> infinite_order_zero_check(const DampedBlaschke& phi, std::span<const int> orders,
                                                       int m_max) {
  return infinite_order_zero_check([&](double x) { return boundary_log_polar(phi, x).log_rho; }, orders, m_max);
}

}  // namespace swlag
