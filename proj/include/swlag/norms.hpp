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

#ifndef SWLAG_NORMS_HPP
#define SWLAG_NORMS_HPP

// Numerical evidence for the function-space claims on g: W^{1,p} integrals
// with excluded singular discs, weak-L^2 distribution profiles, Holder
// exponents, smoothness of boundary traces and the infinite-order zero at -1.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "swlag/complex.hpp"
#include "swlag/holo.hpp"
#include "swlag/surface.hpp"

namespace swlag {

struct FitReport {
  double slope = 0;
  double intercept = 0;
  double r_squared = 0;
  std::pair<double, double> window;  ///< (r_min, r_max)
};

/// Unweighted least squares of log y against log x. Throws FitError for fewer
/// than 3 points or non-positive data.
FitReport fit_loglog(std::span<const double> x, std::span<const double> y);

/// Polar frame on the closed unit disc. The origin is stored as its offset
/// from -1 so frames at or near the boundary point -1 keep full precision.
struct PolarFrame {
  Complex anchor;  ///< origin = -1 + anchor

  static PolarFrame at(const Complex& origin) { return {origin + 1.0}; }
  static PolarFrame at_minus_one() { return {Complex(0.0, 0.0)}; }
  Complex origin() const { return anchor - 1.0; }
  bool on_boundary() const { return anchor == Complex(0.0, 0.0); }
};

/// |grad g| at frame.origin() + offset.
using OffsetField = std::function<double(const Complex& offset)>;

struct Exclusion {
  Complex offset;  ///< disc center relative to the frame origin
  double radius;
};

struct ExclusionSchedule {
  std::vector<Exclusion> discs;
  /// Radius of the neighbourhood of the frame origin that is left out.
  double boundary_margin = 0;

  /// Throws DomainError unless the discs are disjoint and inside the disc.
  void validate(const PolarFrame& frame) const;
  /// Every radius (and the margin, if it is the only exclusion) scaled by 4^{-level}.
  ExclusionSchedule refined(int level) const;
};

/// Frame at -1, discs of radius min(1e-4, e^{-k}/10) about each p_k and a
/// margin of e^{-150} about the accumulation point.
ExclusionSchedule default_schedule(const DampedBlaschke& phi);

struct RegionOptions {
  double rel_tol = 1e-7;
  double inner_rel_tol = 1e-9;
  int max_intervals = 4000;
};

struct RegionIntegral {
  double value = 0;
  double error = 0;
  bool converged = true;
};

/// int |f|^p over the unit disc minus the exclusions, in polar coordinates
/// about the frame origin with log-radial inner variable.
RegionIntegral integrate_excluded(const OffsetField& magnitude, const PolarFrame& frame, double p,
                                  const ExclusionSchedule& schedule, const RegionOptions& options = {});

struct SobolevResult {
  double estimate = 0;
  double stability = 0;  ///< relative change of the extrapolated value across the last two levels
  bool nonconvergence = false;  ///< stability > 5% or an inner integral hit its budget
  std::vector<double> level_values;  ///< raw integrals per level
  std::vector<double> extrapolated;  ///< Richardson values, one per level after the first
};

/// int |grad g|^p extrapolated to zero exclusion radius. Level l shrinks the
/// radii by 4^{-l}; excluded mass scales like delta^{2-p}. Needs >= 3 levels.
SobolevResult sobolev_w1p(const OffsetField& gradient_magnitude, const PolarFrame& frame, double p,
                          const ExclusionSchedule& schedule, int refinement_levels = 3,
                          const RegionOptions& options = {});

/// The constructed g with the default schedule. Throws ParameterWarning
/// unless s < 2/p - 1.
SobolevResult sobolev_w1p(const DampedBlaschke& phi, double p, int refinement_levels = 3,
                          const RegionOptions& options = {});

struct DipoleBound {
  double lhs = 0;
  double rhs = 0;
  bool ok = false;
};

/// int_{D^2} |(z - p_k)/|z - p_k|^2 - (z - 1/p_k)/|z - 1/p_k|^2|^p against 16 e^{-(2-p)k}.
DipoleBound dipole_bound_check(int k, double p);

struct Disc {
  Complex center;
  double radius;
};

struct WeakL2Result {
  double sup_value = 0;
  std::vector<std::pair<double, double>> profile;  ///< (lambda, lambda^2 |{f > lambda}|)
};

struct WeakL2Options {
  int annuli = 48;          ///< dyadic annuli about the focus
  int angular_strata = 16;
  int radial_strata = 64;   ///< equal-area bands per annulus, one jittered sample per cell
  std::uint64_t seed = 0x5f3759dfULL;
};

/// Stratified Monte Carlo measure of {f > lambda} within the region, sampled on
/// dyadic annuli about the focus (default: the region center).
WeakL2Result weak_l2(const std::function<double(const Complex&)>& magnitude, const Disc& region,
                     std::span<const double> lambdas, std::optional<Complex> focus = {},
                     const WeakL2Options& options = {});

/// weak_l2 of |grad g| on a disc compactly inside D^2, focused at the enclosed p_k if any.
WeakL2Result weak_l2(const DampedBlaschke& phi, const Disc& region, std::span<const double> lambdas,
                     const WeakL2Options& options = {});

/// Slope of log max_theta |F(center + r e^{i theta}) - F(center)| against log r.
/// Throws FitError if r_squared < 0.99.
FitReport holder_fit(const std::function<Vector4(const Complex&)>& map_eval, const Complex& center,
                     std::span<const double> radii, int n_theta = 64);

struct ProbeWindows {
  double outer = 1e-1;  ///< windows are decades 10^{-i-1} <= |theta - pi| <= 10^{-i}
  double inner = 1e-10;
  int samples = 32;     ///< per side per window
};

struct TraceProbeReport {
  double max_derivative = 0;
  std::vector<std::pair<double, double>> windows;  ///< (outer edge, max |d^n f|, n <= order)
  bool bounded = false;       ///< window maxima grow by at most 5% over the innermost three windows
  double growth_slope = 0;    ///< log-log slope of the maxima over the innermost three windows
  bool diverging = false;     ///< maxima increase monotonically inward with growth_slope < 0
};

/// One-sided finite-difference derivatives of x -> F(pi + x), orders 1..order,
/// on windows shrinking toward pi. Stencils point away from x = 0; the step
/// starts at 1e-2 and is halved until F changes by at most 2% across it.
TraceProbeReport boundary_trace_probe(const std::function<Complex(double)>& trace, int order,
                                      const ProbeWindows& windows = {});

/// The trace theta -> rho^delta g(e^{i theta}).
TraceProbeReport boundary_trace_probe(const DampedBlaschke& phi, double delta, int order,
                                      const ProbeWindows& windows = {});

struct ZeroOrderReport {
  int order = 0;
  std::vector<double> log_ratios;  ///< log(|f|/|x|^n) at x_m = 2^{-m}, m = 1..m_max
  int peak_index = 0;              ///< m at which the log ratio is largest
  bool passes = false;             ///< strictly decreasing after a peak at m <= m_max - 20, ending below -30
  FitReport tail_fit;              ///< linear fit of the log ratio against log x over the last 20 points
};

/// Checks |f(e^{i(pi + x)})| / |x|^n -> 0 along x_m = 2^{-m} from log |f|.
std::vector<ZeroOrderReport> infinite_order_zero_check(const std::function<double(double)>& log_modulus,
                                                       std::span<const int> orders, int m_max = 60);
std::vector<ZeroOrderReport> infinite_order_zero_check(const DampedBlaschke& phi, std::span<const int> orders,
                                                       int m_max = 60);

}  // namespace swlag

#endif  // SWLAG_NORMS_HPP
