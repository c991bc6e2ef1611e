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

#include "swlag/singclass.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "swlag/norms.hpp"

namespace swlag {

namespace {

// Paired amplitude of the type (+j, -(j+1)), allowing the two components to mix.
double paired(const ModeAmplitudes& a, int j) {
  const double x = a.first_at(j), y = a.second_at(-j - 1), u = a.first_at(-j - 1), v = a.second_at(j);
  return std::sqrt(x * x + y * y + u * u + v * v);
}

double largest_other(const ModeAmplitudes& a, int j) {
  double out = 0;
  for (int n = -a.n_max; n <= a.n_max; ++n) {
    if (n == j || n == -j - 1) continue;
    out = std::max({out, a.first_at(n), a.second_at(n)});
  }
  return out;
}

int strongest(const Eigen::ArrayXd& amp, int n_max) {
  Eigen::Index i;
  amp.maxCoeff(&i);
  return static_cast<int>(i) - n_max;
}

}  // namespace

ModeAmplitudes angular_profile(const SurfaceEval& surface, const Complex& center, double radius, int n_max,
                               int n_samples) {
  if (n_max < 1) throw DomainError("angular_profile: n_max must be >= 1");
  if (!(radius > 0)) throw DomainError("angular_profile: radius must be positive");
  if (n_samples < 8 * n_max) throw AliasError("angular_profile: n_samples must be >= 8 n_max");
  std::vector<C2> values(n_samples);
  for (int m = 0; m < n_samples; ++m)
    values[m] = surface(center + std::polar(radius, 2 * std::numbers::pi * m / n_samples));

  ModeAmplitudes out;
  out.n_max = n_max;
  out.first.resize(2 * n_max + 1);
  out.second.resize(2 * n_max + 1);
  for (int n = -n_max; n <= n_max; ++n) {
    Complex c1 = 0, c2 = 0;
    for (int m = 0; m < n_samples; ++m) {
      // e^{-i n theta_m} with the index reduced mod n_samples for exact angles
      const long idx = ((static_cast<long>(n) * m) % n_samples + n_samples) % n_samples;
      const Complex e = std::polar(1.0, -2 * std::numbers::pi * idx / n_samples);
      c1 += values[m].z1 * e;
      c2 += values[m].z2 * e;
    }
    out.first(n + n_max) = std::abs(c1) / n_samples;
    out.second(n + n_max) = std::abs(c2) / n_samples;
  }
  return out;
}

SingularityFit classify(const SurfaceEval& surface, const Complex& center, std::span<const double> radii,
                        const ClassifyOptions& options) {
  if (radii.size() < 3) throw DomainError("classify: at least 3 radii are required");
  SingularityFit fit;
  fit.center = center;
  fit.radius_schedule.assign(radii.begin(), radii.end());

  const C2 base = surface(center);
  const SurfaceEval shifted = [&](const Complex& z) {
    const C2 v = surface(z);
    return C2{v.z1 - base.z1, v.z2 - base.z2};
  };
  for (double r : radii)
    fit.mode_amplitudes.push_back(angular_profile(shifted, center, r, options.n_max, options.n_samples));

  const auto smallest = std::min_element(radii.begin(), radii.end()) - radii.begin();
  fit.dominant_first = strongest(fit.mode_amplitudes[smallest].first, options.n_max);
  fit.dominant_second = strongest(fit.mode_amplitudes[smallest].second, options.n_max);

  std::optional<int> j_common;
  fit.dominance = std::numeric_limits<double>::infinity();
  for (const ModeAmplitudes& a : fit.mode_amplitudes) {
    int best = 0;
    double best_amp = -1;
    for (int j = 1; j + 1 <= options.n_max; ++j)
      if (paired(a, j) > best_amp) {
        best_amp = paired(a, j);
        best = j;
      }
    const double other = largest_other(a, best);
    fit.dominance = std::min(fit.dominance, other > 0 ? best_amp / other : std::numeric_limits<double>::infinity());
    if (j_common && *j_common != best) {
      fit.reason = "dominant pair changes across radii";
      return fit;
    }
    j_common = best;
  }
  if (!(fit.dominance >= options.dominance_threshold)) {
    fit.reason = "paired modes do not dominate (ratio " + std::to_string(fit.dominance) + ")";
    return fit;
  }

  std::vector<double> amp;
  for (const ModeAmplitudes& a : fit.mode_amplitudes) amp.push_back(paired(a, *j_common));
  FitReport f;
  try {
    f = fit_loglog(radii, amp);
  } catch (const FitError& e) {
    fit.reason = e.what();
    return fit;
  }
  fit.scaling_slope = f.slope;
  fit.r_squared = f.r_squared;
  if (f.r_squared < options.r_squared_threshold) {
    fit.reason = "scaling fit r^2 = " + std::to_string(f.r_squared) + " below threshold";
    return fit;
  }
  const double expected = std::sqrt(static_cast<double>(*j_common) * (*j_common + 1));
  if (std::abs(f.slope - expected) > options.slope_tolerance * expected) {
    fit.reason = "scaling slope " + std::to_string(f.slope) + " is not sqrt(j(j+1)) for j = " + std::to_string(*j_common);
    return fit;
  }
  fit.inferred_j = j_common;
  fit.status = ClassifyStatus::Classified;
  return fit;
}

}  // namespace swlag
