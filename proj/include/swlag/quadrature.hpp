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

#ifndef SWLAG_QUADRATURE_HPP
#define SWLAG_QUADRATURE_HPP

#include <Eigen/Core>

#include <functional>
#include <span>
#include <vector>

namespace swlag {

/// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};

/// n-point Gauss-Legendre rule on [-1, 1] (Newton on the three-term recurrence).
/// Rules are cached; the returned reference stays valid.
const GaussRule& gauss_legendre(int n);

struct AdaptiveResult {
  double value = 0;
  double error = 0;
  int evaluations = 0;
  bool converged = true;
};

struct AdaptiveOptions {
  double abs_tol = 1e-12;
  double rel_tol = 1e-8;
  int max_intervals = 2000;
};

/// Globally adaptive Gauss-Kronrod (7/15) quadrature of f over [a, b], with the
/// interval pre-split at the given interior breakpoints.
AdaptiveResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                  const AdaptiveOptions& options = {}, std::span<const double> breakpoints = {});

}  // namespace swlag

#endif  // SWLAG_QUADRATURE_HPP
