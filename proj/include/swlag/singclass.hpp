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

#ifndef SWLAG_SINGCLASS_HPP
#define SWLAG_SINGCLASS_HPP

// Classification of Schoen-Wolfson singularities of type Sigma_{j,j+1}: the
// first component of Phi carries angular mode +j, the second mode -(j+1), and
// both scale like r^{sqrt(j(j+1))}.

#include <Eigen/Core>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "swlag/complex.hpp"

namespace swlag {

using SurfaceEval = std::function<C2(const Complex&)>;

/// |c_n| for n = -n_max..n_max of each component; index n + n_max.
struct ModeAmplitudes {
  int n_max = 0;
  Eigen::ArrayXd first;
  Eigen::ArrayXd second;

  double first_at(int n) const { return first(n + n_max); }
  double second_at(int n) const { return second(n + n_max); }
};

/// Direct DFT in theta of both components of F(center + r e^{i theta}).
/// Throws AliasError if n_samples < 8 n_max.
ModeAmplitudes angular_profile(const SurfaceEval& surface, const Complex& center, double radius, int n_max,
                               int n_samples);

enum class ClassifyStatus { Classified, Inconclusive };

struct SingularityFit {
  Complex center;
  std::vector<double> radius_schedule;
  std::vector<ModeAmplitudes> mode_amplitudes;  ///< one profile per radius
  std::optional<int> inferred_j;
  double scaling_slope = 0;
  double r_squared = 0;
  double dominance = 0;  ///< smallest ratio (paired amplitude / largest other mode) over the radii
  int dominant_first = 0;   ///< strongest mode of the first component at the smallest radius
  int dominant_second = 0;  ///< strongest mode of the second component at the smallest radius
  ClassifyStatus status = ClassifyStatus::Inconclusive;
  std::string reason;
};

struct ClassifyOptions {
  int n_max = 8;
  int n_samples = 128;
  double dominance_threshold = 10;
  double r_squared_threshold = 0.999;
  double slope_tolerance = 0.05;  ///< relative gap allowed between the fit and sqrt(j(j+1))
};

/// Profiles F - F(center) on each radius and looks for the paired modes
/// (+j, -(j+1)). Classified only if the same j dominates on every radius by
/// the dominance threshold, the log-log fit of the paired amplitude is good and
/// its slope is close to sqrt(j(j+1)).
SingularityFit classify(const SurfaceEval& surface, const Complex& center, std::span<const double> radii,
                        const ClassifyOptions& options = {});

}  // namespace swlag

#endif  // SWLAG_SINGCLASS_HPP
