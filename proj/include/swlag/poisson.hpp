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

#ifndef SWLAG_POISSON_HPP
#define SWLAG_POISSON_HPP

// Poisson-kernel harmonic extension of boundary data on the unit circle, the
// modulus-convergence profile of S^1-valued data, and the spread of G = log rho
// on the boundary.

#include <Eigen/Core>
#include <functional>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "swlag/complex.hpp"
#include "swlag/holo.hpp"

namespace swlag {

/// (1 - r^2) / (2 |r e^{i theta} - 1|^2).
double poisson_kernel(double r, double theta);

/// Node m of the M-point boundary grid, 2 pi (m + 1/2) / M. The half shift
/// keeps theta = pi off the grid for even M.
double boundary_node(int m, int M);

/// Unit-modulus samples psi(theta_m) on the boundary grid.
class BoundaryData {
 public:
  /// Throws DomainError unless |psi_m| = 1 within 1e-12 and M >= 8.
  explicit BoundaryData(Eigen::VectorXcd samples);

  static BoundaryData from_function(const std::function<Complex(double theta)>& psi, int M);
  /// The trace of g on the grid.
  static BoundaryData trace_of_g(const DampedBlaschke& phi, int M);

  int size() const { return static_cast<int>(samples_.size()); }
  double theta(int m) const { return boundary_node(m, size()); }
  const Eigen::VectorXcd& samples() const { return samples_; }

  /// Rows "theta,re,im" with a header line.
  void write_csv(std::ostream& out) const;
  /// Throws DomainError on malformed rows, a non-uniform grid or non-unit samples.
  static BoundaryData read_csv(std::istream& in);

 private:
  Eigen::VectorXcd samples_;
};

/// Trapezoidal Poisson convolution of arbitrary samples on the boundary grid,
/// with the kernel renormalized so constants are reproduced exactly.
/// Throws ResolutionError if r > 1 - 2 pi / M.
Complex poisson_convolve(const Eigen::VectorXcd& samples, double r, double theta);

Complex harmonic_extension(const BoundaryData& data, double r, double theta);

/// The extension at r on every grid node (circular convolution by FFT).
Eigen::VectorXcd harmonic_extension_ring(const BoundaryData& data, double r);

/// (r, max_m |1 - |extension(r, theta_m)||) for each r.
std::vector<std::pair<double, double>> modulus_convergence_profile(const BoundaryData& data,
                                                                   std::span<const double> r_list);

/// max - min of G over the M-point grid.
double constant_trace_defect(const std::function<double(double theta)>& G, int M);
/// The same for G = log rho of the construction. Requires M >= 2^8.
double constant_trace_defect(const DampedBlaschke& phi, int M);

}  // namespace swlag

#endif  // SWLAG_POISSON_HPP
