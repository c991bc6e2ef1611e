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

#include "swlag/poisson.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>

#include <unsupported/Eigen/FFT>

#include "swlag/detail/summation.hpp"

namespace swlag {

namespace {

constexpr double kPi = std::numbers::pi;

void check_resolution(double r, int M) {
  if (!(r >= 0 && r < 1)) throw DomainError("poisson: r must lie in [0, 1)");
  if (r > 1 - 2 * kPi / M)
    throw ResolutionError("poisson: r = " + std::to_string(r) + " exceeds 1 - 2 pi / M for M = " + std::to_string(M));
}

// pi + x at node m, with x formed without cancellation
double node_offset(int m, int M) { return kPi * (2.0 * m + 1 - M) / M; }

}  // namespace

double poisson_kernel(double r, double theta) {
  if (!(r >= 0 && r < 1)) throw DomainError("poisson_kernel: r must lie in [0, 1)");
  return (1 - r * r) / (2 * (1 - 2 * r * std::cos(theta) + r * r));
}

double boundary_node(int m, int M) { return 2 * kPi * (m + 0.5) / M; }

BoundaryData::BoundaryData(Eigen::VectorXcd samples) : samples_(std::move(samples)) {
  if (samples_.size() < 8) throw DomainError("BoundaryData: at least 8 samples are required");
  for (Eigen::Index m = 0; m < samples_.size(); ++m)
    if (!(std::abs(std::abs(samples_(m)) - 1) <= 1e-12))
      throw DomainError("BoundaryData: sample " + std::to_string(m) + " is not unit modulus");
}

BoundaryData BoundaryData::from_function(const std::function<Complex(double)>& psi, int M) {
  if (M < 8) throw DomainError("BoundaryData: M must be >= 8");
  Eigen::VectorXcd samples(M);
  for (int m = 0; m < M; ++m) samples(m) = psi(boundary_node(m, M));
  return BoundaryData(std::move(samples));
}

BoundaryData BoundaryData::trace_of_g(const DampedBlaschke& phi, int M) {
  if (M < 8 || M % 2 != 0) throw DomainError("BoundaryData: M must be even and >= 8");
  Eigen::VectorXcd samples(M);
  for (int m = 0; m < M; ++m) samples(m) = eval_boundary_offset(phi, node_offset(m, M), 0.0);
  return BoundaryData(std::move(samples));
}

void BoundaryData::write_csv(std::ostream& out) const {
  out << "theta,re,im\n";
  char line[96];
  for (int m = 0; m < size(); ++m) {
    std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g\n", theta(m), samples_(m).real(), samples_(m).imag());
    out << line;
  }
}

BoundaryData BoundaryData::read_csv(std::istream& in) {
  std::string line;
  std::vector<double> theta;
  std::vector<Complex> values;
  int row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty() || (row == 1 && line.rfind("theta", 0) == 0)) continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream fields(line);
    double t, re, im;
    if (!(fields >> t >> re >> im)) throw DomainError("BoundaryData: malformed CSV row " + std::to_string(row));
    theta.push_back(t);
    values.emplace_back(re, im);
  }
  const int M = static_cast<int>(values.size());
  for (int m = 0; m < M; ++m)
    if (!(std::abs(theta[m] - boundary_node(m, M)) <= 1e-12))
      throw DomainError("BoundaryData: CSV grid is not the uniform half-shifted grid");
  Eigen::VectorXcd samples(M);
  for (int m = 0; m < M; ++m) samples(m) = values[m];
  return BoundaryData(std::move(samples));
}

Complex poisson_convolve(const Eigen::VectorXcd& samples, double r, double theta) {
  const int M = static_cast<int>(samples.size());
  if (M < 8) throw DomainError("poisson_convolve: at least 8 samples are required");
  check_resolution(r, M);
  detail::CompensatedSum re, im, mass;
  for (int m = 0; m < M; ++m) {
    const double w = poisson_kernel(r, theta - boundary_node(m, M));
    re.add(w * samples(m).real());
    im.add(w * samples(m).imag());
    mass.add(w);
  }
  return Complex(re.value(), im.value()) / mass.value();
}

Complex harmonic_extension(const BoundaryData& data, double r, double theta) {
  return poisson_convolve(data.samples(), r, theta);
}

Eigen::VectorXcd harmonic_extension_ring(const BoundaryData& data, double r) {
  const int M = data.size();
  check_resolution(r, M);
  Eigen::VectorXcd kernel(M);
  double mass = 0;
  for (int n = 0; n < M; ++n) {
    const double w = poisson_kernel(r, 2 * kPi * n / M);
    kernel(n) = w;
    mass += w;
  }
  kernel /= mass;
  Eigen::FFT<double> fft;
  Eigen::VectorXcd a, b, out;
  fft.fwd(a, data.samples());
  fft.fwd(b, kernel);
  a = a.cwiseProduct(b);
  fft.inv(out, a);
  return out;
}

std::vector<std::pair<double, double>> modulus_convergence_profile(const BoundaryData& data,
                                                                   std::span<const double> r_list) {
  std::vector<std::pair<double, double>> out;
  for (double r : r_list) {
    const Eigen::VectorXcd ext = harmonic_extension_ring(data, r);
    double sup = 0;
    for (Eigen::Index m = 0; m < ext.size(); ++m) sup = std::max(sup, std::abs(1 - std::abs(ext(m))));
    out.emplace_back(r, sup);
  }
  return out;
}

double constant_trace_defect(const std::function<double(double)>& G, int M) {
  if (M < 8) throw DomainError("constant_trace_defect: M must be >= 8");
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (int m = 0; m < M; ++m) {
    const double v = G(boundary_node(m, M));
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return hi - lo;
}

double constant_trace_defect(const DampedBlaschke& phi, int M) {
  if (M < 256 || M % 2 != 0) throw DomainError("constant_trace_defect: M must be even and >= 2^8");
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (int m = 0; m < M; ++m) {
    const double v = boundary_log_polar(phi, node_offset(m, M)).log_rho;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return hi - lo;
}

}  // namespace swlag
