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

#ifndef SWLAG_CLI_HPP
#define SWLAG_CLI_HPP

// Run configuration and the command drivers behind the swlag executable.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "swlag/export.hpp"
#include "swlag/holo.hpp"
#include "swlag/surface.hpp"

namespace swlag {

struct EvalConfig {
  std::vector<Complex> points;
};

struct VerifyConfig {
  int n_points = 1000;
  int n_cells = 45;
  int n_singular_cells = 5;
  int n_windings = 10;
  int n_random_circles = 10;
  std::uint64_t seed = 20261016;
  double pointwise_tol = 1e-9;
  double weak_tol = 1e-8;
  double mass_tol = 1e-6;
};

struct NormsConfig {
  int refinement_levels = 3;
  std::vector<double> lambdas;  ///< default 10^{1 + i/4}, i = 0..16
  double weak_l2_radius = 0.1;
  int dipole_max_k = 8;
};

struct ClassifyConfig {
  std::vector<Complex> centers;  ///< default p_1, p_2 and a smooth point
  std::vector<double> radii;     ///< default 10^{-4 + 0.3 i}, i = 0..5
};

struct PoissonConfig {
  int M = 1 << 14;
  std::vector<double> r_list{0.9, 0.95, 0.99};
  std::optional<std::string> boundary_csv;  ///< profile this data instead of the trace of g
};

struct MeshConfig {
  int n_radial = 128;
  int n_angular = 256;
  double r_max = 0.9995;
  MeshOptions options;
};

struct RunConfig {
  double s = DampedBlaschke::kDefaultS;
  int j = 1;
  double p = 1.5;
  std::optional<int> K;
  std::optional<double> r_cert;
  std::optional<double> epsilon;
  EvalConfig eval;
  VerifyConfig verify;
  NormsConfig norms;
  ClassifyConfig classify;
  PoissonConfig poisson;
  MeshConfig mesh;

  DampedBlaschke phi() const;
  MapParams map() const { return MapParams(j, phi()); }
  Json to_json() const;
};

/// Parses and validates; throws ConfigError naming the offending key or constraint.
RunConfig parse_config(const Json& json);
RunConfig load_config(const std::filesystem::path& path);

struct CommandResult {
  Json report;
  int exit_code = 0;  ///< 0 pass, 1 residual failure
};

CommandResult cmd_eval(const RunConfig& config, const std::filesystem::path& out_dir, int threads = 1);
CommandResult cmd_verify(const RunConfig& config, const std::filesystem::path& out_dir, int threads = 1);
CommandResult cmd_norms(const RunConfig& config, const std::filesystem::path& out_dir, int threads = 1);
CommandResult cmd_classify(const RunConfig& config, const std::filesystem::path& out_dir, int threads = 1);
CommandResult cmd_poisson(const RunConfig& config, const std::filesystem::path& out_dir, int threads = 1);
CommandResult cmd_mesh(const RunConfig& config, const std::filesystem::path& out_dir, int threads = 1);

/// Dispatches by name, writes <out_dir>/<command>.json and returns the exit code:
/// 0 pass, 1 residual failure, 2 configuration or file-system error.
int run_command(const std::string& command, const std::filesystem::path& config_path,
                const std::filesystem::path& out_dir, int threads, std::ostream& log);

}  // namespace swlag

#endif  // SWLAG_CLI_HPP
