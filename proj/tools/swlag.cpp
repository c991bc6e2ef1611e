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

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "swlag/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Numerical verification of a Hamiltonian stationary Lagrangian disc with Schoen-Wolfson singularities"};
  std::string command, config, out = ".";
  int threads = 1;
  app.add_option("command", command, "eval | verify | norms | classify | poisson | mesh")
      ->required()
      ->check(CLI::IsMember({"eval", "verify", "norms", "classify", "poisson", "mesh"}));
  app.add_option("--config", config, "JSON run configuration")->required();
  app.add_option("--out", out, "output directory")->capture_default_str();
  app.add_option("--threads", threads, "worker threads")->check(CLI::Range(1, 256))->capture_default_str();
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return swlag::run_command(command, config, out, threads, std::cerr);
}
