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

#include "swlag/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numbers>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "swlag/diffgeo.hpp"
#include "swlag/norms.hpp"
#include "swlag/parallel.hpp"
#include "swlag/poisson.hpp"
#include "swlag/singclass.hpp"

namespace swlag {

namespace fs = std::filesystem;

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

// ---- config parsing

void check_keys(const Json& obj, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) throw ConfigError(where + " must be a JSON object");
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!ok.count(it.key())) throw ConfigError("unknown key '" + it.key() + "' in " + where);
}

double number(const Json& obj, const char* key, double fallback) {
  if (!obj.contains(key)) return fallback;
  const Json& v = obj.at(key);
  if (!v.is_number()) throw ConfigError(std::string("'") + key + "' must be a number");
  return v.get<double>();
}

int integer(const Json& obj, const char* key, int fallback) {
  if (!obj.contains(key)) return fallback;
  const Json& v = obj.at(key);
  if (!v.is_number_integer()) throw ConfigError(std::string("'") + key + "' must be an integer");
  return v.get<int>();
}

std::vector<double> numbers(const Json& obj, const char* key, std::vector<double> fallback) {
  if (!obj.contains(key)) return fallback;
  const Json& v = obj.at(key);
  if (!v.is_array() || v.empty()) throw ConfigError(std::string("'") + key + "' must be a non-empty array");
  std::vector<double> out;
  for (const Json& x : v) {
    if (!x.is_number()) throw ConfigError(std::string("'") + key + "' must contain numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

std::vector<Complex> points(const Json& obj, const char* key, std::vector<Complex> fallback) {
  if (!obj.contains(key)) return fallback;
  const Json& v = obj.at(key);
  if (!v.is_array()) throw ConfigError(std::string("'") + key + "' must be an array of [x, y] pairs");
  std::vector<Complex> out;
  for (const Json& x : v) {
    if (!x.is_array() || x.size() != 2 || !x[0].is_number() || !x[1].is_number())
      throw ConfigError(std::string("'") + key + "' must be an array of [x, y] pairs");
    const Complex z(x[0].get<double>(), x[1].get<double>());
    if (!(std::norm(z) < 1)) throw ConfigError(std::string("'") + key + "' contains a point outside the open unit disc");
    out.push_back(z);
  }
  return out;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw ConfigError(message);
}

std::string brief(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

Json complex_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

std::vector<double> geometric(double first, double factor, int count) {
  std::vector<double> out;
  for (int i = 0; i < count; ++i) out.push_back(first * std::pow(factor, i));
  return out;
}

std::vector<double> default_radii() { return geometric(1e-4, std::pow(10.0, 0.3), 6); }

// ---- shared geometry

// Half the distance from p_k to its nearest neighbour or to the boundary.
double safe_radius(int k) {
  const double eps = zero_offset(k);
  double d = std::min(eps - zero_offset(k + 1), eps);
  if (k > 1) d = std::min(d, zero_offset(k - 1) - eps);
  return 0.5 * d;
}

Json check_json(const std::string& name, double value, double threshold, bool pass) {
  return Json{{"name", name}, {"value", value}, {"threshold", threshold}, {"pass", pass}};
}

Json base_report(const std::string& command, const RunConfig& config) {
  return Json{{"schema", kReportSchema}, {"command", command}, {"config", config.to_json()}};
}

void write_text(const fs::path& path, const std::function<void(std::ostream&)>& body) {
  std::ofstream out(path);
  if (!out) throw fs::filesystem_error("cannot open for writing", path, std::make_error_code(std::errc::io_error));
  body(out);
  if (!out) throw fs::filesystem_error("write failed", path, std::make_error_code(std::errc::io_error));
}

Json sample_json(const SurfaceSample& s) {
  Json row{{"z", complex_json(s.z)}, {"Phi", Json::array({s.Phi(0), s.Phi(1), s.Phi(2), s.Phi(3)})}};
  row["angle"] = s.angle ? complex_json(*s.angle) : Json(nullptr);
  row["conf_factor"] = s.conf_factor;
  return row;
}

Json fit_json(const FitReport& f) {
  return Json{{"slope", f.slope},
              {"intercept", f.intercept},
              {"r_squared", f.r_squared},
              {"window", Json::array({f.window.first, f.window.second})}};
}

}  // namespace

DampedBlaschke RunConfig::phi() const {
  if (K) return DampedBlaschke(s, *K, r_cert.value_or(DampedBlaschke::kDefaultRCert));
  if (epsilon) return DampedBlaschke::certified(s, r_cert.value_or(DampedBlaschke::kDefaultRCert), *epsilon);
  return DampedBlaschke(s, DampedBlaschke::kDefaultK, r_cert.value_or(DampedBlaschke::kDefaultRCert));
}

Json RunConfig::to_json() const {
  const DampedBlaschke f = phi();
  Json out{{"s", s}, {"j", j}, {"p", p}, {"K", f.K()}, {"r_cert", f.r_cert()}};
  if (epsilon) out["epsilon"] = *epsilon;
  return out;
}

RunConfig parse_config(const Json& json) {
  check_keys(json, "config", {"s", "j", "p", "K", "r_cert", "epsilon", "eval", "verify", "norms", "classify",
                              "poisson", "mesh"});
  RunConfig c;
  c.p = number(json, "p", c.p);
  require(c.p >= 1 && c.p < 2, "p = " + brief(c.p) + " violates 1 <= p < 2");
  c.s = number(json, "s", c.s);
  require(c.s > 0 && c.s < 2 / c.p - 1, "s = " + brief(c.s) + " violates the constraint s in (0, 2/p - 1) = (0, " +
                                            brief(2 / c.p - 1) + ") for p = " + brief(c.p));
  c.j = integer(json, "j", c.j);
  require(c.j >= 1, "j must be a positive integer");
  if (json.contains("K")) c.K = integer(json, "K", 0);
  if (json.contains("r_cert")) c.r_cert = number(json, "r_cert", 0);
  if (json.contains("epsilon")) c.epsilon = number(json, "epsilon", 0);
  require(!(c.K && c.epsilon), "give either K or epsilon, not both");
  try {
    (void)c.phi();
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }

  const Json empty = Json::object();
  const Json& ev = json.value("eval", empty);
  check_keys(ev, "eval", {"points"});
  c.eval.points = points(ev, "points", {Complex(0, 0), zero_location(1), Complex(0.3, 0.2)});

  const Json& ve = json.value("verify", empty);
  check_keys(ve, "verify", {"n_points", "n_cells", "n_singular_cells", "n_windings", "n_random_circles", "seed",
                            "pointwise_tol", "weak_tol", "mass_tol"});
  VerifyConfig& v = c.verify;
  v.n_points = integer(ve, "n_points", v.n_points);
  v.n_cells = integer(ve, "n_cells", v.n_cells);
  v.n_singular_cells = integer(ve, "n_singular_cells", v.n_singular_cells);
  v.n_windings = integer(ve, "n_windings", v.n_windings);
  v.n_random_circles = integer(ve, "n_random_circles", v.n_random_circles);
  if (ve.contains("seed")) {
    require(ve.at("seed").is_number_unsigned(), "'seed' must be a non-negative integer");
    v.seed = ve.at("seed").get<std::uint64_t>();
  }
  v.pointwise_tol = number(ve, "pointwise_tol", v.pointwise_tol);
  v.weak_tol = number(ve, "weak_tol", v.weak_tol);
  v.mass_tol = number(ve, "mass_tol", v.mass_tol);
  require(v.n_points >= 0 && v.n_cells >= 0 && v.n_random_circles >= 0, "verify counts must be >= 0");
  require(v.n_singular_cells >= 0 && v.n_singular_cells <= 10, "n_singular_cells must lie in 0..10");
  require(v.n_windings >= 0 && v.n_windings <= 20, "n_windings must lie in 0..20");
  require(v.pointwise_tol > 0 && v.weak_tol > 0 && v.mass_tol > 0, "verify tolerances must be positive");

  const Json& no = json.value("norms", empty);
  check_keys(no, "norms", {"refinement_levels", "lambdas", "weak_l2_radius", "dipole_max_k"});
  NormsConfig& n = c.norms;
  n.refinement_levels = integer(no, "refinement_levels", n.refinement_levels);
  n.lambdas = numbers(no, "lambdas", geometric(10, std::pow(10.0, 0.25), 17));
  n.weak_l2_radius = number(no, "weak_l2_radius", n.weak_l2_radius);
  n.dipole_max_k = integer(no, "dipole_max_k", n.dipole_max_k);
  require(n.refinement_levels >= 3 && n.refinement_levels <= 8, "refinement_levels must lie in 3..8");
  require(std::is_sorted(n.lambdas.begin(), n.lambdas.end()) && n.lambdas.front() > 0, "lambdas must be positive and increasing");
  require(n.weak_l2_radius > 0 && n.weak_l2_radius < 0.2, "weak_l2_radius must lie in (0, 0.2)");
  require(n.dipole_max_k >= 1 && n.dipole_max_k <= 30, "dipole_max_k must lie in 1..30");

  const Json& cl = json.value("classify", empty);
  check_keys(cl, "classify", {"centers", "radii"});
  c.classify.centers = points(cl, "centers", {zero_location(1), zero_location(2), Complex(0.3, 0.2)});
  c.classify.radii = numbers(cl, "radii", default_radii());
  require(c.classify.radii.size() >= 3, "classify needs at least 3 radii");
  for (double r : c.classify.radii) require(r > 0 && r < 0.5, "classify radii must lie in (0, 0.5)");

  const Json& po = json.value("poisson", empty);
  check_keys(po, "poisson", {"M", "r_list", "boundary_csv"});
  c.poisson.M = integer(po, "M", c.poisson.M);
  c.poisson.r_list = numbers(po, "r_list", c.poisson.r_list);
  if (po.contains("boundary_csv")) {
    require(po.at("boundary_csv").is_string(), "'boundary_csv' must be a path string");
    c.poisson.boundary_csv = po.at("boundary_csv").get<std::string>();
  }
  require(c.poisson.M >= 256 && c.poisson.M % 2 == 0 && c.poisson.M <= (1 << 22), "M must be even and lie in 2^8..2^22");
  for (double r : c.poisson.r_list)
    require(r >= 0 && r <= 1 - kTwoPi / c.poisson.M, "poisson r_list entries must lie in [0, 1 - 2 pi / M]");

  const Json& me = json.value("mesh", empty);
  check_keys(me, "mesh", {"n_radial", "n_angular", "r_max", "projection", "drop"});
  MeshConfig& m = c.mesh;
  m.n_radial = integer(me, "n_radial", m.n_radial);
  m.n_angular = integer(me, "n_angular", m.n_angular);
  m.r_max = number(me, "r_max", m.r_max);
  const std::string projection = me.value("projection", std::string("drop"));
  require(projection == "drop" || projection == "stereographic", "projection must be 'drop' or 'stereographic'");
  m.options.projection = projection == "drop" ? Projection::DropCoordinate : Projection::Stereographic;
  m.options.drop = integer(me, "drop", m.options.drop);
  require(m.n_radial >= 3 && m.n_radial <= 4096, "n_radial must lie in 3..4096");
  require(m.n_angular >= 8 && m.n_angular % 2 == 0 && m.n_angular <= 8192, "n_angular must be even and lie in 8..8192");
  require(m.r_max > 0 && m.r_max < 1, "r_max must lie in (0, 1)");
  require(m.options.drop >= 0 && m.options.drop <= 3, "drop must lie in 0..3");
  return c;
}

RunConfig load_config(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  Json json;
  try {
    json = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config is not valid JSON: " + std::string(e.what()));
  }
  return parse_config(json);
}

CommandResult cmd_eval(const RunConfig& config, const fs::path& out_dir, int threads) {
  const MapParams params = config.map();
  std::vector<SurfaceSample> samples(config.eval.points.size());
  parallel_for(samples.size(), threads, [&](std::size_t i) { samples[i] = surface(params, config.eval.points[i]); });
  Json rows = Json::array();
  for (const SurfaceSample& s : samples) rows.push_back(sample_json(s));
  write_text(out_dir / "eval.csv", [&](std::ostream& out) { write_sample_csv(out, samples); });
  Json report = base_report("eval", config);
  report["samples"] = std::move(rows);
  report["files"] = Json::array({"eval.csv"});
  report["pass"] = true;
  return {std::move(report), 0};
}

CommandResult cmd_verify(const RunConfig& config, const fs::path&, int threads) {
  const VerifyConfig& vc = config.verify;
  const MapParams params = config.map();
  const DampedBlaschke& phi = params.phi;
  std::mt19937_64 rng(vc.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Json checks = Json::array();
  bool all_pass = true;
  double max_relative = 0;
  auto record = [&](const std::string& name, double value, double threshold, bool pass) {
    checks.push_back(check_json(name, value, threshold, pass));
    all_pass = all_pass && pass;
  };

  // pointwise identities
  std::vector<Complex> pts;
  while (static_cast<int>(pts.size()) < vc.n_points) {
    const Complex z = std::polar(0.99 * std::sqrt(unit(rng)), kTwoPi * unit(rng));
    if (is_safe_point(phi, z)) pts.push_back(z);
  }
  std::vector<std::array<double, 4>> pointwise(pts.size());
  parallel_for(pts.size(), threads, [&](std::size_t i) {
    const SurfaceSample s = surface(params, pts[i]);
    const ConformalResiduals c = conformal_residuals(s);
    const double q = quaternionic_check(s);
    pointwise[i] = {std::abs(c.omega) / s.conf_factor, std::abs(c.inner) / s.conf_factor,
                    std::abs(c.norm_gap) / s.conf_factor, q};
  });
  const char* pointwise_names[4] = {"lagrangian_omega", "conformal_inner", "conformal_norm_gap", "quaternionic"};
  for (int m = 0; m < 4; ++m) {
    double worst = 0;
    for (const auto& r : pointwise) worst = std::max(worst, r[m]);
    max_relative = std::max(max_relative, worst);
    record(std::string("pointwise.") + pointwise_names[m], worst, vc.pointwise_tol, worst <= vc.pointwise_tol);
  }

  // weak residuals
  std::vector<TestCell> cells;
  while (static_cast<int>(cells.size()) < vc.n_cells) {
    TestCell cell;
    cell.center = std::polar(0.85 * std::sqrt(unit(rng)), kTwoPi * unit(rng));
    cell.radius = 0.02 + 0.08 * unit(rng);
    bool ok = std::abs(cell.center) + cell.radius < 0.95 && std::abs(cell.center + 1.0) > cell.radius + 0.1;
    for (int k = 1; k <= phi.K() && ok; ++k) ok = std::abs(cell.center - zero_location(k)) > 1.5 * cell.radius;
    if (ok) cells.push_back(cell);
  }
  for (int k = 1; k <= vc.n_singular_cells; ++k) {
    TestCell cell;
    cell.radius = 0.9 * safe_radius(k);
    cell.center = zero_location(k) + std::polar(0.3 * cell.radius, kTwoPi * unit(rng));
    cell.singularity = zero_location(k);
    cells.push_back(cell);
  }
  struct CellResult {
    double gu_coarse, gu, igg_coarse, igg, perp;
  };
  std::vector<CellResult> cell_results(cells.size());
  const VectorField gu = field_g_grad_u(params), igg = field_i_gbar_grad_g(phi), perp = field_perp_grad_G(phi);
  parallel_for(cells.size(), threads, [&](std::size_t i) {
    TestCell coarse = cells[i];
    coarse.n_radial /= 2;
    coarse.n_angular /= 2;
    CellResult& r = cell_results[i];
    r.gu_coarse = weak_residual_div(gu, coarse).relative();
    r.gu = weak_residual_div(gu, cells[i]).relative();
    r.igg_coarse = weak_residual_div(igg, coarse).relative();
    r.igg = weak_residual_div(igg, cells[i]).relative();
    r.perp = cells[i].singularity ? 0.0 : weak_residual_div(perp, cells[i]).relative();
  });
  double worst_gu = 0, worst_igg = 0, worst_perp = 0, worst_gu_coarse = 0, worst_igg_coarse = 0;
  for (const CellResult& r : cell_results) {
    worst_gu = std::max(worst_gu, r.gu);
    worst_igg = std::max(worst_igg, r.igg);
    worst_perp = std::max(worst_perp, r.perp);
    worst_gu_coarse = std::max(worst_gu_coarse, r.gu_coarse);
    worst_igg_coarse = std::max(worst_igg_coarse, r.igg_coarse);
  }
  max_relative = std::max({max_relative, worst_gu, worst_igg, worst_perp});
  record("weak.div_g_grad_u", worst_gu, vc.weak_tol, worst_gu <= vc.weak_tol);
  record("weak.div_i_gbar_grad_g", worst_igg, vc.weak_tol, worst_igg <= vc.weak_tol);
  record("weak.div_perp_grad_G", worst_perp, vc.weak_tol, worst_perp <= vc.weak_tol);
  checks.push_back(Json{{"name", "weak.coarse_nodes"},
                        {"div_g_grad_u", worst_gu_coarse},
                        {"div_i_gbar_grad_g", worst_igg_coarse},
                        {"cells", cells.size()}});

  // delta masses and windings
  for (int k = 1; k <= std::min(5, phi.K()); ++k)
    for (double f : {0.5, 1.0}) {
      const double m = delta_mass(phi, zero_location(k), f * safe_radius(k));
      const double err = std::abs(m / kTwoPi - 1);
      record("delta_mass.p" + std::to_string(k) + ".r" + format_double(f), err, vc.mass_tol, err <= vc.mass_tol);
    }
  for (int m = 2; m <= std::min(4, phi.K() - 1); ++m) {
    const double left = -1 + 0.5 * (zero_offset(m) + zero_offset(m + 1));
    const double right = zero_location(1).real() + 0.1;
    const double mass = delta_mass(phi, Complex(0.5 * (left + right), 0), 0.5 * (right - left));
    const double err = std::abs(mass / (kTwoPi * m) - 1);
    record("delta_mass.additivity.m" + std::to_string(m), err, 1e-7, err <= 1e-7);
  }
  for (int k = 1; k <= std::min(vc.n_windings, phi.K()); ++k) {
    const WindingResult w = winding_of_g(phi, zero_location(k), safe_radius(k));
    record("winding.p" + std::to_string(k), w.winding, 1, w.winding == 1 && w.defect < 0.01);
  }
  for (int i = 0; i < vc.n_random_circles;) {
    const Complex c = std::polar(0.9 * std::sqrt(unit(rng)), kTwoPi * unit(rng));
    const double R = 0.02 + 0.18 * unit(rng);
    bool ok = std::abs(c) + R < 0.98 && std::abs(c + 1.0) > R + 0.05;
    for (int k = 1; k <= phi.K() && ok; ++k) ok = std::abs(zero_location(k) - c) > 1.1 * R;
    if (!ok) continue;
    const WindingResult w = winding_of_g(phi, c, R);
    record("winding.free" + std::to_string(i), w.winding, 0, w.winding == 0 && w.defect < 0.01);
    ++i;
  }

  Json report = base_report("verify", config);
  report["checks"] = std::move(checks);
  report["max_relative_residual"] = max_relative;
  report["pass"] = all_pass;
  return {std::move(report), all_pass ? 0 : 1};
}

CommandResult cmd_norms(const RunConfig& config, const fs::path&, int) {
  const DampedBlaschke phi = config.phi();
  const NormsConfig& nc = config.norms;
  Json report = base_report("norms", config);
  report["p"] = config.p;
  report["s"] = config.s;
  report["K"] = phi.K();

  const SobolevResult sob = sobolev_w1p(phi, config.p, nc.refinement_levels);
  report["estimate"] = sob.estimate;
  report["stability"] = sob.stability;
  report["nonconvergence"] = sob.nonconvergence;
  report["level_values"] = sob.level_values;

  const WeakL2Result wl = weak_l2(phi, Disc{zero_location(1), nc.weak_l2_radius}, nc.lambdas);
  const double top = wl.profile.back().first / 10;
  const auto first_top = std::find_if(wl.profile.begin(), wl.profile.end(),
                                      [&](const auto& e) { return e.first >= top * (1 - 1e-12); });
  report["weak_l2_sup"] = wl.sup_value;
  report["plateau"] = wl.profile.back().second / first_top->second;
  Json profile = Json::array();
  for (const auto& [lambda, value] : wl.profile) profile.push_back(Json::array({lambda, value}));
  report["weak_l2_profile"] = std::move(profile);

  const MapParams params = config.map();
  Json slopes = Json::array();
  const std::vector<double> radii = default_radii();
  for (int k = 1; k <= std::min(2, phi.K()); ++k) {
    const FitReport f = holder_fit([&](const Complex& z) { return surface(params, z).Phi; }, zero_location(k), radii);
    Json entry = fit_json(f);
    entry["center"] = "p" + std::to_string(k);
    entry["expected"] = params.alpha();
    slopes.push_back(std::move(entry));
  }
  report["slopes"] = std::move(slopes);

  Json dipoles = Json::array();
  for (int k = 1; k <= nc.dipole_max_k; ++k) {
    const DipoleBound d = dipole_bound_check(k, config.p);
    dipoles.push_back(Json{{"k", k}, {"lhs", d.lhs}, {"rhs", d.rhs}, {"ok", d.ok}});
  }
  report["dipole_bounds"] = std::move(dipoles);

  Json probes = Json::array();
  auto probe = [&](const std::string& name, const TraceProbeReport& r) {
    probes.push_back(Json{{"trace", name},
                          {"max_derivative", r.max_derivative},
                          {"bounded", r.bounded},
                          {"diverging", r.diverging},
                          {"growth_slope", r.growth_slope}});
  };
  probe("g", boundary_trace_probe(phi, 0.0, 1));
  probe("rho", boundary_trace_probe([&](double x) { return Complex(std::exp(boundary_log_polar(phi, x).log_rho), 0); }, 3));
  probe("rho^1 g", boundary_trace_probe(phi, 1.0, 3));
  probe("rho^(alpha/j) g", boundary_trace_probe(phi, params.alpha() / params.j, 3));
  report["trace_probes"] = std::move(probes);

  const std::vector<int> orders{1, 2, 3, 4, 5};
  Json zeros = Json::array();
  for (const ZeroOrderReport& z : infinite_order_zero_check(phi, orders))
    zeros.push_back(Json{{"order", z.order}, {"peak_index", z.peak_index}, {"passes", z.passes},
                         {"final_log_ratio", z.log_ratios.back()}});
  report["infinite_order_zero"] = std::move(zeros);
  report["pass"] = !sob.nonconvergence;
  return {std::move(report), sob.nonconvergence ? 1 : 0};
}

CommandResult cmd_classify(const RunConfig& config, const fs::path&, int threads) {
  const MapParams params = config.map();
  const auto& centers = config.classify.centers;
  std::vector<SingularityFit> fits(centers.size());
  const SurfaceEval eval_surface = [&](const Complex& z) { return surface(params, z).position(); };
  parallel_for(centers.size(), threads,
               [&](std::size_t i) { fits[i] = classify(eval_surface, centers[i], config.classify.radii); });
  Json list = Json::array();
  for (const SingularityFit& f : fits) {
    Json entry{{"center", complex_json(f.center)},
               {"status", f.status == ClassifyStatus::Classified ? "classified" : "inconclusive"}};
    entry["inferred_j"] = f.inferred_j ? Json(*f.inferred_j) : Json(nullptr);
    entry["scaling_slope"] = f.scaling_slope;
    entry["r_squared"] = f.r_squared;
    entry["dominance"] = f.dominance;
    entry["dominant_modes"] = Json::array({f.dominant_first, f.dominant_second});
    entry["radius_schedule"] = f.radius_schedule;
    const ModeAmplitudes& a = f.mode_amplitudes.front();
    entry["amplitudes_first"] = std::vector<double>(a.first.begin(), a.first.end());
    entry["amplitudes_second"] = std::vector<double>(a.second.begin(), a.second.end());
    if (!f.reason.empty()) entry["reason"] = f.reason;
    list.push_back(std::move(entry));
  }
  Json report = base_report("classify", config);
  report["fits"] = std::move(list);
  report["pass"] = true;
  return {std::move(report), 0};
}

CommandResult cmd_poisson(const RunConfig& config, const fs::path& out_dir, int) {
  const DampedBlaschke phi = config.phi();
  const PoissonConfig& pc = config.poisson;
  std::optional<BoundaryData> data;
  if (pc.boundary_csv) {
    std::ifstream in(*pc.boundary_csv);
    if (!in) throw ConfigError("cannot read boundary_csv " + *pc.boundary_csv);
    try {
      data = BoundaryData::read_csv(in);
    } catch (const DomainError& e) {
      throw ConfigError(std::string("boundary_csv: ") + e.what());
    }
    for (double r : pc.r_list)
      if (r > 1 - kTwoPi / data->size()) throw ConfigError("r_list exceeds the resolvable range of boundary_csv");
  } else {
    data = BoundaryData::trace_of_g(phi, pc.M);
    write_text(out_dir / "boundary.csv", [&](std::ostream& out) { data->write_csv(out); });
  }
  const auto profile = modulus_convergence_profile(*data, pc.r_list);
  Json rows = Json::array();
  bool decreasing = true;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    rows.push_back(Json::array({profile[i].first, profile[i].second}));
    if (i > 0) decreasing = decreasing && profile[i].second < profile[i - 1].second;
  }
  Json report = base_report("poisson", config);
  report["M"] = data->size();
  report["data"] = pc.boundary_csv ? *pc.boundary_csv : std::string("trace_of_g");
  report["modulus_profile"] = std::move(rows);
  report["strictly_decreasing"] = decreasing;
  report["constant_trace_defect"] = constant_trace_defect(phi, std::max(pc.M, 256));
  if (!pc.boundary_csv) report["files"] = Json::array({"boundary.csv"});
  report["pass"] = true;
  return {std::move(report), 0};
}

CommandResult cmd_mesh(const RunConfig& config, const fs::path& out_dir, int threads) {
  const MeshConfig& mc = config.mesh;
  const MapParams params = config.map();
  const PolarGrid grid = make_polar_grid(params.phi, mc.n_radial, mc.n_angular, mc.r_max);
  const SurfaceMesh mesh = build_mesh(params, grid, mc.options, threads);
  write_text(out_dir / "mesh.obj", [&](std::ostream& out) { write_obj(out, mesh); });
  write_text(out_dir / "mesh_attributes.csv", [&](std::ostream& out) { write_vertex_attributes(out, mesh); });
  write_text(out_dir / "mesh_samples.csv", [&](std::ostream& out) { write_sample_csv(out, mesh.samples); });
  int zero_rows = 0;
  for (int k = 1; k <= params.phi.K(); ++k)
    zero_rows += std::count(grid.radii.begin(), grid.radii.end(), std::abs(zero_location(k)));
  Json report = base_report("mesh", config);
  report["vertices"] = mesh.vertices.rows();
  report["faces"] = mesh.faces.size();
  report["rows_through_zeros"] = zero_rows;
  report["projection"] = mc.options.projection == Projection::DropCoordinate ? "drop" : "stereographic";
  report["files"] = Json::array({"mesh.obj", "mesh_attributes.csv", "mesh_samples.csv"});
  report["pass"] = true;
  return {std::move(report), 0};
}

int run_command(const std::string& command, const fs::path& config_path, const fs::path& out_dir, int threads,
                std::ostream& log) {
  using Fn = CommandResult (*)(const RunConfig&, const fs::path&, int);
  static const std::pair<const char*, Fn> kCommands[] = {{"eval", cmd_eval},         {"verify", cmd_verify},
                                                         {"norms", cmd_norms},       {"classify", cmd_classify},
                                                         {"poisson", cmd_poisson},   {"mesh", cmd_mesh}};
  Fn fn = nullptr;
  for (const auto& [name, f] : kCommands)
    if (command == name) fn = f;
  if (!fn) {
    log << "swlag: unknown command '" << command << "'\n";
    return 2;
  }
  try {
    const RunConfig config = load_config(config_path);
    fs::create_directories(out_dir);
    const CommandResult result = fn(config, out_dir, threads);
    const fs::path report_path = out_dir / (command + ".json");
    write_text(report_path, [&](std::ostream& out) { write_json(out, result.report); });
    log << "swlag " << command << ": " << (result.exit_code == 0 ? "pass" : "FAIL") << " (" << report_path.string()
        << ")\n";
    return result.exit_code;
  } catch (const ConfigError& e) {
    log << "swlag: config error: " << e.what() << '\n';
    return 2;
  } catch (const fs::filesystem_error& e) {
    log << "swlag: file error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    log << "swlag " << command << ": " << e.what() << '\n';
    return 1;
  }
}

}  // namespace swlag
