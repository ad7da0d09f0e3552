//
// Copyright 2026 The annealopt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

// Command-line driver: problem definitions from a JSON config (comments
// allowed), run orchestration, CSV persistence and verification.
//
// Exit codes: 0 success, 2 config error, 3 algorithm failure,
// 4 verification failure.

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "annealopt/annealing.hpp"
#include "annealopt/csv.hpp"
#include "annealopt/geometry.hpp"
#include "annealopt/hit_and_run.hpp"
#include "annealopt/oned_sampler.hpp"
#include "annealopt/reference.hpp"
#include "annealopt/rng.hpp"
#include "annealopt/staged.hpp"
#include "annealopt/targets.hpp"
#include "annealopt/types.hpp"
#include "annealopt/zeroth_order.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace annealopt;

namespace {

constexpr const char* kVersion = "0.1.0";

json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) throw ConfigError("cannot open config file: " + path);
  try {
    return json::parse(in, nullptr, /*allow_exceptions=*/true,
                       /*ignore_comments=*/true);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
}

Vector to_vector(const json& arr) {
  if (!arr.is_array()) throw ConfigError("expected a JSON array of numbers");
  Vector v(arr.size());
  for (size_t i = 0; i < arr.size(); ++i) v[i] = arr[i].get<double>();
  return v;
}

json from_vector(const Vector& v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
  return arr;
}

ConvexBody parse_body(const json& spec) {
  const std::string kind = spec.at("kind").get<std::string>();
  if (kind == "ball") {
    const int dim = spec.at("dim").get<int>();
    const double radius = spec.at("radius").get<double>();
    Vector center = spec.contains("center") ? to_vector(spec["center"])
                                            : Vector::Zero(dim);
    return ConvexBody::ball(dim, radius, center);
  }
  if (kind == "box") {
    return ConvexBody::box(to_vector(spec.at("lo")), to_vector(spec.at("hi")));
  }
  if (kind == "polytope") {
    const json& rows = spec.at("A");
    const Vector b = to_vector(spec.at("b"));
    if (!rows.is_array() || rows.empty())
      throw ConfigError("polytope needs a non-empty matrix A");
    Matrix A(rows.size(), rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i) {
      const Vector row = to_vector(rows[i]);
      A.row(i) = row;
    }
    return ConvexBody::polytope(A, b, to_vector(spec.at("interior_point")),
                                spec.at("outer_radius").get<double>());
  }
  throw ConfigError("unknown body kind: " + kind);
}

struct Objective {
  std::function<double(const Vector&)> F;
  std::function<double(const Vector&)> f;  // convex part
  double amplitude = 0.0;                  // sup |F - f|
};

Objective parse_objective(const json& spec, int dim) {
  Objective out;
  const std::string base = spec.at("base").get<std::string>();
  const double scale =
      spec.contains("scale") ? spec["scale"].get<double>() : 1.0;
  std::function<double(const Vector&)> f;
  if (base == "quadratic") {
    const Vector xstar = spec.contains("xstar") ? to_vector(spec["xstar"])
                                                : Vector::Zero(dim);
    f = [scale, xstar](const Vector& x) {
      return scale * (x - xstar).squaredNorm();
    };
  } else if (base == "linear") {
    const Vector c = to_vector(spec.at("coeffs"));
    f = [c](const Vector& x) { return c.dot(x); };
  } else if (base == "l1") {
    const Vector xstar = spec.contains("xstar") ? to_vector(spec["xstar"])
                                                : Vector::Zero(dim);
    f = [scale, xstar](const Vector& x) {
      return scale * (x - xstar).cwiseAbs().sum();
    };
  } else {
    throw ConfigError("unknown objective base: " + base);
  }
  out.f = f;
  out.F = f;

  if (spec.contains("perturbation") &&
      spec["perturbation"].at("kind").get<std::string>() != "none") {
    const json& p = spec["perturbation"];
    const std::string kind = p.at("kind").get<std::string>();
    const double amp = p.at("amplitude").get<double>();
    const double freq =
        p.contains("frequency") ? p["frequency"].get<double>() : 40.0;
    if (kind == "sine-product") {
      out.F = [f, amp, freq](const Vector& x) {
        double s = 1.0;
        for (Eigen::Index i = 0; i < x.size(); ++i)
          s *= std::sin(freq * x[i]);
        return f(x) + amp * s;
      };
      out.amplitude = amp;
    } else if (kind == "sign-sine-product") {
      out.F = [f, amp, freq](const Vector& x) {
        double s = 1.0;
        for (Eigen::Index i = 0; i < x.size(); ++i)
          s *= std::sin(freq * x[i]);
        return f(x) + amp * (s > 0 ? 1.0 : (s < 0 ? -1.0 : 0.0));
      };
      out.amplitude = amp;
    } else if (kind == "radial-poly") {
      // Perturbation bounded by amp * |x - xstar|^p: the synthetic
      // decaying-non-convexity profile.
      const double power = p.contains("p") ? p["p"].get<double>() : 1.0;
      const Vector xstar = spec.contains("xstar") ? to_vector(spec["xstar"])
                                                  : Vector::Zero(dim);
      out.F = [f, amp, freq, power, xstar](const Vector& x) {
        const double r = (x - xstar).norm();
        return f(x) + amp * std::pow(r, power) * std::sin(freq * x[0]);
      };
      out.amplitude = amp;  // per unit radius; stages account via the model
    } else {
      throw ConfigError("unknown perturbation kind: " + kind);
    }
  }
  return out;
}

PlanOverrides parse_overrides(const json& algo) {
  PlanOverrides o;
  if (algo.contains("m") && algo["m"].get<std::int64_t>() > 0)
    o.m = algo["m"].get<std::int64_t>();
  if (algo.contains("strands") && algo["strands"].get<int>() > 0)
    o.strands = algo["strands"].get<int>();
  if (algo.contains("gamma")) o.gamma = algo["gamma"].get<double>();
  if (algo.contains("c_strand")) o.c_strand = algo["c_strand"].get<double>();
  if (algo.contains("C_mix")) o.C_mix = algo["C_mix"].get<double>();
  if (algo.contains("beta_cap")) o.beta_cap = algo["beta_cap"].get<double>();
  if (algo.contains("m0")) o.m0 = algo["m0"].get<std::int64_t>();
  if (algo.contains("mode"))
    o.theory_mode = algo["mode"].get<std::string>() == "theory";
  return o;
}

json plan_manifest(const AnnealingPlan& plan) {
  json out;
  out["epochs"] = plan.epochs;
  out["strands"] = plan.strands;
  out["init_steps"] = plan.init_steps;
  out["rho"] = plan.rho;
  out["epsilon"] = plan.epsilon;
  out["gamma"] = plan.constants.gamma;
  out["beta_cap"] = plan.constants.beta_cap;
  out["theory_mode"] = plan.theory_mode;
  out["temperatures"] = plan.temperatures;
  out["steps"] = plan.steps;
  out["eps_tilde"] = plan.eps_tilde;
  out["beta"] = plan.beta;
  out["warnings"] = plan.warnings;
  return out;
}

void write_manifest(const fs::path& dir, const json& config,
                    const json& derived, std::uint64_t seed,
                    const std::string& command) {
  json manifest;
  manifest["command"] = command;
  manifest["version"] = kVersion;
  manifest["seed"] = seed;
  manifest["config"] = config;
  manifest["derived"] = derived;
  std::ofstream out(dir / "manifest.json");
  out << manifest.dump(2) << "\n";
}

fs::path prepare_output(const json& config, const std::string& flag_out) {
  std::string dir = flag_out;
  if (dir.empty())
    dir = config.contains("output_dir")
              ? config["output_dir"].get<std::string>()
              : "out";
  fs::create_directories(dir);
  return fs::path(dir);
}

std::uint64_t pick_seed(const json& config, std::int64_t flag_seed) {
  if (flag_seed >= 0) return static_cast<std::uint64_t>(flag_seed);
  if (config.contains("seed")) return config["seed"].get<std::uint64_t>();
  return 1;
}

int pick_threads(const json& config, int flag_threads) {
  int t = flag_threads;
  if (t <= 0 && config.contains("threads")) t = config["threads"].get<int>();
  if (t <= 0) t = static_cast<int>(std::thread::hardware_concurrency());
  return std::max(1, t);
}

// ---------------------------------------------------------------------------
// sample1d

int run_sample1d(const json& config, const fs::path& out_dir,
                 std::uint64_t seed) {
  const json& spec = config.at("sample1d");
  const SamplerTarget& target =
      sampler_target(spec.at("target").get<std::string>());
  const std::int64_t count =
      spec.contains("samples") ? spec["samples"].get<std::int64_t>() : 10000;
  SamplerParams params;
  if (spec.contains("eps_tilde"))
    params.eps_tilde = spec["eps_tilde"].get<double>();
  const int bins = spec.contains("bins") ? spec["bins"].get<int>() : 100;
  const bool want_tv = spec.contains("tv") && spec["tv"].get<bool>();

  ChordFunction g;
  g.log_value = target.log_g;
  g.beta = target.beta;
  g.lo = target.lo;
  g.hi = target.hi;

  Rng rng(seed);
  std::vector<double> samples;
  samples.reserve(count);
  std::int64_t attempts = 0;
  std::int64_t evals = 0;
  CsvWriter samples_csv((out_dir / "samples.csv").string());
  samples_csv.row({"index", "x"});
  for (std::int64_t i = 0; i < count; ++i) {
    const ChordSample s = sample_chord(g, params, rng);
    samples.push_back(s.offset);
    attempts += s.attempts;
    evals += s.evals;
    samples_csv.row({csv_num(i), csv_num(s.offset)});
  }
  const double acceptance = static_cast<double>(count) / attempts;

  double tv = -1.0;
  if (want_tv) {
    const GridDensity density =
        quadrature_density(target.log_g, target.lo, target.hi, 10000);
    tv = binned_tv_1d(density, samples, bins);
  }

  CsvWriter diag((out_dir / "diagnostics.csv").string());
  diag.row({"target", "beta", "samples", "acceptance_rate", "evals", "tv"});
  diag.row({target.name, csv_num(target.beta), csv_num(count),
            csv_num(acceptance), csv_num(evals), csv_num(tv)});

  json derived;
  derived["acceptance_rate"] = acceptance;
  derived["evals"] = evals;
  derived["eps_tilde"] = params.eps_tilde;
  if (want_tv) derived["tv"] = tv;
  write_manifest(out_dir, config, derived, seed, "sample1d");
  std::cout << "sample1d " << target.name << ": " << count
            << " samples, acceptance " << acceptance;
  if (want_tv) std::cout << ", tv " << tv;
  std::cout << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// walk

int run_walk(const json& config, const fs::path& out_dir, std::uint64_t seed) {
  const json& problem = config.at("problem");
  const ConvexBody body = parse_body(problem.at("body"));
  const Objective objective =
      parse_objective(problem.at("objective"), body.dim());
  const json& wspec = config.at("walk");
  const double temperature =
      wspec.contains("temperature") ? wspec["temperature"].get<double>() : 1.0;
  const double beta = wspec.contains("beta") ? wspec["beta"].get<double>() : 0.0;

  WalkParams params;
  params.steps = wspec.at("m").get<std::int64_t>();
  params.record_trace = true;
  if (wspec.contains("eps_tilde"))
    params.sampler.eps_tilde = wspec["eps_tilde"].get<double>();

  const LogTarget target{
      [&objective, temperature](const Vector& x) {
        return -objective.F(x) / temperature;
      },
      beta};
  Vector start =
      wspec.contains("x0") ? to_vector(wspec["x0"]) : body.interior_point();
  Rng rng(seed);
  const WalkResult result = walk(target, body, start, params, rng);

  CsvWriter trace((out_dir / "trace.csv").string());
  std::vector<std::string> header = {"step_index"};
  for (int d = 0; d < body.dim(); ++d)
    header.push_back("x" + std::to_string(d + 1));
  header.push_back("log_g");
  header.push_back("cumulative_queries");
  trace.row(header);
  for (size_t i = 0; i < result.trace.size(); ++i) {
    std::vector<std::string> row = {csv_num(static_cast<std::int64_t>(i + 1))};
    for (int d = 0; d < body.dim(); ++d)
      row.push_back(csv_num(result.trace[i][d]));
    row.push_back(csv_num(result.trace_log_density[i]));
    row.push_back(csv_num(result.trace_queries[i]));
    trace.row(row);
  }

  json derived;
  derived["final_point"] = from_vector(result.final_point);
  derived["oracle_queries"] = result.stats.oracle_queries;
  derived["acceptance_rate"] = result.stats.acceptance_rate();
  write_manifest(out_dir, config, derived, seed, "walk");
  std::cout << "walk: " << params.steps << " steps, "
            << result.stats.oracle_queries << " target evaluations\n";
  return 0;
}

// ---------------------------------------------------------------------------
// anneal / stoch-opt

void write_epoch_log(const fs::path& out_dir, const AnnealResult& result) {
  CsvWriter log((out_dir / "epoch_log.csv").string());
  log.row({"epoch", "temperature", "best_value", "queries_this_epoch",
           "accept_rate_min", "accept_rate_median", "cov_eig_min",
           "cov_eig_max"});
  for (const EpochRecord& r : result.epoch_log) {
    log.row({csv_num(r.epoch), csv_num(r.temperature), csv_num(r.best_value),
             csv_num(r.queries), csv_num(r.accept_min),
             csv_num(r.accept_median), csv_num(r.cov_eig_min),
             csv_num(r.cov_eig_max)});
  }
}

void write_best(const fs::path& out_dir, const AnnealResult& result) {
  CsvWriter best((out_dir / "best.csv").string());
  std::vector<std::string> header = {"best_value"};
  for (Eigen::Index d = 0; d < result.best_point.size(); ++d)
    header.push_back("x" + std::to_string(d + 1));
  header.push_back("total_queries");
  header.push_back("total_evals");
  best.row(header);
  std::vector<std::string> row = {csv_num(result.best_value)};
  for (Eigen::Index d = 0; d < result.best_point.size(); ++d)
    row.push_back(csv_num(result.best_point[d]));
  row.push_back(csv_num(result.total_queries));
  row.push_back(csv_num(result.total_evals));
  best.row(row);
}

int run_anneal(const json& config, const fs::path& out_dir, std::uint64_t seed,
               int threads, bool stochastic, std::int64_t step_budget) {
  const json& problem = config.at("problem");
  const ConvexBody body = parse_body(problem.at("body"));
  const Objective objective =
      parse_objective(problem.at("objective"), body.dim());
  const json& algo = config.at("algorithm");
  const double epsilon = algo.at("epsilon").get<double>();

  // Eq.-(1) regime sanity: the declared amplitude should stay within eps/n.
  if (objective.amplitude * body.dim() > epsilon + 1e-12) {
    std::cerr << "warning: perturbation amplitude * n = "
              << objective.amplitude * body.dim() << " exceeds epsilon = "
              << epsilon << "; the approximate-convexity regime is not met\n";
  }

  json derived;
  ObjectiveOracle oracle = [&]() {
    if (!stochastic) {
      const double rho =
          problem.contains("oracle") && problem["oracle"].contains("rho")
              ? problem["oracle"]["rho"].get<double>()
              : epsilon / body.dim();
      return ObjectiveOracle(objective.F, rho, 1, "exact");
    }
    const json& ospec = problem.at("oracle");
    const double sigma = ospec.at("sigma").get<double>();
    const double delta = ospec.at("delta").get<double>();
    const double L = ospec.at("L").get<double>();
    const double R = ospec.at("R").get<double>();
    const StochasticOracleConfig cfg =
        make_stochastic_config(body.dim(), epsilon, sigma, L, R, delta, seed);
    derived["alpha"] = cfg.alpha;
    derived["tau"] = cfg.tau;
    derived["declared_rho"] = cfg.declared_rho;
    return wrap_as_approx_convex(objective.F, cfg);
  }();

  const PlanOverrides overrides = parse_overrides(algo);
  const AnnealingPlan plan =
      make_plan(body.dim(), epsilon, body, oracle.rho(), overrides);
  for (const std::string& w : plan.warnings)
    std::cerr << "warning: " << w << "\n";

  if (plan.theory_mode) {
    std::int64_t max_m = 0;
    for (int i = 1; i <= plan.epochs; ++i)
      max_m = std::max(max_m, plan.steps[i]);
    std::cout << "theory-mode per-epoch step counts:\n";
    for (int i = 1; i <= plan.epochs; ++i)
      std::cout << "  epoch " << i << ": m = " << plan.steps[i] << "\n";
    if (max_m > step_budget) {
      std::cerr << "theory-mode m = " << max_m << " exceeds the step budget "
                << step_budget
                << "; rerun in practice mode (\"mode\": \"practice\") or "
                   "raise --step-budget\n";
      return 2;
    }
  }

  derived["plan"] = plan_manifest(plan);
  const AnnealResult result = anneal(oracle, body, plan, seed, threads);
  for (const std::string& w : result.warnings)
    std::cerr << "warning: " << w << "\n";

  write_epoch_log(out_dir, result);
  write_best(out_dir, result);
  derived["best_value"] = result.best_value;
  derived["total_queries"] = result.total_queries;
  write_manifest(out_dir, config, derived, seed,
                 stochastic ? "stoch-opt" : "anneal");

  if (result.failed) {
    std::cerr << "annealing failed: " << result.failure << "\n";
    return 3;
  }
  std::cout << (stochastic ? "stoch-opt" : "anneal") << ": best value "
            << result.best_value << " after " << result.total_queries
            << " billed queries\n";
  return 0;
}

// ---------------------------------------------------------------------------
// staged

int run_staged(const json& config, const fs::path& out_dir, std::uint64_t seed,
               int threads) {
  const json& problem = config.at("problem");
  const ConvexBody body = parse_body(problem.at("body"));
  const Objective objective =
      parse_objective(problem.at("objective"), body.dim());
  const json& sspec = config.at("staged");
  const json& mspec = sspec.at("model");
  const std::string kind = mspec.at("kind").get<std::string>();
  const double alpha = mspec.at("alpha").get<double>();
  const double C = mspec.contains("C") ? mspec["C"].get<double>() : 4.0;
  DecayModel model = [&]() {
    if (kind == "polynomial")
      return DecayModel::polynomial(mspec.at("c").get<double>(),
                                    mspec.at("p").get<double>(), alpha, C);
    if (kind == "logarithmic")
      return DecayModel::logarithmic(mspec.at("c").get<double>(),
                                     mspec.at("d").get<double>(), alpha, C);
    throw ConfigError("unknown decay model kind: " + kind);
  }();

  StagedOptions options;
  options.seed = seed;
  options.threads = threads;
  if (sspec.contains("eps_rel")) options.eps_rel = sspec["eps_rel"].get<double>();
  if (sspec.contains("max_stages"))
    options.max_stages = sspec["max_stages"].get<int>();
  if (config.contains("algorithm"))
    options.inner = parse_overrides(config["algorithm"]);

  const Vector x0 = to_vector(sspec.at("x0"));
  const double r0 = sspec.at("r0").get<double>();

  const StagedResult result =
      staged_optimize(objective.F, body, model, x0, r0, options);

  CsvWriter log((out_dir / "stage_log.csv").string());
  std::vector<std::string> header = {"stage"};
  for (int d = 0; d < body.dim(); ++d)
    header.push_back("c" + std::to_string(d + 1));
  header.insert(header.end(), {"r_t", "rho_t", "inner_best", "queries"});
  log.row(header);
  for (const StageRecord& r : result.stage_log) {
    std::vector<std::string> row = {csv_num(r.stage)};
    for (int d = 0; d < body.dim(); ++d) row.push_back(csv_num(r.center[d]));
    row.push_back(csv_num(r.radius));
    row.push_back(csv_num(r.rho));
    row.push_back(csv_num(r.inner_best));
    row.push_back(csv_num(r.queries));
    log.row(row);
  }

  json derived;
  derived["critical_radius"] = critical_radius(model, body.dim());
  derived["stages"] = result.stage_log.size();
  derived["best_value"] = result.best_value;
  derived["total_queries"] = result.total_queries;
  derived["note"] = result.note;
  write_manifest(out_dir, config, derived, seed, "staged");

  if (result.failed) {
    std::cerr << "staged optimization failed: " << result.note << "\n";
    return 3;
  }
  std::cout << "staged: " << result.stage_log.size() << " stages, best value "
            << result.best_value << " (" << result.note << ")\n";
  return 0;
}

// ---------------------------------------------------------------------------
// verify

int run_verify(const json& config, const fs::path& out_dir,
               std::uint64_t seed) {
  const json vspec =
      config.contains("verify") ? config["verify"] : json::object();
  const int n_check = vspec.contains("n_check") ? vspec["n_check"].get<int>() : 9;
  const double epsilon =
      vspec.contains("epsilon") ? vspec["epsilon"].get<double>() : 0.05;
  const std::int64_t trials =
      vspec.contains("trials") ? vspec["trials"].get<std::int64_t>() : 20000;
  std::vector<double> gibbs_temps = {1.0, 0.3, 0.1, 0.03};
  if (vspec.contains("temperatures"))
    gibbs_temps = vspec["temperatures"].get<std::vector<double>>();

  const double ratio = 1.0 - 1.0 / std::sqrt(static_cast<double>(n_check));
  const int epochs =
      static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n_check)) *
                                 std::log(n_check / epsilon)));

  CsvWriter report((out_dir / "verify.csv").string());
  report.row({"check", "target", "parameter", "value", "bound", "pass"});
  int failures = 0;

  for (const VerifyTarget& target : verify_targets()) {
    // Warm-start ratio along the schedule.
    double T = 1.0;
    for (int i = 0; i < epochs; ++i) {
      const double T_next = T * ratio;
      const WarmStartNorm w =
          warm_start_norm(target.F, T, T_next, target.lo, target.hi);
      const double log_bound = std::log(5.0) + 2.0 * target.beta / T;
      const bool pass = w.log_ratio <= log_bound;
      if (!pass) ++failures;
      report.row({"warm_start", target.name, csv_num(T), csv_num(w.log_ratio),
                  csv_num(log_bound), pass ? "1" : "0"});
      T = T_next;
    }
    // Gibbs gaps.
    for (double temp : gibbs_temps) {
      const GibbsGap g =
          gibbs_mean_gap(target.f, target.F, temp, target.lo, target.hi);
      const bool pass = g.gap <= g.bound;
      if (!pass) ++failures;
      report.row({"gibbs_gap", target.name, csv_num(temp), csv_num(g.gap),
                  csv_num(g.bound), pass ? "1" : "0"});
    }
    // Defect certification of exp(-F).
    Rng rng(seed);
    const BetaCertificate cert = certify_beta_log_concave(
        [&target](const Vector& x) { return -target.F(x); }, target.lo,
        target.hi, target.beta, trials, rng);
    if (!cert.pass) ++failures;
    report.row({"beta_certificate", target.name, csv_num(target.beta),
                csv_num(cert.worst_violation), "0", cert.pass ? "1" : "0"});
  }

  json derived;
  derived["n_check"] = n_check;
  derived["epochs"] = epochs;
  derived["failures"] = failures;
  write_manifest(out_dir, config, derived, seed, "verify");

  std::cout << "verify: "
            << (failures == 0 ? "all checks passed"
                              : std::to_string(failures) + " checks failed")
            << "\n";
  return failures == 0 ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Derivative-free minimization of approximately convex functions by "
      "simulated annealing over Hit-and-Run"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_flag;
  std::int64_t seed_flag = -1;
  int threads_flag = 0;
  std::int64_t step_budget = 10000000;

  app.add_option("--config", config_path, "JSON run configuration")
      ->required();
  app.add_option("--out", out_flag, "output directory (overrides config)");
  app.add_option("--seed", seed_flag, "seed (overrides config)");
  app.add_option("--threads", threads_flag,
                 "strand thread pool size (overrides config; default: cores)");
  app.add_option("--step-budget", step_budget,
                 "refuse theory-mode runs beyond this per-epoch step count");

  auto* sub_sample = app.add_subcommand("sample1d", "1-D sampler diagnostics");
  auto* sub_walk = app.add_subcommand("walk", "Hit-and-Run walk with trace");
  auto* sub_anneal = app.add_subcommand("anneal", "simulated annealing run");
  auto* sub_stoch =
      app.add_subcommand("stoch-opt", "annealing over the noisy grid oracle");
  auto* sub_staged = app.add_subcommand(
      "staged", "multi-stage optimization with decaying non-convexity");
  auto* sub_verify =
      app.add_subcommand("verify", "quadrature verification report");
  for (CLI::App* sub : {sub_sample, sub_walk, sub_anneal, sub_stoch,
                        sub_staged, sub_verify})
    sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    const json config = load_config(config_path);
    const fs::path out_dir = prepare_output(config, out_flag);
    const std::uint64_t seed = pick_seed(config, seed_flag);
    const int threads = pick_threads(config, threads_flag);

    if (sub_sample->parsed()) return run_sample1d(config, out_dir, seed);
    if (sub_walk->parsed()) return run_walk(config, out_dir, seed);
    if (sub_anneal->parsed())
      return run_anneal(config, out_dir, seed, threads, false, step_budget);
    if (sub_stoch->parsed())
      return run_anneal(config, out_dir, seed, threads, true, step_budget);
    if (sub_staged->parsed()) return run_staged(config, out_dir, seed, threads);
    if (sub_verify->parsed()) return run_verify(config, out_dir, seed);
    std::cerr << "no subcommand selected\n";
    return 2;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidInputError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "algorithm failure: " << e.what() << "\n";
    return 3;
  }
}
