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

#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "annealopt/annealing.hpp"
#include "annealopt/geometry.hpp"
#include "annealopt/hit_and_run.hpp"
#include "annealopt/objective.hpp"
#include "annealopt/oned_sampler.hpp"
#include "annealopt/reference.hpp"
#include "annealopt/rng.hpp"
#include "annealopt/staged.hpp"
#include "annealopt/zeroth_order.hpp"

namespace py = pybind11;
using namespace annealopt;

namespace {

ConvexBody make_ball(int dim, double radius, py::object center) {
  Vector c;
  if (!center.is_none()) c = center.cast<Vector>();
  return ConvexBody::ball(dim, radius, c);
}

PlanOverrides overrides_from_kwargs(const py::kwargs& kw) {
  PlanOverrides o;
  if (kw.contains("m")) o.m = kw["m"].cast<std::int64_t>();
  if (kw.contains("strands")) o.strands = kw["strands"].cast<int>();
  if (kw.contains("gamma")) o.gamma = kw["gamma"].cast<double>();
  if (kw.contains("c_strand")) o.c_strand = kw["c_strand"].cast<double>();
  if (kw.contains("C_mix")) o.C_mix = kw["C_mix"].cast<double>();
  if (kw.contains("beta_cap")) o.beta_cap = kw["beta_cap"].cast<double>();
  if (kw.contains("m0")) o.m0 = kw["m0"].cast<std::int64_t>();
  if (kw.contains("theory_mode"))
    o.theory_mode = kw["theory_mode"].cast<bool>();
  return o;
}

}  // namespace

PYBIND11_MODULE(_annealopt, m) {
  m.doc() = "Simulated annealing over Hit-and-Run for approximately convex "
            "minimization";

  py::register_exception<Error>(m, "AnnealoptError");

  py::class_<ConvexBody>(m, "ConvexBody")
      .def(py::init([](int dim, ConvexBody::Membership member, double r,
                       double R, Vector interior) {
             return ConvexBody(dim, std::move(member), r, R,
                               std::move(interior));
           }),
           py::arg("dim"), py::arg("membership"), py::arg("inner_radius"),
           py::arg("outer_radius"), py::arg("interior_point"))
      .def_static("ball", &make_ball, py::arg("dim"), py::arg("radius"),
                  py::arg("center") = py::none())
      .def_static("box", &ConvexBody::box, py::arg("lo"), py::arg("hi"))
      .def_static("polytope", &ConvexBody::polytope, py::arg("A"),
                  py::arg("b"), py::arg("interior_point"),
                  py::arg("outer_radius"))
      .def("contains", &ConvexBody::contains)
      .def_property_readonly("dim", &ConvexBody::dim)
      .def_property_readonly("inner_radius", &ConvexBody::inner_radius)
      .def_property_readonly("outer_radius", &ConvexBody::outer_radius)
      .def_property_readonly("interior_point", &ConvexBody::interior_point)
      .def("well_rounded", &ConvexBody::well_rounded, py::arg("factor") = 2.0);

  py::class_<Chord>(m, "Chord")
      .def_readonly("lo", &Chord::lo)
      .def_readonly("hi", &Chord::hi)
      .def("point_at", &Chord::point_at);

  m.def(
      "find_chord",
      [](const ConvexBody& body, const Vector& x, const Vector& u,
         double tol) { return find_chord(body, x, u, tol); },
      py::arg("body"), py::arg("x"), py::arg("u"), py::arg("tol") = 1e-9);

  m.def(
      "sample_chord",
      [](std::function<double(double)> log_g, double lo, double hi,
         double beta, double eps_tilde, std::uint64_t seed, int count) {
        ChordFunction g;
        g.log_value = std::move(log_g);
        g.beta = beta;
        g.lo = lo;
        g.hi = hi;
        SamplerParams params;
        params.eps_tilde = eps_tilde;
        Rng rng(seed);
        std::vector<double> out;
        out.reserve(count);
        for (int i = 0; i < count; ++i)
          out.push_back(sample_chord(g, params, rng).offset);
        return out;
      },
      py::arg("log_g"), py::arg("lo"), py::arg("hi"), py::arg("beta") = 0.0,
      py::arg("eps_tilde") = 1e-3, py::arg("seed") = 1, py::arg("count") = 1,
      "Draw samples from a beta-log-concave density restricted to a "
      "segment.");

  m.def(
      "walk",
      [](std::function<double(const Vector&)> log_density, double beta,
         const ConvexBody& body, const Vector& x0, std::int64_t steps,
         std::uint64_t seed, bool record_trace, double eps_tilde) {
        LogTarget target{std::move(log_density), beta};
        WalkParams params;
        params.steps = steps;
        params.record_trace = record_trace;
        params.sampler.eps_tilde = eps_tilde;
        Rng rng(seed);
        const WalkResult w = walk(target, body, x0, params, rng);
        py::dict out;
        out["final_point"] = w.final_point;
        out["final_log_density"] = w.final_log_density;
        out["oracle_queries"] = w.stats.oracle_queries;
        out["acceptance_rate"] = w.stats.acceptance_rate();
        if (record_trace) out["trace"] = w.trace;
        return out;
      },
      py::arg("log_density"), py::arg("beta"), py::arg("body"), py::arg("x0"),
      py::arg("steps"), py::arg("seed") = 1, py::arg("record_trace") = false,
      py::arg("eps_tilde") = 1e-3, "Run the Hit-and-Run walk.");

  m.def("mixing_steps", &mixing_steps, py::arg("n"), py::arg("R"),
        py::arg("r"), py::arg("beta"), py::arg("M"), py::arg("gamma"),
        py::arg("C") = 1.0);
  m.def("sampler_precision", &sampler_precision, py::arg("gamma"),
        py::arg("beta"), py::arg("m"));
  m.def("gibbs_gap_bound", &gibbs_gap_bound, py::arg("n"), py::arg("T"),
        py::arg("rho"));

  m.def(
      "anneal",
      [](std::function<double(const Vector&)> F, double rho,
         const ConvexBody& body, double epsilon, std::uint64_t seed,
         int threads, const py::kwargs& kwargs) {
        const PlanOverrides overrides = overrides_from_kwargs(kwargs);
        const AnnealingPlan plan =
            make_plan(body.dim(), epsilon, body, rho, overrides);
        const ObjectiveOracle oracle(std::move(F), rho);
        const AnnealResult r = anneal(oracle, body, plan, seed, threads);
        py::dict out;
        out["best_point"] = r.best_point;
        out["best_value"] = r.best_value;
        out["total_queries"] = r.total_queries;
        out["total_evals"] = r.total_evals;
        out["failed"] = r.failed;
        if (r.failed) out["failure"] = r.failure;
        py::list epochs;
        for (const EpochRecord& e : r.epoch_log) {
          py::dict row;
          row["epoch"] = e.epoch;
          row["temperature"] = e.temperature;
          row["best_value"] = e.best_value;
          row["queries"] = e.queries;
          row["accept_min"] = e.accept_min;
          row["accept_median"] = e.accept_median;
          epochs.append(row);
        }
        out["epoch_log"] = epochs;
        return out;
      },
      py::arg("F"), py::arg("rho"), py::arg("body"), py::arg("epsilon"),
      py::arg("seed") = 1, py::arg("threads") = 1,
      "Simulated annealing over Hit-and-Run; keyword arguments override "
      "plan constants (m, strands, gamma, c_strand, C_mix, beta_cap, m0, "
      "theory_mode).");

  m.def(
      "make_plan_summary",
      [](int n, double epsilon, const ConvexBody& body, double rho,
         const py::kwargs& kwargs) {
        const AnnealingPlan plan =
            make_plan(n, epsilon, body, rho, overrides_from_kwargs(kwargs));
        py::dict out;
        out["epochs"] = plan.epochs;
        out["strands"] = plan.strands;
        out["temperatures"] = plan.temperatures;
        out["steps"] = plan.steps;
        out["eps_tilde"] = plan.eps_tilde;
        out["beta"] = plan.beta;
        out["init_steps"] = plan.init_steps;
        out["warnings"] = plan.warnings;
        return out;
      },
      py::arg("n"), py::arg("epsilon"), py::arg("body"), py::arg("rho"));

  m.def(
      "grid_snap",
      [](const Vector& x, double alpha) { return grid_snap(x, alpha).index; },
      py::arg("x"), py::arg("alpha"));
  m.def(
      "stochastic_params",
      [](int n, double epsilon, double sigma, double L, double R,
         double delta) {
        const StochasticParams p =
            stochastic_params(n, epsilon, sigma, L, R, delta);
        return py::make_tuple(p.tau, p.alpha);
      },
      py::arg("n"), py::arg("epsilon"), py::arg("sigma"), py::arg("L"),
      py::arg("R"), py::arg("delta"));

  py::class_<DecayModel>(m, "DecayModel")
      .def_static("polynomial", &DecayModel::polynomial, py::arg("c"),
                  py::arg("p"), py::arg("alpha"), py::arg("C") = 4.0)
      .def_static("logarithmic", &DecayModel::logarithmic, py::arg("c"),
                  py::arg("d"), py::arg("alpha"), py::arg("C") = 4.0)
      .def_static("custom", &DecayModel::custom_model, py::arg("delta"),
                  py::arg("alpha"), py::arg("C") = 4.0)
      .def("delta", &DecayModel::delta);

  m.def("next_radius", &next_radius, py::arg("model"), py::arg("n"),
        py::arg("r"));
  m.def("critical_radius", &critical_radius, py::arg("model"), py::arg("n"));

  m.def(
      "staged_optimize",
      [](std::function<double(const Vector&)> F, const ConvexBody& enclosing,
         const DecayModel& model, const Vector& x0, double r0, double eps_rel,
         std::uint64_t seed, std::int64_t inner_m) {
        StagedOptions options;
        options.eps_rel = eps_rel;
        options.seed = seed;
        if (inner_m > 0) options.inner.m = inner_m;
        const StagedResult r =
            staged_optimize(std::move(F), enclosing, model, x0, r0, options);
        py::dict out;
        out["x_final"] = r.x_final;
        out["best_value"] = r.best_value;
        out["total_queries"] = r.total_queries;
        out["failed"] = r.failed;
        out["note"] = r.note;
        py::list stages;
        for (const StageRecord& s : r.stage_log) {
          py::dict row;
          row["stage"] = s.stage;
          row["center"] = s.center;
          row["radius"] = s.radius;
          row["rho"] = s.rho;
          row["inner_best"] = s.inner_best;
          row["queries"] = s.queries;
          stages.append(row);
        }
        out["stage_log"] = stages;
        return out;
      },
      py::arg("F"), py::arg("enclosing"), py::arg("model"), py::arg("x0"),
      py::arg("r0"), py::arg("eps_rel") = 0.5, py::arg("seed") = 1,
      py::arg("inner_m") = 0);

  m.def(
      "quadrature_density_1d",
      [](std::function<double(double)> log_g, double lo, double hi,
         int points) {
        const GridDensity d =
            quadrature_density(std::move(log_g), lo, hi, points);
        return py::make_tuple(d.weights, d.lo_x, d.hi_x);
      },
      py::arg("log_g"), py::arg("lo"), py::arg("hi"), py::arg("points") = 1001);

  m.def(
      "warm_start_norm",
      [](std::function<double(const Vector&)> F, double T_i, double T_next,
         const Vector& lo, const Vector& hi) {
        const WarmStartNorm w =
            warm_start_norm(std::move(F), T_i, T_next, lo, hi);
        return py::make_tuple(w.ratio, w.log_ratio);
      },
      py::arg("F"), py::arg("T_i"), py::arg("T_next"), py::arg("lo"),
      py::arg("hi"));

  m.def(
      "gibbs_mean_gap",
      [](std::function<double(const Vector&)> f,
         std::function<double(const Vector&)> F, double T, const Vector& lo,
         const Vector& hi) {
        const GibbsGap g =
            gibbs_mean_gap(std::move(f), std::move(F), T, lo, hi);
        return py::make_tuple(g.gap, g.bound, g.rho);
      },
      py::arg("f"), py::arg("F"), py::arg("T"), py::arg("lo"), py::arg("hi"));

  m.def(
      "certify_beta_log_concave",
      [](std::function<double(const Vector&)> log_g, const Vector& lo,
         const Vector& hi, double beta, std::int64_t trials,
         std::uint64_t seed) {
        Rng rng(seed);
        const BetaCertificate c =
            certify_beta_log_concave(std::move(log_g), lo, hi, beta, trials,
                                     rng);
        return py::make_tuple(c.pass, c.worst_violation);
      },
      py::arg("log_g"), py::arg("lo"), py::arg("hi"), py::arg("beta"),
      py::arg("trials") = 10000, py::arg("seed") = 1);

#ifdef VERSION_INFO
#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)
  m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
  m.attr("__version__") = "0.1.0";
#endif
}
