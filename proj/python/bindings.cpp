// Copyright 2026 The Alphaleak Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <cmath>
#include <random>
#include <sstream>

#include "alphaleak/capacity.hpp"
#include "alphaleak/io.hpp"
#include "alphaleak/leakage.hpp"
#include "alphaleak/theorems.hpp"

namespace py = pybind11;
using namespace alphaleak;

namespace {

std::string format_alpha(AlphaOrder a) {
  if (a.is_infinity()) return "inf";
  std::ostringstream out;
  out << a.numeric();
  return out.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Tunable information-leakage measures for finite channels";
  m.attr("__version__") = "0.1.0";

  // Exceptions mirror the C++ hierarchy; subclasses are registered after the
  // base so their translators match first.
  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<EmptyInput>(m, "EmptyInput", base);
  py::register_exception<NegativeEntry>(m, "NegativeEntry", base);
  py::register_exception<NotNormalized>(m, "NotNormalized", base);
  py::register_exception<DimensionMismatch>(m, "DimensionMismatch", base);
  py::register_exception<UncoveredX>(m, "UncoveredX", base);
  py::register_exception<AlphaOutOfRange>(m, "AlphaOutOfRange", base);
  py::register_exception<EmptySupport>(m, "EmptySupport", base);
  py::register_exception<SupportTooLarge>(m, "SupportTooLarge", base);
  py::register_exception<InfeasibleTarget>(m, "InfeasibleTarget", base);
  py::register_exception<ParseError>(m, "ParseError", base);

  py::class_<AlphaOrder>(m, "AlphaOrder")
      .def(py::init(&AlphaOrder::of), py::arg("value"))
      .def_static("one", &AlphaOrder::one)
      .def_static("infinity", &AlphaOrder::infinity)
      .def_static("of", &AlphaOrder::of, py::arg("value"))
      .def("is_one", &AlphaOrder::is_one)
      .def("is_infinity", &AlphaOrder::is_infinity)
      .def("is_finite", &AlphaOrder::is_finite)
      .def("finite_value", &AlphaOrder::finite_value)
      .def("numeric", &AlphaOrder::numeric)
      .def("__eq__",
           [](const AlphaOrder& a, const AlphaOrder& b) { return a == b; },
           py::is_operator())
      .def("__repr__", [](const AlphaOrder& a) {
        return "AlphaOrder(" + format_alpha(a) + ")";
      });
  py::implicitly_convertible<py::float_, AlphaOrder>();
  py::implicitly_convertible<py::int_, AlphaOrder>();

  py::class_<Distribution>(m, "Distribution")
      .def(py::init<std::vector<double>>(), py::arg("probs"))
      .def_static("uniform", &Distribution::uniform, py::arg("n"))
      .def_static("point_mass", &Distribution::point_mass, py::arg("n"),
                  py::arg("index"))
      .def_static(
          "uniform_on",
          [](std::size_t n, const std::vector<std::size_t>& support) {
            return Distribution::uniform_on(n, support);
          },
          py::arg("n"), py::arg("support"))
      .def("__len__", &Distribution::size)
      .def("__getitem__",
           [](const Distribution& d, std::size_t i) {
             if (i >= d.size()) throw py::index_error();
             return d[i];
           })
      .def("probs", &Distribution::probs)
      .def("support", &Distribution::support)
      .def("argmax", &Distribution::argmax)
      .def("max_prob", &Distribution::max_prob)
      .def("__repr__", [](const Distribution& d) {
        std::ostringstream out;
        out << "Distribution([";
        for (std::size_t i = 0; i < d.size(); ++i) {
          out << (i ? ", " : "") << d[i];
        }
        out << "])";
        return out.str();
      });

  py::class_<Channel>(m, "Channel")
      .def(py::init<std::vector<std::vector<double>>>(), py::arg("rows"))
      .def_static("identity", &Channel::identity, py::arg("n"))
      .def_static("bsc", &Channel::bsc, py::arg("crossover"))
      .def_static("rank_one", &Channel::rank_one, py::arg("in_size"),
                  py::arg("row"))
      .def("in_size", &Channel::in_size)
      .def("out_size", &Channel::out_size)
      .def("row", &Channel::row, py::arg("x"))
      .def("prob", &Channel::prob, py::arg("x"), py::arg("y"))
      .def("is_rank_one", &Channel::is_rank_one, py::arg("tol") = 1e-12)
      .def("__repr__", [](const Channel& w) {
        return "Channel(" + std::to_string(w.in_size()) + "x" +
               std::to_string(w.out_size()) + ")";
      });

  py::class_<Joint>(m, "Joint")
      .def(py::init<std::vector<std::vector<double>>>(), py::arg("mass"))
      .def("x_size", &Joint::x_size)
      .def("y_size", &Joint::y_size)
      .def("mass", &Joint::mass, py::arg("x"), py::arg("y"))
      .def("x_marginal", &Joint::x_marginal)
      .def("y_marginal", &Joint::y_marginal)
      .def("has_posterior", &Joint::has_posterior, py::arg("y"))
      .def("posterior", &Joint::posterior, py::arg("y"))
      .def("flattened", &Joint::flattened);

  m.def("joint_from", &joint_from, py::arg("prior"), py::arg("channel"));
  m.def("product_channel", &product_channel, py::arg("w1"), py::arg("w2"));
  m.def("cascade_channel", &cascade_channel, py::arg("w1"), py::arg("w2"));
  m.def(
      "reverse_deterministic_channel",
      [](const std::vector<std::size_t>& x_of_y, const Distribution& out) {
        return reverse_deterministic_channel(x_of_y, out);
      },
      py::arg("x_of_y"), py::arg("out_dist"));
  m.def(
      "random_distribution",
      [](std::uint64_t seed, std::size_t n) {
        std::mt19937_64 rng(seed);
        return random_distribution(rng, n);
      },
      py::arg("seed"), py::arg("n"));
  m.def(
      "random_channel",
      [](std::uint64_t seed, std::size_t in_size, std::size_t out_size) {
        std::mt19937_64 rng(seed);
        return random_channel(rng, in_size, out_size);
      },
      py::arg("seed"), py::arg("in_size"), py::arg("out_size"));

  py::class_<MeasureValue>(m, "MeasureValue")
      .def_readonly("nats", &MeasureValue::nats)
      .def_readonly("alpha", &MeasureValue::alpha)
      .def_property_readonly(
          "bits", [](const MeasureValue& v) { return v.nats / std::log(2.0); })
      .def("__repr__", [](const MeasureValue& v) {
        std::ostringstream out;
        out << "MeasureValue(nats=" << v.nats
            << ", alpha=" << format_alpha(v.alpha) << ")";
        return out.str();
      });

  m.def("renyi_entropy", &renyi_entropy, py::arg("dist"), py::arg("alpha"));
  m.def("renyi_divergence", &renyi_divergence, py::arg("p"), py::arg("q"),
        py::arg("alpha"));
  m.def("arimoto_cond_entropy", &arimoto_cond_entropy, py::arg("joint"),
        py::arg("alpha"));
  m.def("sibson_mi", &sibson_mi, py::arg("prior"), py::arg("channel"),
        py::arg("alpha"));
  m.def("arimoto_mi", &arimoto_mi, py::arg("prior"), py::arg("channel"),
        py::arg("alpha"));

  py::class_<Estimator> estimator(m, "Estimator");
  py::enum_<Estimator::Kind>(estimator, "Kind")
      .value("PRIOR", Estimator::Kind::kPrior)
      .value("POSTERIOR_COLUMN", Estimator::Kind::kPosteriorColumn);
  estimator.def_readonly("kind", &Estimator::kind)
      .def_readonly("column", &Estimator::column)
      .def_readonly("dist", &Estimator::dist)
      .def_readonly("alpha", &Estimator::alpha);

  py::enum_<LeakageMethod>(m, "LeakageMethod")
      .value("ARIMOTO_IDENTITY", LeakageMethod::kArimotoIdentity)
      .value("OPERATIONAL_RATIO", LeakageMethod::kOperationalRatio);

  py::class_<LeakageReport>(m, "LeakageReport")
      .def_readonly("nats", &LeakageReport::nats)
      .def_readonly("alpha", &LeakageReport::alpha)
      .def_readonly("method", &LeakageReport::method)
      .def_readonly("diagnostics", &LeakageReport::diagnostics)
      .def_property_readonly(
          "bits",
          [](const LeakageReport& r) { return r.nats / std::log(2.0); });

  m.def("tilt_distribution", &tilt_distribution, py::arg("source"),
        py::arg("alpha"));
  m.def("optimal_estimator", &optimal_estimator, py::arg("source"),
        py::arg("alpha"));
  m.def("expected_alpha_loss", &expected_alpha_loss, py::arg("truth"),
        py::arg("guess"), py::arg("alpha"));
  m.def("alpha_leakage", &alpha_leakage, py::arg("prior"), py::arg("channel"),
        py::arg("alpha"),
        py::arg("method") = LeakageMethod::kArimotoIdentity);

  py::class_<SolveOptions>(m, "SolveOptions")
      .def(py::init([](std::uint64_t max_iterations, double objective_tol,
                       double kkt_tol, int random_restarts,
                       std::uint64_t seed) {
             SolveOptions o;
             o.max_iterations = max_iterations;
             o.objective_tol = objective_tol;
             o.kkt_tol = kkt_tol;
             o.random_restarts = random_restarts;
             o.seed = seed;
             return o;
           }),
           py::arg("max_iterations") = 100000,
           py::arg("objective_tol") = 1e-12, py::arg("kkt_tol") = 1e-8,
           py::arg("random_restarts") = 5, py::arg("seed") = 0)
      .def_readwrite("max_iterations", &SolveOptions::max_iterations)
      .def_readwrite("objective_tol", &SolveOptions::objective_tol)
      .def_readwrite("kkt_tol", &SolveOptions::kkt_tol)
      .def_readwrite("random_restarts", &SolveOptions::random_restarts)
      .def_readwrite("seed", &SolveOptions::seed);

  py::class_<CapacityResult>(m, "CapacityResult")
      .def_readonly("nats", &CapacityResult::nats)
      .def_readonly("argmax_input", &CapacityResult::argmax_input)
      .def_readonly("alpha", &CapacityResult::alpha)
      .def_readonly("iterations", &CapacityResult::iterations)
      .def_readonly("kkt_residual", &CapacityResult::kkt_residual)
      .def_readonly("converged", &CapacityResult::converged)
      .def_readonly("diagnostics", &CapacityResult::diagnostics)
      .def_property_readonly(
          "bits",
          [](const CapacityResult& r) { return r.nats / std::log(2.0); })
      .def("__repr__", [](const CapacityResult& r) {
        std::ostringstream out;
        out << "CapacityResult(nats=" << r.nats
            << ", converged=" << (r.converged ? "True" : "False") << ")";
        return out.str();
      });

  m.def(
      "maxl",
      [](const Channel& channel, const std::vector<std::size_t>& support) {
        return maxl(channel, support);
      },
      py::arg("channel"), py::arg("support"));
  m.def("uniform_sibson_lower_bound", &uniform_sibson_lower_bound,
        py::arg("channel"), py::arg("alpha"));
  m.def(
      "sibson_objective",
      [](const Channel& channel, const std::vector<std::size_t>& support,
         double alpha, const std::vector<double>& weights) {
        return sibson_objective(channel, support, alpha, weights);
      },
      py::arg("channel"), py::arg("support"), py::arg("alpha"),
      py::arg("weights"));
  m.def(
      "sibson_gradient",
      [](const Channel& channel, const std::vector<std::size_t>& support,
         double alpha, const std::vector<double>& weights) {
        return sibson_gradient(channel, support, alpha, weights);
      },
      py::arg("channel"), py::arg("support"), py::arg("alpha"),
      py::arg("weights"));
  m.def(
      "solve_alpha_capacity",
      [](const Channel& channel, const std::vector<std::size_t>& support,
         AlphaOrder alpha, const SolveOptions& opts) {
        return solve_alpha_capacity(channel, support, alpha, opts);
      },
      py::arg("channel"), py::arg("support"), py::arg("alpha"),
      py::arg("opts") = SolveOptions{});
  m.def(
      "grid_oracle_capacity",
      [](const Channel& channel, const std::vector<std::size_t>& support,
         AlphaOrder alpha, double resolution) {
        return grid_oracle_capacity(channel, support, alpha, resolution);
      },
      py::arg("channel"), py::arg("support"), py::arg("alpha"),
      py::arg("resolution"));
  m.def("maximal_alpha_leakage", &maximal_alpha_leakage, py::arg("prior"),
        py::arg("channel"), py::arg("alpha"),
        py::arg("opts") = SolveOptions{});

  py::class_<TheoremVerdict>(m, "TheoremVerdict")
      .def_readonly("theorem_id", &TheoremVerdict::theorem_id)
      .def_readonly("instance_digest", &TheoremVerdict::instance_digest)
      .def_readonly("seed", &TheoremVerdict::seed)
      .def_readonly("passed", &TheoremVerdict::passed)
      .def_readonly("lhs", &TheoremVerdict::lhs)
      .def_readonly("rhs", &TheoremVerdict::rhs)
      .def_readonly("slack", &TheoremVerdict::slack)
      .def_readonly("witness", &TheoremVerdict::witness)
      .def("__repr__", [](const TheoremVerdict& v) {
        return "TheoremVerdict(" + v.theorem_id + ", " +
               (v.passed ? "passed" : "FAILED") + ")";
      });

  py::class_<ShatterSpec>(m, "ShatterSpec")
      .def_readonly("copies_per_x", &ShatterSpec::copies_per_x)
      .def_readonly("u_weights", &ShatterSpec::u_weights)
      .def_readonly("induced_x_tilde", &ShatterSpec::induced_x_tilde)
      .def_readonly("x_of_u", &ShatterSpec::x_of_u);

  m.def("to_json_line", &to_json_line, py::arg("verdict"));
  m.def("replay", &replay, py::arg("witness_json"));
  m.def("persist_witness", &persist_witness, py::arg("verdict"),
        py::arg("dir"));
  m.def(
      "check_quasiconvexity",
      [](const Channel& w0, const Channel& w1, const Distribution& prior,
         AlphaOrder alpha, const std::vector<double>& lambda_grid) {
        return check_quasiconvexity(w0, w1, prior, alpha, lambda_grid);
      },
      py::arg("w0"), py::arg("w1"), py::arg("prior"), py::arg("alpha"),
      py::arg("lambda_grid") = std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
  m.def("check_dpi", &check_dpi, py::arg("w1"), py::arg("w2"),
        py::arg("prior"), py::arg("alpha"));
  m.def("check_composition", &check_composition, py::arg("w1"), py::arg("w2"),
        py::arg("prior"), py::arg("alpha"));
  m.def("check_bounds", &check_bounds, py::arg("channel"), py::arg("prior"),
        py::arg("alpha"));
  m.def("check_sibson_infimum", &check_sibson_infimum, py::arg("prior"),
        py::arg("channel"), py::arg("alpha"), py::arg("trials"),
        py::arg("seed") = 0);
  m.def(
      "shatter_construction",
      [](const Distribution& prior, const Channel& channel,
         const Distribution& target, const std::vector<std::size_t>& copies,
         AlphaOrder alpha) {
        return shatter_construction(prior, channel, target, copies, alpha);
      },
      py::arg("prior"), py::arg("channel"), py::arg("target"),
      py::arg("copies_per_x"), py::arg("alpha"));

  m.def("parse_channel_csv", &parse_channel_csv, py::arg("text"),
        py::arg("source_name") = "csv");
  m.def("parse_channel_json", &parse_channel_json, py::arg("text"),
        py::arg("source_name") = "json");
  m.def("load_channel", &load_channel, py::arg("path"));
  m.def("load_distribution", &load_distribution, py::arg("path"));
}
