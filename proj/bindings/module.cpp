// Copyright 2026 The polarctx Authors
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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>

#include "polarctx/cli.hpp"
#include "polarctx/error.hpp"
#include "polarctx/exact.hpp"
#include "polarctx/pauli.hpp"
#include "polarctx/run_record.hpp"
#include "polarctx/solver.hpp"
#include "polarctx/structure.hpp"

namespace py = pybind11;
using namespace polarctx;

namespace {

GeometrySpec make_spec(uint32_t qubits, const std::string &geometry, std::optional<std::string> index) {
    GeometrySpec spec;
    spec.qubits = qubits;
    spec.geometry = geometry;
    spec.index_observable = std::move(index);
    return normalize_geometry(spec);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Compiled core of polarctx";

    py::register_exception<CapabilityError>(m, "CapabilityError", PyExc_RuntimeError);

    m.def("space_counts", [](uint32_t n) {
        auto space = build_space(n);
        py::dict d;
        d["points"] = space->point_count();
        d["lines"] = space->line_count();
        d["negative_lines"] = space->negative_line_count();
        return d;
    }, py::arg("qubits"));

    m.def("normalize_observable", [](const std::string &text) { return format_observable(parse_observable(text)); },
          py::arg("text"));

    m.def("line_sign", [](const std::string &a, const std::string &b, const std::string &c) {
        return triple_sign(parse_observable(a), parse_observable(b), parse_observable(c));
    }, py::arg("a"), py::arg("b"), py::arg("c"));

    m.def("solve_json",
          [](uint32_t qubits, const std::string &geometry, std::optional<std::string> index, double theta,
             double gamma, uint64_t iterations, uint32_t restarts, uint64_t seed, unsigned threads) {
              const GeometrySpec spec = make_spec(qubits, geometry, std::move(index));
              SolverParams params;
              params.theta = theta;
              params.gamma = gamma;
              params.max_iterations = iterations;
              params.restarts = restarts;
              params.seed = seed;
              py::gil_scoped_release release;
              const Configuration config = build_configuration(spec);
              return dump_run_record(make_run_record(spec, config, solve(config, params, threads)));
          },
          py::arg("qubits"), py::arg("geometry") = "full", py::arg("index") = py::none(), py::arg("theta") = 0.8,
          py::arg("gamma") = 0.9, py::arg("iterations") = 1000, py::arg("restarts") = 1, py::arg("seed") = 0,
          py::arg("threads") = 0);

    m.def("exact_degree",
          [](uint32_t qubits, const std::string &geometry, std::optional<std::string> index, uint32_t max_rank) {
              const Configuration config = build_configuration(make_spec(qubits, geometry, std::move(index)));
              py::gil_scoped_release release;
              return exact_degree(config, max_rank);
          },
          py::arg("qubits"), py::arg("geometry") = "full", py::arg("index") = py::none(),
          py::arg("max_rank") = kDefaultExactRankBudget);

    m.def("lower_bound_full", &lower_bound_full, py::arg("qubits"));

    m.def("polarity_count_str", [](uint32_t n) { return polarity_count(n).str(); }, py::arg("qubits"));

    m.def("degree_profile_json", [](const std::string &record_json) {
        const RunRecord record = run_record_from_json(nlohmann::json::parse(record_json));
        const Configuration config = build_configuration(record.geometry);
        const auto uns = unsatisfied(config, record_assignment(record, config));
        const auto dp = degree_profile(uns);
        const auto lp = line_type_profile(uns);
        py::dict degrees;
        for (const auto &[d, c] : dp.histogram) degrees[py::int_(d)] = c;
        py::dict classes;
        for (const auto &[t, c] : lp.classes) classes[py::make_tuple(t[0], t[1], t[2])] = c;
        py::dict out;
        out["contexts"] = dp.total_context_count;
        out["degrees"] = degrees;
        out["line_types"] = classes;
        return out;
    }, py::arg("record_json"));

    m.def("export_xor", [](uint32_t qubits, const std::string &geometry, std::optional<std::string> index) {
        const GeometrySpec spec = make_spec(qubits, geometry, std::move(index));
        std::ostringstream out;
        write_xor_cnf(out, build_configuration(spec), spec);
        return out.str();
    }, py::arg("qubits"), py::arg("geometry") = "full", py::arg("index") = py::none());

    m.def("run_cli", [](const std::vector<std::string> &args) {
        std::ostringstream out, err;
        int code;
        {
            py::gil_scoped_release release;
            code = run_cli(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"));
}
