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

#include "polarctx/run_record.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "polarctx/error.hpp"
#include "polarctx/pauli.hpp"

namespace polarctx {

using nlohmann::json;

const char *const kPointOrdering =
    "point k has id k+1, the integer whose high N bits are the Z part and low N bits the X part of the "
    "observable (qubit 1 most significant; Y sets both); lines are sorted point-index triples a<b<c in "
    "lexicographic order; values are +1/-1";

std::string default_quadric_index(uint32_t qubits, QuadricKind kind) {
    if (qubits < 1 || qubits > SymplecticSpace::kMaxQubits) {
        throw CapabilityError("quadrics are built for 1.." + std::to_string(SymplecticSpace::kMaxQubits) + " qubits");
    }
    const uint64_t limit = uint64_t{1} << (2 * qubits);
    for (uint64_t id = 1; id < limit; id++) {
        Observable p = observable_from_id(id, qubits);
        if (is_symmetric(p) == (kind == QuadricKind::hyperbolic)) {
            return format_observable(p);
        }
    }
    throw CapabilityError(std::string("no ") + to_string(kind) + " quadric index on " + std::to_string(qubits) +
                          " qubit(s)");
}

GeometrySpec normalize_geometry(GeometrySpec spec) {
    if (spec.qubits < 1) {
        throw InvalidArgument("qubit count must be at least 1");
    }
    if (spec.geometry == "full") {
        if (spec.index_observable) throw InvalidArgument("the full geometry takes no index observable");
        if (!spec.contexts.empty()) throw InvalidArgument("the full geometry takes no explicit contexts");
    } else if (spec.geometry == "hyperbolic" || spec.geometry == "elliptic") {
        if (!spec.contexts.empty()) throw InvalidArgument("quadric geometries take no explicit contexts");
        const QuadricKind kind = spec.geometry == "elliptic" ? QuadricKind::elliptic : QuadricKind::hyperbolic;
        if (!spec.index_observable) {
            spec.index_observable = default_quadric_index(spec.qubits, kind);
        }
        Observable index = parse_observable(*spec.index_observable);
        if (index.n_qubits != spec.qubits) {
            throw DimensionError("index observable " + *spec.index_observable + " does not act on " +
                                 std::to_string(spec.qubits) + " qubits");
        }
        if (index.is_identity() ? kind != QuadricKind::hyperbolic : is_symmetric(index) != (kind == QuadricKind::hyperbolic)) {
            throw InvalidArgument("index observable " + *spec.index_observable + " does not define an " +
                                  spec.geometry + " quadric");
        }
    } else if (spec.geometry == "custom") {
        if (spec.index_observable) throw InvalidArgument("the custom geometry takes no index observable");
    } else {
        throw InvalidArgument("unknown geometry '" + spec.geometry + "' (expected full, hyperbolic, elliptic or custom)");
    }
    return spec;
}

Configuration build_configuration(const GeometrySpec &spec) {
    return build_configuration(spec, build_space(spec.qubits));
}

Configuration build_configuration(const GeometrySpec &raw, std::shared_ptr<const SymplecticSpace> space) {
    const GeometrySpec spec = normalize_geometry(raw);
    if (space->n_qubits() != spec.qubits) {
        throw DimensionError("space dimension does not match the geometry");
    }
    if (spec.geometry == "full") {
        return Configuration::from_space(space);
    }
    if (spec.geometry == "custom") {
        std::vector<std::array<Observable, 3>> contexts;
        contexts.reserve(spec.contexts.size());
        for (const auto &ctx : spec.contexts) {
            std::array<Observable, 3> triple;
            for (int k = 0; k < 3; k++) {
                triple[k] = parse_observable(ctx[k]);
                if (triple[k].n_qubits != spec.qubits) {
                    throw DimensionError("context observable " + ctx[k] + " does not act on " +
                                         std::to_string(spec.qubits) + " qubits");
                }
            }
            contexts.push_back(triple);
        }
        return Configuration::from_contexts(space, contexts);
    }
    Observable index = parse_observable(*spec.index_observable);
    const Quadric q = index.is_identity() ? make_identity_quadric(*space) : make_quadric(*space, index);
    return Configuration::from_quadric(space, q);
}

RunRecord make_run_record(const GeometrySpec &spec, const Configuration &config, const SolveResult &result) {
    RunRecord record;
    record.command = "solve";
    record.geometry = normalize_geometry(spec);
    record.params = result.params;
    RunResult r;
    r.best_distance = result.best_distance;
    r.assignment.assign(result.best_assignment.values.begin(), result.best_assignment.values.end());
    r.observables.reserve(config.point_count());
    for (uint32_t p : config.point_ids()) {
        r.observables.push_back(format_observable(config.space().observable(p)));
    }
    r.unsatisfied_context_ids = result.unsatisfied_context_ids;
    r.iterations_to_best = result.iterations_to_best;
    r.restart_index_of_best = result.restart_index_of_best;
    r.runtime_ms = result.runtime_ms;
    r.timed_out = result.timed_out;
    r.trace = result.trace;
    record.result = std::move(r);
    return record;
}

Assignment record_assignment(const RunRecord &record, const Configuration &config) {
    if (!record.result) {
        throw ParseError("record has no result");
    }
    const RunResult &r = *record.result;
    if (r.assignment.size() != config.point_count()) {
        throw ParseError("record assignment has " + std::to_string(r.assignment.size()) +
                         " values but the configuration has " + std::to_string(config.point_count()) + " points");
    }
    if (!r.observables.empty() && r.observables.size() != r.assignment.size()) {
        throw ParseError("record observables and assignment differ in length");
    }
    Assignment a;
    a.values.reserve(r.assignment.size());
    for (size_t k = 0; k < r.assignment.size(); k++) {
        if (r.assignment[k] != 1 && r.assignment[k] != -1) {
            throw ParseError("assignment value at position " + std::to_string(k) + " is not +1 or -1");
        }
        if (!r.observables.empty() &&
            r.observables[k] != format_observable(config.space().observable(config.point_ids()[k]))) {
            throw ParseError("record observable " + r.observables[k] + " at position " + std::to_string(k) +
                             " does not match the canonical point ordering");
        }
        a.values.push_back(static_cast<int8_t>(r.assignment[k]));
    }
    return a;
}

json to_json(const RunRecord &record) {
    json doc;
    doc["schema_version"] = record.schema_version;
    doc["command"] = record.command;
    doc["qubits"] = record.geometry.qubits;
    doc["geometry"] = record.geometry.geometry;
    doc["index_observable"] =
        record.geometry.index_observable ? json(*record.geometry.index_observable) : json(nullptr);
    if (record.geometry.geometry == "custom") {
        doc["contexts"] = record.geometry.contexts;
    }
    doc["point_ordering"] = record.point_ordering;
    if (record.params) {
        const SolverParams &p = *record.params;
        doc["params"] = {{"theta", p.theta},
                         {"gamma", p.gamma},
                         {"max_iterations", p.max_iterations},
                         {"restarts", p.restarts},
                         {"seed", p.seed},
                         {"time_budget_ms", p.time_budget_ms}};
    }
    if (record.start) {
        doc["start"] = {{"origin", record.start->origin},
                        {"sources", record.start->sources},
                        {"distance", record.start->distance}};
    }
    if (record.result) {
        const RunResult &r = *record.result;
        json trace = json::array();
        for (const auto &t : r.trace) trace.push_back({t.iteration, t.best_distance});
        doc["result"] = {{"best_distance", r.best_distance},
                         {"assignment", r.assignment},
                         {"observables", r.observables},
                         {"unsatisfied_context_ids", r.unsatisfied_context_ids},
                         {"iterations_to_best", r.iterations_to_best},
                         {"restart_index_of_best", r.restart_index_of_best},
                         {"runtime_ms", r.runtime_ms},
                         {"timed_out", r.timed_out},
                         {"trace", trace}};
    }
    return doc;
}

RunRecord run_record_from_json(const json &doc) {
    try {
        RunRecord record;
        record.schema_version = doc.at("schema_version").get<int>();
        if (record.schema_version != kRunRecordSchemaVersion) {
            throw ParseError("unsupported schema_version " + std::to_string(record.schema_version));
        }
        record.command = doc.value("command", std::string("solve"));
        record.geometry.qubits = doc.at("qubits").get<uint32_t>();
        record.geometry.geometry = doc.at("geometry").get<std::string>();
        if (doc.contains("index_observable") && !doc["index_observable"].is_null()) {
            record.geometry.index_observable = doc["index_observable"].get<std::string>();
        }
        if (doc.contains("contexts")) {
            record.geometry.contexts = doc["contexts"].get<std::vector<std::array<std::string, 3>>>();
        }
        record.point_ordering = doc.value("point_ordering", std::string(kPointOrdering));
        if (doc.contains("params")) {
            const json &p = doc["params"];
            SolverParams params;
            params.theta = p.at("theta").get<double>();
            params.gamma = p.at("gamma").get<double>();
            params.max_iterations = p.at("max_iterations").get<uint64_t>();
            params.restarts = p.at("restarts").get<uint32_t>();
            params.seed = p.at("seed").get<uint64_t>();
            params.time_budget_ms = p.value("time_budget_ms", uint64_t{0});
            record.params = params;
        }
        if (doc.contains("start")) {
            const json &j = doc["start"];
            StartInfo start;
            start.origin = j.at("origin").get<std::string>();
            start.sources = j.at("sources").get<std::vector<std::string>>();
            start.distance = j.at("distance").get<uint64_t>();
            record.start = start;
        }
        if (doc.contains("result")) {
            const json &j = doc["result"];
            RunResult r;
            r.best_distance = j.at("best_distance").get<uint64_t>();
            r.assignment = j.at("assignment").get<std::vector<int>>();
            r.observables = j.value("observables", std::vector<std::string>{});
            r.unsatisfied_context_ids = j.value("unsatisfied_context_ids", std::vector<uint32_t>{});
            r.iterations_to_best = j.value("iterations_to_best", uint64_t{0});
            r.restart_index_of_best = j.value("restart_index_of_best", uint32_t{0});
            r.runtime_ms = j.value("runtime_ms", uint64_t{0});
            r.timed_out = j.value("timed_out", false);
            if (j.contains("trace")) {
                for (const auto &row : j["trace"]) {
                    r.trace.push_back({row.at(0).get<uint64_t>(), row.at(1).get<uint64_t>()});
                }
            }
            record.result = std::move(r);
        }
        return record;
    } catch (const json::exception &e) {
        throw ParseError(std::string("malformed run record: ") + e.what());
    }
}

std::string dump_run_record(const RunRecord &record) { return to_json(record).dump(1) + "\n"; }

void save_run_record(const RunRecord &record, const std::string &path) {
    std::ofstream out(path);
    if (!out) {
        throw InvalidArgument("cannot write " + path);
    }
    out << dump_run_record(record);
}

RunRecord load_run_record(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidArgument("cannot read " + path);
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception &e) {
        throw ParseError(path + ": " + e.what());
    }
    return run_record_from_json(doc);
}

void write_trace_csv(std::ostream &out, const std::vector<TracePoint> &trace) {
    out << "iteration,best_distance\n";
    for (const auto &t : trace) {
        out << t.iteration << ',' << t.best_distance << '\n';
    }
}

void write_xor_cnf(std::ostream &out, const Configuration &config, const GeometrySpec &spec) {
    out << "c polarctx xor-cnf export\n";
    out << "c qubits " << spec.qubits << "\n";
    out << "c geometry " << spec.geometry;
    if (spec.index_observable) out << " index " << *spec.index_observable;
    out << "\n";
    out << "c variable k is the k-th configuration point in canonical order (point index ascending)\n";
    out << "c a true variable means the value -1; clause parity 1 marks a negative context\n";
    out << "p cnf " << config.point_count() << ' ' << config.context_count() << "\n";
    const auto contexts = config.local_contexts();
    const auto signs = config.expected_signs();
    for (size_t c = 0; c < contexts.size(); c++) {
        const auto &t = contexts[c];
        out << "x " << (signs[c] < 0 ? "" : "-") << t[0] + 1 << ' ' << t[1] + 1 << ' ' << t[2] + 1 << " 0\n";
    }
}

}  // namespace polarctx
