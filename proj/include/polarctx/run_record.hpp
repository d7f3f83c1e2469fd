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

#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "polarctx/configuration.hpp"
#include "polarctx/solver.hpp"

namespace polarctx {

/// Version of the RunRecord JSON layout written by this library.
constexpr int kRunRecordSchemaVersion = 1;

/// Declaration stored in every record so point and line identities stay
/// stable across refactors.
extern const char *const kPointOrdering;

/// Which configuration a command works on.
struct GeometrySpec {
    uint32_t qubits = 0;
    /// full | hyperbolic | elliptic | custom
    std::string geometry = "full";
    /// Quadric index; the all-I string selects the hyperbolic quadric of
    /// the identity. Empty for full and custom geometries.
    std::optional<std::string> index_observable;
    /// Explicit contexts for the custom geometry.
    std::vector<std::array<std::string, 3>> contexts;

    bool operator==(const GeometrySpec &) const = default;
};

struct RunResult {
    uint64_t best_distance = 0;
    /// Values of the configuration's points in canonical order.
    std::vector<int> assignment;
    /// Observable strings parallel to `assignment`.
    std::vector<std::string> observables;
    std::vector<uint32_t> unsatisfied_context_ids;
    uint64_t iterations_to_best = 0;
    uint32_t restart_index_of_best = 0;
    uint64_t runtime_ms = 0;
    bool timed_out = false;
    std::vector<TracePoint> trace;

    bool operator==(const RunResult &) const = default;
};

/// Provenance of a non-default starting assignment.
struct StartInfo {
    /// "record" (another run's assignment) or "product" (tensor product of
    /// two full-space runs, left factor first).
    std::string origin;
    std::vector<std::string> sources;
    uint64_t distance = 0;

    bool operator==(const StartInfo &) const = default;
};

struct RunRecord {
    int schema_version = kRunRecordSchemaVersion;
    std::string command = "solve";
    GeometrySpec geometry;
    std::string point_ordering = kPointOrdering;
    std::optional<SolverParams> params;
    std::optional<StartInfo> start;
    std::optional<RunResult> result;

    bool operator==(const RunRecord &) const = default;
};

/// Fills in the default quadric index when none is given and validates the
/// geometry name. Throws InvalidArgument on inconsistent input.
GeometrySpec normalize_geometry(GeometrySpec spec);

/// Smallest-id skew (elliptic) or symmetric (hyperbolic) observable.
std::string default_quadric_index(uint32_t qubits, QuadricKind kind);

/// Builds the configuration a (normalized or not) geometry describes.
Configuration build_configuration(const GeometrySpec &spec);
Configuration build_configuration(const GeometrySpec &spec, std::shared_ptr<const SymplecticSpace> space);

RunRecord make_run_record(const GeometrySpec &spec, const Configuration &config, const SolveResult &result);

/// Assignment stored in a record, validated against the configuration.
/// Throws ParseError when the record does not fit the configuration.
Assignment record_assignment(const RunRecord &record, const Configuration &config);

nlohmann::json to_json(const RunRecord &record);
/// Throws ParseError on malformed input or an unknown schema version.
RunRecord run_record_from_json(const nlohmann::json &doc);

void save_run_record(const RunRecord &record, const std::string &path);
RunRecord load_run_record(const std::string &path);
std::string dump_run_record(const RunRecord &record);

/// Writes `iteration,best_distance` rows.
void write_trace_csv(std::ostream &out, const std::vector<TracePoint> &trace);

/// XOR-CNF export: one variable per configuration point (1-based,
/// canonical order, true meaning -1), one xor clause per context.
void write_xor_cnf(std::ostream &out, const Configuration &config, const GeometrySpec &spec);

}  // namespace polarctx
