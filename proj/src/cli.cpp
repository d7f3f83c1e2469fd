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

#include "polarctx/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "polarctx/error.hpp"
#include "polarctx/exact.hpp"
#include "polarctx/pauli.hpp"
#include "polarctx/run_record.hpp"
#include "polarctx/solver.hpp"
#include "polarctx/structure.hpp"

namespace polarctx {

namespace {

using nlohmann::json;

struct GeometryOptions {
    uint32_t qubits = 0;
    std::string geometry = "full";
    std::string index;
    std::string config_path;

    void attach(CLI::App *cmd) {
        cmd->add_option("--qubits,-n", qubits, "number of qubits N");
        cmd->add_option("--geometry,-g", geometry, "full | hyperbolic | elliptic")
            ->check(CLI::IsMember({"full", "hyperbolic", "elliptic"}));
        cmd->add_option("--index", index, "quadric index observable (all-I selects the identity quadric)");
        cmd->add_option("--config", config_path, "JSON record whose geometry (e.g. explicit contexts) is used");
    }

    GeometrySpec spec() const {
        if (!config_path.empty()) {
            return load_run_record(config_path).geometry;
        }
        if (qubits == 0) {
            throw InvalidArgument("--qubits is required unless --config is given");
        }
        GeometrySpec s;
        s.qubits = qubits;
        s.geometry = geometry;
        if (!index.empty()) s.index_observable = index;
        return normalize_geometry(s);
    }
};

unsigned resolve_threads(std::optional<unsigned> flag) {
    if (flag) return *flag;
    if (const char *env = std::getenv(kThreadsEnvVar); env != nullptr && *env != '\0') {
        char *end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (*end != '\0') {
            throw InvalidArgument(std::string(kThreadsEnvVar) + " must be a non-negative integer, got '" + env + "'");
        }
        return static_cast<unsigned>(v);
    }
    return 0;
}

std::string triple_text(const DegreeTriple &t) {
    return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
}

json profile_json(const DegreeProfile &dp, const LineTypeProfile &lp) {
    json degrees = json::object();
    for (const auto &[d, c] : dp.histogram) degrees[std::to_string(d)] = c;
    json classes = json::array();
    for (const auto &[t, c] : lp.classes) classes.push_back({t[0], t[1], t[2], c});
    return {{"contexts", dp.total_context_count},
            {"covered_points", dp.covered_point_count},
            {"uncovered_points", dp.uncovered_point_count},
            {"degrees", degrees},
            {"line_types", classes}};
}

void print_profile(std::ostream &out, const DegreeProfile &dp, const LineTypeProfile &lp) {
    out << "unsatisfied contexts: " << dp.total_context_count << "\n";
    out << "covered points: " << dp.covered_point_count << " (uncovered " << dp.uncovered_point_count << ")\n";
    out << "degrees:";
    for (const auto &[d, c] : dp.histogram) out << ' ' << d << ':' << c;
    out << "\nline types:";
    for (const auto &[t, c] : lp.classes) out << ' ' << triple_text(t) << ':' << c;
    out << "\n";
}

struct ReferenceGraph {
    std::string name;
    SimpleGraph graph;
};

const std::vector<ReferenceGraph> &reference_graphs() {
    static const std::vector<ReferenceGraph> refs = {
        {"heawood", heawood_graph()},
        {"coxeter", coxeter_graph()},
        {"K7,7", complete_bipartite(7, 7)},
        {"H(4)", haar_graph(4)},
        {"H(69)", haar_graph(69)},
        {"PG(3,2) point-plane", point_hyperplane_graph(3)},
    };
    return refs;
}

std::vector<std::string> recognize(const SimpleGraph &g) {
    std::vector<std::string> names;
    for (const auto &ref : reference_graphs()) {
        if (ref.graph.vertex_count() == g.vertex_count() && ref.graph.edge_count() == g.edge_count() &&
            graphs_isomorphic(ref.graph, g)) {
            names.push_back(ref.name);
        }
    }
    return names;
}

json graphs_report(const std::vector<PointTriple> &lines, std::ostream &out) {
    json classes = json::array();
    const PointDegrees degrees = point_degrees(lines);
    const LineTypeProfile lp = line_type_profile(lines);
    for (const auto &[cls, count] : lp.classes) {
        const auto class_lines = lines_of_class(lines, cls);
        json entry = {{"class", {cls[0], cls[1], cls[2]}}, {"lines", count}};
        const bool uniform = cls[0] == cls[2];
        const bool distinct = cls[0] != cls[1] && cls[1] != cls[2];
        if (uniform) {
            const auto comps = connected_components(class_lines);
            json parts = json::array();
            size_t hexagons = 0;
            for (const auto &comp : comps) {
                const bool hex = recognize_hexagon(comp);
                hexagons += hex ? 1 : 0;
                parts.push_back({{"lines", comp.size()}, {"generalized_hexagon_profile", hex}});
            }
            entry["kind"] = "uniform";
            entry["components"] = parts;
            out << "class " << triple_text(cls) << ": " << count << " lines, " << comps.size()
                << " component(s), " << hexagons << " with the GH(2,2) profile\n";
        } else if (distinct) {
            entry["kind"] = "no skeleton";
            out << "class " << triple_text(cls) << ": " << count << " lines, no skeleton (all degrees distinct)\n";
        } else {
            const uint32_t vertex = cls[0] == cls[1] ? cls[0] : cls[1];
            const uint32_t mid = cls[0] == cls[1] ? cls[2] : cls[0];
            const SimpleGraph g = skeleton_graph(class_lines, degrees, vertex, mid);
            json parts = json::array();
            out << "class " << triple_text(cls) << ": skeleton on degree-" << vertex << " points, "
                << g.vertex_count() << " vertices, " << g.edge_count() << " edges";
            const auto comps = graph_components(g);
            out << ", " << comps.size() << " component(s) [";
            for (size_t k = 0; k < comps.size(); k++) {
                const auto &c = comps[k];
                const auto names = c.vertex_count() <= kMaxIsomorphismVertices ? recognize(c) : std::vector<std::string>{};
                parts.push_back({{"vertices", c.vertex_count()},
                                 {"edges", c.edge_count()},
                                 {"regular_degree", c.regular_degree()},
                                 {"girth", c.girth()},
                                 {"bipartite", c.is_bipartite()},
                                 {"recognized", names}});
                out << (k ? ", " : "") << c.vertex_count() << "v/" << c.edge_count() << "e";
                for (const auto &name : names) out << ' ' << name;
            }
            out << "]\n";
            entry["kind"] = "skeleton";
            entry["vertex_degree"] = vertex;
            entry["midpoint_degree"] = mid;
            entry["components"] = parts;
        }
        classes.push_back(entry);
    }
    return classes;
}

std::optional<uint64_t> best_known_quadric_degree(uint32_t n, QuadricKind kind) {
    static const std::map<uint32_t, std::pair<uint64_t, uint64_t>> table = {
        {2, {1, 0}}, {3, {21, 9}}, {4, {315, 315}}, {5, {6975, 7087}}};
    auto it = table.find(n);
    if (it == table.end()) return std::nullopt;
    return kind == QuadricKind::hyperbolic ? it->second.first : it->second.second;
}

json restriction_report(const UnsatisfiedConfiguration &uns, QuadricKind kind, std::optional<uint64_t> target,
                        std::ostream &out) {
    const auto quadrics = enumerate_quadrics(*uns.space, kind, kind == QuadricKind::hyperbolic);
    std::map<size_t, size_t> sizes;
    size_t meeting = 0, dw52 = 0;
    std::map<LineTypeProfile::Map, size_t> profiles_at_target;
    for (const auto &q : quadrics) {
        const auto sub = restrict_to(uns, q.members);
        sizes[sub.size()]++;
        if (target && sub.size() == *target) {
            meeting++;
            profiles_at_target[line_type_profile(sub).classes]++;
        }
        if (dw52_profile(sub)) dw52++;
    }
    json size_json = json::object();
    for (const auto &[s, c] : sizes) size_json[std::to_string(s)] = c;
    json profile_list = json::array();
    for (const auto &[classes, c] : profiles_at_target) {
        json cl = json::array();
        for (const auto &[t, k] : classes) cl.push_back({t[0], t[1], t[2], k});
        profile_list.push_back({{"line_types", cl}, {"quadrics", c}});
    }
    const std::string name = to_string(kind);
    out << name << " quadrics: " << quadrics.size() << "; restricted sizes";
    for (const auto &[s, c] : sizes) out << ' ' << s << ':' << c;
    out << "\n";
    json report = {{"kind", name}, {"quadrics", quadrics.size()}, {"restricted_sizes", size_json}};
    if (target) {
        const bool holds = meeting == quadrics.size();
        out << "  target " << *target << " met by " << meeting << "/" << quadrics.size() << " ("
            << (holds ? "criterion holds" : "criterion fails") << ")\n";
        report["target"] = *target;
        report["meeting_target"] = meeting;
        report["criterion_holds"] = holds;
        report["profiles_at_target"] = profile_list;
    } else {
        out << "  no target known; pass --target-" << name << "\n";
    }
    if (kind == QuadricKind::hyperbolic) {
        out << "  DW(5,2) profile (135 points of degree 7, 315 lines): " << dw52 << "/" << quadrics.size() << "\n";
        report["dw52_profile"] = dw52;
    }
    return report;
}

int cmd_space(uint32_t n, const std::string &quadrics, std::ostream &out) {
    auto space = build_space(n);
    out << "p=" << space->point_count() << " l=" << space->line_count() << " l-=" << space->negative_line_count()
        << "\n";
    std::vector<QuadricKind> kinds;
    if (quadrics == "hyperbolic" || quadrics == "both") kinds.push_back(QuadricKind::hyperbolic);
    if (quadrics == "elliptic" || quadrics == "both") kinds.push_back(QuadricKind::elliptic);
    for (QuadricKind kind : kinds) {
        const auto family = enumerate_quadrics(*space, kind, kind == QuadricKind::hyperbolic);
        const auto dist = negative_line_distribution(*space, kind);
        out << to_string(kind) << ": quadrics=" << family.size() << " p=" << quadric_point_count(n, kind)
            << " l=" << (family.empty() ? 0 : family.front().line_ids.size()) << " l-:";
        for (const auto &[neg, mult] : dist) out << ' ' << neg << ':' << mult;
        out << "\n";
    }
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"polarctx: contextuality degree of Pauli configurations in symplectic polar spaces", "polarctx"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "polarctx 1.0.0");

    uint32_t space_n = 0;
    std::string space_quadrics;
    auto *space_cmd = app.add_subcommand("space", "point, line and negative-line counts");
    space_cmd->add_option("--qubits,-n", space_n, "number of qubits N")->required();
    space_cmd->add_option("--quadrics", space_quadrics, "also list quadric families")
        ->check(CLI::IsMember({"hyperbolic", "elliptic", "both"}));

    GeometryOptions solve_geo;
    SolverParams params;
    std::string solve_out, trace_out;
    std::optional<unsigned> solve_threads;
    auto *solve_cmd = app.add_subcommand("solve", "heuristic upper bound on the degree of contextuality");
    solve_geo.attach(solve_cmd);
    solve_cmd->add_option("--theta", params.theta, "flip threshold as a fraction of the maximal count");
    solve_cmd->add_option("--gamma", params.gamma, "skip probability of an eligible flip");
    solve_cmd->add_option("--iterations", params.max_iterations, "iterations per restart");
    solve_cmd->add_option("--restarts", params.restarts, "independent restarts");
    solve_cmd->add_option("--seed", params.seed, "master seed");
    solve_cmd->add_option("--time-budget-ms", params.time_budget_ms, "wall-clock budget (0 = none)");
    solve_cmd->add_option("--threads", solve_threads, "worker threads (default: $POLARCTX_THREADS or all cores)");
    solve_cmd->add_option("--out,-o", solve_out, "write the JSON run record here instead of stdout");
    solve_cmd->add_option("--trace", trace_out, "write the convergence trace as CSV");
    std::string start_path;
    std::vector<std::string> start_product;
    auto *start_opt = solve_cmd->add_option("--start", start_path, "start every restart from this record's assignment");
    solve_cmd
        ->add_option("--start-product", start_product,
                     "start from the tensor product of two full-space records (left factor first)")
        ->expected(2)
        ->excludes(start_opt);

    GeometryOptions exact_geo;
    uint32_t max_rank = kDefaultExactRankBudget;
    std::optional<unsigned> exact_threads;
    auto *exact_cmd = app.add_subcommand("exact", "exact degree of contextuality by coset enumeration");
    exact_geo.attach(exact_cmd);
    exact_cmd->add_option("--max-rank", max_rank, "largest incidence rank to enumerate");
    exact_cmd->add_option("--threads", exact_threads, "worker threads");

    uint32_t bounds_n = 0;
    auto *bounds_cmd = app.add_subcommand("bounds", "lower bound for the full space and polarity count");
    bounds_cmd->add_option("--qubits,-n", bounds_n, "number of qubits N")->required();

    std::string record_path, report_path;
    bool want_profiles = false, want_graphs = false, want_restrict = false;
    std::optional<uint64_t> target_elliptic, target_hyperbolic;
    auto *analyze_cmd = app.add_subcommand("analyze", "structure of the unsatisfied contexts of a solve record");
    analyze_cmd->add_option("record", record_path, "run record JSON")->required();
    analyze_cmd->add_flag("--profiles", want_profiles, "degree and line-type profiles (default)");
    analyze_cmd->add_flag("--graphs", want_graphs, "skeleton graphs and recognitions per line class");
    analyze_cmd->add_flag("--restrict-criteria", want_restrict, "restrict to every quadric (full geometry only)");
    analyze_cmd->add_option("--target-elliptic", target_elliptic, "expected size on elliptic quadrics");
    analyze_cmd->add_option("--target-hyperbolic", target_hyperbolic, "expected size on hyperbolic quadrics");
    analyze_cmd->add_option("--report", report_path, "write the JSON report here");

    GeometryOptions xor_geo;
    std::string xor_out;
    auto *xor_cmd = app.add_subcommand("export-xor", "MAX-XOR-SAT instance in XOR-CNF form");
    xor_geo.attach(xor_cmd);
    xor_cmd->add_option("--out,-o", xor_out, "output path (default stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalidInput;
    }

    try {
        if (*space_cmd) {
            return cmd_space(space_n, space_quadrics, out);
        }
        if (*solve_cmd) {
            const GeometrySpec spec = solve_geo.spec();
            const Configuration config = build_configuration(spec);
            std::optional<Assignment> start;
            std::optional<StartInfo> start_info;
            if (!start_path.empty()) {
                const RunRecord from = load_run_record(start_path);
                if (!(normalize_geometry(from.geometry) == spec)) {
                    throw InvalidArgument("--start record has a different geometry");
                }
                start = record_assignment(from, config);
                start_info = StartInfo{"record", {start_path}, hamming_distance(config, *start)};
            } else if (!start_product.empty()) {
                std::vector<Configuration> parts;
                std::vector<Assignment> values;
                for (const auto &path : start_product) {
                    const RunRecord from = load_run_record(path);
                    if (from.geometry.geometry != "full") {
                        throw InvalidArgument("--start-product needs full-space records, got " + path);
                    }
                    parts.push_back(build_configuration(from.geometry));
                    values.push_back(record_assignment(from, parts.back()));
                }
                start = product_assignment(config, parts[0], values[0], parts[1], values[1]);
                start_info = StartInfo{"product", start_product, hamming_distance(config, *start)};
            }
            const SolveResult result =
                solve(config, params, resolve_threads(solve_threads), start ? &*start : nullptr);
            RunRecord record = make_run_record(spec, config, result);
            record.start = start_info;
            if (!trace_out.empty()) {
                std::ofstream csv(trace_out);
                if (!csv) throw InvalidArgument("cannot write " + trace_out);
                write_trace_csv(csv, result.trace);
            }
            if (solve_out.empty()) {
                out << dump_run_record(record);
            } else {
                save_run_record(record, solve_out);
                out << "best_distance=" << result.best_distance << " restart=" << result.restart_index_of_best
                    << " iterations_to_best=" << result.iterations_to_best << " runtime_ms=" << result.runtime_ms
                    << (result.timed_out ? " timed_out" : "") << "\n";
            }
            return kExitOk;
        }
        if (*exact_cmd) {
            const Configuration config = build_configuration(exact_geo.spec());
            const Gf2Basis basis = incidence_rank(config);
            const uint64_t d = exact_degree(config, max_rank, resolve_threads(exact_threads));
            out << "rank=" << basis.rank() << " d=" << d << "\n";
            return kExitOk;
        }
        if (*bounds_cmd) {
            out << "lower_bound=" << lower_bound_full(bounds_n) << "\n";
            out << "polarities=" << polarity_count(bounds_n) << "\n";
            return kExitOk;
        }
        if (*analyze_cmd) {
            const RunRecord record = load_run_record(record_path);
            if (!want_profiles && !want_graphs && !want_restrict) want_profiles = true;
            const Configuration config = build_configuration(record.geometry);
            const Assignment assignment = record_assignment(record, config);
            const UnsatisfiedConfiguration uns = unsatisfied(config, assignment);
            if (uns.size() != record.result->best_distance) {
                throw ParseError("record claims distance " + std::to_string(record.result->best_distance) +
                                 " but its assignment leaves " + std::to_string(uns.size()) + " contexts unsatisfied");
            }
            const auto lines = uns.lines();
            json report = {{"record", record_path}, {"qubits", record.geometry.qubits},
                           {"geometry", record.geometry.geometry}, {"distance", uns.size()}};
            if (want_profiles) {
                const DegreeProfile dp = degree_profile(uns);
                const LineTypeProfile lp = line_type_profile(lines);
                print_profile(out, dp, lp);
                const bool dw52 = dw52_profile(lines);
                out << "DW(5,2) profile: " << (dw52 ? "true" : "false") << "\n";
                report["profile"] = profile_json(dp, lp);
                report["profile"]["dw52_profile"] = dw52;
            }
            if (want_graphs) {
                report["classes"] = graphs_report(lines, out);
            }
            if (want_restrict) {
                if (record.geometry.geometry != "full") {
                    throw InvalidArgument("--restrict-criteria needs a full-geometry record");
                }
                const uint32_t n = record.geometry.qubits;
                json parts = json::array();
                if (n >= 2) {
                    auto t = target_elliptic ? target_elliptic : best_known_quadric_degree(n, QuadricKind::elliptic);
                    parts.push_back(restriction_report(uns, QuadricKind::elliptic, t, out));
                }
                auto t = target_hyperbolic ? target_hyperbolic : best_known_quadric_degree(n, QuadricKind::hyperbolic);
                parts.push_back(restriction_report(uns, QuadricKind::hyperbolic, t, out));
                report["restrictions"] = parts;
            }
            if (!report_path.empty()) {
                std::ofstream rep(report_path);
                if (!rep) throw InvalidArgument("cannot write " + report_path);
                rep << report.dump(1) << "\n";
            }
            return kExitOk;
        }
        if (*xor_cmd) {
            const GeometrySpec spec = xor_geo.spec();
            const Configuration config = build_configuration(spec);
            if (xor_out.empty()) {
                write_xor_cnf(out, config, spec);
            } else {
                std::ofstream file(xor_out);
                if (!file) throw InvalidArgument("cannot write " + xor_out);
                write_xor_cnf(file, config, spec);
            }
            return kExitOk;
        }
    } catch (const CapabilityError &e) {
        err << "refused: " << e.what() << "\n";
        return kExitCapabilityRefusal;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitFailure;
}

}  // namespace polarctx
