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

#include "polarctx/solver.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <chrono>
#include <cmath>
#include <optional>
#include <random>
#include <string>
#include <thread>

#include "polarctx/error.hpp"

namespace polarctx {

using Clock = std::chrono::steady_clock;

void SolverParams::validate() const {
    if (!(theta >= 0.0 && theta <= 1.0)) {
        throw InvalidArgument("theta must lie in [0,1], got " + std::to_string(theta));
    }
    if (!(gamma >= 0.0 && gamma <= 1.0)) {
        throw InvalidArgument("gamma must lie in [0,1], got " + std::to_string(gamma));
    }
    if (max_iterations == 0) {
        throw InvalidArgument("max_iterations must be positive");
    }
    if (restarts == 0) {
        throw InvalidArgument("restarts must be positive");
    }
}

SearchState::SearchState(const Configuration &config)
    : config_(&config),
      values_(config.point_count(), 1),
      uns_(config.point_count(), 0),
      unsat_(config.context_count(), 0) {
    const auto signs = config.expected_signs();
    const auto contexts = config.local_contexts();
    for (size_t c = 0; c < contexts.size(); c++) {
        if (signs[c] < 0) {
            unsat_[c] = 1;
            distance_++;
            for (uint32_t p : contexts[c]) {
                uns_[p]++;
            }
        }
    }
}

SearchState::SearchState(const Configuration &config, const Assignment &start) : SearchState(config) {
    if (start.values.size() != config.point_count()) {
        throw InvalidArgument("start assignment has " + std::to_string(start.values.size()) +
                              " values but the configuration has " + std::to_string(config.point_count()) +
                              " points");
    }
    for (uint32_t p = 0; p < start.values.size(); p++) {
        if (start.values[p] != 1 && start.values[p] != -1) {
            throw InvalidArgument("start assignment value at position " + std::to_string(p) + " is not +1 or -1");
        }
        if (start.values[p] < 0) {
            flip(p);
        }
    }
}

void SearchState::flip(uint32_t local_point) {
    values_[local_point] = static_cast<int8_t>(-values_[local_point]);
    const auto contexts = config_->local_contexts();
    for (uint32_t c : config_->contexts_through(local_point)) {
        // The product over c changes sign, so c toggles between satisfied and
        // unsatisfied.
        uint8_t now_unsat = unsat_[c] ^ 1U;
        unsat_[c] = now_unsat;
        const auto &pts = contexts[c];
        if (now_unsat) {
            uns_[pts[0]]++;
            uns_[pts[1]]++;
            uns_[pts[2]]++;
            distance_++;
        } else {
            uns_[pts[0]]--;
            uns_[pts[1]]--;
            uns_[pts[2]]--;
            distance_--;
        }
    }
}

std::vector<uint32_t> SearchState::recount() const {
    std::vector<uint32_t> counts(values_.size(), 0);
    const auto signs = config_->expected_signs();
    const auto contexts = config_->local_contexts();
    for (size_t c = 0; c < contexts.size(); c++) {
        const auto &pts = contexts[c];
        if (values_[pts[0]] * values_[pts[1]] * values_[pts[2]] != signs[c]) {
            for (uint32_t p : pts) {
                counts[p]++;
            }
        }
    }
    return counts;
}

uint64_t derive_restart_seed(uint64_t seed, uint32_t restart) {
    uint64_t z = seed + (uint64_t{restart} + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

namespace {

void check_solvable(const Configuration &config, const SolverParams &params) {
    params.validate();
    if (config.context_count() == 0) {
        throw InvalidArgument("configuration has no contexts (degree of contextuality is N/A)");
    }
}

struct SearchOutcome {
    std::vector<int8_t> best_values;
    uint64_t best_distance;
    uint64_t iterations_to_best = 0;
    bool timed_out = false;
    std::vector<TracePoint> trace;
};

SearchOutcome run_search(const Configuration &config, const SolverParams &params, uint64_t restart_seed,
                         std::optional<Clock::time_point> deadline, const Assignment *start) {
    std::mt19937_64 rng(restart_seed);
    auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

    SearchState state = start ? SearchState(config, *start) : SearchState(config);
    SearchOutcome out;
    out.best_values.assign(state.values().begin(), state.values().end());
    out.best_distance = state.distance();
    out.trace.push_back({0, out.best_distance});

    const uint32_t n_points = static_cast<uint32_t>(config.point_count());
    const auto uns = state.unsatisfied_counts();
    for (uint64_t iteration = 1; iteration <= params.max_iterations && out.best_distance > 0; iteration++) {
        if (deadline && Clock::now() >= *deadline) {
            out.timed_out = true;
            break;
        }
        // The threshold is fixed for the whole sweep.
        const double threshold = params.theta * static_cast<double>(*std::max_element(uns.begin(), uns.end()));
        for (uint32_t o = 0; o < n_points; o++) {
            if (static_cast<double>(uns[o]) > threshold && uniform() > params.gamma) {
                state.flip(o);
            }
        }
        if (state.distance() < out.best_distance) {
            out.best_distance = state.distance();
            out.best_values.assign(state.values().begin(), state.values().end());
            out.iterations_to_best = iteration;
            out.trace.push_back({iteration, out.best_distance});
        }
    }
    assert(hamming_distance(config, Assignment{out.best_values}) == out.best_distance);
    return out;
}

SolveResult finish(const Configuration &config, const SolverParams &params, SearchOutcome &&outcome,
                   uint32_t restart, Clock::time_point start) {
    SolveResult result;
    result.best_assignment.values = std::move(outcome.best_values);
    result.best_distance = outcome.best_distance;
    result.unsatisfied_context_ids = unsatisfied(config, result.best_assignment).context_ids;
    result.params = params;
    result.iterations_to_best = outcome.iterations_to_best;
    result.restart_index_of_best = restart;
    result.timed_out = outcome.timed_out;
    result.trace = std::move(outcome.trace);
    result.runtime_ms = static_cast<uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count());
    return result;
}

std::optional<Clock::time_point> deadline_for(const SolverParams &params, Clock::time_point start) {
    if (params.time_budget_ms == 0) {
        return std::nullopt;
    }
    return start + std::chrono::milliseconds(params.time_budget_ms);
}

// Global best-so-far curve from the per-restart improvement curves.
std::vector<TracePoint> merge_traces(const std::vector<SearchOutcome> &outcomes) {
    std::vector<TracePoint> events;
    for (const auto &o : outcomes) {
        events.insert(events.end(), o.trace.begin(), o.trace.end());
    }
    std::stable_sort(events.begin(), events.end(),
                     [](const TracePoint &a, const TracePoint &b) { return a.iteration < b.iteration; });
    std::vector<TracePoint> merged;
    for (const auto &e : events) {
        if (merged.empty() || e.best_distance < merged.back().best_distance) {
            if (!merged.empty() && merged.back().iteration == e.iteration) {
                merged.back().best_distance = e.best_distance;
            } else {
                merged.push_back(e);
            }
        }
    }
    return merged;
}

}  // namespace

SolveResult solve_once(const Configuration &config, const SolverParams &params, uint64_t restart_seed,
                       const Assignment *start) {
    check_solvable(config, params);
    auto begin = Clock::now();
    return finish(config, params, run_search(config, params, restart_seed, deadline_for(params, begin), start), 0,
                  begin);
}

SolveResult solve(const Configuration &config, const SolverParams &params, unsigned threads,
                  const Assignment *start) {
    check_solvable(config, params);
    if (start) {
        SearchState(config, *start);
    }
    auto begin = Clock::now();
    auto deadline = deadline_for(params, begin);

    if (threads == 0) {
        threads = std::max(1U, std::thread::hardware_concurrency());
    }
    threads = std::min<unsigned>(threads, params.restarts);

    std::vector<SearchOutcome> outcomes(params.restarts);
    std::atomic<uint32_t> next{0};
    auto worker = [&] {
        for (uint32_t r = next++; r < params.restarts; r = next++) {
            outcomes[r] = run_search(config, params, derive_restart_seed(params.seed, r), deadline, start);
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; t++) {
            pool.emplace_back(worker);
        }
    }

    uint32_t best = 0;
    bool timed_out = false;
    for (uint32_t r = 0; r < params.restarts; r++) {
        timed_out |= outcomes[r].timed_out;
        if (outcomes[r].best_distance < outcomes[best].best_distance) {
            best = r;
        }
    }
    auto trace = merge_traces(outcomes);
    SolveResult result = finish(config, params, std::move(outcomes[best]), best, begin);
    result.timed_out = timed_out;
    result.trace = std::move(trace);
    return result;
}

Assignment product_assignment(const Configuration &target, const Configuration &left, const Assignment &f,
                              const Configuration &right, const Assignment &g) {
    const uint32_t na = left.space().n_qubits();
    const uint32_t nb = right.space().n_qubits();
    if (na + nb != target.space().n_qubits()) {
        throw DimensionError("factor qubit counts " + std::to_string(na) + "+" + std::to_string(nb) +
                             " do not match the target's " + std::to_string(target.space().n_qubits()));
    }
    if (f.values.size() != left.point_count() || g.values.size() != right.point_count()) {
        throw InvalidArgument("factor assignment length does not match its configuration");
    }
    auto factor = [](const Configuration &config, const Assignment &a, const std::string &text) -> int {
        Observable p = parse_observable(text);
        if (p.is_identity()) {
            return 1;
        }
        uint32_t global = config.space().point_index(p);
        if (!config.contains_point(global)) {
            throw InvalidArgument("factor observable " + text + " is not a point of its configuration");
        }
        return a.values[config.local_index(global)];
    };
    Assignment out = all_plus(target);
    for (uint32_t k = 0; k < target.point_count(); k++) {
        std::string text = format_observable(target.space().observable(target.point_ids()[k]));
        out.values[k] = static_cast<int8_t>(factor(left, f, text.substr(0, na)) * factor(right, g, text.substr(na)));
    }
    return out;
}

}  // namespace polarctx
