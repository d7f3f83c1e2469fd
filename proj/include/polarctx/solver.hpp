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

#include <cstdint>
#include <span>
#include <vector>

#include "polarctx/configuration.hpp"

namespace polarctx {

/// Parameters of the threshold local search.
///
/// In each sweep a point is flipped when its unsatisfied-context count
/// exceeds `theta` times the sweep's maximum and a uniform draw exceeds
/// `gamma` (so an eligible point flips with probability 1 - gamma).
struct SolverParams {
    double theta = 0.8;
    double gamma = 0.9;
    uint64_t max_iterations = 1000;
    uint32_t restarts = 1;
    uint64_t seed = 0;
    /// Wall-clock cutoff for the whole solve in milliseconds; 0 disables it.
    /// A run stopped by the clock is not reproducible across machines.
    uint64_t time_budget_ms = 0;

    void validate() const;
    bool operator==(const SolverParams &) const = default;
};

struct TracePoint {
    uint64_t iteration;
    uint64_t best_distance;

    bool operator==(const TracePoint &) const = default;
};

struct SolveResult {
    Assignment best_assignment;
    uint64_t best_distance = 0;
    /// Global line ids of the contexts left unsatisfied by best_assignment.
    std::vector<uint32_t> unsatisfied_context_ids;
    SolverParams params;
    uint64_t iterations_to_best = 0;
    uint32_t restart_index_of_best = 0;
    uint64_t runtime_ms = 0;
    bool timed_out = false;
    /// Best distance over all restarts, one entry per improving iteration
    /// (iteration 0 is the starting assignment).
    std::vector<TracePoint> trace;
};

/// Mutable state of one search: the assignment, per-point unsatisfied
/// counts, per-context satisfaction and the running distance.
class SearchState {
   public:
    /// Starts from the all-plus assignment.
    explicit SearchState(const Configuration &config);
    /// Starts from `start`; throws InvalidArgument on a domain mismatch.
    SearchState(const Configuration &config, const Assignment &start);

    /// Negates the value of one point and updates every context through it.
    void flip(uint32_t local_point);

    uint64_t distance() const { return distance_; }
    std::span<const int8_t> values() const { return values_; }
    std::span<const uint32_t> unsatisfied_counts() const { return uns_; }
    bool context_unsatisfied(uint32_t context) const { return unsat_[context] != 0; }

    /// Unsatisfied counts recomputed from the assignment alone.
    std::vector<uint32_t> recount() const;

   private:
    const Configuration *config_;
    std::vector<int8_t> values_;
    std::vector<uint32_t> uns_;
    std::vector<uint8_t> unsat_;
    uint64_t distance_ = 0;
};

/// splitmix64 finalizer applied to seed + (restart + 1) * golden gamma.
uint64_t derive_restart_seed(uint64_t seed, uint32_t restart);

/// One search with a std::mt19937_64 stream seeded by `restart_seed`,
/// starting from `start` when given and from the all-plus assignment
/// otherwise.
SolveResult solve_once(const Configuration &config, const SolverParams &params, uint64_t restart_seed,
                       const Assignment *start = nullptr);

/// `params.restarts` independent searches; restart i uses
/// derive_restart_seed(params.seed, i). The minimum distance wins, ties go to
/// the lowest restart index. Without a time budget the result does not
/// depend on `threads` (0 = hardware concurrency).
/// Every restart begins at `start` when given.
SolveResult solve(const Configuration &config, const SolverParams &params, unsigned threads = 0,
                  const Assignment *start = nullptr);

/// Tensor-product assignment on `target`: the value at P (x) Q, with P on
/// the first left.space().n_qubits() qubits and Q on the rest, is
/// f(P) * g(Q), where an identity factor contributes +1. Throws
/// DimensionError when the qubit counts do not add up and InvalidArgument
/// when a needed factor is absent from its configuration.
Assignment product_assignment(const Configuration &target, const Configuration &left, const Assignment &f,
                              const Configuration &right, const Assignment &g);

}  // namespace polarctx
